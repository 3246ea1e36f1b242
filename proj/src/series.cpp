#include "rwgraph/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace rwg {

namespace {

int common_order(const TruncSeries& a, const TruncSeries& b) {
    return std::min(a.order(), b.order());
}

}  // namespace

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    TruncSeries r(common_order(*this, o));
    for (int i = 0; i <= r.order(); ++i) r[i] = a_[i] + o[i];
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    TruncSeries r(common_order(*this, o));
    for (int i = 0; i <= r.order(); ++i) r[i] = a_[i] - o[i];
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    TruncSeries r(common_order(*this, o));
    for (int i = 0; i <= r.order(); ++i) {
        if (a_[i] == 0) continue;
        for (int j = 0; i + j <= r.order(); ++j) {
            if (o[j] == 0) continue;
            r[i + j] += a_[i] * o[j];
        }
    }
    return r;
}

TruncSeries TruncSeries::scaled(const Rat& c) const {
    TruncSeries r = *this;
    for (int i = 0; i <= r.order(); ++i) r[i] *= c;
    return r;
}

TruncSeries TruncSeries::divided_by(const TruncSeries& den) const {
    if (den[0] == 0) throw std::domain_error("series division by a non-unit");
    TruncSeries q(common_order(*this, den));
    for (int n = 0; n <= q.order(); ++n) {
        Rat acc = a_[n];
        for (int i = 0; i < n; ++i) acc -= q[i] * den[n - i];
        q[n] = acc / den[0];
    }
    return q;
}

TruncSeries TruncSeries::exp() const {
    if (a_[0] != 0) throw std::domain_error("series exp needs zero constant term");
    TruncSeries g(order());
    g[0] = 1;
    // g' = f' g termwise: n g_n = sum_{i=1..n} i f_i g_{n-i}
    for (int n = 1; n <= order(); ++n) {
        Rat acc = 0;
        for (int i = 1; i <= n; ++i) acc += Rat(i) * a_[i] * g[n - i];
        g[n] = acc / n;
    }
    return g;
}

TruncSeries TruncSeries::log() const {
    if (a_[0] != 1) throw std::domain_error("series log needs constant term 1");
    TruncSeries h(order());
    // f = exp h gives n f_n = sum_{i=1..n} i h_i f_{n-i}
    for (int n = 1; n <= order(); ++n) {
        Rat acc = Rat(n) * a_[n];
        for (int i = 1; i < n; ++i) acc -= Rat(i) * h[i] * a_[n - i];
        h[n] = acc / n;
    }
    return h;
}

TruncSeries TruncSeries::compose(const TruncSeries& inner) const {
    if (inner[0] != 0) throw std::domain_error("series composition needs a zero constant term");
    // Horner from the top; coefficients above the truncation order cannot
    // contribute because inner has positive valuation.
    int n = common_order(*this, inner);
    TruncSeries r(n);
    r[0] = a_[n];
    for (int i = n - 1; i >= 0; --i) {
        r = r * inner;
        r[0] += a_[i];
    }
    return r;
}

TruncSeries sinh_half_over_half(int order) {
    TruncSeries s(order);
    Rat term = 1;
    s[0] = 1;
    for (int m = 1; 2 * m <= order; ++m) {
        term /= Rat(4) * Rat(2 * m) * Rat(2 * m + 1);
        s[2 * m] = term;
    }
    return s;
}

TruncSeries td_half_log(int order) {
    return sinh_half_over_half(order).log().scaled(frac(-1, 2));
}

TruncSeries td_neg_half_log(int order) {
    return sinh_half_over_half(order).log().scaled(frac(1, 2));
}

}  // namespace rwg
