#include "rwgraph/sym_poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rwgraph/linalg.hpp"
#include "rwgraph/partition.hpp"

namespace rwg {

MultiSeries MultiSeries::constant(int nvars, int bound, const Rat& c) {
    MultiSeries m(nvars, bound);
    m.add_term(std::vector<int>(nvars, 0), c);
    return m;
}

MultiSeries MultiSeries::of_variable(const TruncSeries& f, int nvars, int bound, int var,
                                     int sign) {
    MultiSeries m(nvars, bound);
    std::vector<int> exps(nvars, 0);
    for (int d = 0; d <= std::min(f.order(), bound); ++d) {
        exps[var] = d;
        m.add_term(exps, (sign < 0 && d % 2) ? -f[d] : f[d]);
    }
    return m;
}

void MultiSeries::add_term(const std::vector<int>& exps, const Rat& c) {
    if (c == 0) return;
    if (std::accumulate(exps.begin(), exps.end(), 0) > bound_) return;
    auto [it, fresh] = terms_.emplace(exps, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiSeries MultiSeries::operator+(const MultiSeries& o) const {
    MultiSeries r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiSeries MultiSeries::operator-(const MultiSeries& o) const {
    MultiSeries r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiSeries MultiSeries::operator*(const MultiSeries& o) const {
    MultiSeries r(nvars_, std::min(bound_, o.bound_));
    std::vector<int> exps(nvars_);
    for (const auto& [ea, ca] : terms_) {
        int da = std::accumulate(ea.begin(), ea.end(), 0);
        for (const auto& [eb, cb] : o.terms_) {
            int db = std::accumulate(eb.begin(), eb.end(), 0);
            if (da + db > r.bound_) continue;
            for (int i = 0; i < nvars_; ++i) exps[i] = ea[i] + eb[i];
            r.add_term(exps, ca * cb);
        }
    }
    return r;
}

namespace {

// Expansion of prod_j (y_1^{lambda_j} + ... + y_k^{lambda_j}) as a map from
// y-exponent vectors to coefficients.
std::map<std::vector<int>, Rat> power_sum_expansion(const Partition& lambda, int k) {
    std::map<std::vector<int>, Rat> acc{{std::vector<int>(k, 0), Rat(1)}};
    for (int part : lambda) {
        std::map<std::vector<int>, Rat> next;
        for (const auto& [e, c] : acc)
            for (int i = 0; i < k; ++i) {
                std::vector<int> e2 = e;
                e2[i] += part;
                next[e2] += c;
            }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

SPolynomial even_symmetric_to_s(const MultiSeries& f, int k) {
    if (f.nvars() != k) throw std::invalid_argument("need one variable per Chern-root pair");
    // Collect the total-degree-2k part as a polynomial in y_i = x_i^2.
    std::map<std::vector<int>, Rat> target;
    for (const auto& [e, c] : f.terms()) {
        if (std::accumulate(e.begin(), e.end(), 0) != 2 * k) continue;
        std::vector<int> half = e;
        for (int& d : half) {
            if (d % 2) throw std::invalid_argument("top-degree part is odd in some variable");
            d /= 2;
        }
        target[half] = c;
    }

    // Solve for the power-sum coordinates over all y-monomials of degree k.
    std::vector<Partition> lambdas = partitions_of(k);
    std::map<std::vector<int>, int> row_of;
    std::vector<std::map<int, Rat>> expansions(lambdas.size());
    for (size_t j = 0; j < lambdas.size(); ++j)
        for (const auto& [e, c] : power_sum_expansion(lambdas[j], k)) {
            auto [it, fresh] = row_of.emplace(e, static_cast<int>(row_of.size()));
            expansions[j][it->second] = c;
        }
    for (const auto& [e, c] : target)
        if (!row_of.count(e)) throw std::invalid_argument("top-degree part is not symmetric");

    Mat a(row_of.size(), Vec(lambdas.size(), Rat(0)));
    Vec b(row_of.size(), Rat(0));
    for (size_t j = 0; j < lambdas.size(); ++j)
        for (const auto& [row, c] : expansions[j]) a[row][j] = c;
    for (const auto& [e, c] : target) b[row_of.at(e)] = c;

    LinearSolution sol = solve_linear(a, b);
    if (!sol.unique()) throw std::invalid_argument("top-degree part is not symmetric");

    // p_lambda = s_{2 lambda} / 2^{len(lambda)}.
    SPolynomial out(2 * k);
    for (size_t j = 0; j < lambdas.size(); ++j) {
        Partition doubled = lambdas[j];
        for (int& part : doubled) part *= 2;
        out.add(doubled, sol.particular[j] / rat_pow(Rat(2), static_cast<long>(lambdas[j].size())));
    }
    return out;
}

}  // namespace rwg
