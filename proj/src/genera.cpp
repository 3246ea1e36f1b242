#include "rwgraph/genera.hpp"

#include <algorithm>
#include <stdexcept>

#include "rwgraph/linalg.hpp"
#include "rwgraph/sym_poly.hpp"

namespace rwg {

bool ChiVector::palindromic() const {
    for (size_t i = 0; i < values.size(); ++i)
        if (values[i] != values[values.size() - 1 - i]) return false;
    return true;
}

Rat salamon_residual(const ChiVector& chi) {
    Rat acc = 0;
    for (int m = 0; m <= 2 * chi.k; ++m) {
        Rat weight = Rat(6) * m * m - Rat(chi.k) * (6 * chi.k + 1);
        acc += (m % 2 ? -weight : weight) * chi.values[m];
    }
    return acc;
}

namespace {

// exp(c x) on variable `var`, truncated at total degree `bound`.
MultiSeries exp_root(int nvars, int bound, int var, int sign) {
    TruncSeries e(bound);
    Rat term = 1;
    e[0] = 1;
    for (int d = 1; d <= bound; ++d) {
        term /= d;
        e[d] = term;
    }
    return MultiSeries::of_variable(e, nvars, bound, var, sign);
}

// The Todd factor for the pair of roots +/- x_var: [(x/2) / sinh(x/2)]^2.
MultiSeries todd_pair(int nvars, int bound, int var) {
    TruncSeries t = TruncSeries::one(bound).divided_by(sinh_half_over_half(bound));
    return MultiSeries::of_variable(t * t, nvars, bound, var, +1);
}

}  // namespace

SPolynomial chi_m_polynomial(int k, int m) {
    if (k < 1 || k > 4) throw std::invalid_argument("chi_m_polynomial supports degrees 1..4");
    if (m < 0 || m > 2 * k) throw std::invalid_argument("chi_m_polynomial needs 0 <= m <= 2k");
    int bound = 2 * k;

    // ch(Lambda^m T^*) = e_m(e^{-gamma_1}, ..., e^{-gamma_2k}) over the roots
    // gamma = +/- x_i, by the column-wise elementary symmetric recursion.
    std::vector<MultiSeries> elem(m + 1, MultiSeries(k, bound));
    elem[0] = MultiSeries::constant(k, bound, 1);
    for (int i = 0; i < 2 * k; ++i) {
        MultiSeries v = exp_root(k, bound, i / 2, i % 2 ? -1 : 1);
        for (int j = std::min(m, i + 1); j >= 1; --j) elem[j] = elem[j] + elem[j - 1] * v;
    }

    MultiSeries integrand = elem[m];
    for (int i = 0; i < k; ++i) integrand = integrand * todd_pair(k, bound, i);
    return even_symmetric_to_s(integrand, k);
}

ChernVector ChernSolution::at(const Rat& s) const {
    std::map<Partition, Rat> values = base_s;
    for (const auto& [lambda, c] : direction_s) values[lambda] += s * c;
    return chern_from_s(k, values);
}

ChernVector ChernSolution::unique() const {
    if (parametrized)
        throw std::logic_error("degree-4 inversion is a one-parameter family; pick s");
    return at(0);
}

ChernSolution invert_chi(const ChiVector& chi) {
    int k = chi.k;
    if (k < 1 || k > 4) throw std::invalid_argument("invert_chi supports degrees 1..4");
    if (static_cast<int>(chi.values.size()) != 2 * k + 1)
        throw std::invalid_argument("chi vector must list chi^0..chi^{2k}");

    std::vector<Partition> lambdas = even_partitions_of(2 * k);
    Mat a(2 * k + 1, Vec(lambdas.size(), Rat(0)));
    Vec b(2 * k + 1, Rat(0));
    for (int m = 0; m <= 2 * k; ++m) {
        SPolynomial p = chi_m_polynomial(k, m);
        for (size_t j = 0; j < lambdas.size(); ++j) a[m][j] = p.coeff(lambdas[j]);
        b[m] = chi.values[m];
    }

    LinearSolution sol = solve_linear(a, b);
    if (!sol.consistent)
        throw std::invalid_argument("chi values violate the Riemann-Roch relations");

    ChernSolution out;
    out.k = k;
    out.parametrized = k == 4;
    if (!out.parametrized) {
        if (!sol.kernel.empty()) throw std::logic_error("unexpected underdetermined inversion");
        for (size_t j = 0; j < lambdas.size(); ++j) out.base_s[lambdas[j]] = sol.particular[j];
        return out;
    }

    if (sol.kernel.size() != 1)
        throw std::logic_error("degree-4 inversion must have a one-dimensional family");
    // Normalize the family parameter by s_2^4 = 48 s, then shift the base
    // point to s = 0.
    const Vec& dir = sol.kernel[0];
    Rat lead = dir[0];  // the s2^4 coordinate comes first
    if (lead == 0) throw std::logic_error("family direction misses the s2^4 coordinate");
    Rat base_param = sol.particular[0] / 48;  // parameter value of the particular solution
    for (size_t j = 0; j < lambdas.size(); ++j) {
        Rat d = dir[j] / lead * 48;
        out.direction_s[lambdas[j]] = d;
        out.base_s[lambdas[j]] = sol.particular[j] - base_param * d;
    }
    return out;
}

namespace {

// Power series in t with polynomial-in-y coefficients, truncated after t^k.
using YPoly = std::vector<Rat>;  // coefficient of y^i at index i
using TSeries = std::vector<YPoly>;

YPoly& ensure_size(YPoly& p, size_t n) {
    if (p.size() < n) p.resize(n, Rat(0));
    return p;
}

// in place: a *= (1 + sign y^q t^n)^{-h} truncated after t^k.
void multiply_factor(TSeries& a, int k, int n, int q, int sign, int h) {
    // (1 + u)^{-h} = sum_j (-1)^j binom(h+j-1, j) u^j, and u^j contributes
    // sign^j y^{qj} t^{nj}.
    std::vector<Rat> binoms(k / n + 1);
    for (int j = 0; j <= k / n; ++j) {
        Rat c = binomial(h + j - 1, j);
        if (j % 2) c = -c;
        if (sign < 0 && j % 2) c = -c;
        binoms[j] = c;
    }
    TSeries out(k + 1);
    for (int d = 0; d <= k; ++d)
        for (int j = 0; j * n <= d; ++j) {
            if (binoms[j] == 0) continue;
            const YPoly& src = a[d - j * n];
            if (src.empty()) continue;
            YPoly& dst = ensure_size(out[d], src.size() + q * j);
            for (size_t i = 0; i < src.size(); ++i) dst[i + q * j] += binoms[j] * src[i];
        }
    a = std::move(out);
}

ChiVector chi_from_poly(int k, const YPoly& p) {
    ChiVector chi;
    chi.k = k;
    chi.values.assign(2 * k + 1, Rat(0));
    if (static_cast<int>(p.size()) > 2 * k + 1)
        for (size_t i = 2 * k + 1; i < p.size(); ++i)
            if (p[i] != 0) throw std::logic_error("chi_y degree exceeds 2k");
    for (size_t i = 0; i < p.size() && i < static_cast<size_t>(2 * k + 1); ++i)
        chi.values[i] = p[i];
    return chi;
}

}  // namespace

ChiVector chi_y_hilbert(int k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    // Hodge numbers h^{p,q} of a K3 surface; p+q is even throughout, so every
    // factor of the generating product sits in the denominator with a minus
    // sign: prod_{n>=1} prod_{p,q} (1 - (-1)^{p+n-1} y^{q+n-1} t^n)^{-h^{pq}},
    // the specialization x = -1 applied factor by factor.
    static const int hodge[3][3] = {{1, 0, 1}, {0, 20, 0}, {1, 0, 1}};
    TSeries acc(k + 1);
    acc[0] = {Rat(1)};
    for (int n = 1; n <= k; ++n)
        for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 2; ++q) {
                if (!hodge[p][q]) continue;
                int sign = (p + n - 1) % 2 ? -1 : 1;
                multiply_factor(acc, k, n, q + n - 1, -sign, hodge[p][q]);
            }
    return chi_from_poly(k, acc[k]);
}

ChiVector chi_y_kummer(int k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    int n = k + 1;
    YPoly total;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        int q = n / d;
        // (1 - y + y^2 - ... + (-y)^{q-1})^2 (-y)^{n-q}, scaled by d^3.
        YPoly alt(q, Rat(0));
        for (int i = 0; i < q; ++i) alt[i] = i % 2 ? -1 : 1;
        YPoly sq(2 * q - 1, Rat(0));
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j) sq[i + j] += alt[i] * alt[j];
        int shift = n - q;
        ensure_size(total, sq.size() + shift);
        Rat scale = Rat(d) * d * d;
        if (shift % 2) scale = -scale;
        for (size_t i = 0; i < sq.size(); ++i) total[i + shift] += scale * sq[i];
    }
    for (Rat& c : total) c *= n;
    return chi_from_poly(k, total);
}

}  // namespace rwg
