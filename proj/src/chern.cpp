#include "rwgraph/chern.hpp"

#include <stdexcept>
#include <vector>

namespace rwg {

namespace {

// Newton's identities on the squared Chern roots y_i, where the pairing
// identifies s_{2j} = 2 p_j(y) and c_{2j} = (-1)^j e_j(y).

SPolynomial class_monomial(int weight, const Rat& c) {
    SPolynomial m(weight);
    if (weight == 0)
        m.add({}, c);
    else
        m.add({weight}, c);
    return m;
}

}  // namespace

SPolynomial s_class_in_c(int j) {
    // p_j = -j c_{2j} - sum_{i<j} c_{2i} p_{j-i}, and s_{2j} = 2 p_j.
    std::vector<SPolynomial> p(j + 1, SPolynomial(0));
    for (int n = 1; n <= j; ++n) {
        p[n] = class_monomial(2 * n, Rat(-n));
        for (int i = 1; i < n; ++i) p[n] -= class_monomial(2 * i, Rat(1)) * p[n - i];
    }
    SPolynomial out = p[j];
    out *= 2;
    return out;
}

SPolynomial c_class_in_s(int j) {
    // e_j = (1/j) sum_{i=1..j} (-1)^{i-1} e_{j-i} p_i with p_i = s_{2i}/2,
    // and c_{2j} = (-1)^j e_j.
    std::vector<SPolynomial> e(j + 1, SPolynomial(0));
    e[0] = class_monomial(0, Rat(1));
    for (int n = 1; n <= j; ++n) {
        e[n] = SPolynomial(2 * n);
        for (int i = 1; i <= n; ++i) {
            SPolynomial term = class_monomial(2 * i, frac(i % 2 ? 1 : -1, 2)) * e[n - i];
            term *= frac(1, n);
            e[n] += term;
        }
    }
    SPolynomial out = e[j];
    if (j % 2) out *= -1;
    return out;
}

namespace {

SPolynomial substitute(const SPolynomial& p, SPolynomial (*expand)(int)) {
    SPolynomial out(p.weight);
    for (const auto& [lambda, c] : p.terms) {
        SPolynomial term(0);
        term.add({}, c);
        for (int part : lambda) term = term * expand(part / 2);
        out += term;
    }
    return out;
}

Rat evaluate(const SPolynomial& p, const std::map<Partition, Rat>& values, const char* basis) {
    Rat acc = 0;
    for (const auto& [lambda, c] : p.terms) {
        auto it = values.find(lambda);
        if (it == values.end())
            throw std::invalid_argument(std::string("missing ") + basis + "-monomial value " +
                                        monomial_name(basis, lambda));
        acc += c * it->second;
    }
    return acc;
}

std::map<Partition, Rat> convert_values(int k, const std::map<Partition, Rat>& values,
                                        SPolynomial (*to_other)(const SPolynomial&),
                                        const char* basis) {
    std::map<Partition, Rat> out;
    for (const Partition& lambda : even_partitions_of(2 * k)) {
        SPolynomial mono(2 * k);
        mono.add(lambda, 1);
        Rat acc = 0;
        for (const auto& [mu, c] : to_other(mono).terms) {
            auto it = values.find(mu);
            if (it == values.end())
                throw std::invalid_argument(std::string("incomplete ") + basis +
                                            "-monomial values for degree " + std::to_string(k));
            acc += c * it->second;
        }
        out[lambda] = acc;
    }
    return out;
}

}  // namespace

SPolynomial s_poly_to_c(const SPolynomial& p) { return substitute(p, s_class_in_c); }
SPolynomial c_poly_to_s(const SPolynomial& p) { return substitute(p, c_class_in_s); }

ChernVector chern_from_s(int k, const std::map<Partition, Rat>& s_values) {
    ChernVector cv;
    cv.degree = k;
    cv.s_values = s_values;
    cv.c_values = convert_values(k, s_values, c_poly_to_s, "s");
    return cv;
}

ChernVector chern_from_c(int k, const std::map<Partition, Rat>& c_values) {
    ChernVector cv;
    cv.degree = k;
    cv.c_values = c_values;
    cv.s_values = convert_values(k, c_values, s_poly_to_c, "c");
    return cv;
}

Rat evaluate_s_poly(const SPolynomial& p, const ChernVector& cv) {
    return evaluate(p, cv.s_values, "s");
}

Rat evaluate_c_poly(const SPolynomial& p, const ChernVector& cv) {
    return evaluate(p, cv.c_values, "c");
}

}  // namespace rwg
