#ifndef RWGRAPH_SPOLY_HPP
#define RWGRAPH_SPOLY_HPP

#include <map>
#include <string>

#include "rwgraph/partition.hpp"
#include "rwgraph/rational.hpp"
#include "rwgraph/series.hpp"

namespace rwg {

// Homogeneous polynomial of weight 2k in the even characteristic classes,
// keyed by even partitions of 2k: the partition (l1 >= ... >= lj) stands for
// the monomial s_{l1}...s_{lj}. The same container carries c-monomials in the
// basis-conversion code.
struct SPolynomial {
    int weight = 0;
    std::map<Partition, Rat> terms;

    explicit SPolynomial(int w = 0) : weight(w) {}

    Rat coeff(const Partition& p) const;
    // Accumulates and drops the key again when the sum cancels.
    void add(const Partition& p, const Rat& c);

    SPolynomial& operator+=(const SPolynomial& o);
    SPolynomial& operator-=(const SPolynomial& o);
    SPolynomial& operator*=(const Rat& c);
    bool operator==(const SPolynomial& o) const = default;
};

// Product of homogeneous polynomials: monomials multiply by merging their
// partitions, weights add.
SPolynomial operator*(const SPolynomial& a, const SPolynomial& b);

// "s2^2*s4"-style monomial spelling, parts ascending, repeats as powers.
std::string monomial_name(const std::string& prefix, const Partition& p);
// "<w2^2*w4>": the polywheel whose wheels are the doubled parts of p.
std::string polywheel_name(const Partition& doubled_parts);
// Renders with " + "/" - " separators and unit coefficients dropped; pass a
// namer to choose the monomial spelling.
std::string spoly_to_string(const SPolynomial& p, const std::string& prefix);

// The x^{2k} coefficient of exp(sum_i a_{2i} s_{2i} x^{2i}) for the given
// log-series a: the coefficient of s_lambda is prod a_{lambda_i} divided by
// the factorials of the part multiplicities. Throws when the log-series has
// a nonzero constant or odd-degree coefficient.
SPolynomial mult_sequence_term(const TruncSeries& f_log, int k);

// Coefficients a_P over partitions P of k with Theta^k = sum a_P <w_{2P}>:
// 48^k k! times the weight-2k term of the inverse square-root Todd sequence,
// with each class s_{2m} read as the wheel w_{2m}.
std::map<Partition, Rat> theta_power_in_polywheels(int k);

// 48^k k! times the weight-2k term of the square-root Todd sequence: the
// polynomial giving b_{Theta^k} in characteristic numbers.
SPolynomial b_theta_power_polynomial(int k);

}  // namespace rwg

#endif
