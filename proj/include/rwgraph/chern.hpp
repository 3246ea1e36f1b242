#ifndef RWGRAPH_CHERN_HPP
#define RWGRAPH_CHERN_HPP

#include <map>

#include "rwgraph/partition.hpp"
#include "rwgraph/rational.hpp"
#include "rwgraph/spoly.hpp"

namespace rwg {

// Characteristic numbers of a holomorphic symplectic manifold of complex
// dimension 2k, in both the power-sum basis (s_lambda) and the Chern class
// basis (c_lambda), keyed by even partitions of 2k. The 2k Chern roots occur
// in +/- pairs, so all odd classes vanish and the two bases are tied by
// Newton's identities in the squared roots.
struct ChernVector {
    int degree = 0;  // k
    std::map<Partition, Rat> s_values;
    std::map<Partition, Rat> c_values;
};

// Builds the missing basis from the given one. Both require a complete set
// of monomial values (every even partition of 2k present).
ChernVector chern_from_s(int k, const std::map<Partition, Rat>& s_values);
ChernVector chern_from_c(int k, const std::map<Partition, Rat>& c_values);

// The class s_{2j} as a polynomial in c-monomials, and c_{2j} in s-monomials,
// from the Newton recursion on the squared Chern roots.
SPolynomial s_class_in_c(int j);
SPolynomial c_class_in_s(int j);

// Substitutes every class of a monomial polynomial by its expansion in the
// other basis.
SPolynomial s_poly_to_c(const SPolynomial& p);
SPolynomial c_poly_to_s(const SPolynomial& p);

// sum of coeff * value over the monomials of p, read against s_values
// (or c_values). Throws when a needed monomial value is missing.
Rat evaluate_s_poly(const SPolynomial& p, const ChernVector& cv);
Rat evaluate_c_poly(const SPolynomial& p, const ChernVector& cv);

}  // namespace rwg

#endif
