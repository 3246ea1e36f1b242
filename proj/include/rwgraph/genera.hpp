#ifndef RWGRAPH_GENERA_HPP
#define RWGRAPH_GENERA_HPP

#include <map>
#include <vector>

#include "rwgraph/chern.hpp"
#include "rwgraph/partition.hpp"
#include "rwgraph/rational.hpp"
#include "rwgraph/spoly.hpp"

namespace rwg {

// Coefficients chi^0 .. chi^{2k} of the chi_y-genus of a 4k-real-dimensional
// space. Hyperkaehler inputs satisfy chi^m = chi^{2k-m} and kill the Salamon
// combination; both are checkable, neither is enforced on construction.
struct ChiVector {
    int k = 0;
    std::vector<Rat> values;  // size 2k + 1

    bool palindromic() const;
};

// sum_m (-1)^m (6m^2 - k(6k+1)) chi^m.
Rat salamon_residual(const ChiVector& chi);

// chi^m as a polynomial in the s-monomials: the degree-4k term of
// ch(Lambda^m T^*) Td with Chern roots +/- x_1 .. x_k. Degrees 1..4.
SPolynomial chi_m_polynomial(int k, int m);

// Solution of the Riemann-Roch system chi^m = chi_m_polynomial(k, m)(s).
// Degrees up to 3 determine the characteristic numbers; degree 4 leaves the
// one-parameter family base + s * direction with the parameter normalized by
// s_2^4 = 48 s (equivalently c_2^4 = 3 s).
struct ChernSolution {
    int k = 0;
    bool parametrized = false;
    std::map<Partition, Rat> base_s;
    std::map<Partition, Rat> direction_s;  // zero map when not parametrized

    ChernVector at(const Rat& s) const;
    // Requires the non-parametrized case.
    ChernVector unique() const;
};
ChernSolution invert_chi(const ChiVector& chi);

// chi_y of the Hilbert scheme of k points on a K3 surface, by the Hodge
// number generating product specialized at x = -1, and of the generalized
// Kummer variety of the same dimension, by the divisor sum.
ChiVector chi_y_hilbert(int k);
ChiVector chi_y_kummer(int k);

}  // namespace rwg

#endif
