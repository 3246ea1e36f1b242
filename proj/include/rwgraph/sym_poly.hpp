#ifndef RWGRAPH_SYM_POLY_HPP
#define RWGRAPH_SYM_POLY_HPP

#include <map>
#include <vector>

#include "rwgraph/rational.hpp"
#include "rwgraph/series.hpp"
#include "rwgraph/spoly.hpp"

namespace rwg {

// Sparse polynomial over the rationals in a fixed set of variables, truncated
// at a total-degree bound. Used for symmetric expansions in the Chern roots
// +/- x_1 .. x_k, where the bound 2k is the top degree that survives
// integration.
class MultiSeries {
  public:
    MultiSeries(int nvars, int bound) : nvars_(nvars), bound_(bound) {}

    static MultiSeries constant(int nvars, int bound, const Rat& c);
    // The univariate series f placed on sign * x_var.
    static MultiSeries of_variable(const TruncSeries& f, int nvars, int bound, int var, int sign);

    int nvars() const { return nvars_; }
    int bound() const { return bound_; }
    const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exps, const Rat& c);
    MultiSeries operator+(const MultiSeries& o) const;
    MultiSeries operator-(const MultiSeries& o) const;
    MultiSeries operator*(const MultiSeries& o) const;

  private:
    int nvars_, bound_;
    std::map<std::vector<int>, Rat> terms_;
};

// Rewrites the total-degree-2k part of f, which must be even in every
// variable and symmetric, in the power sums of the squared variables: the
// monomial key 2 lambda of the result stands for prod_i s_{2 lambda_i} with
// s_{2j} = 2 (x_1^{2j} + ... + x_k^{2j}). Requires nvars == k. Throws when
// the part is not even or not in the span (i.e. not symmetric).
SPolynomial even_symmetric_to_s(const MultiSeries& f, int k);

}  // namespace rwg

#endif
