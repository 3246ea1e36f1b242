#ifndef RWGRAPH_SERIES_HPP
#define RWGRAPH_SERIES_HPP

#include <vector>

#include "rwgraph/rational.hpp"

namespace rwg {

// Dense power series with exact rational coefficients, truncated after
// x^order. Binary operations truncate to the shorter operand.
class TruncSeries {
  public:
    explicit TruncSeries(int order) : a_(order + 1, Rat(0)) {}

    static TruncSeries one(int order) {
        TruncSeries s(order);
        s.a_[0] = 1;
        return s;
    }

    int order() const { return static_cast<int>(a_.size()) - 1; }
    const Rat& operator[](int i) const { return a_[i]; }
    Rat& operator[](int i) { return a_[i]; }

    TruncSeries operator+(const TruncSeries& o) const;
    TruncSeries operator-(const TruncSeries& o) const;
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries scaled(const Rat& c) const;

    // Quotient by a series with nonzero constant term.
    TruncSeries divided_by(const TruncSeries& den) const;

    // exp requires a zero constant term; log requires constant term 1.
    TruncSeries exp() const;
    TruncSeries log() const;

    // Substitution of a series with zero constant term.
    TruncSeries compose(const TruncSeries& inner) const;

    bool operator==(const TruncSeries& o) const = default;

  private:
    std::vector<Rat> a_;
};

// sinh(x/2)/(x/2): coefficient of x^{2m} is 1/(4^m (2m+1)!).
TruncSeries sinh_half_over_half(int order);

// Logarithm of the characteristic power series f of the square-root Todd
// genus, ln f = -1/2 ln(sinh(x/2)/(x/2)). Even, zero constant term, and the
// x^2 coefficient is -1/48. Its negation generates the inverse sequence.
TruncSeries td_half_log(int order);
TruncSeries td_neg_half_log(int order);

}  // namespace rwg

#endif
