#ifndef RWGRAPH_LINALG_HPP
#define RWGRAPH_LINALG_HPP

#include <optional>
#include <vector>

#include "rwgraph/rational.hpp"

namespace rwg {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row major

// Reduced row echelon form, in place. Pivots are chosen greedily left to
// right, so columns listed later become free variables whenever possible.
// Returns the pivot column of each surviving row.
std::vector<int> rref(Mat& m);

struct LinearSolution {
    bool consistent = false;
    Vec particular;          // one solution when consistent
    std::vector<Vec> kernel; // basis of the homogeneous solution space
    bool unique() const { return consistent && kernel.empty(); }
};

// Solve a * x = b exactly. a is m x n, b has length m.
LinearSolution solve_linear(Mat a, const Vec& b);

int rank(Mat m);

}  // namespace rwg

#endif
