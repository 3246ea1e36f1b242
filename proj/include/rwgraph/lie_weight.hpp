#ifndef RWGRAPH_LIE_WEIGHT_HPP
#define RWGRAPH_LIE_WEIGHT_HPP

#include <cstdint>
#include <vector>

#include "rwgraph/graph_vector.hpp"
#include "rwgraph/partition.hpp"

namespace rwg {

// Contraction data of a quadratic Lie algebra: a symmetric invariant pairing
// used to close edges and a cyclically invariant structure tensor placed on
// the vertices in slot order.
struct LieData {
    int dim = 0;
    std::vector<Rat> metric;     // dim * dim, indexed a*dim + b
    std::vector<Rat> structure;  // dim^3, indexed (a*dim + b)*dim + c
    const Rat& sigma(int a, int b) const { return metric[a * dim + b]; }
    const Rat& c(int a, int b, int c_) const { return structure[(a * dim + b) * dim + c_]; }
};

// The adjoint representation data of su(2): delta pairing and the alternating
// epsilon tensor.
const LieData& su2_adjoint();

// Full tensor contraction of the graph: structure tensor at each vertex in
// slot order, pairing on each edge; multiplicative over components.
Rat lie_weight(const OrientedGraph& g, const LieData& L);
Rat lie_weight(const GraphVector& v, const LieData& L);

// Brute-force su(2) evaluation with one index per edge (valid because the
// pairing is the identity). Exponential; meant as a test oracle.
std::int64_t su2_weight_naive(const OrientedGraph& g);

// Weight of the polywheel <w_{l1}...w_{lj}> in the adjoint of su(2), by the
// closed form (-1)^k (2k+1)!/2^(k-1)/k! * 2^(j-1) with 2k = sum of parts.
Rat su2_polywheel_closed_form(const Partition& even_parts);

// Same weight by the contraction-free recursion on part sizes.
Rat su2_polywheel_recursion(const Partition& even_parts);

// Weight of the polywheel by expanding the closure and contracting each term.
Rat su2_polywheel_contraction(const Partition& even_parts);

}  // namespace rwg

#endif
