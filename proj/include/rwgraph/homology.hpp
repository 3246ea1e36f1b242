#ifndef RWGRAPH_HOMOLOGY_HPP
#define RWGRAPH_HOMOLOGY_HPP

#include <array>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rwgraph/graph_vector.hpp"
#include "rwgraph/linalg.hpp"
#include "rwgraph/partition.hpp"

namespace rwg {

// The three local regluings of the edge-contraction relation at a non-loop
// edge. The first term is the input graph itself; the relation asserts that
// the sum of the three classes vanishes in homology (equivalently, every Lie
// weight system kills it, by the Jacobi identity).
std::array<OrientedGraph, 3> ihx_terms(const OrientedGraph& g, int edge_flag);
GraphVector ihx_relation(const OrientedGraph& g, int edge_flag);

// All spoke matchings of disjoint anticlockwise wheels with the given even
// part sizes; closure() is their signed sum, the polywheel <w_{l1}...w_{lj}>
// of total weight 2k presented as a vector of 2k-vertex graph classes.
std::vector<OrientedGraph> closure_graphs(const Partition& even_parts);
GraphVector closure(const Partition& even_parts);

// Disjoint union of necklaces with bead counts from a partition of k, and the
// display name of its class ((2,1,1) -> "theta^2*theta2").
OrientedGraph necklace_union(const Partition& parts);
std::string necklace_union_name(const Partition& parts);

// Termwise disjoint union; the product of graph homology classes.
GraphVector disjoint_product(const GraphVector& a, const GraphVector& b);

// A basis class as presented to users, together with a representative vector
// in its homology class. Necklace unions are represented by their constructed
// graphs. The connected classes that complete degrees 4 and 5 are represented
// by explicit graphs too: the cube (named g8b), the cube with a disjoint
// theta (g10a), and a ten-vertex companion graph (g10b), each oriented so
// their coefficients in the polywheel expansions come out positive. Any
// remaining free classes in other degrees keep their canonical keys, with
// signs pinned by the same positivity rule.
struct DisplayClass {
    std::string name;
    GraphVector rep;
};

// Component data of a graph: canonical key and degree of each connected
// component, and the product of the component canonicalization signs.
struct ComponentSplit {
    std::vector<std::string> keys;
    int sign = 1;
    std::vector<int> degrees;
};
ComponentSplit split_components(const OrientedGraph& g);

// Exact presentation of the degree-k graph homology space: the span of all
// classes reachable from polywheel closures and necklace unions under the
// edge-contraction relation, modulo those relations. The span grows on demand
// when reduce() meets a class outside it.
class HomologyBasis {
  public:
    int degree() const { return degree_; }
    int dimension() const { return static_cast<int>(basis_keys_.size()); }
    // canonical keys of the basis classes, in presentation order
    const std::vector<std::string>& basis_keys() const { return basis_keys_; }
    const std::vector<DisplayClass>& display_classes() const { return classes_; }

    // Coordinates over basis_keys(), the free columns of the elimination.
    // Throws if the vector cannot be rewritten into the basis even after
    // extending the span.
    Vec reduce(const GraphVector& v) const;
    GraphVector reduce_to_vector(const GraphVector& v) const;
    // Coordinates over display_classes(), obtained by solving against the
    // representatives' reductions. This is the presentation every table and
    // the command line use.
    Vec display_coordinates(const GraphVector& v) const;

    // Lookup by display name ("theta^2*theta2", "g8b", ...).
    const DisplayClass& display_class(const std::string& name) const;

    int span_size() const { return static_cast<int>(columns_.size()); }

  private:
    friend const HomologyBasis& basis(int k);
    HomologyBasis() = default;

    void saturate_from(std::deque<std::string> work) const;
    void rebuild_matrices() const;
    std::vector<std::string> free_keys() const;

    int degree_ = 0;
    std::vector<std::string> preferred_;  // keys kept pivot-free (rightmost columns)
    std::vector<std::string> basis_keys_;
    std::vector<DisplayClass> classes_;
    Mat presentation_;  // column j = reduce(classes_[j].rep)

    // saturation state; grows when reduce() meets new classes
    mutable std::set<std::string> processed_;
    mutable std::set<std::string> nonzero_keys_;
    mutable std::vector<std::map<std::string, Rat>> raw_rows_;
    mutable std::set<std::string> row_sigs_;

    // elimination state, rebuilt after every saturation
    mutable std::vector<std::string> columns_;
    mutable std::map<std::string, int> column_index_;
    mutable std::vector<std::map<int, Rat>> elim_rows_;
    mutable std::map<int, int> pivot_row_;  // column -> row index
};

// Computed once per degree and cached. Degrees 1..5 are supported.
const HomologyBasis& basis(int k);

// Splitting of a canonical class along its connected components: maps
// (left key, right key) -> multiplicity over all ordered component subsets,
// where "trivalent 0" denotes the empty graph. Component canonicalization
// signs are absorbed into the multiplicities.
extern const std::string kEmptyGraphKey;
std::map<std::pair<std::string, std::string>, Rat> coproduct(const std::string& key);

// Insert a doubled two-vertex bead into an edge.
OrientedGraph bubble_edge(const OrientedGraph& g, int edge_flag);

// The degree-raising bubbling operator: each component c_i (degree k_i, total
// degree k) is bubbled on the first edge of its canonical form with weight
// k_i/k, and the results are summed.
GraphVector bubble_class(const GraphVector& v);

}  // namespace rwg

#endif
