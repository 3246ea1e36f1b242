#ifndef RWGRAPH_GRAPH_VECTOR_HPP
#define RWGRAPH_GRAPH_VECTOR_HPP

#include <map>
#include <string>

#include "rwgraph/canonical.hpp"
#include "rwgraph/graph.hpp"
#include "rwgraph/rational.hpp"

namespace rwg {

// A finite rational linear combination of canonical graph classes, all with
// the same vertex count 2*degree. Insertion canonicalizes, applies the
// orientation sign, and drops classes that vanish (loops, antisymmetric
// automorphisms) as well as exact cancellations.
class GraphVector {
  public:
    explicit GraphVector(int degree = 0) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<std::string, Rat>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add_class(const std::string& canonical_key, const Rat& coeff);
    void add_graph(const OrientedGraph& g, const Rat& coeff);
    GraphVector& operator+=(const GraphVector& o);
    GraphVector& operator*=(const Rat& c);

    Rat coeff(const std::string& key) const;

    // One term per line: "<rational> * <canonical key>". Deterministic order.
    std::string to_text() const;
    static GraphVector from_text(const std::string& text);

  private:
    int degree_;
    std::map<std::string, Rat> terms_;
};

}  // namespace rwg

#endif
