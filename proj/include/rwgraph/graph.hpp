#ifndef RWGRAPH_GRAPH_HPP
#define RWGRAPH_GRAPH_HPP

#include <string>
#include <vector>

namespace rwg {

// A trivalent multigraph with an orientation. Vertex v carries three flags
// (half-edges) numbered 3v, 3v+1, 3v+2; slot order read cyclically is the
// orientation data at v. mate[f] is the flag paired with f by the perfect
// matching that defines the edges. Loops (both flags at one vertex) are legal
// graphs; they represent the zero class once signs are taken into account.
struct OrientedGraph {
    int n = 0;                 // number of vertices (always even)
    std::vector<int> mate;     // size 3n, involution without fixed points

    int flags() const { return 3 * n; }
    static int vertex_of(int flag) { return flag / 3; }
    static int slot_of(int flag) { return flag % 3; }
    static int flag_id(int v, int s) { return 3 * v + s; }

    bool has_loop() const;
    // Edges as flag pairs (f, g) with f < g, sorted.
    std::vector<std::pair<int, int>> edges() const;
    bool operator==(const OrientedGraph& o) const = default;
};

// Text format, one declaration per whitespace-separated token stream:
//   trivalent <n>
//   edge <v>.<s> <w>.<t>
// '#' starts a comment running to end of line. Newlines are ordinary
// whitespace, so both the multi-line file format and the single-line
// canonical key format parse. Throws std::invalid_argument on syntax errors,
// on a flag referenced twice, on a missing flag, and on odd vertex counts.
OrientedGraph parse_graph(const std::string& text);

std::string graph_to_text(const OrientedGraph& g);            // multi-line
std::string graph_to_inline_text(const OrientedGraph& g);     // single line

// Vertices of h are appended after those of g; orientation data concatenates.
OrientedGraph disjoint_union(const OrientedGraph& g, const OrientedGraph& h);

// Vertex sets of the connected components, each sorted ascending; the list is
// ordered by smallest member. Also the induced subgraph on one component.
std::vector<std::vector<int>> connected_components(const OrientedGraph& g);
OrientedGraph induced_subgraph(const OrientedGraph& g, const std::vector<int>& verts);

// The 2m-vertex necklace: a 2m-cycle whose consecutive spoke pairs are joined,
// giving m doubled "beads" around the cycle. necklace(1) is the theta graph
// (two vertices joined by three edges). Cyclic slot order at each cycle vertex
// is (edge in, spoke, edge out), anticlockwise in the plane.
OrientedGraph necklace(int m);

// The m-gonal prism: two m-cycles joined vertex-for-vertex by spokes, with the
// necklace slot convention on both cycles. prism(4) is the cube. Requires
// m >= 3 so the cycle edges stay simple.
OrientedGraph prism(int m);

// The l-wheel used by polywheel expansion: an l-cycle with one spoke per
// vertex, same slot convention. Spokes are left unmatched by the caller; here
// they are returned as a graph only after the caller pairs them, so this
// helper exposes the cycle structure: vertex j has spoke flag 3j+1, cycle
// edges 3j+2 -> 3(j+1 mod l). Used by closure(); exposed for tests.
struct WheelAssembly {
    int total_vertices = 0;
    std::vector<std::pair<int, int>> cycle_edges;  // flag pairs
    std::vector<int> spoke_flags;                  // one per wheel vertex
};
WheelAssembly wheel_assembly(const std::vector<int>& wheel_sizes);

}  // namespace rwg

#endif
