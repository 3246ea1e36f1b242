#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rwgraph/canonical.hpp"
#include "rwgraph/homology.hpp"

using namespace rwg;

namespace {

Vec disp(int k, const GraphVector& v) { return basis(k).display_coordinates(v); }

Vec rats(std::vector<std::string> vals) {
    Vec out;
    for (const auto& s : vals) out.push_back(rat_from_string(s));
    return out;
}

bool all_zero(const Vec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

GraphVector single(const OrientedGraph& g) {
    GraphVector v(g.n / 2);
    v.add_graph(g, 1);
    return v;
}

}  // namespace

TEST_CASE("edge contraction relation shape") {
    OrientedGraph g = necklace(2);
    // bead edge: spoke flags 0.1 and 1.1
    GraphVector rel = ihx_relation(g, OrientedGraph::flag_id(0, 1));
    CHECK(rel.degree() == 2);
    CHECK(rel.terms().size() <= 3);
    CHECK_THROWS(ihx_relation(parse_graph("trivalent 2\nedge 0.0 0.1\nedge 0.2 1.0\nedge 1.1 1.2"),
                              0));  // loop edge
}

TEST_CASE("relation vanishes in the quotient") {
    for (int m : {2, 3}) {
        OrientedGraph g = necklace(m);
        for (auto [fa, fb] : g.edges()) {
            (void)fb;
            CHECK(all_zero(basis(m).reduce(ihx_relation(g, fa))));
        }
    }
    // genuinely branching graphs: all loop-free matching terms of the (4,2) polywheel
    for (const OrientedGraph& g : closure_graphs({4, 2})) {
        if (g.has_loop()) continue;
        for (auto [fa, fb] : g.edges()) {
            (void)fb;
            CHECK(all_zero(basis(3).reduce(ihx_relation(g, fa))));
        }
    }
}

TEST_CASE("smallest polywheel is the one-bead necklace") {
    GraphVector c = closure({2});
    GraphVector n = single(necklace(1));
    CHECK(c.terms() == n.terms());
    CHECK(disp(1, c) == rats({"1"}));
}

TEST_CASE("basis dimensions and connected counts") {
    CHECK(basis(1).dimension() == 1);
    CHECK(basis(2).dimension() == 2);
    CHECK(basis(3).dimension() == 3);
    CHECK(basis(4).dimension() == 6);
    int conn = 0;
    for (const auto& cls : basis(4).display_classes()) {
        REQUIRE(cls.rep.terms().size() == 1);
        if (connected_components(parse_graph(cls.rep.terms().begin()->first)).size() == 1) ++conn;
    }
    CHECK(conn == 2);  // the 4-bead necklace and the cube
    CHECK(basis(4).display_classes()[5].name == "g8b");

    // the class completing degree 4 is the cube, with unit coordinates
    Vec cube = basis(4).display_coordinates(single(prism(4)));
    CHECK(cube == rats({"0", "0", "0", "0", "0", "1"}));
}

TEST_CASE("basis keys reduce to unit coordinates") {
    const HomologyBasis& b = basis(3);
    for (std::size_t i = 0; i < b.basis_keys().size(); ++i) {
        GraphVector v(3);
        v.add_class(b.basis_keys()[i], 1);
        Vec coords = b.reduce(v);
        for (std::size_t j = 0; j < coords.size(); ++j) CHECK(coords[j] == Rat(i == j ? 1 : 0));
    }
}

TEST_CASE("polywheel expansions in degrees 2 and 3") {
    CHECK(disp(2, closure({2, 2})) == rats({"1", "2"}));
    CHECK(disp(2, closure({4})) == rats({"0", "5/2"}));
    CHECK(disp(3, closure({2, 2, 2})) == rats({"1", "6", "8"}));
    CHECK(disp(3, closure({4, 2})) == rats({"0", "5/2", "10"}));
    CHECK(disp(3, closure({6})) == rats({"0", "0", "35/4"}));
}

TEST_CASE("polywheel expansions in degree 4") {
    CHECK(disp(4, closure({2, 2, 2, 2})) == rats({"1", "12", "12", "32", "48", "0"}));
    CHECK(disp(4, closure({4, 2, 2})) == rats({"0", "5/2", "5", "20", "60", "0"}));
    CHECK(disp(4, closure({4, 4})) == rats({"0", "0", "25/4", "0", "48", "24"}));
    CHECK(disp(4, closure({6, 2})) == rats({"0", "0", "0", "35/4", "105/2", "0"}));
    CHECK(disp(4, closure({8})) == rats({"0", "0", "0", "0", "287/8", "7"}));
}

TEST_CASE("bubbling raises degree consistently") {
    GraphVector theta = single(necklace(1));
    GraphVector btheta = bubble_class(theta);
    CHECK(btheta.degree() == 2);
    CHECK(disp(2, btheta) == rats({"0", "1"}));  // one bead becomes two

    // bubbling any edge of a connected graph gives the same class
    OrientedGraph n2 = necklace(2);
    Vec ref;
    for (auto [fa, fb] : n2.edges()) {
        (void)fb;
        Vec got = basis(3).reduce(single(bubble_edge(n2, fa)));
        if (ref.empty())
            ref = got;
        else
            CHECK(got == ref);
    }

    // adding a two-wheel to a polywheel: <w_2 w_l...> = theta.<w_l...> + 2k (<w_l...>)'
    GraphVector w4 = closure({4});
    GraphVector lhs = closure({4, 2});
    GraphVector rhs = disjoint_product(single(necklace(1)), w4);
    GraphVector scaled = bubble_class(w4);
    scaled *= Rat(2 * 2);
    rhs += scaled;
    CHECK(disp(3, lhs) == disp(3, rhs));
}

TEST_CASE("component splitting") {
    OrientedGraph u = necklace_union({2, 1, 1});
    ComponentSplit split = split_components(u);
    CHECK(split.keys.size() == 3);
    CHECK(split.degrees == std::vector<int>{2, 1, 1});

    std::string tk = canonicalize(necklace(1)).key;
    std::string ttk = canonicalize(necklace_union({1, 1})).key;
    auto cp = coproduct(ttk);
    CHECK(cp.size() == 3);
    CHECK(cp.at({kEmptyGraphKey, ttk}) == 1);
    CHECK(cp.at({tk, tk}) == 2);
    CHECK(cp.at({ttk, kEmptyGraphKey}) == 1);
}
