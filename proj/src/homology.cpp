#include "rwgraph/homology.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "rwgraph/canonical.hpp"

namespace rwg {

const std::string kEmptyGraphKey = "trivalent 0";

std::array<OrientedGraph, 3> ihx_terms(const OrientedGraph& g, int edge_flag) {
    int fu = edge_flag;
    if (fu < 0 || fu >= g.flags()) throw std::invalid_argument("edge flag out of range");
    int fv = g.mate[fu];
    int u = OrientedGraph::vertex_of(fu);
    int v = OrientedGraph::vertex_of(fv);
    if (u == v) throw std::invalid_argument("relation undefined on a loop edge");
    int p = OrientedGraph::slot_of(fu);
    int q = OrientedGraph::slot_of(fv);

    // The four slots around the edge and the germ originally seated at each.
    std::array<int, 4> slot = {
        OrientedGraph::flag_id(u, (p + 1) % 3), OrientedGraph::flag_id(u, (p + 2) % 3),
        OrientedGraph::flag_id(v, (q + 1) % 3), OrientedGraph::flag_id(v, (q + 2) % 3)};
    // far[i]: where germ i leads. Non-negative = flag outside the quartet,
    // negative = germ (-1 - far[i]).
    std::array<int, 4> far{};
    for (int i = 0; i < 4; ++i) {
        int m = g.mate[slot[i]];
        far[i] = m;
        for (int j = 0; j < 4; ++j)
            if (m == slot[j]) far[i] = -1 - j;
    }

    static const int kPattern[3][4] = {{0, 1, 2, 3}, {1, 2, 0, 3}, {2, 0, 1, 3}};
    std::array<OrientedGraph, 3> out{g, g, g};
    for (int t = 0; t < 3; ++t) {
        const int* germ_at = kPattern[t];
        int pos_of[4];
        for (int i = 0; i < 4; ++i) pos_of[germ_at[i]] = i;
        OrientedGraph& h = out[t];
        for (int i = 0; i < 4; ++i) {
            int target = far[germ_at[i]];
            int tf = target >= 0 ? target : slot[pos_of[-1 - target]];
            h.mate[slot[i]] = tf;
            h.mate[tf] = slot[i];
        }
    }
    return out;
}

GraphVector ihx_relation(const OrientedGraph& g, int edge_flag) {
    GraphVector v(g.n / 2);
    for (const OrientedGraph& t : ihx_terms(g, edge_flag)) v.add_graph(t, 1);
    return v;
}

static void matchings_rec(const std::vector<int>& flags, std::vector<std::pair<int, int>>& cur,
                          std::vector<std::vector<std::pair<int, int>>>& out) {
    if (flags.empty()) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = 1; i < flags.size(); ++i) {
        std::vector<int> rest;
        for (std::size_t j = 1; j < flags.size(); ++j)
            if (j != i) rest.push_back(flags[j]);
        cur.emplace_back(flags[0], flags[i]);
        matchings_rec(rest, cur, out);
        cur.pop_back();
    }
}

std::vector<OrientedGraph> closure_graphs(const Partition& even_parts) {
    if (even_parts.empty()) throw std::invalid_argument("empty polywheel");
    for (int part : even_parts)
        if (part < 2 || part % 2 != 0)
            throw std::invalid_argument("polywheel parts must be even and >= 2");
    WheelAssembly wa = wheel_assembly(even_parts);
    OrientedGraph base;
    base.n = wa.total_vertices;
    base.mate.assign(base.flags(), -1);
    for (auto [a, b] : wa.cycle_edges) {
        base.mate[a] = b;
        base.mate[b] = a;
    }
    std::vector<std::vector<std::pair<int, int>>> matchings;
    std::vector<std::pair<int, int>> cur;
    matchings_rec(wa.spoke_flags, cur, matchings);
    std::vector<OrientedGraph> out;
    out.reserve(matchings.size());
    for (const auto& m : matchings) {
        OrientedGraph g = base;
        for (auto [a, b] : m) {
            g.mate[a] = b;
            g.mate[b] = a;
        }
        out.push_back(std::move(g));
    }
    return out;
}

GraphVector closure(const Partition& even_parts) {
    int total = 0;
    for (int part : even_parts) total += part;
    GraphVector v(total / 2);
    for (const OrientedGraph& g : closure_graphs(even_parts)) v.add_graph(g, 1);
    return v;
}

OrientedGraph necklace_union(const Partition& parts) {
    if (parts.empty()) throw std::invalid_argument("empty partition");
    OrientedGraph g = necklace(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) g = disjoint_union(g, necklace(parts[i]));
    return g;
}

GraphVector disjoint_product(const GraphVector& a, const GraphVector& b) {
    if (a.degree() == 0) return b;
    if (b.degree() == 0) return a;
    GraphVector out(a.degree() + b.degree());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out.add_graph(disjoint_union(parse_graph(ka), parse_graph(kb)), ca * cb);
    return out;
}

std::string necklace_union_name(const Partition& parts) {
    std::vector<int> sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        if (i > 0) os << "*";
        os << (sorted[i] == 1 ? std::string("theta") : "theta" + std::to_string(sorted[i]));
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

ComponentSplit split_components(const OrientedGraph& g) {
    ComponentSplit out;
    for (const auto& comp : connected_components(g)) {
        OrientedGraph sub = induced_subgraph(g, comp);
        SignedCanonical sc = canonicalize(sub);
        out.keys.push_back(sc.key);
        out.sign *= sc.sign;
        out.degrees.push_back(sub.n / 2);
    }
    return out;
}

std::map<std::pair<std::string, std::string>, Rat> coproduct(const std::string& key) {
    if (key == kEmptyGraphKey) return {{{kEmptyGraphKey, kEmptyGraphKey}, Rat(1)}};
    OrientedGraph g = parse_graph(key);
    auto comps = connected_components(g);
    int c = static_cast<int>(comps.size());
    std::map<std::pair<std::string, std::string>, Rat> out;
    for (int mask = 0; mask < (1 << c); ++mask) {
        std::vector<int> lverts, rverts;
        for (int i = 0; i < c; ++i) {
            auto& dst = ((mask >> i) & 1) ? lverts : rverts;
            dst.insert(dst.end(), comps[i].begin(), comps[i].end());
        }
        std::string lk = kEmptyGraphKey, rk = kEmptyGraphKey;
        int sign = 1;
        if (!lverts.empty()) {
            std::sort(lverts.begin(), lverts.end());
            SignedCanonical sc = canonicalize(induced_subgraph(g, lverts));
            lk = sc.key;
            sign *= sc.sign;
        }
        if (!rverts.empty()) {
            std::sort(rverts.begin(), rverts.end());
            SignedCanonical sc = canonicalize(induced_subgraph(g, rverts));
            rk = sc.key;
            sign *= sc.sign;
        }
        if (sign == 0) continue;
        auto it = out.emplace(std::make_pair(lk, rk), 0).first;
        it->second += sign;
        if (it->second == 0) out.erase(it);
    }
    return out;
}

OrientedGraph bubble_edge(const OrientedGraph& g, int edge_flag) {
    int x = edge_flag;
    int y = g.mate[x];
    OrientedGraph h;
    h.n = g.n + 2;
    h.mate = g.mate;
    h.mate.resize(h.flags(), -1);
    int a = g.n, b = g.n + 1;
    auto link = [&h](int f1, int f2) {
        h.mate[f1] = f2;
        h.mate[f2] = f1;
    };
    link(x, OrientedGraph::flag_id(a, 0));
    link(OrientedGraph::flag_id(a, 1), OrientedGraph::flag_id(b, 1));
    link(OrientedGraph::flag_id(a, 2), OrientedGraph::flag_id(b, 0));
    link(OrientedGraph::flag_id(b, 2), y);
    return h;
}

GraphVector bubble_class(const GraphVector& v) {
    if (v.degree() == 0) throw std::invalid_argument("cannot bubble the empty class");
    int k = v.degree();
    GraphVector out(k + 1);
    for (const auto& [key, coeff] : v.terms()) {
        ComponentSplit split = split_components(parse_graph(key));
        int r = static_cast<int>(split.keys.size());
        for (int i = 0; i < r; ++i) {
            OrientedGraph comp = parse_graph(split.keys[i]);
            OrientedGraph whole = bubble_edge(comp, comp.edges()[0].first);
            for (int j = 0; j < r; ++j)
                if (j != i) whole = disjoint_union(whole, parse_graph(split.keys[j]));
            out.add_graph(whole, coeff * split.sign * frac(split.degrees[i], k));
        }
    }
    return out;
}

namespace {

// c is taken by value: callers pass coefficients that live inside a, and the
// loop would otherwise erase the referenced entry midway through.
void axpy(std::map<int, Rat>& a, Rat c, const std::map<int, Rat>& b) {
    for (const auto& [col, val] : b) {
        auto it = a.emplace(col, 0).first;
        it->second -= c * val;
        if (it->second == 0) a.erase(it);
    }
}

GraphVector graph_class(const OrientedGraph& g, int k) {
    GraphVector v(k);
    v.add_graph(g, 1);
    return v;
}

// The connected ten-vertex graph that spans degree 5 together with the
// five-bead necklace: a doubled edge (vertices 0, 1) bridges corners 2 and 3
// of the hexagon 2-4-6-3-7-5, whose remaining corners attach pairwise to the
// linked hub vertices 8 and 9. Slot orders are chosen so the class's
// coefficients in the polywheel expansions come out positive.
OrientedGraph degree5_companion() {
    OrientedGraph g;
    g.n = 10;
    g.mate.assign(30, -1);
    auto link = [&g](int v, int s, int w, int t) {
        g.mate[3 * v + s] = 3 * w + t;
        g.mate[3 * w + t] = 3 * v + s;
    };
    link(0, 0, 1, 0);
    link(0, 1, 1, 1);  // the doubled edge
    link(0, 2, 2, 0);
    link(1, 2, 3, 0);
    link(2, 1, 4, 0);
    link(4, 1, 6, 1);
    link(6, 0, 3, 1);
    link(3, 2, 7, 0);
    link(7, 1, 5, 1);
    link(5, 0, 2, 2);  // the hexagon
    link(4, 2, 8, 0);
    link(5, 2, 8, 1);
    link(6, 2, 9, 0);
    link(7, 2, 9, 2);
    link(8, 2, 9, 1);  // the hubs
    return g;
}

}  // namespace

void HomologyBasis::saturate_from(std::deque<std::string> work) const {
    while (!work.empty()) {
        std::string key = work.front();
        work.pop_front();
        if (!processed_.insert(key).second) continue;
        OrientedGraph g = parse_graph(key);
        if (canonicalize(g).sign != 0) nonzero_keys_.insert(key);
        for (auto [fa, fb] : g.edges()) {
            if (OrientedGraph::vertex_of(fa) == OrientedGraph::vertex_of(fb)) continue;
            for (int end : {fa, fb}) {
                GraphVector rel(degree_);
                for (const OrientedGraph& t : ihx_terms(g, end)) {
                    rel.add_graph(t, 1);
                    if (!t.has_loop()) {
                        std::string tk = canonicalize(t).key;
                        if (!processed_.count(tk)) work.push_back(tk);
                    }
                }
                if (rel.terms().empty()) continue;
                std::map<std::string, Rat> row(rel.terms().begin(), rel.terms().end());
                const Rat lead = row.begin()->second;
                std::ostringstream sig;
                for (const auto& [rk, val] : row) sig << rk << "|" << rat_to_string(val / lead) << ";";
                if (row_sigs_.insert(sig.str()).second) raw_rows_.push_back(std::move(row));
            }
        }
    }
}

void HomologyBasis::rebuild_matrices() const {
    std::set<std::string> preferred_set(preferred_.begin(), preferred_.end());
    columns_.clear();
    for (const std::string& key : nonzero_keys_)
        if (!preferred_set.count(key)) columns_.push_back(key);
    std::sort(columns_.begin(), columns_.end());
    for (auto it = preferred_.rbegin(); it != preferred_.rend(); ++it) columns_.push_back(*it);

    column_index_.clear();
    for (std::size_t i = 0; i < columns_.size(); ++i)
        column_index_[columns_[i]] = static_cast<int>(i);

    std::vector<std::map<int, Rat>> rows;
    rows.reserve(raw_rows_.size());
    for (const auto& row : raw_rows_) {
        std::map<int, Rat> r;
        for (const auto& [key, val] : row) r[column_index_.at(key)] = val;
        rows.push_back(std::move(r));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });

    elim_rows_.clear();
    pivot_row_.clear();
    for (auto& r : rows) {
        for (;;) {
            auto hit = r.end();
            for (auto it = r.begin(); it != r.end(); ++it)
                if (pivot_row_.count(it->first)) {
                    hit = it;
                    break;
                }
            if (hit == r.end()) break;
            const auto& prow = elim_rows_[pivot_row_.at(hit->first)];
            axpy(r, hit->second / prow.at(hit->first), prow);
        }
        if (r.empty()) continue;
        int p = r.begin()->first;
        Rat lead = r.begin()->second;
        for (auto& [col, val] : r) val /= lead;
        for (auto& row : elim_rows_) {
            auto it = row.find(p);
            if (it != row.end()) axpy(row, it->second, r);
        }
        pivot_row_[p] = static_cast<int>(elim_rows_.size());
        elim_rows_.push_back(std::move(r));
    }
}

std::vector<std::string> HomologyBasis::free_keys() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < columns_.size(); ++i)
        if (!pivot_row_.count(static_cast<int>(i))) out.push_back(columns_[i]);
    return out;
}

Vec HomologyBasis::reduce(const GraphVector& v) const {
    if (!v.terms().empty() && v.degree() != degree_)
        throw std::invalid_argument("vector degree does not match basis degree");

    std::deque<std::string> unseen;
    for (const auto& [key, coeff] : v.terms())
        if (!processed_.count(key)) unseen.push_back(key);
    if (!unseen.empty()) {
        saturate_from(std::move(unseen));
        rebuild_matrices();
        std::vector<std::string> free = free_keys();
        std::set<std::string> free_set(free.begin(), free.end());
        std::set<std::string> basis_set(basis_keys_.begin(), basis_keys_.end());
        if (free_set != basis_set)
            throw std::runtime_error("span extension changed the homology basis");
    }

    std::map<int, Rat> x;
    for (const auto& [key, coeff] : v.terms()) x[column_index_.at(key)] = coeff;
    for (const auto& [p, ridx] : pivot_row_) {
        auto it = x.find(p);
        if (it != x.end()) axpy(x, it->second, elim_rows_[ridx]);
    }

    Vec out(basis_keys_.size(), Rat(0));
    for (const auto& [col, val] : x) {
        const std::string& key = columns_[col];
        auto it = std::find(basis_keys_.begin(), basis_keys_.end(), key);
        if (it == basis_keys_.end())
            throw std::runtime_error("reduction left a non-basis coordinate on " + key);
        out[it - basis_keys_.begin()] = val;
    }
    return out;
}

Vec HomologyBasis::display_coordinates(const GraphVector& v) const {
    LinearSolution s = solve_linear(presentation_, reduce(v));
    if (!s.unique()) throw std::runtime_error("presentation classes do not span the basis");
    return s.particular;
}

GraphVector HomologyBasis::reduce_to_vector(const GraphVector& v) const {
    Vec coords = reduce(v);
    GraphVector out(degree_);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) out.add_class(basis_keys_[i], coords[i]);
    return out;
}

const DisplayClass& HomologyBasis::display_class(const std::string& name) const {
    for (const DisplayClass& cls : classes_)
        if (cls.name == name) return cls;
    throw std::invalid_argument("unknown class name: " + name);
}

const HomologyBasis& basis(int k) {
    static std::map<int, std::unique_ptr<HomologyBasis>> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return *it->second;
    if (k < 1 || k > 5) throw std::invalid_argument("basis degree must be between 1 and 5");

    std::unique_ptr<HomologyBasis> hb(new HomologyBasis());
    hb->degree_ = k;

    std::deque<std::string> work;
    for (const Partition& parts : even_partitions_of(2 * k))
        for (const OrientedGraph& g : closure_graphs(parts))
            if (!g.has_loop()) work.push_back(canonicalize(g).key);
    std::vector<std::pair<std::string, DisplayClass>> unions;  // key + display data
    for (const Partition& parts : partitions_of(k)) {
        OrientedGraph u = necklace_union(parts);
        unions.emplace_back(canonicalize(u).key,
                            DisplayClass{necklace_union_name(parts), graph_class(u, k)});
        work.push_back(unions.back().first);
    }
    if (k == 4) work.push_back(canonicalize(prism(4)).key);
    std::string theta_cube_key;
    if (k == 5) {
        theta_cube_key = canonicalize(disjoint_union(necklace(1), prism(4))).key;
        work.push_back(theta_cube_key);
        work.push_back(canonicalize(degree5_companion()).key);
    }
    hb->saturate_from(std::move(work));

    for (const auto& [key, cls] : unions) hb->preferred_.push_back(key);
    if (k == 5) hb->preferred_.push_back(theta_cube_key);
    for (const std::string& key : hb->preferred_)
        if (!hb->nonzero_keys_.count(key))
            throw std::runtime_error("vanishing class cannot serve as a basis key: " + key);

    hb->rebuild_matrices();

    std::vector<std::string> free = hb->free_keys();
    std::set<std::string> free_set(free.begin(), free.end());
    for (const std::string& key : hb->preferred_)
        if (!free_set.count(key))
            throw std::runtime_error("necklace class fell into the relation span: " + key);

    std::vector<std::size_t> pinned;
    for (const auto& [key, cls] : unions) {
        hb->basis_keys_.push_back(key);
        hb->classes_.push_back(cls);
    }
    if (k == 5) {
        hb->basis_keys_.push_back(theta_cube_key);
        hb->classes_.push_back({"g10a", graph_class(disjoint_union(necklace(1), prism(4)), 5)});
    }
    std::deque<std::string> leftovers;
    for (const std::string& key : free)
        if (std::find(hb->basis_keys_.begin(), hb->basis_keys_.end(), key) == hb->basis_keys_.end())
            leftovers.push_back(key);
    if (k == 4 || k == 5) {
        // One leftover column each; it is presented by an explicit connected
        // graph, pinned so the polywheel expansions get positive coefficients.
        if (leftovers.size() != 1)
            throw std::runtime_error("unexpected number of leftover classes in degree " +
                                     std::to_string(k));
        hb->basis_keys_.push_back(leftovers.front());
        if (k == 4)
            hb->classes_.push_back({"g8b", graph_class(prism(4), 4)});
        else
            hb->classes_.push_back({"g10b", graph_class(degree5_companion(), 5)});
    } else {
        int index = 0;
        for (const std::string& key : leftovers) {
            pinned.push_back(hb->basis_keys_.size());
            hb->basis_keys_.push_back(key);
            GraphVector rep(k);
            rep.add_class(key, 1);
            hb->classes_.push_back(
                {"r" + std::to_string(k) + "_" + std::to_string(index++), std::move(rep)});
        }
    }
    if (hb->basis_keys_.size() != free.size())
        throw std::runtime_error("basis presentation does not match free column count");

    // Pin leftover-key signs: the first nonzero coefficient across the
    // polywheel expansions, in presentation order, must be positive.
    for (std::size_t idx : pinned) {
        for (const Partition& parts : even_partitions_of(2 * k)) {
            Vec coords = hb->reduce(closure(parts));
            if (coords[idx] != 0) {
                if (coords[idx] < 0) {
                    GraphVector rep(k);
                    rep.add_class(hb->basis_keys_[idx], -1);
                    hb->classes_[idx].rep = std::move(rep);
                }
                break;
            }
        }
    }

    // The change of basis from free columns to the presentation classes.
    std::size_t dim = hb->basis_keys_.size();
    hb->presentation_.assign(dim, Vec(dim, Rat(0)));
    for (std::size_t j = 0; j < dim; ++j) {
        Vec col = hb->reduce(hb->classes_[j].rep);
        for (std::size_t i = 0; i < dim; ++i) hb->presentation_[i][j] = col[i];
    }
    if (rank(hb->presentation_) != static_cast<int>(dim))
        throw std::runtime_error("presentation classes are linearly dependent");

    const HomologyBasis& ref = *hb;
    cache[k] = std::move(hb);
    return ref;
}

}  // namespace rwg
