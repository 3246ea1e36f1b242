#include "rwgraph/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rwg {

namespace {

// The six permutations of {0,1,2} and their parities. Rotations preserve the
// cyclic orientation at a vertex, reflections reverse it.
const int PERMS[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                         {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
const int PERM_SIGN[6] = {1, 1, 1, -1, -1, -1};

// A complete key is the flattened sorted flag-pair list: for each flag f in
// increasing order with f < mate(f), the two entries (f, mate(f)).
using Key = std::vector<int>;

struct Searcher {
    const OrientedGraph& g;
    int n;
    std::vector<int> new_of_old;   // vertex -> assigned label or -1
    std::vector<int> old_of_new;   // label -> vertex
    std::vector<int> perm_of_old;  // vertex -> chosen slot permutation index
    Key best;
    bool have_best = false;
    std::set<int> best_signs;
    int run_sign = 1;

    explicit Searcher(const OrientedGraph& gr)
        : g(gr), n(gr.n), new_of_old(gr.n, -1), old_of_new(gr.n, -1),
          perm_of_old(gr.n, 0) {}

    // New flag id of an old flag, or -1 if its vertex is unassigned.
    int new_flag(int old_flag) const {
        int v = OrientedGraph::vertex_of(old_flag);
        if (new_of_old[v] == -1) return -1;
        int s = PERMS[perm_of_old[v]][OrientedGraph::slot_of(old_flag)];
        return OrientedGraph::flag_id(new_of_old[v], s);
    }

    int old_flag(int nf) const {
        int v = old_of_new[OrientedGraph::vertex_of(nf)];
        int ns = OrientedGraph::slot_of(nf);
        const int* p = PERMS[perm_of_old[v]];
        for (int s = 0; s < 3; ++s)
            if (p[s] == ns) return OrientedGraph::flag_id(v, s);
        return -1;
    }

    // Compare the determined prefix of the relabeled key against best.
    // -1: strictly smaller at a decided entry (any completion wins).
    //  0: equal or undecided so far.
    // +1: strictly larger (prune).
    int compare_prefix(int assigned) const {
        if (!have_best) return 0;
        int frontier = 3 * assigned;  // flags below this are assigned
        size_t entry = 0;
        for (int f = 0; f < frontier; ++f) {
            int of = old_flag(f);
            int m = new_flag(g.mate[of]);
            if (m != -1 && m < f) continue;  // pair already emitted at m
            // this pair occupies entries (entry, entry+1) in the key
            if (entry + 1 >= best.size()) return 1;  // cannot happen with equal sizes
            int bf = best[entry], bm = best[entry + 1];
            if (f != bf) return f < bf ? -1 : 1;
            if (m == -1) {
                // unknown partner is at least frontier
                if (bm < frontier) return 1;
                return 0;
            }
            if (m != bm) return m < bm ? -1 : 1;
            entry += 2;
        }
        return 0;
    }

    Key full_key() const {
        Key k;
        k.reserve(3 * n);
        for (int f = 0; f < 3 * n; ++f) {
            int m = new_flag(g.mate[old_flag(f)]);
            if (m > f) {
                k.push_back(f);
                k.push_back(m);
            }
        }
        return k;
    }

    void at_leaf() {
        Key k = full_key();
        if (!have_best || k < best) {
            best = std::move(k);
            have_best = true;
            best_signs = {run_sign};
        } else if (k == best) {
            best_signs.insert(run_sign);
        }
    }

    void search(int depth) {
        if (depth == n) {
            at_leaf();
            return;
        }
        // candidate order: vertices adjacent to the assigned set first (pure
        // heuristic; correctness rests on compare_prefix pruning alone)
        std::vector<int> cands;
        for (int v = 0; v < n; ++v) {
            if (new_of_old[v] != -1) continue;
            bool adj = false;
            for (int s = 0; s < 3 && !adj; ++s)
                adj = new_of_old[OrientedGraph::vertex_of(
                          g.mate[OrientedGraph::flag_id(v, s)])] != -1;
            if (adj) cands.push_back(v);
        }
        if (cands.empty() || depth == 0)
            for (int v = 0; v < n; ++v)
                if (new_of_old[v] == -1 &&
                    std::find(cands.begin(), cands.end(), v) == cands.end())
                    cands.push_back(v);
        for (int v : cands) {
            new_of_old[v] = depth;
            old_of_new[depth] = v;
            for (int p = 0; p < 6; ++p) {
                perm_of_old[v] = p;
                run_sign *= PERM_SIGN[p];
                if (compare_prefix(depth + 1) <= 0) search(depth + 1);
                run_sign *= PERM_SIGN[p];
            }
            perm_of_old[v] = 0;
            new_of_old[v] = -1;
            old_of_new[depth] = -1;
        }
    }
};

OrientedGraph key_to_graph(int n, const Key& k) {
    OrientedGraph g;
    g.n = n;
    g.mate.assign(3 * n, -1);
    for (size_t i = 0; i < k.size(); i += 2) {
        g.mate[k[i]] = k[i + 1];
        g.mate[k[i + 1]] = k[i];
    }
    return g;
}

std::map<std::string, SignedCanonical>& cache() {
    static std::map<std::string, SignedCanonical> c;
    return c;
}

}  // namespace

SignedCanonical canonicalize_monolithic(const OrientedGraph& g) {
    Searcher s(g);
    s.search(0);
    SignedCanonical out;
    out.key = graph_to_inline_text(key_to_graph(g.n, s.best));
    out.sign = s.best_signs.size() == 2 ? 0 : *s.best_signs.begin();
    return out;
}

SignedCanonical canonicalize(const OrientedGraph& g) {
    std::string ser = graph_to_inline_text(g);
    auto it = cache().find(ser);
    if (it != cache().end()) return it->second;

    SignedCanonical out;
    auto comps = connected_components(g);
    if (comps.size() == 1) {
        out = canonicalize_monolithic(g);
    } else {
        int sign = 1;
        std::vector<std::string> keys;
        for (const auto& c : comps) {
            SignedCanonical sc = canonicalize(induced_subgraph(g, c));
            sign *= sc.sign;
            keys.push_back(sc.key);
        }
        // minimal concatenation over the distinct orderings of the blocks;
        // reordering whole components never changes the sign
        std::sort(keys.begin(), keys.end());
        Key besttuple;
        std::string bestkey;
        bool first = true;
        do {
            OrientedGraph u = parse_graph(keys[0]);
            for (size_t i = 1; i < keys.size(); ++i)
                u = disjoint_union(u, parse_graph(keys[i]));
            Key tup;
            for (auto [a, b] : u.edges()) {
                tup.push_back(a);
                tup.push_back(b);
            }
            if (first || tup < besttuple) {
                besttuple = std::move(tup);
                bestkey = graph_to_inline_text(u);
                first = false;
            }
        } while (std::next_permutation(keys.begin(), keys.end()));
        out.key = bestkey;
        out.sign = sign;
    }
    cache()[ser] = out;
    if (out.key != ser) cache()[out.key] = SignedCanonical{out.key, out.sign == 0 ? 0 : 1};
    return out;
}

}  // namespace rwg
