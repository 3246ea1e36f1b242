#include "rwgraph/lie_weight.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "rwgraph/homology.hpp"
#include "rwgraph/rational.hpp"

namespace rwg {

const LieData& su2_adjoint() {
    static LieData L = [] {
        LieData d;
        d.dim = 3;
        d.metric.assign(9, Rat(0));
        for (int a = 0; a < 3; ++a) d.metric[a * 3 + a] = 1;
        d.structure.assign(27, Rat(0));
        auto set = [&d](int a, int b, int c, int v) { d.structure[(a * 3 + b) * 3 + c] = v; };
        set(0, 1, 2, 1);
        set(1, 2, 0, 1);
        set(2, 0, 1, 1);
        set(0, 2, 1, -1);
        set(2, 1, 0, -1);
        set(1, 0, 2, -1);
        return d;
    }();
    return L;
}

namespace {

// ipow for small state sizes
std::size_t upow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

Rat contract_component(const OrientedGraph& g, const std::vector<int>& verts, const LieData& L) {
    const int dim = L.dim;
    std::set<int> pending(verts.begin(), verts.end());
    std::set<int> absorbed;
    std::vector<int> open;  // edge ids (min flag); digit position in state index
    std::vector<Rat> state(1, Rat(1));

    auto edge_id = [&g](int flag) { return std::min(flag, g.mate[flag]); };

    while (!pending.empty()) {
        int best = -1, best_links = -1;
        for (int v : pending) {
            int links = 0;
            for (int s = 0; s < 3; ++s) {
                int m = g.mate[OrientedGraph::flag_id(v, s)];
                if (absorbed.count(OrientedGraph::vertex_of(m))) ++links;
            }
            if (links > best_links) {
                best_links = links;
                best = v;
            }
        }
        int v = best;
        pending.erase(v);

        // classify the three slots
        int close_pos[3] = {-1, -1, -1};  // position in open list if closing
        int loop_partner[3] = {-1, -1, -1};
        bool opening[3] = {false, false, false};
        std::vector<int> opened_ids;
        for (int s = 0; s < 3; ++s) {
            int f = OrientedGraph::flag_id(v, s);
            int m = g.mate[f];
            if (OrientedGraph::vertex_of(m) == v) {
                loop_partner[s] = OrientedGraph::slot_of(m);
            } else if (absorbed.count(OrientedGraph::vertex_of(m))) {
                auto it = std::find(open.begin(), open.end(), edge_id(f));
                close_pos[s] = static_cast<int>(it - open.begin());
            } else {
                opening[s] = true;
                opened_ids.push_back(edge_id(f));
            }
        }

        std::vector<int> keep;  // old positions that stay open
        for (std::size_t p = 0; p < open.size(); ++p)
            if (close_pos[0] != static_cast<int>(p) && close_pos[1] != static_cast<int>(p) &&
                close_pos[2] != static_cast<int>(p))
                keep.push_back(static_cast<int>(p));

        std::vector<int> new_open;
        for (int p : keep) new_open.push_back(open[p]);
        new_open.insert(new_open.end(), opened_ids.begin(), opened_ids.end());
        std::vector<Rat> next(upow(dim, new_open.size()), Rat(0));

        std::vector<int> digits(open.size());
        for (std::size_t oidx = 0; oidx < state.size(); ++oidx) {
            if (state[oidx] == 0) continue;
            std::size_t rem = oidx;
            for (std::size_t p = 0; p < open.size(); ++p) {
                digits[p] = static_cast<int>(rem % dim);
                rem /= dim;
            }
            int idx[3];
            for (idx[0] = 0; idx[0] < dim; ++idx[0])
                for (idx[1] = 0; idx[1] < dim; ++idx[1])
                    for (idx[2] = 0; idx[2] < dim; ++idx[2]) {
                        Rat f = L.c(idx[0], idx[1], idx[2]);
                        if (f == 0) continue;
                        bool dead = false;
                        for (int s = 0; s < 3 && !dead; ++s) {
                            if (loop_partner[s] >= 0) {
                                if (loop_partner[s] > s) f *= L.sigma(idx[s], idx[loop_partner[s]]);
                            } else if (close_pos[s] >= 0) {
                                f *= L.sigma(digits[close_pos[s]], idx[s]);
                            }
                            if (f == 0) dead = true;
                        }
                        if (dead) continue;
                        std::size_t nidx = 0, mul = 1;
                        for (int p : keep) {
                            nidx += static_cast<std::size_t>(digits[p]) * mul;
                            mul *= dim;
                        }
                        for (int s = 0; s < 3; ++s)
                            if (opening[s]) {
                                nidx += static_cast<std::size_t>(idx[s]) * mul;
                                mul *= dim;
                            }
                        next[nidx] += state[oidx] * f;
                    }
        }
        open = std::move(new_open);
        state = std::move(next);
        absorbed.insert(v);
    }
    if (!open.empty()) throw std::logic_error("open edges left after contracting a component");
    return state[0];
}

}  // namespace

Rat lie_weight(const OrientedGraph& g, const LieData& L) {
    Rat out(1);
    for (const auto& comp : connected_components(g)) out *= contract_component(g, comp, L);
    return out;
}

Rat lie_weight(const GraphVector& v, const LieData& L) {
    Rat out(0);
    for (const auto& [key, coeff] : v.terms()) out += coeff * lie_weight(parse_graph(key), L);
    return out;
}

std::int64_t su2_weight_naive(const OrientedGraph& g) {
    static const auto eps = [] {
        std::array<std::array<std::array<int, 3>, 3>, 3> e{};
        e[0][1][2] = e[1][2][0] = e[2][0][1] = 1;
        e[0][2][1] = e[2][1][0] = e[1][0][2] = -1;
        return e;
    }();
    auto edges = g.edges();
    int ne = static_cast<int>(edges.size());
    if (ne > 14) throw std::invalid_argument("graph too large for the brute-force evaluation");
    std::vector<int> eidx(g.flags());
    for (int i = 0; i < ne; ++i) {
        eidx[edges[i].first] = i;
        eidx[edges[i].second] = i;
    }
    std::int64_t total = 0;
    std::vector<int> assign(ne, 0);
    for (;;) {
        std::int64_t prod = 1;
        for (int v = 0; v < g.n && prod != 0; ++v)
            prod *= eps[assign[eidx[3 * v]]][assign[eidx[3 * v + 1]]][assign[eidx[3 * v + 2]]];
        total += prod;
        int p = 0;
        while (p < ne && assign[p] == 2) assign[p++] = 0;
        if (p == ne) break;
        ++assign[p];
    }
    return total;
}

Rat su2_polywheel_closed_form(const Partition& even_parts) {
    int total = 0;
    for (int part : even_parts) {
        if (part < 2 || part % 2 != 0)
            throw std::invalid_argument("polywheel parts must be even and >= 2");
        total += part;
    }
    int k = total / 2;
    int j = static_cast<int>(even_parts.size());
    Rat c = factorial(2 * k + 1) / (rat_pow(Rat(2), k - 1) * factorial(k));
    if (k % 2 != 0) c = -c;
    return c * rat_pow(Rat(2), j - 1);
}

namespace {

Rat su2_rec(std::vector<int> parts, std::map<std::vector<int>, Rat>& memo) {
    Rat pre(1);
    {
        std::vector<int> kept;
        for (int p : parts) {
            if (p == 0)
                pre *= 3;  // zero-spoke wheel is the trace of the identity
            else
                kept.push_back(p);
        }
        parts = std::move(kept);
    }
    if (parts.empty()) return pre;
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    auto it = memo.find(parts);
    if (it != memo.end()) return pre * it->second;

    int total = 0;
    for (int p : parts) total += p;
    int k = total / 2;
    int n = static_cast<int>(parts.size());
    Rat rhs(0);
    for (int s = 0; s < n; ++s) {
        std::vector<int> rest;
        for (int i = 0; i < n; ++i)
            if (i != s) rest.push_back(parts[i]);
        {
            std::vector<int> next = rest;
            next.push_back(parts[s] - 2);
            rhs += frac(parts[s], 2) * su2_rec(next, memo);
        }
        for (int l = 0; l <= parts[s] - 2; l += 2) {
            std::vector<int> next = rest;
            next.push_back(parts[s] - l - 2);
            next.push_back(l);
            rhs -= Rat(l + 1) * su2_rec(next, memo);
        }
        for (int t = s + 1; t < n; ++t) {
            std::vector<int> next;
            for (int i = 0; i < n; ++i)
                if (i != s && i != t) next.push_back(parts[i]);
            next.push_back(parts[s] + parts[t] - 2);
            rhs -= Rat(2) * Rat(parts[s]) * Rat(parts[t]) * su2_rec(next, memo);
        }
    }
    Rat value = rhs / k;
    memo[parts] = value;
    return pre * value;
}

}  // namespace

Rat su2_polywheel_recursion(const Partition& even_parts) {
    for (int part : even_parts)
        if (part < 2 || part % 2 != 0)
            throw std::invalid_argument("polywheel parts must be even and >= 2");
    static std::map<std::vector<int>, Rat> memo;
    return su2_rec(even_parts, memo);
}

Rat su2_polywheel_contraction(const Partition& even_parts) {
    return lie_weight(closure(even_parts), su2_adjoint());
}

}  // namespace rwg
