#include "rwgraph/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rwg {

bool OrientedGraph::has_loop() const {
    for (int f = 0; f < flags(); ++f)
        if (vertex_of(f) == vertex_of(mate[f])) return true;
    return false;
}

std::vector<std::pair<int, int>> OrientedGraph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int f = 0; f < flags(); ++f)
        if (f < mate[f]) e.emplace_back(f, mate[f]);
    return e;
}

namespace {

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> toks;
    std::string cur;
    bool comment = false;
    for (char c : text) {
        if (c == '\n') comment = false;
        if (comment) continue;
        if (c == '#') {
            comment = true;
            c = ' ';
        }
        if (isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) toks.push_back(cur), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    return toks;
}

int parse_flag(const std::string& tok, int n) {
    auto dot = tok.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 >= tok.size())
        throw std::invalid_argument("expected <vertex>.<slot>, got: " + tok);
    size_t pos = 0;
    int v, s;
    try {
        v = std::stoi(tok.substr(0, dot), &pos);
        if (pos != dot) throw std::invalid_argument("");
        s = std::stoi(tok.substr(dot + 1), &pos);
        if (pos != tok.size() - dot - 1) throw std::invalid_argument("");
    } catch (...) {
        throw std::invalid_argument("bad flag: " + tok);
    }
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range: " + tok);
    if (s < 0 || s > 2) throw std::invalid_argument("slot out of range: " + tok);
    return OrientedGraph::flag_id(v, s);
}

}  // namespace

OrientedGraph parse_graph(const std::string& text) {
    auto toks = tokenize(text);
    size_t i = 0;
    auto next = [&]() -> const std::string& {
        if (i >= toks.size()) throw std::invalid_argument("unexpected end of graph text");
        return toks[i++];
    };
    if (toks.empty() || next() != "trivalent")
        throw std::invalid_argument("graph text must start with 'trivalent <n>'");
    int n;
    try {
        size_t pos = 0;
        n = std::stoi(next(), &pos);
    } catch (...) {
        throw std::invalid_argument("bad vertex count");
    }
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument("vertex count must be positive and even");
    OrientedGraph g;
    g.n = n;
    g.mate.assign(3 * n, -1);
    while (i < toks.size()) {
        if (next() != "edge") throw std::invalid_argument("expected 'edge'");
        int a = parse_flag(next(), n);
        int b = parse_flag(next(), n);
        if (a == b) throw std::invalid_argument("edge pairs a flag with itself");
        if (g.mate[a] != -1 || g.mate[b] != -1)
            throw std::invalid_argument("flag referenced twice");
        g.mate[a] = b;
        g.mate[b] = a;
    }
    for (int f = 0; f < g.flags(); ++f)
        if (g.mate[f] == -1)
            throw std::invalid_argument("flag missing from matching: " +
                                        std::to_string(f / 3) + "." + std::to_string(f % 3));
    return g;
}

static void write_edges(const OrientedGraph& g, std::ostream& os, const char* sep) {
    for (auto [a, b] : g.edges())
        os << sep << "edge " << OrientedGraph::vertex_of(a) << "." << OrientedGraph::slot_of(a)
           << " " << OrientedGraph::vertex_of(b) << "." << OrientedGraph::slot_of(b);
}

std::string graph_to_text(const OrientedGraph& g) {
    std::ostringstream os;
    os << "trivalent " << g.n;
    write_edges(g, os, "\n");
    os << "\n";
    return os.str();
}

std::string graph_to_inline_text(const OrientedGraph& g) {
    std::ostringstream os;
    os << "trivalent " << g.n;
    write_edges(g, os, " ");
    return os.str();
}

OrientedGraph disjoint_union(const OrientedGraph& g, const OrientedGraph& h) {
    OrientedGraph u;
    u.n = g.n + h.n;
    u.mate = g.mate;
    u.mate.reserve(3 * u.n);
    for (int f : h.mate) u.mate.push_back(f + 3 * g.n);
    return u;
}

std::vector<std::vector<int>> connected_components(const OrientedGraph& g) {
    std::vector<int> comp(g.n, -1);
    int nc = 0;
    for (int v = 0; v < g.n; ++v) {
        if (comp[v] != -1) continue;
        std::vector<int> stack{v};
        comp[v] = nc;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int s = 0; s < 3; ++s) {
                int w = OrientedGraph::vertex_of(g.mate[OrientedGraph::flag_id(u, s)]);
                if (comp[w] == -1) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
            }
        }
        ++nc;
    }
    std::vector<std::vector<int>> out(nc);
    for (int v = 0; v < g.n; ++v) out[comp[v]].push_back(v);
    return out;
}

OrientedGraph induced_subgraph(const OrientedGraph& g, const std::vector<int>& verts) {
    std::vector<int> newindex(g.n, -1);
    for (size_t i = 0; i < verts.size(); ++i) newindex[verts[i]] = static_cast<int>(i);
    OrientedGraph h;
    h.n = static_cast<int>(verts.size());
    h.mate.assign(3 * h.n, -1);
    for (int i = 0; i < h.n; ++i)
        for (int s = 0; s < 3; ++s) {
            int f = OrientedGraph::flag_id(verts[i], s);
            int m = g.mate[f];
            int mv = newindex[OrientedGraph::vertex_of(m)];
            if (mv == -1)
                throw std::invalid_argument("vertex set is not a union of components");
            h.mate[OrientedGraph::flag_id(i, s)] =
                OrientedGraph::flag_id(mv, OrientedGraph::slot_of(m));
        }
    return h;
}

WheelAssembly wheel_assembly(const std::vector<int>& wheel_sizes) {
    WheelAssembly w;
    int base = 0;
    for (int l : wheel_sizes) {
        if (l < 2) throw std::invalid_argument("wheel size must be at least 2");
        for (int j = 0; j < l; ++j) {
            int v = base + j;
            int vn = base + (j + 1) % l;
            // slot 0: edge in from previous, slot 1: spoke, slot 2: edge out
            w.cycle_edges.emplace_back(OrientedGraph::flag_id(v, 2),
                                       OrientedGraph::flag_id(vn, 0));
            w.spoke_flags.push_back(OrientedGraph::flag_id(v, 1));
        }
        base += l;
    }
    w.total_vertices = base;
    return w;
}

OrientedGraph necklace(int m) {
    if (m < 1) throw std::invalid_argument("necklace needs m >= 1");
    auto w = wheel_assembly({2 * m});
    OrientedGraph g;
    g.n = w.total_vertices;
    g.mate.assign(3 * g.n, -1);
    auto link = [&](int a, int b) {
        g.mate[a] = b;
        g.mate[b] = a;
    };
    for (auto [a, b] : w.cycle_edges) link(a, b);
    for (int j = 0; j < m; ++j) link(w.spoke_flags[2 * j], w.spoke_flags[2 * j + 1]);
    return g;
}

OrientedGraph prism(int m) {
    if (m < 3) throw std::invalid_argument("prism needs m >= 3");
    OrientedGraph g;
    g.n = 2 * m;
    g.mate.assign(3 * g.n, -1);
    auto link = [&](int a, int b) {
        g.mate[a] = b;
        g.mate[b] = a;
    };
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        link(3 * i + 2, 3 * j);                  // inner cycle
        link(3 * (m + i) + 2, 3 * (m + j));      // outer cycle
        link(3 * i + 1, 3 * (m + i) + 1);        // spoke
    }
    return g;
}

}  // namespace rwg
