#include "rwgraph/spaces.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

#include "rwgraph/homology.hpp"
#include "rwgraph/lie_weight.hpp"

namespace rwg {

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::polywheel: return "polywheel";
        case Provenance::rational_function: return "rational-function";
        case Provenance::product_split: return "product-split";
        case Provenance::direct_weight: return "direct-weight";
        case Provenance::additive_sum: return "additive-sum";
    }
    throw std::logic_error("unhandled provenance");
}

namespace {

std::string theta_power_name(int k) { return necklace_union_name(Partition(k, 1)); }

// b_{<w_{2 lambda}>}(X) = (-1)^{#parts} s_{2 lambda}(X).
std::map<Partition, Rat> polywheel_values(const ChernVector& cv) {
    std::map<Partition, Rat> out;
    for (const auto& [p, v] : cv.s_values) out[p] = (p.size() % 2 ? -v : v);
    return out;
}

struct ClosureData {
    std::vector<Partition> wheels;  // even partitions of 2k
    std::vector<Vec> rows;          // display coordinates of each closure
};

ClosureData closure_data(int k) {
    const HomologyBasis& b = basis(k);
    ClosureData out;
    out.wheels = even_partitions_of(2 * k);
    out.rows.reserve(out.wheels.size());
    for (const auto& p : out.wheels) out.rows.push_back(b.display_coordinates(closure(p)));
    return out;
}

struct ClassSolve {
    bool ok = false;
    Rat value;
};

// Express the unit vector of class j over the closure rows plus the unit
// vectors of already known classes, and evaluate. The value must not depend
// on the representation: kernel vectors have to pair to zero, anything else
// means two strategies disagree.
ClassSolve solve_class(const ClosureData& cd, const std::map<Partition, Rat>& bpoly,
                       const std::vector<std::string>& classes,
                       const std::map<std::string, InvariantEntry>& known, int j) {
    const int dim = static_cast<int>(classes.size());
    std::vector<Vec> cols;
    std::vector<Rat> vals;
    for (std::size_t i = 0; i < cd.wheels.size(); ++i) {
        cols.push_back(cd.rows[i]);
        vals.push_back(bpoly.at(cd.wheels[i]));
    }
    for (int i = 0; i < dim; ++i) {
        if (i == j) continue;
        auto it = known.find(classes[i]);
        if (it == known.end()) continue;
        Vec e(dim, Rat(0));
        e[i] = 1;
        cols.push_back(e);
        vals.push_back(it->second.value);
    }
    Mat a(dim, Vec(cols.size(), Rat(0)));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < dim; ++r) a[r][c] = cols[c][r];
    Vec rhs(dim, Rat(0));
    rhs[j] = 1;
    LinearSolution sol = solve_linear(a, rhs);
    if (!sol.consistent) return {};
    ClassSolve out;
    out.ok = true;
    out.value = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) out.value += sol.particular[c] * vals[c];
    for (const Vec& kv : sol.kernel) {
        Rat z(0);
        for (std::size_t c = 0; c < cols.size(); ++c) z += kv[c] * vals[c];
        if (z != 0)
            throw std::runtime_error("invariant strategies disagree on " + classes[j]);
    }
    return out;
}

int key_degree(const std::string& key) {
    std::istringstream in(key);
    std::string word;
    int n = 0;
    in >> word >> n;
    return n / 2;
}

// Value of a single canonical graph class on the space; zero when the
// degrees do not match.
Rat key_value(const Space& x, const std::string& key) {
    if (key_degree(key) != x.degree) return Rat(0);
    const HomologyBasis& b = basis(x.degree);
    GraphVector v(x.degree);
    v.add_class(key, Rat(1));
    if (v.empty()) return Rat(0);
    Vec coords = b.display_coordinates(v);
    const InvariantReport& rep = space_report(x);
    Rat out(0);
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (coords[j] == 0) continue;
        auto it = rep.entries.find(rep.classes[j]);
        if (it == rep.entries.end())
            throw std::runtime_error("invariant " + rep.classes[j] + " unknown on " + x.name);
        out += coords[j] * it->second.value;
    }
    return out;
}

InvariantReport irreducible_report(const Space& x) {
    const HomologyBasis& b = basis(x.degree);
    InvariantReport rep;
    rep.degree = x.degree;
    for (const auto& dc : b.display_classes()) rep.classes.push_back(dc.name);
    const int dim = static_cast<int>(rep.classes.size());
    for (const auto& [name, e] : x.cache->seeded) rep.entries[name] = e;

    auto set_value = [&rep](int j, const Rat& v, Provenance p) {
        auto it = rep.entries.find(rep.classes[j]);
        if (it != rep.entries.end()) {
            if (it->second.value != v)
                throw std::runtime_error("invariant strategies disagree on " + rep.classes[j]);
            return;
        }
        rep.entries[rep.classes[j]] = {v, p};
    };

    if (x.has_chern()) {
        ClosureData cd = closure_data(x.degree);
        std::map<Partition, Rat> bpoly = polywheel_values(x.chern);

        // polywheel span alone
        const std::map<std::string, InvariantEntry> nothing;
        for (int j = 0; j < dim; ++j) {
            ClassSolve s = solve_class(cd, bpoly, rep.classes, nothing, j);
            if (s.ok) set_value(j, s.value, Provenance::polywheel);
        }

        // necklace-union splitting needs the union parts of each class
        std::vector<Partition> union_parts(dim);
        for (const Partition& p : partitions_of(x.degree)) {
            std::string nm = necklace_union_name(p);
            for (int j = 0; j < dim; ++j)
                if (rep.classes[j] == nm) union_parts[j] = p;
        }
        const std::string theta_k = theta_power_name(x.degree);

        bool progress = true;
        while (progress) {
            progress = false;
            // b_{Theta_{m1}...Theta_{mj}} = b_{Theta^k} prod_i t_{m_i} with
            // t_m = b_{Theta^{k-m} Theta_m} / b_{Theta^k}
            auto tk = rep.entries.find(theta_k);
            if (tk != rep.entries.end() && tk->second.value != 0) {
                for (int j = 0; j < dim; ++j) {
                    const Partition& parts = union_parts[j];
                    if (parts.size() < 2 || rep.entries.count(rep.classes[j])) continue;
                    Rat v = tk->second.value;
                    bool all = true;
                    for (int m : parts) {
                        Partition q(static_cast<std::size_t>(x.degree - m), 1);
                        q.insert(q.begin(), m);
                        auto it = rep.entries.find(necklace_union_name(q));
                        if (it == rep.entries.end()) {
                            all = false;
                            break;
                        }
                        v *= it->second.value / tk->second.value;
                    }
                    if (!all) continue;
                    set_value(j, v, Provenance::rational_function);
                    progress = true;
                }
            }
            // polywheel span extended by the values found so far
            for (int j = 0; j < dim; ++j) {
                if (rep.entries.count(rep.classes[j])) continue;
                ClassSolve s = solve_class(cd, bpoly, rep.classes, rep.entries, j);
                if (!s.ok) continue;
                set_value(j, s.value, Provenance::rational_function);
                progress = true;
            }
        }

        // every closure equation supported on known classes must hold
        for (std::size_t i = 0; i < cd.wheels.size(); ++i) {
            Rat acc(0);
            bool all = true;
            for (int j = 0; j < dim && all; ++j) {
                if (cd.rows[i][j] == 0) continue;
                auto it = rep.entries.find(rep.classes[j]);
                if (it == rep.entries.end())
                    all = false;
                else
                    acc += cd.rows[i][j] * it->second.value;
            }
            if (all && acc != bpoly.at(cd.wheels[i]))
                throw std::runtime_error("polywheel equation violated on " + x.name);
        }
    }

    if (x.su2_virtual) {
        const LieData& L = su2_adjoint();
        for (int j = 0; j < dim; ++j)
            set_value(j, lie_weight(b.display_classes()[j].rep, L), Provenance::direct_weight);
    }
    return rep;
}

InvariantReport product_report(const Space& x) {
    const HomologyBasis& b = basis(x.degree);
    InvariantReport rep;
    rep.degree = x.degree;
    Space left = x.factors.front();
    Space right = product(std::vector<Space>(x.factors.begin() + 1, x.factors.end()));
    for (const auto& dc : b.display_classes()) {
        rep.classes.push_back(dc.name);
        Rat acc(0);
        for (const auto& [key, c] : dc.rep.terms())
            for (const auto& [lr, mult] : coproduct(key)) {
                if (key_degree(lr.first) != left.degree || key_degree(lr.second) != right.degree)
                    continue;
                acc += c * mult * key_value(left, lr.first) * key_value(right, lr.second);
            }
        rep.entries[dc.name] = {acc, Provenance::product_split};
    }
    // the split values must satisfy the polywheel equations of the product's
    // own Chern data
    if (x.has_chern()) {
        ClosureData cd = closure_data(x.degree);
        std::map<Partition, Rat> bpoly = polywheel_values(x.chern);
        for (std::size_t i = 0; i < cd.wheels.size(); ++i) {
            Rat acc(0);
            for (int j = 0; j < static_cast<int>(rep.classes.size()); ++j)
                if (cd.rows[i][j] != 0) acc += cd.rows[i][j] * rep.entries.at(rep.classes[j]).value;
            if (acc != bpoly.at(cd.wheels[i]))
                throw std::runtime_error("invariant strategies disagree on " + x.name);
        }
    }
    return rep;
}

InvariantReport sum_report(const Space& x) {
    const HomologyBasis& b = basis(x.degree);
    InvariantReport rep;
    rep.degree = x.degree;
    for (const auto& dc : b.display_classes()) {
        rep.classes.push_back(dc.name);
        Rat acc(0);
        bool all = true;
        for (const auto& [c, sp] : x.summands) {
            const InvariantReport& r = space_report(sp);
            auto it = r.entries.find(dc.name);
            if (it == r.entries.end()) {
                all = false;
                break;
            }
            acc += c * it->second.value;
        }
        if (all) rep.entries[dc.name] = {acc, Provenance::additive_sum};
    }
    return rep;
}

// s_lambda of a product: every s_{2j} is additive over the two factors, so a
// monomial splits over subsets of its parts, filtered by the weight that can
// land on the left factor.
std::map<Partition, Rat> split_svalues(int ka, const std::map<Partition, Rat>& sa, int kb,
                                       const std::map<Partition, Rat>& sb) {
    const int k = ka + kb;
    std::map<Partition, Rat> out;
    for (const Partition& lam : even_partitions_of(2 * k)) {
        Rat acc(0);
        const int n = static_cast<int>(lam.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Partition l, r;
            int wl = 0;
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i)) {
                    l.push_back(lam[i]);
                    wl += lam[i];
                } else {
                    r.push_back(lam[i]);
                }
            }
            if (wl != 2 * ka) continue;
            acc += sa.at(l) * sb.at(r);
        }
        out[lam] = acc;
    }
    return out;
}

std::string product_name(const std::vector<Space>& factors) {
    std::string out;
    std::size_t i = 0;
    while (i < factors.size()) {
        const std::string& base = factors[i].name;
        bool plain = base.find_first_of("^x( ") == std::string::npos;
        std::size_t j = i;
        while (plain && j < factors.size() && factors[j].name == base) ++j;
        if (j == i) j = i + 1;
        bool wrap = base.find('x') != std::string::npos || base.find(' ') != std::string::npos;
        if (!out.empty()) out += "x";
        if (j - i > 1)
            out += base + "^" + std::to_string(j - i);
        else
            out += wrap ? "(" + base + ")" : base;
        i = j;
    }
    return out;
}

std::string sum_name(const std::vector<std::pair<Rat, Space>>& summands) {
    std::string out;
    for (const auto& [c, sp] : summands) {
        Rat a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string fac = sp.name;
        if (fac.find(' ') != std::string::npos) fac = "(" + fac + ")";
        out += a == 1 ? fac : rat_to_string(a) + "*" + fac;
    }
    return out;
}

int parse_positive_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("missing number");
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("bad number: " + s);
    int v = std::stoi(s);
    if (v <= 0) throw std::invalid_argument("number must be positive: " + s);
    return v;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

Space parse_space_base(const std::string& b) {
    if (b == "S") return make_hilbert(1);
    if (b.rfind("hilb:", 0) == 0) return make_hilbert(parse_positive_int(b.substr(5)));
    if (b.rfind("kummer:", 0) == 0) return make_kummer(parse_positive_int(b.substr(7)));
    if (b.rfind("ck:", 0) == 0) return virtual_ck(parse_positive_int(b.substr(3)));
    if (b.rfind("S^[", 0) == 0 && b.back() == ']')
        return make_hilbert(parse_positive_int(b.substr(3, b.size() - 4)));
    if (b.rfind("T^[[", 0) == 0 && b.size() >= 7 && b.substr(b.size() - 2) == "]]")
        return make_kummer(parse_positive_int(b.substr(4, b.size() - 6)));
    throw std::invalid_argument("unrecognized space: " + b);
}

void parse_space_factor(const std::string& tok, std::vector<Space>& out) {
    std::string t = strip(tok);
    if (t.empty()) throw std::invalid_argument("empty space factor");
    int power = 1;
    Space base;
    if (t[0] == '(') {
        int depth = 0;
        std::size_t i = 0;
        for (; i < t.size(); ++i) {
            if (t[i] == '(') ++depth;
            if (t[i] == ')' && --depth == 0) break;
        }
        if (i == t.size()) throw std::invalid_argument("unbalanced parentheses: " + t);
        base = parse_space(t.substr(1, i - 1));
        std::string rest = strip(t.substr(i + 1));
        if (!rest.empty()) {
            if (rest[0] != '^') throw std::invalid_argument("bad space factor: " + t);
            power = parse_positive_int(rest.substr(1));
        }
    } else {
        std::size_t caret = t.rfind('^');
        if (caret != std::string::npos && caret + 1 < t.size() &&
            std::isdigit(static_cast<unsigned char>(t[caret + 1]))) {
            base = parse_space_base(t.substr(0, caret));
            power = parse_positive_int(t.substr(caret + 1));
        } else {
            base = parse_space_base(t);
        }
    }
    for (int i = 0; i < power; ++i) out.push_back(base);
}

}  // namespace

Space make_hilbert(int k) {
    if (k < 1 || k > 6) throw std::invalid_argument("point count must be 1..6");
    Space x;
    x.name = k == 1 ? "S" : "S^[" + std::to_string(k) + "]";
    x.degree = k;
    x.chi = chi_y_hilbert(k);
    Rat btheta = rat_pow(Rat(12), k) * rat_pow(Rat(k + 3), k);
    if (k <= 4) {
        ChernSolution sol = invert_chi(*x.chi);
        if (!sol.parametrized) {
            x.chern = sol.unique();
        } else {
            SPolynomial poly = b_theta_power_polynomial(k);
            Rat v0 = evaluate_s_poly(poly, sol.at(Rat(0)));
            Rat slope = evaluate_s_poly(poly, sol.at(Rat(1))) - v0;
            if (slope == 0) throw std::runtime_error("degenerate family direction");
            Rat s = (btheta - v0) / slope;
            x.s_param = s;
            x.chern = sol.at(s);
        }
    } else {
        x.cache->seeded[theta_power_name(k)] = {btheta, Provenance::polywheel};
    }
    return x;
}

Space make_kummer(int k) {
    if (k < 1 || k > 6) throw std::invalid_argument("dimension parameter must be 1..6");
    Space x;
    x.name = "T^[[" + std::to_string(k) + "]]";
    x.degree = k;
    x.chi = chi_y_kummer(k);
    Rat btheta = rat_pow(Rat(12), k) * rat_pow(Rat(k + 1), k + 1);
    if (k <= 4) {
        ChernSolution sol = invert_chi(*x.chi);
        if (!sol.parametrized) {
            x.chern = sol.unique();
        } else {
            SPolynomial poly = b_theta_power_polynomial(k);
            Rat v0 = evaluate_s_poly(poly, sol.at(Rat(0)));
            Rat slope = evaluate_s_poly(poly, sol.at(Rat(1))) - v0;
            if (slope == 0) throw std::runtime_error("degenerate family direction");
            Rat s = (btheta - v0) / slope;
            x.s_param = s;
            x.chern = sol.at(s);
        }
    } else {
        x.cache->seeded[theta_power_name(k)] = {btheta, Provenance::polywheel};
    }
    return x;
}

Space virtual_ck(int k) {
    if (k < 1 || k > 5) throw std::invalid_argument("virtual space degree must be 1..5");
    Space x;
    x.name = "C" + std::to_string(k);
    x.degree = k;
    x.su2_virtual = true;
    std::map<Partition, Rat> s;
    for (const Partition& lam : even_partitions_of(2 * k)) {
        int j = static_cast<int>(lam.size());
        Rat v = factorial(2 * k + 1) / (rat_pow(Rat(2), k - j) * factorial(k));
        if ((k + j) % 2) v = -v;
        s[lam] = v;
    }
    x.chern = chern_from_s(k, s);
    return x;
}

Space product(std::vector<Space> factors) {
    if (factors.empty()) throw std::invalid_argument("empty product");
    if (factors.size() == 1) return std::move(factors.front());
    Space x;
    x.kind = Space::Kind::product;
    for (const auto& f : factors) x.degree += f.degree;
    if (x.degree > 5) throw std::invalid_argument("product degree exceeds 5");
    x.name = product_name(factors);
    bool chern_ok = true;
    for (const auto& f : factors) chern_ok = chern_ok && f.has_chern();
    if (chern_ok) {
        int ka = factors.front().degree;
        std::map<Partition, Rat> s = factors.front().chern.s_values;
        for (std::size_t i = 1; i < factors.size(); ++i) {
            s = split_svalues(ka, s, factors[i].degree, factors[i].chern.s_values);
            ka += factors[i].degree;
        }
        x.chern = chern_from_s(x.degree, s);
    }
    x.factors = std::move(factors);
    return x;
}

Space formal_sum(std::vector<std::pair<Rat, Space>> summands) {
    if (summands.empty()) throw std::invalid_argument("empty formal sum");
    Space x;
    x.kind = Space::Kind::formal_sum;
    x.degree = summands.front().second.degree;
    for (const auto& [c, sp] : summands)
        if (sp.degree != x.degree)
            throw std::invalid_argument("formal sum mixes degrees");
    x.name = sum_name(summands);
    bool chern_ok = true;
    for (const auto& [c, sp] : summands) chern_ok = chern_ok && sp.has_chern();
    if (chern_ok) {
        std::map<Partition, Rat> s;
        for (const Partition& lam : even_partitions_of(2 * x.degree)) {
            Rat acc(0);
            for (const auto& [c, sp] : summands) acc += c * sp.chern.s_values.at(lam);
            s[lam] = acc;
        }
        x.chern = chern_from_s(x.degree, s);
    }
    x.summands = std::move(summands);
    return x;
}

const InvariantReport& space_report(const Space& x) {
    if (x.cache->report) return *x.cache->report;
    if (x.degree < 1 || x.degree > 5)
        throw std::invalid_argument("graph bases cover degrees 1..5 only");
    InvariantReport rep;
    switch (x.kind) {
        case Space::Kind::irreducible: rep = irreducible_report(x); break;
        case Space::Kind::product: rep = product_report(x); break;
        case Space::Kind::formal_sum: rep = sum_report(x); break;
    }
    x.cache->report = std::move(rep);
    return *x.cache->report;
}

InvariantEntry b_invariant(const Space& x, const std::string& class_name) {
    auto it = x.cache->seeded.find(class_name);
    if (it != x.cache->seeded.end()) return it->second;
    const InvariantReport& rep = space_report(x);
    auto jt = rep.entries.find(class_name);
    if (jt == rep.entries.end())
        throw std::runtime_error("invariant " + class_name + " unknown on " + x.name);
    return jt->second;
}

Rat b_theta_power(const Space& x) {
    return b_invariant(x, theta_power_name(x.degree)).value;
}

SpanSolution express_in_span(const Space& target, const std::vector<Space>& dictionary,
                             bool chern_only) {
    for (const auto& sp : dictionary)
        if (sp.degree != target.degree)
            throw std::invalid_argument("dictionary degree mismatch");
    std::vector<Vec> cols;
    Vec rhs;
    if (chern_only) {
        std::vector<Partition> mono = even_partitions_of(2 * target.degree);
        if (!target.has_chern()) throw std::invalid_argument(target.name + " has no Chern data");
        for (const auto& lam : mono) rhs.push_back(target.chern.s_values.at(lam));
        for (const auto& sp : dictionary) {
            if (!sp.has_chern()) throw std::invalid_argument(sp.name + " has no Chern data");
            Vec col;
            for (const auto& lam : mono) col.push_back(sp.chern.s_values.at(lam));
            cols.push_back(std::move(col));
        }
    } else {
        const InvariantReport& trep = space_report(target);
        for (const auto& name : trep.classes) rhs.push_back(b_invariant(target, name).value);
        for (const auto& sp : dictionary) {
            Vec col;
            for (const auto& name : trep.classes) col.push_back(b_invariant(sp, name).value);
            cols.push_back(std::move(col));
        }
    }
    Mat a(rhs.size(), Vec(cols.size(), Rat(0)));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t r = 0; r < rhs.size(); ++r) a[r][c] = cols[c][r];
    LinearSolution sol = solve_linear(a, rhs);
    SpanSolution out;
    out.feasible = sol.consistent;
    out.unique = sol.unique();
    if (sol.consistent) out.coeffs = sol.particular;
    return out;
}

CobordismReport cobordism_distinguish() {
    Space s = make_hilbert(1);
    Space s2 = make_hilbert(2);
    Space s3 = make_hilbert(3);
    Space s4 = make_hilbert(4);
    Space t4 = make_kummer(4);
    Space sxs3 = product({s, s3});
    Space s2xs2 = product({s2, s2});
    Space ssxs2 = product({s, s, s2});
    Space ssss = product({s, s, s, s});
    Space x = formal_sum({{Rat(7), s4},
                          {frac(-49, 8), sxs3},
                          {Rat(-3), s2xs2},
                          {frac(67, 12), ssxs2},
                          {frac(-21, 16), ssss}});
    CobordismReport rep;
    rep.x_chern = x.chern.s_values;
    rep.kummer_chern = t4.chern.s_values;
    rep.chern_match = rep.x_chern == rep.kummer_chern;
    const std::string cls = necklace_union_name({2, 2});
    rep.theta2sq_x = b_invariant(x, cls).value;
    rep.theta2sq_kummer = b_invariant(t4, cls).value;
    Space lhs = formal_sum({{Rat(336), s4}, {Rat(268), ssxs2}});
    Space rhs = formal_sum(
        {{Rat(48), t4}, {Rat(294), sxs3}, {Rat(144), s2xs2}, {Rat(63), ssss}});
    rep.integral_hilbert_side = b_invariant(lhs, cls).value;
    rep.integral_kummer_side = b_invariant(rhs, cls).value;
    return rep;
}

Rat curvature_volume_relation(const Space& x) {
    if (x.kind != Space::Kind::irreducible)
        throw std::invalid_argument("curvature-volume relation needs an irreducible space");
    int k = x.degree;
    return rat_pow(Rat(192 * k), k) * b_theta_power(x) / (rat_pow(Rat(48), k) * factorial(k));
}

Space parse_space(const std::string& text) {
    std::vector<std::string> toks;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == 'x' && depth == 0) {
            toks.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses: " + text);
    toks.push_back(cur);
    std::vector<Space> factors;
    for (const auto& t : toks) parse_space_factor(t, factors);
    return product(std::move(factors));
}

std::pair<std::string, int> parse_class_name(const std::string& text) {
    std::map<int, int> theta_mult;
    int g8b = 0, g10a = 0, g10b = 0;
    std::string t = strip(text);
    std::size_t pos = 0;
    while (pos <= t.size()) {
        std::size_t star = t.find('*', pos);
        std::string tok = strip(t.substr(pos, star == std::string::npos ? star : star - pos));
        pos = star == std::string::npos ? t.size() + 1 : star + 1;
        if (tok.empty()) throw std::invalid_argument("empty class factor");
        int power = 1;
        std::size_t caret = tok.find('^');
        std::string base = tok;
        if (caret != std::string::npos) {
            base = tok.substr(0, caret);
            power = parse_positive_int(tok.substr(caret + 1));
        }
        if (base == "g8b") {
            g8b += power;
        } else if (base == "g10a") {
            g10a += power;
        } else if (base == "g10b") {
            g10b += power;
        } else if (base == "theta") {
            theta_mult[1] += power;
        } else if (base.rfind("theta", 0) == 0) {
            theta_mult[parse_positive_int(base.substr(5))] += power;
        } else {
            throw std::invalid_argument("unrecognized class factor: " + base);
        }
    }
    int degree = 4 * g8b + 5 * g10a + 5 * g10b;
    Partition parts;
    for (auto it = theta_mult.rbegin(); it != theta_mult.rend(); ++it) {
        degree += it->first * it->second;
        for (int i = 0; i < it->second; ++i) parts.push_back(it->first);
    }
    int residuals = g8b + g10a + g10b;
    if (residuals == 0) {
        if (parts.empty()) throw std::invalid_argument("empty class");
        return {necklace_union_name(parts), degree};
    }
    if (residuals == 1) {
        if (g8b == 1 && parts.empty()) return {"g8b", degree};
        if (g8b == 1 && parts == Partition{1}) return {"g10a", degree};
        if (g10a == 1 && parts.empty()) return {"g10a", degree};
        if (g10b == 1 && parts.empty()) return {"g10b", degree};
    }
    throw std::invalid_argument("no basis class matches: " + text);
}

}  // namespace rwg
