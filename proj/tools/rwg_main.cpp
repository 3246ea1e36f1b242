// rwg: exact computations in the graph homology of trivalent graphs and the
// Rozansky-Witten invariants of holomorphic symplectic manifolds. Every
// number printed is an exact rational; floating point input is rejected.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rwgraph/chern.hpp"
#include "rwgraph/genera.hpp"
#include "rwgraph/homology.hpp"
#include "rwgraph/lie_weight.hpp"
#include "rwgraph/partition.hpp"
#include "rwgraph/rational.hpp"
#include "rwgraph/series.hpp"
#include "rwgraph/spaces.hpp"
#include "rwgraph/spoly.hpp"
#include "rwgraph/tables.hpp"

namespace {

using namespace rwg;

const char* kSeedOrderNote =
    "All outputs are deterministic; there is no random seed.\n"
    "Orderings fixed by construction:\n"
    "  partitions      refinement-friendly order, (1,1,...,1) first, (n) last\n"
    "  basis keys      canonical graph keys in elimination order\n"
    "  display classes necklace unions in partition order, then the connected\n"
    "                  completions (g8b; g10a, g10b)\n"
    "  table rows      Hilbert scheme row before generalized Kummer row\n"
    "Rerunning any command reproduces its output byte for byte.\n";

TableFormat parse_format(const std::string& f) {
    if (f == "text") return TableFormat::text;
    if (f == "tsv") return TableFormat::tsv;
    throw CLI::ValidationError("--format", "must be text or tsv");
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// (coefficient, display name) pairs of a vector over the display classes
std::vector<std::pair<Rat, std::string>> display_terms(const GraphVector& v) {
    const HomologyBasis& b = basis(v.degree());
    Vec coords = b.display_coordinates(v);
    std::vector<std::pair<Rat, std::string>> terms;
    for (std::size_t j = 0; j < coords.size(); ++j)
        terms.push_back({coords[j], b.display_classes()[j].name});
    return terms;
}

Partition partition_arg(const std::string& s, bool even_required) {
    Partition p = partition_from_string(s);
    if (even_required)
        for (int part : p)
            if (part % 2 != 0)
                throw std::invalid_argument("wheel sizes must be even: " + s);
    return p;
}

int checked_degree(int k, int max = 5) {
    if (k < 1 || k > max)
        throw std::invalid_argument("degree must be between 1 and " + std::to_string(max));
    return k;
}

GraphVector class_rep(int degree, const std::string& name) {
    auto [canonical, deg] = parse_class_name(name);
    if (degree != 0 && deg != degree)
        throw std::invalid_argument("class " + name + " has degree " + std::to_string(deg) +
                                    ", expected " + std::to_string(degree));
    return basis(deg).display_class(canonical).rep;
}

void cmd_basis(int k) {
    for (const auto& key : basis(checked_degree(k)).basis_keys()) std::cout << key << "\n";
}

void cmd_expand_polywheel(const std::string& partition) {
    Partition lam = partition_arg(partition, true);
    int k = partition_weight(lam) / 2;
    checked_degree(k);
    GraphVector v = closure(lam);
    std::cout << polywheel_name(lam) << " = " << linear_combo(display_terms(v)) << "\n";
}

void cmd_reduce(int k, const std::string& input) {
    checked_degree(k);
    GraphVector v = GraphVector::from_text(read_input(input));
    if (v.degree() != 0 && v.degree() != k)
        throw std::invalid_argument("input has degree " + std::to_string(v.degree()) +
                                    ", expected " + std::to_string(k));
    if (v.degree() == 0) {
        std::cout << "0\n";
        return;
    }
    std::cout << linear_combo(display_terms(v)) << "\n";
}

void cmd_weight_su2(const std::string& graph_file, const std::string& class_name) {
    if (graph_file.empty() == class_name.empty())
        throw std::invalid_argument("weight su2 needs exactly one of --graph and --class");
    GraphVector v = graph_file.empty() ? class_rep(0, class_name)
                                       : GraphVector::from_text(read_input(graph_file));
    std::cout << rat_to_string(lie_weight(v, su2_adjoint())) << "\n";
}

void cmd_weight_su2_polywheel(const std::string& partition, const std::string& method) {
    Partition lam = partition_arg(partition, true);
    Rat w;
    if (method == "closed")
        w = su2_polywheel_closed_form(lam);
    else if (method == "recursion")
        w = su2_polywheel_recursion(lam);
    else if (method == "contract")
        w = su2_polywheel_contraction(lam);
    else
        throw std::invalid_argument("method must be closed, recursion, or contract");
    std::cout << rat_to_string(w) << "\n";
}

void cmd_polywheel_solve(int k, const std::string& input) {
    checked_degree(k);
    GraphVector v = GraphVector::from_text(read_input(input));
    if (v.degree() != 0 && v.degree() != k)
        throw std::invalid_argument("input has degree " + std::to_string(v.degree()) +
                                    ", expected " + std::to_string(k));
    const HomologyBasis& b = basis(k);
    PolywheelPresentation pres = polywheel_presentation(k);
    Vec display = v.degree() == 0 ? Vec(b.dimension(), Rat(0)) : b.display_coordinates(v);
    Vec sol = pres.solve(display);
    std::vector<std::pair<Rat, std::string>> terms;
    std::size_t c = 0;
    for (int h : pres.helpers) terms.push_back({sol[c++], b.display_classes()[h].name});
    for (const auto& lam : pres.wheels) terms.push_back({sol[c++], polywheel_name(lam)});
    std::cout << linear_combo(terms) << "\n";
}

void cmd_td(const std::string& power, int k, const std::string& basis_name) {
    checked_degree(k);
    TruncSeries log_series = power == "+1/2"   ? td_half_log(2 * k)
                             : power == "-1/2" ? td_neg_half_log(2 * k)
                                               : throw std::invalid_argument(
                                                     "power must be +1/2 or -1/2");
    SPolynomial p = mult_sequence_term(log_series, k);
    if (basis_name == "c")
        std::cout << spoly_to_string(s_poly_to_c(p), "c") << "\n";
    else if (basis_name == "s")
        std::cout << spoly_to_string(p, "s") << "\n";
    else
        throw std::invalid_argument("basis must be s or c");
}

void cmd_theta_polywheel(int k) {
    checked_degree(k);
    std::vector<std::pair<Rat, std::string>> terms;
    auto coeffs = theta_power_in_polywheels(k);
    for (const Partition& p : partitions_of(k)) {
        Partition doubled = p;
        for (int& x : doubled) x *= 2;
        terms.push_back({coeffs.at(p), polywheel_name(doubled)});
    }
    std::cout << "theta^" << k << " = " << linear_combo(terms) << "\n";
}

void print_values(const std::vector<Rat>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << (i ? " " : "") << rat_to_string(values[i]);
    std::cout << "\n";
}

void cmd_chi_y(const std::string& space_name) {
    Space x = parse_space(space_name);
    if (!x.chi) throw std::invalid_argument("no chi_y table for " + x.name);
    print_values(x.chi->values);
}

void cmd_chi_in_chern(int k) {
    checked_degree(k, 4);
    const long denominators[5] = {0, 12, 720, 60480, 3628800};
    for (int m = 0; m <= k; ++m) {
        SPolynomial p = s_poly_to_c(chi_m_polynomial(k, m));
        p *= Rat(denominators[k]);
        std::cout << "chi^" << m << " = (" << spoly_to_string(p, "c") << ")/" << denominators[k]
                  << "\n";
    }
}

void cmd_invert_chi(int k, const std::string& values) {
    checked_degree(k, 4);
    std::vector<Rat> given;
    std::stringstream ss(values);
    std::string tok;
    while (std::getline(ss, tok, ',')) given.push_back(rat_from_string(tok));
    ChiVector chi;
    chi.k = k;
    if (static_cast<int>(given.size()) == 2 * k + 1) {
        chi.values = given;
    } else if (static_cast<int>(given.size()) == k + 1) {
        // first half given; extend by the hyperkaehler symmetry chi^m = chi^{2k-m}
        chi.values = given;
        for (int m = k + 1; m <= 2 * k; ++m) chi.values.push_back(given[2 * k - m]);
    } else {
        throw std::invalid_argument("expected " + std::to_string(k + 1) + " or " +
                                    std::to_string(2 * k + 1) + " values, got " +
                                    std::to_string(given.size()));
    }
    ChernSolution sol = invert_chi(chi);
    auto emit = [&](const std::string& prefix, auto value_of) {
        for (const Partition& lam : even_partitions_of(2 * k)) {
            std::cout << monomial_name(prefix, lam) << " = " << value_of(lam) << "\n";
        }
    };
    if (!sol.parametrized) {
        ChernVector cv = sol.unique();
        emit("s", [&](const Partition& lam) { return rat_to_string(cv.s_values.at(lam)); });
        emit("c", [&](const Partition& lam) { return rat_to_string(cv.c_values.at(lam)); });
    } else {
        ChernVector base = sol.at(Rat(0));
        ChernVector plus = sol.at(Rat(1));
        emit("s", [&](const Partition& lam) {
            return family_combo(sol.direction_s.at(lam), sol.base_s.at(lam));
        });
        emit("c", [&](const Partition& lam) {
            return family_combo(plus.c_values.at(lam) - base.c_values.at(lam),
                                base.c_values.at(lam));
        });
    }
}

void cmd_space(const std::string& name) {
    Space x = parse_space(name);
    std::cout << "space: " << x.name << "\n";
    std::cout << "degree: " << x.degree << " (complex dimension " << 2 * x.degree << ")\n";
    if (x.chi) {
        std::cout << "chi_y: ";
        print_values(x.chi->values);
    }
    if (x.has_chern()) {
        for (const Partition& lam : even_partitions_of(2 * x.degree))
            std::cout << monomial_name("s", lam) << " = "
                      << rat_to_string(x.chern.s_values.at(lam)) << "\n";
        for (const Partition& lam : even_partitions_of(2 * x.degree))
            std::cout << monomial_name("c", lam) << " = "
                      << rat_to_string(x.chern.c_values.at(lam)) << "\n";
    }
    const InvariantReport& rep = space_report(x);
    for (const auto& cls : rep.classes) {
        const InvariantEntry& e = rep.entries.at(cls);
        std::cout << cls << " = " << rat_to_string(e.value) << " [" << provenance_name(e.prov)
                  << "]\n";
    }
}

void cmd_rw(const std::string& space_name, const std::string& class_name) {
    Space x = parse_space(space_name);
    auto [canonical, deg] = parse_class_name(class_name);
    if (deg != x.degree)
        throw std::invalid_argument("class " + class_name + " has degree " + std::to_string(deg) +
                                    " but " + x.name + " has degree " +
                                    std::to_string(x.degree));
    std::cout << rat_to_string(b_invariant(x, canonical).value) << "\n";
}

void cmd_tables(const std::string& appendix, TableFormat f) {
    if (appendix.size() != 1 || appendix[0] < 'A' || appendix[0] > 'E')
        throw std::invalid_argument("appendix must be one of A B C D E");
    std::cout << render_table(appendix[0], f);
}

void cmd_span_solve(const std::string& target_name, const std::string& dictionary,
                    bool chern_only) {
    Space target = parse_space(target_name);
    std::vector<Space> dict;
    std::stringstream ss(dictionary);
    std::string tok;
    while (std::getline(ss, tok, ',')) dict.push_back(parse_space(tok));
    if (dict.empty()) throw std::invalid_argument("empty dictionary");
    SpanSolution sol = express_in_span(target, dict, chern_only);
    if (!sol.feasible) {
        std::cout << "infeasible\n";
        return;
    }
    std::vector<std::pair<Rat, std::string>> terms;
    for (std::size_t i = 0; i < dict.size(); ++i) terms.push_back({sol.coeffs[i], dict[i].name});
    std::cout << target.name << " = " << linear_combo(terms)
              << (sol.unique ? "" : "  (one solution of many)") << "\n";
}

void cmd_curvature(const std::string& space_name) {
    Space x = parse_space(space_name);
    std::cout << rat_to_string(curvature_volume_relation(x)) << "\n";
}

void cmd_cobordism_demo() {
    CobordismReport rep = cobordism_distinguish();
    std::cout << "Degree-4 comparison of the generalized Kummer variety T^[[4]] with the\n"
                 "combination X = 7*S^[4] - 49/8*SxS^[3] - 3*S^[2]xS^[2] + 67/12*S^2xS^[2]"
                 " - 21/16*S^4\n"
                 "(the S^[3] summand is read as SxS^[3] to keep degrees equal).\n\n";
    ChernVector x_cv = chern_from_s(4, rep.x_chern);
    ChernVector t_cv = chern_from_s(4, rep.kummer_chern);
    std::cout << "Chern numbers agree" << (rep.chern_match ? "" : " NOT") << ":\n";
    for (const Partition& lam : even_partitions_of(8))
        std::cout << "  " << monomial_name("c", lam) << ": X = "
                  << rat_to_string(x_cv.c_values.at(lam)) << ", T^[[4]] = "
                  << rat_to_string(t_cv.c_values.at(lam)) << "\n";
    std::cout << "\nThe graph invariants still differ:\n  theta2^2: X = "
              << rat_to_string(rep.theta2sq_x) << ", T^[[4]] = "
              << rat_to_string(rep.theta2sq_kummer) << "\n";
    std::cout << "\nIntegral pairing against the theta2^2 coefficients:\n  "
              << "336*S^[4] + 268*S^2xS^[2] = " << rat_to_string(rep.integral_hilbert_side)
              << "\n  48*T^[[4]] + 294*SxS^[3] + 144*S^[2]xS^[2] + 63*S^4 = "
              << rat_to_string(rep.integral_kummer_side) << "\n";
    std::cout << "(published pairing lists these two integrals in the transposed order)\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Rozansky-Witten graph homology calculator"};
    app.require_subcommand(0, 1);

    std::string format = "text";
    bool seed_order = false;
    app.add_option("--format", format, "output format: text or tsv")->capture_default_str();
    app.add_flag("--seed-order", seed_order, "document the deterministic orderings and exit");

    int degree = 1;
    std::string partition, input, graph_file, class_name, method = "closed";
    std::string power = "-1/2", basis_name = "s", space_name, values, appendix;
    std::string target, dictionary;
    bool chern_only = false;

    CLI::App* basis_cmd = app.add_subcommand("basis", "canonical keys of a homology basis");
    basis_cmd->add_option("--degree", degree, "half the vertex count, 1..5")->required();

    CLI::App* expand = app.add_subcommand("expand-polywheel",
                                          "polywheel closure over the display classes");
    expand->add_option("--partition", partition, "even wheel sizes, e.g. 2,2,4")->required();

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "rewrite a graph vector in the basis");
    reduce_cmd->add_option("--degree", degree)->required();
    reduce_cmd->add_option("--input", input, "graph vector file, - for stdin")->required();

    CLI::App* weight = app.add_subcommand("weight", "Lie algebra weight systems");
    weight->require_subcommand(1);
    CLI::App* su2 = weight->add_subcommand("su2", "su(2) adjoint weight of a graph vector");
    su2->add_option("--graph", graph_file, "graph vector file, - for stdin");
    su2->add_option("--class", class_name, "display class name, e.g. theta");
    CLI::App* su2pw = weight->add_subcommand("su2-polywheel", "su(2) weight of a polywheel");
    su2pw->add_option("--partition", partition, "even wheel sizes")->required();
    su2pw->add_option("--method", method, "closed, recursion, or contract")
        ->capture_default_str();

    CLI::App* pwsolve = app.add_subcommand("polywheel-solve",
                                           "express a vector over the polywheels");
    pwsolve->add_option("--degree", degree)->required();
    pwsolve->add_option("--input", input, "graph vector file, - for stdin")->required();

    CLI::App* td = app.add_subcommand("td", "multiplicative sequence term of Td^(+-1/2)");
    td->add_option("--power", power, "+1/2 or -1/2")->capture_default_str();
    td->add_option("--degree", degree)->required();
    td->add_option("--basis", basis_name, "s or c")->capture_default_str();

    CLI::App* thetapw = app.add_subcommand("theta-polywheel",
                                           "theta power over the polywheels");
    thetapw->add_option("--degree", degree)->required();

    CLI::App* chiy = app.add_subcommand("chi-y", "chi_y coefficients of a space");
    chiy->add_option("--space", space_name, "hilb:k or kummer:k")->required();

    CLI::App* chic = app.add_subcommand("chi-in-chern", "chi^m genera in the Chern numbers");
    chic->add_option("--degree", degree)->required();

    CLI::App* invchi = app.add_subcommand("invert-chi",
                                          "characteristic numbers from chi^m values");
    invchi->add_option("--degree", degree)->required();
    invchi->add_option("--values", values, "comma separated chi^0,chi^1,...")->required();

    CLI::App* space_cmd = app.add_subcommand("space", "full report on a space");
    space_cmd->add_option("--name", space_name, "hilb:k, kummer:k, products with x")
        ->required();

    CLI::App* rw = app.add_subcommand("rw", "Rozansky-Witten invariant of a space");
    rw->add_option("--space", space_name)->required();
    rw->add_option("--class", class_name, "e.g. theta^2*theta2")->required();

    CLI::App* tables = app.add_subcommand("tables", "appendix tables");
    tables->add_option("--appendix", appendix, "A, B, C, D, or E")->required();

    CLI::App* span = app.add_subcommand("span-solve",
                                        "express a space over others by its invariants");
    span->add_option("--target", target, "space to express")->required();
    span->add_option("--dictionary", dictionary, "comma separated spaces")->required();
    span->add_flag("--chern-only", chern_only, "match Chern numbers only");

    CLI::App* curv = app.add_subcommand("curvature",
                                        "curvature integral from b_{theta^k}");
    curv->add_option("--space", space_name)->required();

    app.add_subcommand("cobordism-demo",
                       "Chern numbers do not determine the graph invariants");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        TableFormat f = parse_format(format);
        if (seed_order) {
            std::cout << kSeedOrderNote;
            return 0;
        }
        if (app.get_subcommands().empty()) {
            std::cout << app.help();
            return 0;
        }
        CLI::App* sub = app.get_subcommands()[0];
        const std::string& name = sub->get_name();
        if (name == "basis") cmd_basis(degree);
        else if (name == "expand-polywheel") cmd_expand_polywheel(partition);
        else if (name == "reduce") cmd_reduce(degree, input);
        else if (name == "weight") {
            if (su2->parsed()) cmd_weight_su2(graph_file, class_name);
            else cmd_weight_su2_polywheel(partition, method);
        }
        else if (name == "polywheel-solve") cmd_polywheel_solve(degree, input);
        else if (name == "td") cmd_td(power, degree, basis_name);
        else if (name == "theta-polywheel") cmd_theta_polywheel(degree);
        else if (name == "chi-y") cmd_chi_y(space_name);
        else if (name == "chi-in-chern") cmd_chi_in_chern(degree);
        else if (name == "invert-chi") cmd_invert_chi(degree, values);
        else if (name == "space") cmd_space(space_name);
        else if (name == "rw") cmd_rw(space_name, class_name);
        else if (name == "tables") cmd_tables(appendix, f);
        else if (name == "span-solve") cmd_span_solve(target, dictionary, chern_only);
        else if (name == "curvature") cmd_curvature(space_name);
        else if (name == "cobordism-demo") cmd_cobordism_demo();
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
