#include "rwgraph/tables.hpp"

#include <sstream>
#include <stdexcept>

#include "rwgraph/chern.hpp"
#include "rwgraph/genera.hpp"
#include "rwgraph/homology.hpp"
#include "rwgraph/spaces.hpp"
#include "rwgraph/spoly.hpp"

namespace rwg {

namespace {

bool in_span(const Mat& columns_so_far, const Vec& candidate) {
    if (columns_so_far.empty() || columns_so_far[0].empty()) return false;
    Mat a = columns_so_far;
    return solve_linear(std::move(a), candidate).consistent;
}

void append_column(Mat& m, const Vec& col) {
    if (m.empty()) m.assign(col.size(), Vec());
    for (std::size_t r = 0; r < col.size(); ++r) m[r].push_back(col[r]);
}

}  // namespace

PolywheelPresentation polywheel_presentation(int k) {
    const HomologyBasis& b = basis(k);
    const int dim = b.dimension();
    PolywheelPresentation out;
    out.degree = k;
    out.wheels = even_partitions_of(2 * k);

    Mat wheel_cols;
    for (const auto& lam : out.wheels) append_column(wheel_cols, b.display_coordinates(closure(lam)));

    // union classes, in display order, until the span is complete
    Mat trial = wheel_cols;
    std::vector<std::string> union_names;
    for (const Partition& p : partitions_of(k)) union_names.push_back(necklace_union_name(p));
    for (int j = 0; j < dim && rank(trial) < dim; ++j) {
        const std::string& name = b.display_classes()[j].name;
        bool is_union = false;
        for (const auto& n : union_names) is_union = is_union || n == name;
        if (!is_union) continue;
        Vec unit(dim, Rat(0));
        unit[j] = 1;
        if (in_span(trial, unit)) continue;
        out.helpers.push_back(j);
        append_column(trial, unit);
    }
    if (rank(trial) != dim)
        throw std::logic_error("closure span cannot be completed by union classes");

    for (int j : out.helpers) {
        Vec unit(dim, Rat(0));
        unit[j] = 1;
        append_column(out.columns, unit);
    }
    for (std::size_t c = 0; c < out.wheels.size(); ++c) {
        Vec col(dim);
        for (int r = 0; r < dim; ++r) col[r] = wheel_cols[r][c];
        append_column(out.columns, col);
    }
    return out;
}

Vec PolywheelPresentation::solve(const Vec& display) const {
    Mat a = columns;
    LinearSolution sol = solve_linear(std::move(a), display);
    if (!sol.unique())
        throw std::runtime_error("polywheel presentation is not uniquely solvable");
    return sol.particular;
}

std::string family_combo(const Rat& direction, const Rat& base) {
    if (direction == 0) return rat_to_string(base);
    std::string out = direction == 1 ? "s" : rat_to_string(direction) + "*s";
    if (base > 0) out += "+" + rat_to_string(base);
    if (base < 0) out += rat_to_string(base);
    return out;
}

std::string linear_combo(const std::vector<std::pair<Rat, std::string>>& terms) {
    std::string out;
    for (const auto& [c, name] : terms) {
        if (c == 0) continue;
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
        out += a == 1 ? name : rat_to_string(a) + "*" + name;
    }
    return out.empty() ? "0" : out;
}

namespace {

const char* kSep(TableFormat f) { return f == TableFormat::tsv ? "\t" : " "; }

void class_header(std::ostream& os, TableFormat f, int k,
                  const std::vector<std::string>& names) {
    if (f == TableFormat::tsv) {
        os << "# k=" << k;
        for (const auto& n : names) os << "\t" << n;
    } else {
        os << "k=" << k << " classes:";
        for (const auto& n : names) os << " " << n;
    }
    os << "\n";
}

void value_row(std::ostream& os, TableFormat f, const std::string& label, const Vec& values) {
    os << label << (f == TableFormat::tsv ? "" : ":");
    for (const auto& v : values) os << kSep(f) << rat_to_string(v);
    os << "\n";
}

void section(std::ostream& os, TableFormat f, const std::string& title) {
    os << (f == TableFormat::tsv ? "# " : "") << title << "\n";
}

std::vector<std::string> class_names(int k) {
    std::vector<std::string> out;
    for (const auto& dc : basis(k).display_classes()) out.push_back(dc.name);
    return out;
}

void table_a(std::ostream& os, TableFormat f) {
    section(os, f, "Appendix A.1: polywheels in the graph basis");
    for (int k = 1; k <= 4; ++k) {
        const HomologyBasis& b = basis(k);
        std::vector<std::string> names = class_names(k);
        class_header(os, f, k, names);
        for (const Partition& lam : even_partitions_of(2 * k)) {
            Vec coords = b.display_coordinates(closure(lam));
            if (f == TableFormat::tsv) {
                value_row(os, f, polywheel_name(lam), coords);
            } else {
                std::vector<std::pair<Rat, std::string>> terms;
                for (std::size_t j = 0; j < coords.size(); ++j) terms.push_back({coords[j], names[j]});
                os << polywheel_name(lam) << " = " << linear_combo(terms) << "\n";
            }
        }
    }
    section(os, f, "Appendix A.2: graph classes over the polywheels");
    for (int k = 1; k <= 4; ++k) {
        PolywheelPresentation pres = polywheel_presentation(k);
        std::vector<std::string> names = class_names(k);
        std::vector<std::string> cols;
        for (int h : pres.helpers) cols.push_back(names[h]);
        for (const auto& lam : pres.wheels) cols.push_back(polywheel_name(lam));
        class_header(os, f, k, cols);
        const int dim = static_cast<int>(names.size());
        for (int j = 0; j < dim; ++j) {
            bool helper = false;
            for (int h : pres.helpers) helper = helper || h == j;
            if (helper) continue;
            Vec unit(dim, Rat(0));
            unit[j] = 1;
            Vec sol = pres.solve(unit);
            if (f == TableFormat::tsv) {
                value_row(os, f, names[j], sol);
            } else {
                std::vector<std::pair<Rat, std::string>> terms;
                for (std::size_t c = 0; c < cols.size(); ++c) terms.push_back({sol[c], cols[c]});
                os << names[j] << " = " << linear_combo(terms) << "\n";
            }
        }
    }
}

const long kGenusDenominator[5] = {0, 12, 720, 60480, 3628800};

void table_b(std::ostream& os, TableFormat f) {
    section(os, f, "Appendix B.1: exterior-power genera in the Chern numbers");
    for (int k = 1; k <= 4; ++k) {
        std::vector<Partition> mono = even_partitions_of(2 * k);
        if (f == TableFormat::tsv) {
            os << "# k=" << k;
            for (const auto& lam : mono) os << "\t" << monomial_name("c", lam);
            os << "\tdenominator\n";
        } else {
            os << "k=" << k << "\n";
        }
        for (int m = 0; m <= k; ++m) {
            SPolynomial p = s_poly_to_c(chi_m_polynomial(k, m));
            p *= Rat(kGenusDenominator[k]);
            for (const auto& [lam, c] : p.terms)
                if (c.get_den() != 1)
                    throw std::logic_error("genus numerators must be integral");
            if (f == TableFormat::tsv) {
                os << "chi^" << m;
                for (const auto& lam : mono) os << "\t" << rat_to_string(p.coeff(lam));
                os << "\t" << kGenusDenominator[k] << "\n";
            } else {
                os << "chi^" << m << " = (" << spoly_to_string(p, "c") << ")/"
                   << kGenusDenominator[k] << "\n";
            }
        }
    }

    section(os, f, "Appendix B.2: Chern numbers from the genera");
    for (int k = 1; k <= 4; ++k) {
        std::vector<Partition> mono = even_partitions_of(2 * k);
        const int n = static_cast<int>(mono.size());
        // the square system: the first k genera, plus the family parameter
        // when the genera alone are rank deficient
        std::vector<std::string> inputs;
        Mat a;
        for (int m = 0; m < k; ++m) {
            SPolynomial p = chi_m_polynomial(k, m);
            Vec row;
            for (const auto& lam : mono) row.push_back(p.coeff(lam));
            a.push_back(std::move(row));
            inputs.push_back("chi^" + std::to_string(m));
        }
        if (n > k) {
            Vec row(n, Rat(0));
            row[0] = frac(1, 48);  // s = s2^{2k}/48 pins the remaining freedom
            a.push_back(std::move(row));
            inputs.push_back("s");
        }
        if (static_cast<int>(a.size()) != n) throw std::logic_error("genus system is not square");
        // rows of the inverse: each monomial over the inputs
        Mat inv(n, Vec(n, Rat(0)));
        for (int i = 0; i < n; ++i) {
            Vec e(n, Rat(0));
            e[i] = 1;
            LinearSolution sol = solve_linear(a, e);
            if (!sol.unique()) throw std::logic_error("genus system is singular");
            for (int j = 0; j < n; ++j) inv[j][i] = sol.particular[j];
        }
        if (f == TableFormat::tsv) {
            os << "# k=" << k;
            for (const auto& in : inputs) os << "\t" << in;
            os << "\n";
        } else {
            os << "k=" << k << "\n";
        }
        auto emit = [&](const std::string& label, const Vec& row) {
            if (f == TableFormat::tsv) {
                value_row(os, f, label, row);
            } else {
                std::vector<std::pair<Rat, std::string>> terms;
                for (int i = 0; i < n; ++i) terms.push_back({row[i], inputs[i]});
                os << label << " = " << linear_combo(terms) << "\n";
            }
        };
        for (int j = 0; j < n; ++j) {
            // expansion of the c-monomial over the s-monomials, then over the inputs
            SPolynomial p(0);
            p.add({}, Rat(1));
            for (int part : mono[j]) {
                SPolynomial q = c_class_in_s(part / 2);
                p = p * q;
            }
            Vec row(n, Rat(0));
            for (int col = 0; col < n; ++col) {
                const Rat& coeff = p.coeff(mono[col]);
                if (coeff == 0) continue;
                for (int i = 0; i < n; ++i) row[i] += coeff * inv[col][i];
            }
            emit(monomial_name("c", mono[j]), row);
        }
        for (int j = 0; j < n; ++j) emit(monomial_name("s", mono[j]), inv[j]);
    }
}

void table_c(std::ostream& os, TableFormat f) {
    section(os, f, "Appendix C: chi_y coefficients");
    auto row = [&](const std::string& label, const ChiVector& c) {
        value_row(os, f, label, c.values);
    };
    row("S", chi_y_hilbert(1));
    for (int k = 2; k <= 4; ++k) row("S^[" + std::to_string(k) + "]", chi_y_hilbert(k));
    for (int k = 2; k <= 4; ++k) row("T^[[" + std::to_string(k) + "]]", chi_y_kummer(k));
}

void table_d(std::ostream& os, TableFormat f) {
    section(os, f, "Appendix D: characteristic numbers");
    for (int k = 1; k <= 4; ++k) {
        std::vector<Partition> mono = even_partitions_of(2 * k);
        std::vector<std::string> names;
        for (const auto& lam : mono) names.push_back(monomial_name("s", lam));
        class_header(os, f, k, names);
        std::string hname = k == 1 ? "S" : "S^[" + std::to_string(k) + "]";
        std::string kname = "T^[[" + std::to_string(k) + "]]";
        if (k <= 3) {
            Space h = make_hilbert(k);
            Space t = make_kummer(k);
            Vec hv, tv;
            for (const auto& lam : mono) {
                hv.push_back(h.chern.s_values.at(lam));
                tv.push_back(t.chern.s_values.at(lam));
            }
            value_row(os, f, hname, hv);
            value_row(os, f, kname, tv);
        } else {
            ChernSolution hsol = invert_chi(chi_y_hilbert(k));
            ChernSolution tsol = invert_chi(chi_y_kummer(k));
            auto family_row = [&](const std::string& label, const ChernSolution& sol) {
                os << label << (f == TableFormat::tsv ? "" : ":");
                for (const auto& lam : mono)
                    os << kSep(f) << family_combo(sol.direction_s.at(lam), sol.base_s.at(lam));
                os << "\n";
            };
            family_row(hname + " family", hsol);
            family_row(kname + " family", tsol);
            Space h = make_hilbert(k);
            Space t = make_kummer(k);
            Vec hv, tv;
            for (const auto& lam : mono) {
                hv.push_back(h.chern.s_values.at(lam));
                tv.push_back(t.chern.s_values.at(lam));
            }
            value_row(os, f, hname + " s=" + rat_to_string(*h.s_param), hv);
            value_row(os, f, kname + " s=" + rat_to_string(*t.s_param), tv);
        }
    }
}

void report_row(std::ostream& os, TableFormat f, const Space& x) {
    const InvariantReport& rep = space_report(x);
    Vec values;
    for (const auto& name : rep.classes) values.push_back(rep.entries.at(name).value);
    value_row(os, f, x.name, values);
}

void table_e(std::ostream& os, TableFormat f) {
    section(os, f, "Appendix E.1: irreducible spaces");
    for (int k = 1; k <= 4; ++k) {
        class_header(os, f, k, class_names(k));
        report_row(os, f, make_hilbert(k));
        report_row(os, f, make_kummer(k));
    }
    section(os, f, "Appendix E.2: product spaces");
    Space s = make_hilbert(1);
    Space s2 = make_hilbert(2);
    class_header(os, f, 2, class_names(2));
    report_row(os, f, product({s, s}));
    class_header(os, f, 3, class_names(3));
    report_row(os, f, product({s, s2}));
    report_row(os, f, product({s, make_kummer(2)}));
    report_row(os, f, product({s, s, s}));
    class_header(os, f, 4, class_names(4));
    report_row(os, f, product({s, make_hilbert(3)}));
    report_row(os, f, product({s2, s2}));
    report_row(os, f, product({s, s, s2}));
    report_row(os, f, product({s, s, s, s}));
    section(os, f, "Appendix E.3: su(2) weight system");
    for (int k = 1; k <= 4; ++k) {
        class_header(os, f, k, class_names(k));
        report_row(os, f, virtual_ck(k));
    }
}

}  // namespace

std::string render_table(char appendix, TableFormat f) {
    std::ostringstream os;
    switch (appendix) {
        case 'A': table_a(os, f); break;
        case 'B': table_b(os, f); break;
        case 'C': table_c(os, f); break;
        case 'D': table_d(os, f); break;
        case 'E': table_e(os, f); break;
        default: throw std::invalid_argument("appendix must be one of A B C D E");
    }
    return os.str();
}

}  // namespace rwg
