#ifndef RWGRAPH_SPACES_HPP
#define RWGRAPH_SPACES_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rwgraph/chern.hpp"
#include "rwgraph/genera.hpp"
#include "rwgraph/linalg.hpp"
#include "rwgraph/partition.hpp"
#include "rwgraph/rational.hpp"

namespace rwg {

// How a Rozansky-Witten invariant value was obtained.
enum class Provenance { polywheel, rational_function, product_split, direct_weight, additive_sum };
std::string provenance_name(Provenance p);

struct InvariantEntry {
    Rat value;
    Provenance prov;
};

// Values of every graph-basis class of the space's degree; classes absent
// from entries are unknown.
struct InvariantReport {
    int degree = 0;
    std::vector<std::string> classes;  // display order of the graph basis
    std::map<std::string, InvariantEntry> entries;
};

struct Space;
struct SpaceCache {
    std::optional<InvariantReport> report;
    std::map<std::string, InvariantEntry> seeded;  // values known without Chern data
};

// A hyperkaehler manifold, a product of them, a formal rational combination,
// or one of the virtual su(2) spaces, together with whatever characteristic
// data determines its invariants.
struct Space {
    enum class Kind { irreducible, product, formal_sum };

    std::string name;
    int degree = 0;
    Kind kind = Kind::irreducible;
    bool su2_virtual = false;          // invariants also come from the su(2) weight system
    ChernVector chern;                 // complete monomial values, or empty maps
    std::optional<ChiVector> chi;      // chi_y coefficients when known
    std::optional<Rat> s_param;        // the degree-4 family parameter, once fixed
    std::vector<Space> factors;                  // kind == product
    std::vector<std::pair<Rat, Space>> summands; // kind == formal_sum
    std::shared_ptr<SpaceCache> cache = std::make_shared<SpaceCache>();

    bool has_chern() const { return !chern.s_values.empty(); }
};

// Hilbert scheme of k points on a K3 surface and the generalized Kummer
// variety of the same dimension. Full Chern data for k <= 4 (the degree-4
// family parameter is fixed by the b_{Theta^4} value 12^4 7^4, respectively
// 12^4 5^5); for k = 5, 6 only b_{Theta^k} is seeded, from 12^k (k+3)^k and
// 12^k (k+1)^{k+1}.
Space make_hilbert(int k);
Space make_kummer(int k);

// Virtual space carrying the su(2) adjoint weight system: characteristic
// numbers s_lambda = (-1)^{k+j} (2k+1)! / (2^{k-j} k!) with j parts.
Space virtual_ck(int k);

// Product space; Chern monomials split over subsets of the parts, invariants
// over the component coproduct. A single factor is returned unchanged.
Space product(std::vector<Space> factors);

// Formal rational combination of spaces of one common degree.
Space formal_sum(std::vector<std::pair<Rat, Space>> summands);

// Full invariant table of the space, computed once and cached. Strategy
// order per class: polywheel span, rational functions of the characteristic
// numbers (irreducible spaces), coproduct splitting (products), additivity
// (formal sums); disagreement between applicable strategies throws.
const InvariantReport& space_report(const Space& x);

// Single class lookup by display name; throws when unknown.
InvariantEntry b_invariant(const Space& x, const std::string& class_name);

// b_{Theta^k}(X), the denominator of the rational-function identities.
Rat b_theta_power(const Space& x);

// Exact expansion of the target's invariants over the dictionary's, matching
// either every graph-basis class or only the Chern monomials.
struct SpanSolution {
    bool feasible = false;
    bool unique = false;
    Vec coeffs;
};
SpanSolution express_in_span(const Space& target, const std::vector<Space>& dictionary,
                             bool chern_only = false);

// The degree-4 cobordism demonstration: a formal combination of products
// matching every Chern monomial of the Kummer space yet differing on the
// class theta2^2, plus the integral pairing of the same phenomenon.
struct CobordismReport {
    bool chern_match = false;
    std::map<Partition, Rat> x_chern, kummer_chern;  // s-monomials
    Rat theta2sq_x, theta2sq_kummer;
    Rat integral_hilbert_side, integral_kummer_side;
};
CobordismReport cobordism_distinguish();

// Coefficient of pi^{2k} in ||K||^{2k} / vol^{k-1}: (192 k)^k b_{Theta^k} /
// (48^k k!). Irreducible spaces only; strictly positive there.
Rat curvature_volume_relation(const Space& x);

// Space grammar: hilb:k, kummer:k, ck:k, S, S^[k], T^[[k]], powers with ^j,
// parenthesized factors, products joined with x.
Space parse_space(const std::string& text);

// Class grammar: theta, theta<m>, products with *, powers with ^, and the
// residual names g8b, g10a, g10b. Returns the display name and the degree.
std::pair<std::string, int> parse_class_name(const std::string& text);

}  // namespace rwg

#endif
