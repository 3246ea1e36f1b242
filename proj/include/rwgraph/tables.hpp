#ifndef RWGRAPH_TABLES_HPP
#define RWGRAPH_TABLES_HPP

#include <string>
#include <utility>
#include <vector>

#include "rwgraph/linalg.hpp"
#include "rwgraph/partition.hpp"
#include "rwgraph/rational.hpp"

namespace rwg {

enum class TableFormat { text, tsv };

// The closure span of a degree completed to the full graph basis by the
// fewest necklace-union classes (taken in display order); every class then
// has a unique expansion over the helper classes and the polywheels.
struct PolywheelPresentation {
    int degree = 0;
    std::vector<Partition> wheels;       // doubled part lists, presentation order
    std::vector<int> helpers;            // display-class indices completing the span
    Mat columns;                         // rows = display dim, cols = helpers then wheels

    // Expansion of a display-coordinate vector: helper coefficients first,
    // then polywheel coefficients.
    Vec solve(const Vec& display) const;
};
PolywheelPresentation polywheel_presentation(int k);

// "a*x + b - c*z" over the nonzero terms; "0" when everything vanishes.
std::string linear_combo(const std::vector<std::pair<Rat, std::string>>& terms);

// One cell of a one-parameter family: "d*s+b" with the zero pieces dropped.
std::string family_combo(const Rat& direction, const Rat& base);

// Appendix renderers, recomputed from scratch on every call; byte-stable.
// 'A': polywheel expansions both ways. 'B': exterior-power genera and their
// inversion. 'C': chi_y coefficients. 'D': characteristic numbers.
// 'E': Rozansky-Witten invariants.
std::string render_table(char appendix, TableFormat f);

}  // namespace rwg

#endif
