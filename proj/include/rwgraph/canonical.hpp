#ifndef RWGRAPH_CANONICAL_HPP
#define RWGRAPH_CANONICAL_HPP

#include <string>

#include "rwgraph/graph.hpp"

namespace rwg {

// Canonical representative of an oriented graph class. key is the single-line
// text of the minimal representative; sign relates the input to it:
//   [input] = sign * [key graph].
// sign 0 means the class is killed by the antisymmetry relation (the minimal
// labeling is reachable with both orientations; loops always do this).
// Invariants: canonicalizing the key graph yields itself with sign +1 (or 0),
// relabeling vertices never changes the key, and transposing two slots at one
// vertex flips the sign.
struct SignedCanonical {
    std::string key;
    int sign = 0;
};

SignedCanonical canonicalize(const OrientedGraph& g);

// Same result, but skips the per-component decomposition; used to cross-check
// the component-based fast path in tests.
SignedCanonical canonicalize_monolithic(const OrientedGraph& g);

}  // namespace rwg

#endif
