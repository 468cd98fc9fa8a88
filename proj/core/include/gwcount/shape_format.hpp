#pragma once

#include "gwcount/strata.hpp"

#include <string>
#include <string_view>

namespace gwcount {

// Canonical text form of a stratum graph. Grammar (no whitespace):
//
//   shape    := node | circuit
//   circuit  := "<" node node+ ">"
//   node     := "(" "w" uint legs node* ")"
//   legs     := "#" uint                       leg count
//             | "[" [ uint ( "," uint )* ] "]" sorted marking labels
//
// A tree is written from c, each node listing its children after its own
// weight and legs. A circuit graph lists the circuit vertices in cyclic
// order, each followed by the trees hanging off it. Children are sorted by
// their own text; the circuit order is the lexicographically least rotation
// or reflection of the sequence of vertex terms. Two graphs of the same kind
// are isomorphic (c to c for trees) iff their forms are equal.

std::string canonical_form(const Skeleton& skeleton);
std::string canonical_form(const Skeleton& skeleton, const LegLabels& legs);
std::string canonical_form(const DistinguishedTree& tree);
std::string canonical_form(const CircuitGraph& graph);

struct ParsedShape {
    Skeleton skeleton;
    /// Present when the text carries label lists rather than counts.
    std::optional<LegLabels> legs;
};

/// Vertices are numbered in order of appearance; a tree's root is vertex 0.
/// Throws FormatError.
ParsedShape parse_shape(std::string_view text);

}  // namespace gwcount
