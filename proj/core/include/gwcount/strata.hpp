#pragma once

#include "gwcount/invariants.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gwcount {

enum class GraphKind { Tree, Circuit };

/// Undirected edge; stored with a < b.
struct Edge {
    int a = 0;
    int b = 0;

    Edge() = default;
    Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Per-vertex sorted marking labels, drawn from 1..3d-1.
using LegLabels = std::vector<std::vector<int>>;

/// Weighted tree with distinguished vertex. Vertex 0 is the distinguished
/// vertex c carrying weight e; vertices 1..k are the other vertices.
struct DistinguishedTree {
    std::vector<int> weights;
    std::vector<Edge> edges;
    LegLabels legs;
};

/// Weighted connected multigraph with first Betti number 1 and no self-loops.
/// A circuit of length two is a doubled edge.
struct CircuitGraph {
    std::vector<int> weights;
    std::vector<Edge> edges;
    LegLabels legs;
};

/// Either graph kind with legs reduced to per-vertex counts. Stability,
/// dimensions and bounds depend only on this data.
struct Skeleton {
    GraphKind kind = GraphKind::Tree;
    std::vector<int> weights;
    std::vector<Edge> edges;
    std::vector<int> leg_counts;

    int vertex_count() const noexcept { return static_cast<int>(weights.size()); }
    /// k: non-distinguished vertices of a tree, or total vertices minus one for a circuit graph.
    int extra_vertices() const noexcept { return vertex_count() - 1; }
};

Skeleton skeleton_of(const DistinguishedTree& tree);
Skeleton skeleton_of(const CircuitGraph& graph);

/// Structural checks (weights sum to d, connectivity, cycle rank, legs cover
/// 1..3d-1 exactly once). Throws DomainError.
void validate(const DistinguishedTree& tree, int d);
void validate(const CircuitGraph& graph, int d);
/// As above, with sum(leg_counts) == 3d-1 in place of the label check.
void validate(const Skeleton& skeleton, int d);

/// Graph shape only: indices in range, no self-loops, connected, and n-1
/// edges for a tree or n edges (cycle rank one) for a circuit graph.
bool has_valid_structure(const Skeleton& skeleton);

/// Vertices on the unique circuit; empty for trees.
std::vector<int> circuit_vertices(const Skeleton& skeleton);

/// e: the weight of c for trees, the summed circuit weight for circuit graphs.
int core_weight(const Skeleton& skeleton);

/// Incident edges (with multiplicity) plus legs.
int valence(const Skeleton& skeleton, int vertex);

bool is_stable(const Skeleton& skeleton);
bool is_stable(const DistinguishedTree& tree);
bool is_stable(const CircuitGraph& graph);

class StratumDimension {
public:
    static StratumDimension empty() { return StratumDimension(); }
    static StratumDimension of(int dim) { return StratumDimension(dim); }

    bool is_empty() const noexcept { return !dim_.has_value(); }
    /// Throws std::bad_optional_access when empty.
    int value() const { return dim_.value(); }

    std::string to_string() const { return dim_ ? std::to_string(*dim_) : std::string("empty"); }

    friend bool operator==(const StratumDimension&, const StratumDimension&) = default;

private:
    StratumDimension() = default;
    explicit StratumDimension(int dim) : dim_(dim) {}

    std::optional<int> dim_;
};

/// Empty if e = 1, 6d-2-k if e >= 2, 6d-k if e = 0. Throws DomainError on
/// unstable input.
StratumDimension dimension(const Skeleton& skeleton, int d);
StratumDimension dimension(const DistinguishedTree& tree, int d);
StratumDimension dimension(const CircuitGraph& graph, int d);

/// Dimension after the vanishing-sequence condition at the attaching node:
/// two less when e = 0 and a single tail vertex (off the circuit, for
/// circuit graphs) carries all of the degree; otherwise the dimension.
StratumDimension deformation_bound(const Skeleton& skeleton, int d);
StratumDimension deformation_bound(const DistinguishedTree& tree, int d);
StratumDimension deformation_bound(const CircuitGraph& graph, int d);

/// One isomorphism class of skeleton (collapsed mode) or of fully marked
/// graph (full mode, where `legs` is populated and multiplicity is 1).
struct ShapeClass {
    Skeleton skeleton;
    Count multiplicity = 1;
    LegLabels legs;
    std::string canonical;
};

inline constexpr int kMaxExtraVertices = 4;

struct EnumerationOptions {
    int degree = 3;
    int max_extra_vertices = 1;
    bool collapsed = true;
    bool include_trees = true;
    bool include_circuits = false;
    /// Keep e = 1 strata, which are empty.
    bool include_empty = false;
    /// Optional predicate on the leg-count skeleton; rejected shapes are not expanded.
    std::function<bool(const Skeleton&)> filter;
    /// Ceiling on emitted entries: shapes in collapsed mode, marked classes in full mode.
    Count ceiling = 1'000'000;
};

/// Stable isomorphism classes, sorted by (kind, vertex count, canonical form).
/// Throws DomainError for d < 3 or negative bounds and ResourceGuardError when
/// max_extra_vertices > kMaxExtraVertices or the ceiling trips.
std::vector<ShapeClass> enumerate_shapes(const EnumerationOptions& options);

/// Why a stratum does or does not meet a general point condition.
enum class StratumCategory {
    Trivial,                ///< no extra vertices; the irreducible locus itself
    PositivePartition,      ///< e = 0, k = 2, weights split d into two positive parts
    SingleTail,             ///< e = 0, k = 1: one degree-d tail on a contracted core
    FullDegreeTail,         ///< e = 0, k = 2, one tail vertex has weight d
    FullDegreeCircuitTail,  ///< weightless 2-circuit with a weight-d vertex attached
    LowDimension,           ///< dimension already <= 6d-3
    Empty,                  ///< e = 1
};

std::string_view to_string(StratumCategory category) noexcept;

struct StratumClassification {
    ShapeClass shape;
    StratumDimension dimension = StratumDimension::empty();
    StratumDimension bound = StratumDimension::empty();
    /// bound >= 6d-2.
    bool survivor = false;
    StratumCategory category = StratumCategory::LowDimension;
    /// Survives the dimension count but its image is a reducible curve, so it
    /// misses general points anyway.
    bool geometrically_avoided = false;
    /// Category-based expectation: Trivial and PositivePartition survive.
    bool expected_survivor = false;
};

struct SurvivorReport {
    int degree = 0;
    std::vector<StratumClassification> survivors;
    std::vector<StratumClassification> avoided;

    /// Every computed verdict agrees with its category-based expectation.
    bool matches_expected() const;
};

StratumCategory categorize(const Skeleton& skeleton, int d);

/// Collapsed enumeration of trees and circuit graphs, split by deformation bound.
SurvivorReport classify_survivors(int d, int max_extra_vertices, const Count& ceiling = 1'000'000);

}  // namespace gwcount
