#include "gwcount/strata.hpp"

#include "gwcount/errors.hpp"
#include "gwcount/shape_format.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_set>

namespace gwcount {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

Skeleton skeleton_from(GraphKind kind, const std::vector<int>& weights,
                       const std::vector<Edge>& edges, const LegLabels& legs) {
    Skeleton s;
    s.kind = kind;
    s.weights = weights;
    s.edges = edges;
    s.leg_counts.assign(weights.size(), 0);
    for (std::size_t v = 0; v < weights.size() && v < legs.size(); ++v) {
        s.leg_counts[v] = static_cast<int>(legs[v].size());
    }
    return s;
}

void validate_labels(const LegLabels& legs, std::size_t vertices, int d) {
    if (legs.size() != vertices) {
        throw DomainError("leg assignment has " + std::to_string(legs.size()) +
                          " vertex lists for " + std::to_string(vertices) + " vertices");
    }
    const int markings = 3 * d - 1;
    std::vector<bool> seen(idx(markings) + 1, false);
    int total = 0;
    for (const auto& labels : legs) {
        for (int label : labels) {
            if (label < 1 || label > markings) {
                throw DomainError("marking " + std::to_string(label) + " outside 1.." +
                                  std::to_string(markings));
            }
            if (seen[idx(label)]) {
                throw DomainError("marking " + std::to_string(label) + " assigned twice");
            }
            seen[idx(label)] = true;
            ++total;
        }
    }
    if (total != markings) {
        throw DomainError("only " + std::to_string(total) + " of " + std::to_string(markings) +
                          " markings assigned");
    }
}

void require_stable(const Skeleton& s) {
    if (!is_stable(s)) {
        throw DomainError("graph is not stable");
    }
}

}  // namespace

Skeleton skeleton_of(const DistinguishedTree& tree) {
    return skeleton_from(GraphKind::Tree, tree.weights, tree.edges, tree.legs);
}

Skeleton skeleton_of(const CircuitGraph& graph) {
    return skeleton_from(GraphKind::Circuit, graph.weights, graph.edges, graph.legs);
}

bool has_valid_structure(const Skeleton& s) {
    const int n = s.vertex_count();
    if (n == 0) {
        return false;
    }
    const std::size_t expected_edges =
        s.kind == GraphKind::Tree ? idx(n - 1) : idx(n);
    if (s.edges.size() != expected_edges) {
        return false;
    }
    if (s.kind == GraphKind::Circuit && n < 2) {
        return false;
    }
    std::vector<int> parent(idx(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[idx(v)] != v) {
            parent[idx(v)] = parent[idx(parent[idx(v)])];
            v = parent[idx(v)];
        }
        return v;
    };
    int components = n;
    for (const Edge& e : s.edges) {
        if (e.a < 0 || e.b >= n || e.a == e.b) {
            return false;
        }
        const int ra = find(e.a);
        const int rb = find(e.b);
        if (ra != rb) {
            parent[idx(ra)] = rb;
            --components;
        }
    }
    return components == 1;
}

void validate(const Skeleton& s, int d) {
    if (!has_valid_structure(s)) {
        throw DomainError(s.kind == GraphKind::Tree
                              ? "not a tree"
                              : "not a connected graph with exactly one circuit and no self-loops");
    }
    if (s.leg_counts.size() != s.weights.size()) {
        throw DomainError("leg counts do not match the vertex count");
    }
    int weight_sum = 0;
    for (int w : s.weights) {
        if (w < 0) {
            throw DomainError("negative vertex weight");
        }
        weight_sum += w;
    }
    if (weight_sum != d) {
        throw DomainError("weights sum to " + std::to_string(weight_sum) + ", expected d = " +
                          std::to_string(d));
    }
    int legs = 0;
    for (int c : s.leg_counts) {
        if (c < 0) {
            throw DomainError("negative leg count");
        }
        legs += c;
    }
    if (legs != 3 * d - 1) {
        throw DomainError("graph carries " + std::to_string(legs) + " legs, expected 3d-1 = " +
                          std::to_string(3 * d - 1));
    }
}

void validate(const DistinguishedTree& tree, int d) {
    validate(skeleton_of(tree), d);
    validate_labels(tree.legs, tree.weights.size(), d);
}

void validate(const CircuitGraph& graph, int d) {
    validate(skeleton_of(graph), d);
    validate_labels(graph.legs, graph.weights.size(), d);
}

std::vector<int> circuit_vertices(const Skeleton& s) {
    if (s.kind == GraphKind::Tree) {
        return {};
    }
    const int n = s.vertex_count();
    std::vector<int> degree(idx(n), 0);
    std::vector<std::vector<int>> adj(idx(n));
    for (const Edge& e : s.edges) {
        ++degree[idx(e.a)];
        ++degree[idx(e.b)];
        adj[idx(e.a)].push_back(e.b);
        adj[idx(e.b)].push_back(e.a);
    }
    std::vector<bool> removed(idx(n), false);
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[idx(v)] <= 1) {
            leaves.push_back(v);
        }
    }
    while (!leaves.empty()) {
        const int v = leaves.back();
        leaves.pop_back();
        if (removed[idx(v)]) {
            continue;
        }
        removed[idx(v)] = true;
        for (int u : adj[idx(v)]) {
            if (!removed[idx(u)] && --degree[idx(u)] == 1) {
                leaves.push_back(u);
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v) {
        if (!removed[idx(v)]) {
            out.push_back(v);
        }
    }
    return out;
}

int core_weight(const Skeleton& s) {
    if (s.kind == GraphKind::Tree) {
        return s.weights.at(0);
    }
    int e = 0;
    for (int v : circuit_vertices(s)) {
        e += s.weights[idx(v)];
    }
    return e;
}

int valence(const Skeleton& s, int vertex) {
    int val = s.leg_counts.at(idx(vertex));
    for (const Edge& e : s.edges) {
        val += (e.a == vertex) + (e.b == vertex);
    }
    return val;
}

bool is_stable(const Skeleton& s) {
    if (!has_valid_structure(s) || s.leg_counts.size() != s.weights.size()) {
        throw DomainError("stability is defined for structurally valid graphs only");
    }
    // The distinguished vertex of a tree is exempt.
    const int first = s.kind == GraphKind::Tree ? 1 : 0;
    for (int v = first; v < s.vertex_count(); ++v) {
        if (s.weights[idx(v)] == 0 && valence(s, v) < 3) {
            return false;
        }
    }
    return true;
}

bool is_stable(const DistinguishedTree& tree) { return is_stable(skeleton_of(tree)); }
bool is_stable(const CircuitGraph& graph) { return is_stable(skeleton_of(graph)); }

StratumDimension dimension(const Skeleton& s, int d) {
    validate(s, d);
    require_stable(s);
    const int e = core_weight(s);
    const int k = s.extra_vertices();
    if (e == 1) {
        return StratumDimension::empty();
    }
    return StratumDimension::of(e == 0 ? 6 * d - k : 6 * d - 2 - k);
}

StratumDimension dimension(const DistinguishedTree& tree, int d) {
    validate(tree, d);
    return dimension(skeleton_of(tree), d);
}

StratumDimension dimension(const CircuitGraph& graph, int d) {
    validate(graph, d);
    return dimension(skeleton_of(graph), d);
}

StratumDimension deformation_bound(const Skeleton& s, int d) {
    const StratumDimension dim = dimension(s, d);
    if (dim.is_empty() || core_weight(s) != 0) {
        return dim;
    }
    std::vector<bool> eligible(s.weights.size(), true);
    if (s.kind == GraphKind::Tree) {
        eligible[0] = false;
    } else {
        for (int v : circuit_vertices(s)) {
            eligible[idx(v)] = false;
        }
    }
    for (std::size_t v = 0; v < s.weights.size(); ++v) {
        if (eligible[v] && s.weights[v] == d) {
            return StratumDimension::of(dim.value() - 2);
        }
    }
    return dim;
}

StratumDimension deformation_bound(const DistinguishedTree& tree, int d) {
    validate(tree, d);
    return deformation_bound(skeleton_of(tree), d);
}

StratumDimension deformation_bound(const CircuitGraph& graph, int d) {
    validate(graph, d);
    return deformation_bound(skeleton_of(graph), d);
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

using Permutation = std::vector<int>;

// Calls fn(parts) for every vector of `parts` non-negative integers summing to total.
template <class Fn>
void for_each_composition(int total, int parts, Fn&& fn) {
    std::vector<int> current(idx(parts), 0);
    auto rec = [&](auto& self, int pos, int remaining) -> void {
        if (pos == parts - 1) {
            current[idx(pos)] = remaining;
            fn(current);
            return;
        }
        for (int x = 0; x <= remaining; ++x) {
            current[idx(pos)] = x;
            self(self, pos + 1, remaining - x);
        }
    };
    if (parts > 0) {
        rec(rec, 0, total);
    }
}

std::vector<Edge> sorted_edges(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Automorphisms of the weighted multigraph; trees additionally fix vertex 0.
std::vector<Permutation> automorphisms(const Skeleton& s) {
    const int n = s.vertex_count();
    const std::vector<Edge> reference = sorted_edges(s.edges);
    Permutation perm(idx(n));
    std::iota(perm.begin(), perm.end(), 0);
    const auto movable_begin = perm.begin() + (s.kind == GraphKind::Tree ? 1 : 0);
    std::vector<Permutation> out;
    std::vector<Edge> mapped(s.edges.size());
    do {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            ok = s.weights[idx(perm[idx(v)])] == s.weights[idx(v)];
        }
        if (!ok) {
            continue;
        }
        for (std::size_t i = 0; i < s.edges.size(); ++i) {
            mapped[i] = Edge(perm[idx(s.edges[i].a)], perm[idx(s.edges[i].b)]);
        }
        std::sort(mapped.begin(), mapped.end());
        if (mapped == reference) {
            out.push_back(perm);
        }
    } while (std::next_permutation(movable_begin, perm.end()));
    return out;
}

std::vector<int> permuted(const std::vector<int>& values, const Permutation& perm) {
    std::vector<int> out(values.size());
    for (std::size_t v = 0; v < values.size(); ++v) {
        out[idx(perm[v])] = values[v];
    }
    return out;
}

Count multinomial(const std::vector<int>& parts) {
    int total = 0;
    Count denominator = 1;
    Count f;
    for (int p : parts) {
        total += p;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
        denominator *= f;
    }
    Count numerator;
    mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(total));
    return numerator / denominator;
}

// Unweighted tree shapes rooted at vertex 0 with n vertices, one per
// isomorphism class. Every rooted tree has a labeling where each vertex's
// parent precedes it, so parent vectors with parent[i] < i cover all classes.
std::vector<Skeleton> rooted_tree_structures(int n) {
    std::vector<Skeleton> out;
    std::set<std::string> seen;
    std::vector<int> parent(idx(n), 0);
    auto rec = [&](auto& self, int i) -> void {
        if (i == n) {
            Skeleton s;
            s.kind = GraphKind::Tree;
            s.weights.assign(idx(n), 0);
            s.leg_counts.assign(idx(n), 0);
            for (int v = 1; v < n; ++v) {
                s.edges.emplace_back(parent[idx(v)], v);
            }
            if (seen.insert(canonical_form(s)).second) {
                out.push_back(std::move(s));
            }
            return;
        }
        for (int p = 0; p < i; ++p) {
            parent[idx(i)] = p;
            self(self, i + 1);
        }
    };
    rec(rec, 1);
    return out;
}

// Connected multigraphs on n >= 2 vertices with n edges and no loops.
std::vector<Skeleton> circuit_structures(int n) {
    std::vector<Edge> pairs;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            pairs.emplace_back(a, b);
        }
    }
    std::vector<Skeleton> out;
    std::set<std::string> seen;
    std::vector<Edge> chosen;
    auto rec = [&](auto& self, std::size_t from) -> void {
        if (chosen.size() == idx(n)) {
            Skeleton s;
            s.kind = GraphKind::Circuit;
            s.weights.assign(idx(n), 0);
            s.leg_counts.assign(idx(n), 0);
            s.edges = chosen;
            if (has_valid_structure(s) && seen.insert(canonical_form(s)).second) {
                out.push_back(std::move(s));
            }
            return;
        }
        for (std::size_t i = from; i < pairs.size(); ++i) {
            chosen.push_back(pairs[i]);
            self(self, i);  // repetition allowed
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Skeleton> weighted_structures(const std::vector<Skeleton>& shapes, int d) {
    std::vector<Skeleton> out;
    std::set<std::string> seen;
    for (const Skeleton& base : shapes) {
        for_each_composition(d, base.vertex_count(), [&](const std::vector<int>& weights) {
            Skeleton s = base;
            s.weights = weights;
            if (seen.insert(canonical_form(s)).second) {
                out.push_back(std::move(s));
            }
        });
    }
    return out;
}

struct PendingShape {
    Skeleton skeleton;
    Count multiplicity;
    std::vector<Permutation> stabilizer;  // automorphisms preserving leg counts
};

void expand_legs(const Skeleton& weighted, const EnumerationOptions& options,
                 std::vector<PendingShape>& out) {
    const std::vector<Permutation> group = automorphisms(weighted);
    const int legs = 3 * options.degree - 1;
    for_each_composition(legs, weighted.vertex_count(), [&](const std::vector<int>& counts) {
        Skeleton s = weighted;
        s.leg_counts = counts;
        if (!is_stable(s)) {
            return;
        }
        // Keep the lexicographically least vector of each orbit.
        std::vector<Permutation> stabilizer;
        for (const Permutation& g : group) {
            const std::vector<int> image = permuted(counts, g);
            if (image < counts) {
                return;
            }
            if (image == counts) {
                stabilizer.push_back(g);
            }
        }
        if (options.filter && !options.filter(s)) {
            return;
        }
        // Burnside over the stabilizer: a labeling with these counts is fixed
        // by g only if g fixes every vertex that carries a leg.
        std::size_t fixing = 0;
        for (const Permutation& g : stabilizer) {
            bool fixes = true;
            for (std::size_t v = 0; v < counts.size() && fixes; ++v) {
                fixes = counts[v] == 0 || g[v] == static_cast<int>(v);
            }
            fixing += fixes ? 1 : 0;
        }
        Count multiplicity = multinomial(counts) * static_cast<unsigned long>(fixing);
        if (!mpz_divisible_ui_p(multiplicity.get_mpz_t(), stabilizer.size())) {
            throw InconsistencyError("orbit count is not an integer");
        }
        multiplicity /= static_cast<unsigned long>(stabilizer.size());
        out.push_back({std::move(s), std::move(multiplicity), std::move(stabilizer)});
    });
}

// All labelings with the shape's leg counts, deduplicated by canonical form.
std::vector<ShapeClass> materialize(const PendingShape& shape, int d) {
    const Skeleton& s = shape.skeleton;
    const int markings = 3 * d - 1;
    std::vector<int> remaining = s.leg_counts;
    LegLabels legs(s.weights.size());
    std::unordered_set<std::string> seen;
    std::vector<ShapeClass> out;
    auto rec = [&](auto& self, int label) -> void {
        if (label > markings) {
            std::string form = canonical_form(s, legs);
            if (seen.insert(form).second) {
                out.push_back(ShapeClass{s, Count(1), legs, std::move(form)});
            }
            return;
        }
        for (std::size_t v = 0; v < remaining.size(); ++v) {
            if (remaining[v] == 0) {
                continue;
            }
            --remaining[v];
            legs[v].push_back(label);
            self(self, label + 1);
            legs[v].pop_back();
            ++remaining[v];
        }
    };
    rec(rec, 1);
    if (Count(static_cast<unsigned long>(out.size())) != shape.multiplicity) {
        throw InconsistencyError("materialized " + std::to_string(out.size()) +
                                 " marked classes for " + canonical_form(s) + ", expected " +
                                 shape.multiplicity.get_str());
    }
    return out;
}

}  // namespace

std::vector<ShapeClass> enumerate_shapes(const EnumerationOptions& options) {
    const int d = options.degree;
    if (d < 3) {
        throw DomainError("strata are enumerated for d >= 3, got " + std::to_string(d));
    }
    if (options.max_extra_vertices < 0) {
        throw DomainError("max_extra_vertices must be non-negative");
    }
    if (options.max_extra_vertices > kMaxExtraVertices) {
        throw ResourceGuardError("max_extra_vertices " + std::to_string(options.max_extra_vertices) +
                                     " exceeds the limit of " + std::to_string(kMaxExtraVertices),
                                 "");
    }

    std::vector<Skeleton> weighted;
    if (options.include_trees) {
        for (int n = 1; n <= options.max_extra_vertices + 1; ++n) {
            auto batch = weighted_structures(rooted_tree_structures(n), d);
            weighted.insert(weighted.end(), batch.begin(), batch.end());
        }
    }
    if (options.include_circuits) {
        for (int n = 2; n <= options.max_extra_vertices + 1; ++n) {
            auto batch = weighted_structures(circuit_structures(n), d);
            weighted.insert(weighted.end(), batch.begin(), batch.end());
        }
    }

    std::vector<PendingShape> pending;
    for (const Skeleton& s : weighted) {
        if (!options.include_empty && core_weight(s) == 1) {
            continue;
        }
        expand_legs(s, options, pending);
    }

    Count projected = 0;
    if (options.collapsed) {
        projected = static_cast<unsigned long>(pending.size());
    } else {
        for (const auto& p : pending) {
            projected += p.multiplicity;
        }
    }
    if (projected > options.ceiling) {
        throw ResourceGuardError("projected class count " + projected.get_str() +
                                     " exceeds the ceiling " + options.ceiling.get_str(),
                                 projected.get_str());
    }

    std::vector<ShapeClass> out;
    for (auto& p : pending) {
        if (options.collapsed) {
            std::string form = canonical_form(p.skeleton);
            out.push_back(ShapeClass{std::move(p.skeleton), std::move(p.multiplicity), {}, std::move(form)});
        } else {
            auto marked = materialize(p, d);
            std::move(marked.begin(), marked.end(), std::back_inserter(out));
        }
    }
    std::sort(out.begin(), out.end(), [](const ShapeClass& x, const ShapeClass& y) {
        return std::forward_as_tuple(x.skeleton.kind, x.skeleton.weights.size(), x.canonical) <
               std::forward_as_tuple(y.skeleton.kind, y.skeleton.weights.size(), y.canonical);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Survivor classification

std::string_view to_string(StratumCategory category) noexcept {
    switch (category) {
        case StratumCategory::Trivial: return "trivial";
        case StratumCategory::PositivePartition: return "positive-partition";
        case StratumCategory::SingleTail: return "single-tail";
        case StratumCategory::FullDegreeTail: return "full-degree-tail";
        case StratumCategory::FullDegreeCircuitTail: return "full-degree-circuit-tail";
        case StratumCategory::LowDimension: return "low-dimension";
        case StratumCategory::Empty: return "empty";
    }
    return "low-dimension";
}

StratumCategory categorize(const Skeleton& s, int d) {
    validate(s, d);
    const int e = core_weight(s);
    const int k = s.extra_vertices();
    if (e == 1) {
        return StratumCategory::Empty;
    }
    if (s.kind == GraphKind::Tree) {
        if (k == 0) {
            return StratumCategory::Trivial;
        }
        if (e == 0 && k == 1) {
            return StratumCategory::SingleTail;
        }
        if (e == 0 && k == 2) {
            const bool full = std::any_of(s.weights.begin() + 1, s.weights.end(),
                                          [d](int w) { return w == d; });
            return full ? StratumCategory::FullDegreeTail : StratumCategory::PositivePartition;
        }
        return StratumCategory::LowDimension;
    }
    if (e == 0 && k == 2) {
        return StratumCategory::FullDegreeCircuitTail;
    }
    return StratumCategory::LowDimension;
}

bool SurvivorReport::matches_expected() const {
    auto agrees = [](const StratumClassification& c) { return c.survivor == c.expected_survivor; };
    return std::all_of(survivors.begin(), survivors.end(), agrees) &&
           std::all_of(avoided.begin(), avoided.end(), agrees);
}

SurvivorReport classify_survivors(int d, int max_extra_vertices, const Count& ceiling) {
    EnumerationOptions options;
    options.degree = d;
    options.max_extra_vertices = max_extra_vertices;
    options.collapsed = true;
    options.include_trees = true;
    options.include_circuits = true;
    options.ceiling = ceiling;

    SurvivorReport report;
    report.degree = d;
    const int threshold = 6 * d - 2;
    for (ShapeClass& shape : enumerate_shapes(options)) {
        StratumClassification c;
        c.dimension = dimension(shape.skeleton, d);
        c.bound = deformation_bound(shape.skeleton, d);
        c.survivor = !c.bound.is_empty() && c.bound.value() >= threshold;
        c.category = categorize(shape.skeleton, d);
        c.geometrically_avoided = c.category == StratumCategory::PositivePartition;
        c.expected_survivor = c.category == StratumCategory::Trivial ||
                              c.category == StratumCategory::PositivePartition;
        c.shape = std::move(shape);
        (c.survivor ? report.survivors : report.avoided).push_back(std::move(c));
    }
    return report;
}

}  // namespace gwcount
