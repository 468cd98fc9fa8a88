#include "gwcount/shape_format.hpp"

#include "gwcount/errors.hpp"

#include <algorithm>
#include <limits>

namespace gwcount {

namespace {

using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency(const Skeleton& s) {
    Adjacency adj(static_cast<std::size_t>(s.vertex_count()));
    for (const Edge& e : s.edges) {
        adj[static_cast<std::size_t>(e.a)].push_back(e.b);
        adj[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    return adj;
}

class Writer {
public:
    Writer(const Skeleton& s, const LegLabels* labels)
        : skeleton_(s), labels_(labels), adj_(adjacency(s)),
          blocked_(static_cast<std::size_t>(s.vertex_count()), false) {}

    void block(int v) { blocked_[static_cast<std::size_t>(v)] = true; }

    // Term for v and everything reachable from it without passing through
    // `parent` or a blocked vertex.
    std::string term(int v, int parent) const {
        std::vector<std::string> children;
        for (int u : adj_[static_cast<std::size_t>(v)]) {
            if (u == parent || blocked_[static_cast<std::size_t>(u)]) {
                continue;
            }
            children.push_back(term(u, v));
        }
        std::sort(children.begin(), children.end());
        std::string out = "(w" + std::to_string(skeleton_.weights[static_cast<std::size_t>(v)]);
        out += legs(v);
        for (const auto& child : children) {
            out += child;
        }
        out += ')';
        return out;
    }

private:
    std::string legs(int v) const {
        const auto i = static_cast<std::size_t>(v);
        if (labels_ == nullptr) {
            return "#" + std::to_string(skeleton_.leg_counts[i]);
        }
        std::vector<int> sorted = (*labels_)[i];
        std::sort(sorted.begin(), sorted.end());
        std::string out = "[";
        for (std::size_t j = 0; j < sorted.size(); ++j) {
            if (j != 0) {
                out += ',';
            }
            out += std::to_string(sorted[j]);
        }
        out += ']';
        return out;
    }

    const Skeleton& skeleton_;
    const LegLabels* labels_;
    Adjacency adj_;
    std::vector<bool> blocked_;
};

// Circuit vertices in cyclic order.
std::vector<int> cycle_order(const Skeleton& s, const std::vector<int>& on_cycle) {
    if (on_cycle.size() <= 2) {
        return on_cycle;
    }
    std::vector<bool> member(static_cast<std::size_t>(s.vertex_count()), false);
    for (int v : on_cycle) {
        member[static_cast<std::size_t>(v)] = true;
    }
    const Adjacency adj = adjacency(s);
    std::vector<int> order{on_cycle.front()};
    int prev = -1;
    int cur = on_cycle.front();
    while (order.size() < on_cycle.size()) {
        int next = -1;
        for (int u : adj[static_cast<std::size_t>(cur)]) {
            if (member[static_cast<std::size_t>(u)] && u != prev) {
                next = u;
                break;
            }
        }
        if (next < 0) {
            throw InconsistencyError("circuit walk stalled");
        }
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

std::string render(const Skeleton& s, const LegLabels* labels) {
    if (!has_valid_structure(s) ||
        s.leg_counts.size() != static_cast<std::size_t>(s.vertex_count())) {
        throw DomainError("cannot serialize a malformed graph");
    }
    Writer writer(s, labels);
    if (s.kind == GraphKind::Tree) {
        return writer.term(0, -1);
    }

    const std::vector<int> on_cycle = circuit_vertices(s);
    if (on_cycle.size() < 2) {
        throw DomainError("circuit graph without a circuit");
    }
    for (int v : on_cycle) {
        writer.block(v);
    }
    const std::vector<int> order = cycle_order(s, on_cycle);
    std::vector<std::string> terms;
    terms.reserve(order.size());
    for (int v : order) {
        terms.push_back(writer.term(v, -1));
    }

    const std::size_t n = terms.size();
    std::vector<std::string> best;
    std::vector<std::string> candidate(n);
    for (std::size_t start = 0; start < n; ++start) {
        for (int direction : {1, -1}) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t idx =
                    direction == 1 ? (start + i) % n : (start + n - i) % n;
                candidate[i] = terms[idx];
            }
            if (best.empty() || candidate < best) {
                best = candidate;
            }
        }
    }
    std::string out = "<";
    for (const auto& t : best) {
        out += t;
    }
    out += '>';
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParsedShape parse() {
        if (peek() == '<') {
            ++pos_;
            skeleton_.kind = GraphKind::Circuit;
            std::vector<int> roots;
            while (peek() == '(') {
                roots.push_back(node());
            }
            expect('>');
            if (roots.size() < 2) {
                fail("a circuit needs at least two vertices");
            }
            for (std::size_t i = 0; i < roots.size(); ++i) {
                skeleton_.edges.emplace_back(roots[i], roots[(i + 1) % roots.size()]);
            }
        } else {
            skeleton_.kind = GraphKind::Tree;
            node();
        }
        if (pos_ != text_.size()) {
            fail("trailing characters");
        }
        ParsedShape out;
        out.skeleton = std::move(skeleton_);
        if (style_ == LegStyle::Labels) {
            out.legs = std::move(labels_);
        }
        return out;
    }

private:
    enum class LegStyle { Unknown, Counts, Labels };

    [[noreturn]] void fail(const std::string& what) const {
        throw FormatError(what, "offset " + std::to_string(pos_));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char ch) {
        if (peek() != ch) {
            fail(std::string("expected '") + ch + "'");
        }
        ++pos_;
    }

    int uint() {
        const std::size_t start = pos_;
        long long value = 0;
        while (peek() >= '0' && peek() <= '9') {
            value = value * 10 + (peek() - '0');
            if (value > std::numeric_limits<int>::max()) {
                fail("number too large");
            }
            ++pos_;
        }
        if (pos_ == start) {
            fail("expected a number");
        }
        return static_cast<int>(value);
    }

    void set_style(LegStyle style) {
        if (style_ != LegStyle::Unknown && style_ != style) {
            fail("mixed leg counts and leg labels");
        }
        style_ = style;
    }

    int node() {
        expect('(');
        expect('w');
        const int v = skeleton_.vertex_count();
        skeleton_.weights.push_back(uint());
        skeleton_.leg_counts.push_back(0);
        labels_.emplace_back();
        if (peek() == '#') {
            ++pos_;
            set_style(LegStyle::Counts);
            skeleton_.leg_counts[static_cast<std::size_t>(v)] = uint();
        } else if (peek() == '[') {
            ++pos_;
            set_style(LegStyle::Labels);
            std::vector<int> labels;
            if (peek() != ']') {
                labels.push_back(uint());
                while (peek() == ',') {
                    ++pos_;
                    labels.push_back(uint());
                }
            }
            expect(']');
            skeleton_.leg_counts[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
            labels_[static_cast<std::size_t>(v)] = std::move(labels);
        } else {
            fail("expected '#' or '['");
        }
        while (peek() == '(') {
            const int child = node();
            skeleton_.edges.emplace_back(v, child);
        }
        expect(')');
        return v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Skeleton skeleton_;
    LegLabels labels_;
    LegStyle style_ = LegStyle::Unknown;
};

}  // namespace

std::string canonical_form(const Skeleton& skeleton) {
    return render(skeleton, nullptr);
}

std::string canonical_form(const Skeleton& skeleton, const LegLabels& legs) {
    if (legs.size() != static_cast<std::size_t>(skeleton.vertex_count())) {
        throw DomainError("leg labels do not match the vertex count");
    }
    return render(skeleton, &legs);
}

std::string canonical_form(const DistinguishedTree& tree) {
    return canonical_form(skeleton_of(tree), tree.legs);
}

std::string canonical_form(const CircuitGraph& graph) {
    return canonical_form(skeleton_of(graph), graph.legs);
}

ParsedShape parse_shape(std::string_view text) {
    return Parser(text).parse();
}

}  // namespace gwcount
