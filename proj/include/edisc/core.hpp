#pragma once

// Hypergraph and labeling data model shared by every module.
//
// Vertices are opaque string tokens, stored in first-appearance order and
// addressed by index everywhere else. Edges are vertex-index sets; the
// order of the indices inside an edge is the order they were given in, so
// that text round trips are stable.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace edisc {

using Weight = std::int64_t;
using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

/// Raised when a hypergraph or labeling violates a structural invariant.
class InvariantError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the text parsers; carries the 1-based line of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class Hypergraph {
public:
    Hypergraph() = default;

    /// Builds from vertex names and index-based edges. Throws InvariantError
    /// on an out-of-range index, an empty edge, or two equal edges.
    Hypergraph(std::vector<std::string> vertices,
               std::vector<std::vector<VertexIndex>> edges);

    /// Builds from edges given as vertex names; vertices are numbered in
    /// first-appearance order.
    static Hypergraph from_named_edges(const std::vector<std::vector<std::string>>& edges);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::string& vertex_name(VertexIndex v) const { return vertices_.at(v); }
    std::optional<VertexIndex> find_vertex(std::string_view name) const;

    const std::vector<std::vector<VertexIndex>>& edges() const noexcept { return edges_; }
    const std::vector<VertexIndex>& edge(EdgeIndex i) const;

    bool contains(EdgeIndex i, VertexIndex v) const;

    /// Indices of the edges containing v, ascending.
    const std::vector<EdgeIndex>& incident_edges(VertexIndex v) const { return incidence_.at(v); }
    std::size_t degree(VertexIndex v) const { return incidence_.at(v).size(); }
    std::size_t max_degree() const noexcept;

private:
    std::vector<std::string> vertices_;
    std::vector<std::vector<VertexIndex>> edges_;
    std::vector<std::vector<VertexIndex>> sorted_edges_;
    std::vector<std::vector<EdgeIndex>> incidence_;
    std::unordered_map<std::string, VertexIndex> index_;
};

/// Non-negative integer weights, one per vertex of the host hypergraph.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::size_t vertex_count) : values_(vertex_count, 0) {}
    /// Throws InvariantError if any value is negative.
    explicit Labeling(std::vector<Weight> values);

    std::size_t size() const noexcept { return values_.size(); }
    Weight operator[](VertexIndex v) const { return values_.at(v); }
    void set(VertexIndex v, Weight w);
    const std::vector<Weight>& values() const noexcept { return values_; }

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    std::vector<Weight> values_;
};

/// Sum of the labels on edge i. Throws std::out_of_range on a bad index.
Weight edge_weight(const Hypergraph& h, const Labeling& labels, EdgeIndex i);
std::vector<Weight> edge_weights(const Hypergraph& h, const Labeling& labels);
Weight total_weight(const Labeling& labels);

struct Violation {
    enum class Kind { SizeMismatch, ZeroWeight, Collision };
    Kind kind;
    EdgeIndex first = 0;
    EdgeIndex second = 0;  // only meaningful for Collision
    Weight weight = 0;
};

/// Outcome of checking the edge-discriminator property.
struct Verdict {
    std::optional<Violation> violation;
    std::vector<Weight> weights;

    bool valid() const noexcept { return !violation.has_value(); }
    /// Human-readable form; edges are numbered from 1.
    std::string describe() const;
};

/// Valid iff every edge sum is positive and the n sums are pairwise distinct.
/// The first offending edge (or lowest colliding pair) is reported.
Verdict validate_discriminator(const Hypergraph& h, const Labeling& labels);

/// Set of edge indices containing a vertex, kept sorted ascending.
class IncidenceVector {
public:
    IncidenceVector() = default;
    /// Sorts and dedups the indices.
    explicit IncidenceVector(std::vector<EdgeIndex> members);

    const std::vector<EdgeIndex>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(EdgeIndex i) const;

    /// Bitmask form; requires every member < 64.
    std::uint64_t mask() const;
    static IncidenceVector from_mask(std::uint64_t mask);

    /// "{1,2,3}" with 1-based edge numbers.
    std::string to_string() const;

    friend auto operator<=>(const IncidenceVector&, const IncidenceVector&) = default;

private:
    std::vector<EdgeIndex> members_;
};

/// Quotient of a hypergraph by vertices with equal incidence. Isolated
/// vertices are dropped. Optimal weight is preserved.
class ReducedHypergraph {
public:
    /// Builds directly from class incidences (used by enumeration and
    /// geometry). Throws InvariantError if a class is empty or repeated, if
    /// some edge is empty, or if two edges coincide.
    ReducedHypergraph(std::size_t edge_count, std::vector<IncidenceVector> classes);

    std::size_t edge_count() const noexcept { return edge_count_; }
    std::size_t class_count() const noexcept { return classes_.size(); }
    const std::vector<IncidenceVector>& classes() const noexcept { return classes_; }

    /// Class of an original vertex, or nullopt if it was isolated. Empty when
    /// built directly from classes.
    const std::vector<std::optional<std::size_t>>& class_map() const noexcept { return class_map_; }
    /// First original vertex of each class (empty when built from classes).
    const std::vector<VertexIndex>& representatives() const noexcept { return representatives_; }

    /// Hypergraph whose vertices are the classes, named c1, c2, ...
    Hypergraph to_hypergraph() const;

    /// Per-class totals of an original-vertex labeling.
    Labeling project(const Labeling& original) const;
    /// Original-vertex labeling placing each class weight on its representative.
    Labeling lift(const Labeling& class_labels, std::size_t original_vertex_count) const;

    friend ReducedHypergraph reduce(const Hypergraph& h);

private:
    ReducedHypergraph() = default;
    void check_invariants() const;

    std::size_t edge_count_ = 0;
    std::vector<IncidenceVector> classes_;
    std::vector<std::optional<std::size_t>> class_map_;
    std::vector<VertexIndex> representatives_;
};

ReducedHypergraph reduce(const Hypergraph& h);

// ---- text formats ---------------------------------------------------------

/// Parses the .hg format: one edge per line, whitespace-separated vertex
/// tokens; blank lines and lines starting with '#' are skipped.
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

/// `v <vertex> <weight>` per vertex, `e <i> <weight>` per edge, `total <w>`.
std::string format_labeling(const Hypergraph& h, const Labeling& labels);

/// Reads the `v` lines of a labeling file; `e`/`total` lines and any other
/// keyword or '#' line are ignored. Vertices not listed get 0.
Labeling parse_labeling(const Hypergraph& h, std::string_view text);

std::string read_file(const std::string& path);

}  // namespace edisc
