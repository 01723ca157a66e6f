#pragma once

// Ordered greedy construction of edge-discriminators from an arbitrary
// initial function, together with its weight certificate.

#include <set>
#include <vector>

#include "edisc/core.hpp"

namespace edisc {

/// Bijection from positions 0..m-1 onto the vertices of a hypergraph.
class Ordering {
public:
    /// Throws InvariantError unless `by_position` is a permutation of 0..m-1.
    explicit Ordering(std::vector<VertexIndex> by_position);

    /// First-appearance order.
    static Ordering identity(std::size_t vertex_count);
    /// Parses a comma-separated list of vertex names covering all of V(H).
    static Ordering from_names(const Hypergraph& h, const std::vector<std::string>& names);

    std::size_t size() const noexcept { return by_position_.size(); }
    VertexIndex at(std::size_t position) const { return by_position_.at(position); }
    std::size_t position_of(VertexIndex v) const { return position_.at(v); }
    const std::vector<VertexIndex>& by_position() const noexcept { return by_position_; }

private:
    std::vector<VertexIndex> by_position_;
    std::vector<std::size_t> position_;
};

struct DifferentiatingVertex {
    VertexIndex vertex;
    EdgeIndex upper;  // the edge containing the vertex
    EdgeIndex lower;  // the edge not containing it
};

/// Ordering-maximal vertex of the symmetric difference of edges i and j.
DifferentiatingVertex differentiating_vertex(const Hypergraph& h, const Ordering& order,
                                             EdgeIndex i, EdgeIndex j);

/// Ordering-maximal vertex of edge i.
VertexIndex maximal_vertex(const Hypergraph& h, const Ordering& order, EdgeIndex i);

/// Per-position bookkeeping of one construction run.
struct PositionRecord {
    VertexIndex vertex = 0;
    std::size_t edges_topped = 0;    // edges whose maximal vertex is this one
    std::size_t pairs_split = 0;     // edge pairs differentiated here
    std::set<Weight> pair_exclusions;   // values that would tie a split pair
    std::set<Weight> edge_sums_below;   // partial sums of topped edges before this step
};

struct ConstructionState {
    Labeling labels;
    std::vector<PositionRecord> positions;  // indexed by position
};

/// Runs the construction and keeps the per-position record.
ConstructionState greedy_construct_traced(const Hypergraph& h, const Ordering& order,
                                          const Labeling& initial);

/// Edge-discriminator built by visiting vertices in `order`. A vertex with
/// initial value 0 gets the least value that ties no pair it differentiates
/// and zeroes no edge it tops; a vertex with initial value k > 0 gets k plus
/// the least increment that ties no pair it differentiates.
Labeling greedy_construct(const Hypergraph& h, const Ordering& order, const Labeling& initial);

/// n(n+1)/2 - sum of edges topped by vertices with positive initial value
/// + sum of initial values.
Weight construction_bound(const Hypergraph& h, const Ordering& order, const Labeling& initial);

struct HittingPlan {
    std::vector<VertexIndex> hitting_set;
    Ordering order;
    Labeling initial;
};

/// Greedy hitting set (most uncovered edges first, lowest index on ties).
std::vector<VertexIndex> greedy_hitting_set(const Hypergraph& h);

/// Ordering with `hitting_set` placed last (in the given order) and initial
/// function equal to its indicator; the certificate becomes
/// n(n-1)/2 + |hitting_set|.
HittingPlan hitting_set_plan(const Hypergraph& h, const std::vector<VertexIndex>& hitting_set);

}  // namespace edisc
