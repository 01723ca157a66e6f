#pragma once

// Bounds on the optimal discriminator weight and the exhaustive
// attainability census over reduced hypergraphs.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "edisc/core.hpp"

namespace edisc {

struct Matching {
    std::size_t size = 0;
    std::vector<EdgeIndex> edges;
};

struct HittingSet {
    std::size_t size = 0;
    std::vector<VertexIndex> vertices;
};

/// Exact maximum set of pairwise-disjoint edges (branch and bound).
Matching max_matching(const Hypergraph& h);

/// Exact minimum vertex set meeting every edge (branch and bound).
HittingSet min_hitting_set(const Hypergraph& h);

struct BoundsReport {
    std::size_t n = 0;
    Matching matching;
    HittingSet hitting;
    std::size_t max_degree = 0;
    Weight lower = 0;
    Weight upper_general = 0;  // n(n+1)/2
    Weight upper_hitting = 0;   // n(n-1)/2 + N(H)
};

/// max(n, d(d+1)/2, ceil(n(n+1)/(2*Delta))) with d the matching number and
/// Delta the maximum vertex degree. 0 for an edgeless hypergraph.
Weight lower_bound(const Hypergraph& h);

BoundsReport bounds(const Hypergraph& h);

std::string format_bounds(const Hypergraph& h, const BoundsReport& report);

// ---- census ---------------------------------------------------------------

/// Largest edge count accepted by exhaustive enumeration.
inline constexpr std::size_t kMaxCensusEdges = 4;

class TooLargeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Every reduced hypergraph on n edges: each subset S of the non-empty
/// incidence vectors over [n] whose induced edges are non-empty and
/// pairwise distinct. Classes are listed in ascending mask order. With
/// `dedup`, only the lexicographically least member of each orbit under
/// edge permutation is yielded.
void enumerate_reduced(std::size_t n, bool dedup,
                       const std::function<void(const ReducedHypergraph&)>& visit);
std::vector<ReducedHypergraph> enumerate_reduced(std::size_t n, bool dedup = false);

struct CensusEntry {
    Weight weight = 0;
    std::optional<ReducedHypergraph> witness;  // set iff attainable
};

struct CensusInstance {
    std::vector<std::uint64_t> class_masks;
    Weight optimal = 0;
};

struct CensusReport {
    std::size_t n = 0;
    std::size_t instances = 0;
    std::vector<CensusEntry> entries;  // one per weight in [n, n(n+1)/2]
    std::vector<CensusInstance> per_instance;

    std::vector<Weight> attainable() const;
    std::vector<Weight> non_attainable() const;
    bool is_attainable(Weight w) const;
};

struct CensusOptions {
    bool dedup = false;
    unsigned workers = 1;
    std::uint64_t node_cap = 0;  // per solve; 0 means the solver default
};

CensusReport census(std::size_t n, const CensusOptions& options = {});

std::string format_census(const CensusReport& report);

struct ConjectureScan {
    Weight lo = 0;  // n(n-1)/2 + 2
    Weight hi = 0;  // n(n+1)/2 - 1
    std::vector<Weight> attained;  // weights in [lo, hi] that the census attains
    bool consistent() const noexcept { return attained.empty(); }
};

ConjectureScan conjecture_scan(const CensusReport& report);
ConjectureScan conjecture_scan(std::size_t n, const CensusOptions& options = {});

}  // namespace edisc
