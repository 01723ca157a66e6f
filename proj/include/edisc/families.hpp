#pragma once

// Closed-form optimal discriminators for hypergraph families whose optimum
// is known exactly.

#include <vector>

#include "edisc/core.hpp"

namespace edisc {

struct FamilyResult {
    Hypergraph graph;
    Labeling labeling;
    Weight weight = 0;
};

inline constexpr std::size_t kMaxPowerSetVertices = 5;
inline constexpr std::size_t kMaxPartiteEdges = 4096;

/// Edges {1}, {1,2}, ..., {1..n}; all labels 1; weight n.
FamilyResult nested_chain(std::size_t n);

/// All non-empty subsets of m vertices; labels 1, 2, 4, ...; weight 2^m - 1.
FamilyResult power_set_optimal(std::size_t m);

/// Path on m vertices with weight ceil(m(m-1)/4). Edge sums are exactly
/// 1..m-1; end labels are (0, 0) for m = 0, 1 mod 4 and (0, 1) otherwise.
FamilyResult path_optimal(std::size_t m);

/// Path on m = 0, 1 mod 4 vertices with end labels (0, 2), edge sums exactly
/// 1..m-1 and weight m(m-1)/4 + 1.
FamilyResult path_end2(std::size_t m);

/// Cycle on m vertices with weight ceil(m(m+1)/4).
FamilyResult cycle_optimal(std::size_t m);

/// Part sizes of a complete r-partite hypergraph, non-increasing and positive.
class PartiteSizes {
public:
    /// Throws InvariantError if empty, non-positive or not non-increasing.
    explicit PartiteSizes(std::vector<std::size_t> sizes);

    const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
    std::size_t parts() const noexcept { return sizes_.size(); }
    /// Product of the first q sizes; prefix_product(0) == 1.
    std::size_t prefix_product(std::size_t q) const;

private:
    std::vector<std::size_t> sizes_;
};

/// m_r + (1/2) * sum_q (m_q - 1) * m_(q), the optimal weight.
Weight partite_optimal_weight(const PartiteSizes& sizes);

/// Edges are all transversals A_1 x ... x A_r. Part i < r is labeled
/// 0, m_(i-1), 2 m_(i-1), ...; the last part is shifted by one.
FamilyResult r_partite_optimal(const PartiteSizes& sizes);

/// n edges {c, l_i}; center 1, leaves 0..n-1; weight n(n-1)/2 + 1.
FamilyResult star(std::size_t n);

/// n disjoint singletons labeled 1..n; weight n(n+1)/2.
FamilyResult disjoint(std::size_t n);

}  // namespace edisc
