#pragma once

// B_h sets (all h-element multiset sums distinct) and the labelings of
// r-uniform hypergraphs they induce.

#include <optional>
#include <vector>

#include "edisc/core.hpp"

namespace edisc {

struct BhSet {
    std::size_t h = 1;
    std::vector<Weight> elements;  // strictly increasing, positive
};

/// Two distinct h-multisets (as element lists, non-decreasing) with equal sums.
struct BhCollision {
    std::vector<Weight> first;
    std::vector<Weight> second;
    Weight sum = 0;
};

struct BhVerdict {
    std::optional<BhCollision> collision;
    bool valid() const noexcept { return !collision.has_value(); }
};

/// Starts at 1 and appends the smallest integer that keeps the B_h property.
BhSet greedy_bh(std::size_t h, std::size_t count);

/// Enumerates every h-multiset and reports the first sum collision found.
BhVerdict verify_bh(const BhSet& set);

class NotUniformError : public std::invalid_argument {
public:
    NotUniformError(EdgeIndex edge, std::size_t size, std::size_t expected);
    EdgeIndex edge() const noexcept { return edge_; }

private:
    EdgeIndex edge_;
};

/// Labels vertex k (first-appearance order) with the k-th element of the
/// greedy B_r set. Throws NotUniformError naming the first edge whose size
/// differs from r.
Labeling uniform_sidon_labeling(const Hypergraph& h, std::size_t r);

/// Complete r-uniform hypergraph on m vertices.
Hypergraph complete_uniform(std::size_t m, std::size_t r);

/// ceil(C(m,r) (C(m,r)+1) / (2 C(m-1,r-1))), a lower bound for the complete
/// r-uniform hypergraph on m vertices.
Weight complete_uniform_lower_bound(std::size_t m, std::size_t r);

std::uint64_t binomial(std::size_t n, std::size_t k);

}  // namespace edisc
