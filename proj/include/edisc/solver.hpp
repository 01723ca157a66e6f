#pragma once

// Exact optimal discriminator weight by iterative deepening over labelings
// of the reduced hypergraph.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "edisc/core.hpp"

namespace edisc {

inline constexpr std::uint64_t kDefaultNodeCap = 2'000'000'000ULL;

/// The node cap was hit before the search could decide.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(std::uint64_t nodes);
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_;
};

struct SolveOptions {
    std::uint64_t node_cap = kDefaultNodeCap;
};

struct SolveResult {
    Weight optimal_weight = 0;
    Labeling witness;  // on the original vertices; one representative per class
    std::uint64_t nodes_explored = 0;
};

struct ClassSolveResult {
    Weight optimal_weight = 0;
    Labeling class_labels;  // indexed like ReducedHypergraph::classes()
    std::uint64_t nodes_explored = 0;
};

/// A discriminator of total weight exactly `weight`, or nullopt. Among all
/// such labelings the lexicographically least in class-assignment order is
/// returned. `nodes` (optional) accumulates the search size.
std::optional<Labeling> exists_with_weight(const ReducedHypergraph& r, Weight weight,
                                           const SolveOptions& options = {},
                                           std::uint64_t* nodes = nullptr);
std::optional<Labeling> exists_with_weight(const Hypergraph& h, Weight weight,
                                           const SolveOptions& options = {});

ClassSolveResult exact_optimal(const ReducedHypergraph& r, const SolveOptions& options = {});
SolveResult exact_optimal(const Hypergraph& h, const SolveOptions& options = {});

}  // namespace edisc
