#include "edisc/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "edisc/analysis.hpp"

namespace edisc {

ResourceLimitError::ResourceLimitError(std::uint64_t nodes)
    : std::runtime_error("node cap exceeded after " + std::to_string(nodes) + " nodes"),
      nodes_(nodes) {}

namespace {

// Depth-first search assigning one value per class, in a fixed order, with
// the total fixed to the target weight.
class ClassSearch {
public:
    ClassSearch(const ReducedHypergraph& r, std::uint64_t node_cap)
        : edges_(r.edge_count()), node_cap_(node_cap) {
        if (edges_ > 64 || r.class_count() > 64)
            throw std::invalid_argument("instance exceeds solver limits (64 edges, 64 classes)");
        const auto k = r.class_count();
        order_.resize(k);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
            return r.classes()[a].size() > r.classes()[b].size();
        });
        masks_.reserve(k);
        for (auto c : order_) masks_.push_back(r.classes()[c].mask());

        // after_[t][e]: positions > t whose class contains edge e
        after_.assign(k, std::vector<std::uint64_t>(edges_, 0));
        max_degree_after_.assign(k, 0);
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t s = t + 1; s < k; ++s) {
                for (std::size_t e = 0; e < edges_; ++e)
                    if (masks_[s] >> e & 1U) after_[t][e] |= std::uint64_t{1} << s;
                max_degree_after_[t] =
                    std::max<Weight>(max_degree_after_[t], std::popcount(masks_[s]));
            }
        const auto n = static_cast<Weight>(edges_);
        needed_sum_ = n * (n + 1) / 2;
    }

    std::optional<Labeling> find(Weight target) {
        if (order_.empty()) {
            if (edges_ == 0 && target == 0) return Labeling(0);
            return std::nullopt;
        }
        sums_.assign(edges_, 0);
        values_.assign(order_.size(), 0);
        sum_total_ = 0;
        if (!assign(0, target)) return std::nullopt;
        Labeling out(order_.size());
        for (std::size_t t = 0; t < order_.size(); ++t) out.set(order_[t], values_[t]);
        return out;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool assign(std::size_t t, Weight remaining) {
        const bool last = t + 1 == order_.size();
        const Weight lo = last ? remaining : 0;
        for (Weight x = lo; x <= remaining; ++x) {
            if (++nodes_ > node_cap_) throw ResourceLimitError(nodes_);
            apply(t, x);
            if (feasible(t, remaining - x) && (last || assign(t + 1, remaining - x))) return true;
            apply(t, -x);
        }
        return false;
    }

    void apply(std::size_t t, Weight delta) {
        values_[t] += delta;
        auto m = masks_[t];
        while (m) {
            auto e = static_cast<std::size_t>(std::countr_zero(m));
            sums_[e] += delta;
            sum_total_ += delta;
            m &= m - 1;
        }
    }

    bool feasible(std::size_t t, Weight remaining) const {
        const auto& after = after_[t];
        for (std::size_t e = 0; e < edges_; ++e) {
            if (after[e] == 0 && sums_[e] == 0) return false;
            // equal sums and equal future membership stay equal forever
            for (std::size_t f = e + 1; f < edges_; ++f)
                if (sums_[e] == sums_[f] && after[e] == after[f]) return false;
        }
        // the n distinct positive edge sums total at least n(n+1)/2
        return sum_total_ + max_degree_after_[t] * remaining >= needed_sum_;
    }

    std::size_t edges_;
    std::uint64_t node_cap_;
    std::uint64_t nodes_ = 0;
    std::vector<std::size_t> order_;
    std::vector<std::uint64_t> masks_;
    std::vector<std::vector<std::uint64_t>> after_;
    std::vector<Weight> max_degree_after_;
    Weight needed_sum_ = 0;

    std::vector<Weight> sums_;
    std::vector<Weight> values_;
    Weight sum_total_ = 0;
};

}  // namespace

std::optional<Labeling> exists_with_weight(const ReducedHypergraph& r, Weight weight,
                                           const SolveOptions& options, std::uint64_t* nodes) {
    if (weight < 0) return std::nullopt;
    ClassSearch search(r, options.node_cap);
    std::optional<Labeling> found;
    try {
        found = search.find(weight);
    } catch (const ResourceLimitError&) {
        if (nodes) *nodes += search.nodes();
        throw;
    }
    if (nodes) *nodes += search.nodes();
    return found;
}

std::optional<Labeling> exists_with_weight(const Hypergraph& h, Weight weight,
                                           const SolveOptions& options) {
    auto r = reduce(h);
    auto found = exists_with_weight(r, weight, options);
    if (!found) return std::nullopt;
    return r.lift(*found, h.vertex_count());
}

ClassSolveResult exact_optimal(const ReducedHypergraph& r, const SolveOptions& options) {
    const auto n = static_cast<Weight>(r.edge_count());
    const Weight ceiling = n * (n + 1) / 2;
    ClassSolveResult result;
    SolveOptions remaining = options;
    for (Weight w = lower_bound(r.to_hypergraph()); w <= ceiling; ++w) {
        remaining.node_cap = options.node_cap - result.nodes_explored;
        auto found = exists_with_weight(r, w, remaining, &result.nodes_explored);
        if (found) {
            result.optimal_weight = w;
            result.class_labels = std::move(*found);
            return result;
        }
    }
    throw std::logic_error("no discriminator within n(n+1)/2; reduced hypergraph is malformed");
}

SolveResult exact_optimal(const Hypergraph& h, const SolveOptions& options) {
    auto r = reduce(h);
    auto classes = exact_optimal(r, options);
    return {classes.optimal_weight, r.lift(classes.class_labels, h.vertex_count()),
            classes.nodes_explored};
}

}  // namespace edisc
