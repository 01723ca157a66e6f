#include "edisc/construct.hpp"

#include <algorithm>

namespace edisc {

Ordering::Ordering(std::vector<VertexIndex> by_position) : by_position_(std::move(by_position)) {
    position_.assign(by_position_.size(), by_position_.size());
    for (std::size_t p = 0; p < by_position_.size(); ++p) {
        auto v = by_position_[p];
        if (v >= by_position_.size() || position_[v] != by_position_.size())
            throw InvariantError("ordering is not a permutation of the vertex set");
        position_[v] = p;
    }
}

Ordering Ordering::identity(std::size_t vertex_count) {
    std::vector<VertexIndex> ids(vertex_count);
    for (std::size_t v = 0; v < vertex_count; ++v) ids[v] = v;
    return Ordering(std::move(ids));
}

Ordering Ordering::from_names(const Hypergraph& h, const std::vector<std::string>& names) {
    if (names.size() != h.vertex_count())
        throw InvariantError("ordering must list all " + std::to_string(h.vertex_count()) +
                             " vertices exactly once");
    std::vector<VertexIndex> ids;
    ids.reserve(names.size());
    for (const auto& name : names) {
        auto v = h.find_vertex(name);
        if (!v) throw InvariantError("ordering names unknown vertex '" + name + "'");
        ids.push_back(*v);
    }
    return Ordering(std::move(ids));
}

VertexIndex maximal_vertex(const Hypergraph& h, const Ordering& order, EdgeIndex i) {
    const auto& e = h.edge(i);
    return *std::max_element(e.begin(), e.end(), [&](VertexIndex a, VertexIndex b) {
        return order.position_of(a) < order.position_of(b);
    });
}

DifferentiatingVertex differentiating_vertex(const Hypergraph& h, const Ordering& order,
                                             EdgeIndex i, EdgeIndex j) {
    std::optional<VertexIndex> best;
    auto consider = [&](EdgeIndex from, EdgeIndex other) {
        for (auto v : h.edge(from)) {
            if (h.contains(other, v)) continue;
            if (!best || order.position_of(v) > order.position_of(*best)) best = v;
        }
    };
    consider(i, j);
    consider(j, i);
    if (!best) throw InvariantError("edges are equal; no differentiating vertex");
    if (h.contains(i, *best)) return {*best, i, j};
    return {*best, j, i};
}

ConstructionState greedy_construct_traced(const Hypergraph& h, const Ordering& order,
                                          const Labeling& initial) {
    const auto m = h.vertex_count();
    const auto n = h.edge_count();
    if (order.size() != m || initial.size() != m)
        throw InvariantError("ordering and initial function must cover the vertex set");

    ConstructionState state;
    state.labels = initial;
    state.positions.resize(m);

    // Group edges and edge pairs by the position that decides them.
    std::vector<std::vector<EdgeIndex>> topped(m);
    std::vector<std::vector<DifferentiatingVertex>> split(m);
    for (EdgeIndex i = 0; i < n; ++i) topped[order.position_of(maximal_vertex(h, order, i))].push_back(i);
    for (EdgeIndex i = 0; i < n; ++i)
        for (EdgeIndex j = i + 1; j < n; ++j) {
            auto d = differentiating_vertex(h, order, i, j);
            split[order.position_of(d.vertex)].push_back(d);
        }

    // Sum over vertices strictly below `pos`; those are final by then.
    auto sum_below = [&](EdgeIndex i, std::size_t pos) {
        Weight s = 0;
        for (auto v : h.edge(i))
            if (order.position_of(v) < pos) s += state.labels[v];
        return s;
    };

    for (std::size_t pos = 0; pos < m; ++pos) {
        auto& rec = state.positions[pos];
        rec.vertex = order.at(pos);
        rec.edges_topped = topped[pos].size();
        rec.pairs_split = split[pos].size();

        // Assigning x to this vertex ties a split pair iff
        // x == w_below(lower) - w_below(upper).
        for (const auto& d : split[pos])
            rec.pair_exclusions.insert(sum_below(d.lower, pos) - sum_below(d.upper, pos));
        for (auto i : topped[pos]) rec.edge_sums_below.insert(sum_below(i, pos));

        const Weight start = initial[rec.vertex];
        Weight x = start;
        auto blocked = [&](Weight candidate) {
            if (rec.pair_exclusions.count(candidate)) return true;
            // positivity; only reachable when the initial value is 0
            return candidate == 0 && rec.edge_sums_below.count(0) > 0;
        };
        while (blocked(x)) ++x;
        state.labels.set(rec.vertex, x);
    }
    return state;
}

Labeling greedy_construct(const Hypergraph& h, const Ordering& order, const Labeling& initial) {
    return greedy_construct_traced(h, order, initial).labels;
}

Weight construction_bound(const Hypergraph& h, const Ordering& order, const Labeling& initial) {
    const auto n = static_cast<Weight>(h.edge_count());
    Weight bound = n * (n + 1) / 2 + total_weight(initial);
    for (EdgeIndex i = 0; i < h.edge_count(); ++i)
        if (initial[maximal_vertex(h, order, i)] > 0) --bound;
    return bound;
}

std::vector<VertexIndex> greedy_hitting_set(const Hypergraph& h) {
    std::vector<bool> hit(h.edge_count(), false);
    std::size_t remaining = h.edge_count();
    std::vector<VertexIndex> chosen;
    while (remaining > 0) {
        VertexIndex best = 0;
        std::size_t best_gain = 0;
        for (VertexIndex v = 0; v < h.vertex_count(); ++v) {
            std::size_t gain = 0;
            for (auto i : h.incident_edges(v))
                if (!hit[i]) ++gain;
            if (gain > best_gain) {
                best = v;
                best_gain = gain;
            }
        }
        chosen.push_back(best);
        for (auto i : h.incident_edges(best))
            if (!hit[i]) {
                hit[i] = true;
                --remaining;
            }
    }
    return chosen;
}

HittingPlan hitting_set_plan(const Hypergraph& h, const std::vector<VertexIndex>& hitting_set) {
    std::vector<bool> in_set(h.vertex_count(), false);
    for (auto v : hitting_set) {
        if (v >= h.vertex_count() || in_set[v]) throw InvariantError("bad hitting set");
        in_set[v] = true;
    }
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
        const auto& e = h.edge(i);
        if (std::none_of(e.begin(), e.end(), [&](VertexIndex v) { return in_set[v]; }))
            throw InvariantError("vertex set misses edge " + std::to_string(i + 1));
    }
    std::vector<VertexIndex> by_position;
    for (VertexIndex v = 0; v < h.vertex_count(); ++v)
        if (!in_set[v]) by_position.push_back(v);
    by_position.insert(by_position.end(), hitting_set.begin(), hitting_set.end());
    Labeling initial(h.vertex_count());
    for (auto v : hitting_set) initial.set(v, 1);
    return {hitting_set, Ordering(std::move(by_position)), std::move(initial)};
}

}  // namespace edisc
