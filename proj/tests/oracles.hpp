#pragma once

// Deliberately naive reference implementations used to cross-check the
// library, plus random generators for property tests. Nothing here calls
// into the solver, the construction or the bound code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "edisc/core.hpp"
#include "edisc/construct.hpp"

namespace oracle {

using edisc::Hypergraph;
using edisc::Labeling;
using edisc::Weight;

inline bool is_discriminator(const Hypergraph& h, const std::vector<Weight>& lab) {
    std::set<Weight> seen;
    for (const auto& e : h.edges()) {
        Weight s = 0;
        for (auto v : e) s += lab[v];
        if (s <= 0 || !seen.insert(s).second) return false;
    }
    return true;
}

// First labeling (in composition order) of total exactly w that discriminates.
inline std::optional<std::vector<Weight>> labeling_of_weight(const Hypergraph& h, Weight w) {
    const std::size_t m = h.vertex_count();
    std::vector<Weight> lab(m, 0);
    std::optional<std::vector<Weight>> found;
    std::function<void(std::size_t, Weight)> rec = [&](std::size_t v, Weight left) {
        if (found) return;
        if (v + 1 == m) {
            lab[v] = left;
            if (is_discriminator(h, lab)) found = lab;
            return;
        }
        for (Weight x = 0; x <= left && !found; ++x) {
            lab[v] = x;
            rec(v + 1, left - x);
        }
    };
    if (m > 0) rec(0, w);
    return found;
}

// Minimum discriminator weight by scanning w = 0, 1, 2, ...
inline Weight optimum(const Hypergraph& h) {
    const auto n = static_cast<Weight>(h.edge_count());
    for (Weight w = 0; w <= n * (n + 1) / 2; ++w)
        if (labeling_of_weight(h, w)) return w;
    return -1;
}

inline std::size_t matching_number(const Hypergraph& h) {
    const std::size_t n = h.edge_count();
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        std::vector<int> used(h.vertex_count(), 0);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (s >> i & 1U)
                for (auto v : h.edge(i))
                    if (used[v]++) ok = false;
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
    }
    return best;
}

inline std::size_t hitting_number(const Hypergraph& h) {
    const std::size_t m = h.vertex_count();
    std::size_t best = m;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        bool ok = true;
        for (const auto& e : h.edges()) {
            bool hit = false;
            for (auto v : e) hit = hit || (s >> v & 1U);
            if (!hit) {
                ok = false;
                break;
            }
        }
        if (ok) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(s)));
    }
    return best;
}

inline std::size_t max_degree(const Hypergraph& h) {
    std::vector<std::size_t> deg(h.vertex_count(), 0);
    for (const auto& e : h.edges())
        for (auto v : e) ++deg[v];
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

// All sums of h-element multisets, collected naively.
inline bool has_distinct_multiset_sums(const std::vector<Weight>& a, std::size_t h) {
    std::vector<Weight> sums;
    std::function<void(std::size_t, std::size_t, Weight)> rec = [&](std::size_t from, std::size_t left, Weight s) {
        if (left == 0) {
            sums.push_back(s);
            return;
        }
        for (std::size_t i = from; i < a.size(); ++i) rec(i, left - 1, s + a[i]);
    };
    rec(0, h, 0);
    std::sort(sums.begin(), sums.end());
    return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

inline std::vector<Weight> greedy_bh(std::size_t h, std::size_t count) {
    std::vector<Weight> a;
    for (Weight c = 1; a.size() < count; ++c) {
        a.push_back(c);
        if (!has_distinct_multiset_sums(a, h)) a.pop_back();
    }
    return a;
}

// Number of class sets over n edges whose induced edges are non-empty and
// distinct, counted by materializing each edge as a std::set.
inline std::size_t reduced_count(std::size_t n) {
    const std::size_t vectors = (std::size_t{1} << n) - 1;
    std::size_t count = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << vectors); ++s) {
        std::vector<std::set<std::uint64_t>> edges(n);
        for (std::size_t b = 0; b < vectors; ++b)
            if (s >> b & 1U)
                for (std::size_t e = 0; e < n; ++e)
                    if ((b + 1) >> e & 1U) edges[e].insert(b + 1);
        std::set<std::set<std::uint64_t>> distinct(edges.begin(), edges.end());
        bool ok = distinct.size() == n &&
                  std::none_of(edges.begin(), edges.end(), [](const auto& e) { return e.empty(); });
        if (ok) ++count;
    }
    return count;
}

// ---- generators -----------------------------------------------------------

inline Hypergraph random_hypergraph(std::mt19937& rng, std::size_t max_edges, std::size_t max_vertices) {
    std::uniform_int_distribution<std::size_t> mdist(1, max_vertices);
    const std::size_t m = mdist(rng);
    const std::size_t cap = std::min<std::size_t>(max_edges, (std::size_t{1} << m) - 1);
    std::uniform_int_distribution<std::size_t> ndist(1, cap);
    const std::size_t n = ndist(rng);
    std::uniform_int_distribution<std::uint64_t> maskdist(1, (std::uint64_t{1} << m) - 1);
    std::set<std::uint64_t> masks;
    while (masks.size() < n) masks.insert(maskdist(rng));
    std::vector<std::uint64_t> order(masks.begin(), masks.end());
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<std::string> names;
    for (std::size_t v = 0; v < m; ++v) names.push_back("x" + std::to_string(v));
    std::vector<std::vector<edisc::VertexIndex>> edges;
    for (auto mask : order) {
        std::vector<edisc::VertexIndex> e;
        for (std::size_t v = 0; v < m; ++v)
            if (mask >> v & 1U) e.push_back(v);
        edges.push_back(std::move(e));
    }
    return Hypergraph(std::move(names), std::move(edges));
}

inline edisc::Ordering random_ordering(std::mt19937& rng, std::size_t m) {
    std::vector<edisc::VertexIndex> p(m);
    std::iota(p.begin(), p.end(), std::size_t{0});
    std::shuffle(p.begin(), p.end(), rng);
    return edisc::Ordering(std::move(p));
}

inline Labeling random_initial(std::mt19937& rng, std::size_t m, Weight max_value) {
    std::uniform_int_distribution<Weight> d(0, max_value);
    std::bernoulli_distribution zero(0.5);
    std::vector<Weight> v(m);
    for (auto& x : v) x = zero(rng) ? 0 : d(rng);
    return Labeling(std::move(v));
}

inline bool pairwise_disjoint(const Hypergraph& h) {
    std::vector<int> used(h.vertex_count(), 0);
    for (const auto& e : h.edges())
        for (auto v : e)
            if (used[v]++) return false;
    return true;
}

}  // namespace oracle
