#include "edisc/sidon.hpp"

#include <map>
#include <unordered_set>

namespace edisc {

namespace {

// Calls fn(multiset) for every non-decreasing index sequence of length h.
template <class Fn>
void for_each_multiset(std::size_t size, std::size_t h, Fn&& fn) {
    if (size == 0) return;
    std::vector<std::size_t> idx(h, 0);
    for (;;) {
        fn(idx);
        std::size_t k = h;
        while (k > 0 && idx[k - 1] + 1 == size) --k;
        if (k == 0) return;
        ++idx[k - 1];
        for (std::size_t j = k; j < h; ++j) idx[j] = idx[k - 1];
    }
}

std::vector<Weight> multiset_sums(const std::vector<Weight>& elems, std::size_t h) {
    std::vector<Weight> out;
    if (h == 0) return {0};
    for_each_multiset(elems.size(), h, [&](const std::vector<std::size_t>& idx) {
        Weight s = 0;
        for (auto i : idx) s += elems[i];
        out.push_back(s);
    });
    return out;
}

}  // namespace

BhSet greedy_bh(std::size_t h, std::size_t count) {
    if (h < 1) throw std::invalid_argument("B_h sets need h >= 1");
    BhSet set{h, {}};
    if (count == 0) return set;
    set.elements.push_back(1);
    std::unordered_set<Weight> sums;
    sums.insert(static_cast<Weight>(h));

    // partial[s]: sums of s-multisets of the current elements, s < h
    std::vector<std::vector<Weight>> partial(h);
    auto refresh = [&] {
        for (std::size_t s = 0; s < h; ++s) partial[s] = multiset_sums(set.elements, s);
    };
    refresh();

    while (set.elements.size() < count) {
        for (Weight c = set.elements.back() + 1;; ++c) {
            // New multisets hold t >= 1 copies of c plus an (h-t)-multiset of old elements.
            std::unordered_set<Weight> fresh;
            bool ok = true;
            for (std::size_t t = 1; t <= h && ok; ++t)
                for (auto rest : partial[h - t]) {
                    Weight s = static_cast<Weight>(t) * c + rest;
                    if (sums.count(s) || !fresh.insert(s).second) {
                        ok = false;
                        break;
                    }
                }
            if (!ok) continue;
            set.elements.push_back(c);
            sums.insert(fresh.begin(), fresh.end());
            refresh();
            break;
        }
    }
    return set;
}

BhVerdict verify_bh(const BhSet& set) {
    BhVerdict verdict;
    std::map<Weight, std::vector<std::size_t>> first;
    const auto& el = set.elements;
    bool done = false;
    for_each_multiset(el.size(), set.h, [&](const std::vector<std::size_t>& idx) {
        if (done) return;
        Weight s = 0;
        for (auto i : idx) s += el[i];
        auto [it, inserted] = first.emplace(s, idx);
        if (inserted) return;
        BhCollision c;
        for (auto i : it->second) c.first.push_back(el[i]);
        for (auto i : idx) c.second.push_back(el[i]);
        c.sum = s;
        verdict.collision = std::move(c);
        done = true;
    });
    return verdict;
}

NotUniformError::NotUniformError(EdgeIndex edge, std::size_t size, std::size_t expected)
    : std::invalid_argument("edge " + std::to_string(edge + 1) + " has " + std::to_string(size) +
                            " vertices, expected " + std::to_string(expected)),
      edge_(edge) {}

Labeling uniform_sidon_labeling(const Hypergraph& h, std::size_t r) {
    for (EdgeIndex i = 0; i < h.edge_count(); ++i)
        if (h.edge(i).size() != r) throw NotUniformError(i, h.edge(i).size(), r);
    if (r == 0) throw std::invalid_argument("uniformity must be at least 1");
    return Labeling(greedy_bh(r, h.vertex_count()).elements);
}

Hypergraph complete_uniform(std::size_t m, std::size_t r) {
    if (r < 1 || r > m) throw std::invalid_argument("complete uniform hypergraph needs 1 <= r <= m");
    std::vector<std::string> names;
    for (std::size_t v = 1; v <= m; ++v) names.push_back("v" + std::to_string(v));
    std::vector<std::vector<VertexIndex>> edges;
    std::vector<VertexIndex> pick(r);
    for (std::size_t k = 0; k < r; ++k) pick[k] = k;
    for (;;) {
        edges.push_back(pick);
        std::size_t k = r;
        while (k > 0 && pick[k - 1] == m - r + (k - 1)) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t j = k; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return Hypergraph(std::move(names), std::move(edges));
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

Weight complete_uniform_lower_bound(std::size_t m, std::size_t r) {
    if (r < 1 || r > m) throw std::invalid_argument("need 1 <= r <= m");
    const auto edges = static_cast<Weight>(binomial(m, r));
    const auto degree = static_cast<Weight>(binomial(m - 1, r - 1));
    const Weight num = edges * (edges + 1);
    const Weight den = 2 * degree;
    return (num + den - 1) / den;
}

}  // namespace edisc
