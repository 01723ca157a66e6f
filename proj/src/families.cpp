#include "edisc/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace edisc {

namespace {

std::vector<std::string> numbered(const std::string& prefix, std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    return names;
}

FamilyResult finish(Hypergraph graph, std::vector<Weight> labels) {
    Labeling labeling(std::move(labels));
    auto weight = total_weight(labeling);
    return {std::move(graph), std::move(labeling), weight};
}

Hypergraph path_graph(std::size_t m) {
    std::vector<std::vector<VertexIndex>> edges;
    for (std::size_t i = 0; i + 1 < m; ++i) edges.push_back({i, i + 1});
    return Hypergraph(numbered("v", m), std::move(edges));
}

// Edge sums of a path labeling must be exactly 1..m-1.
void certify_consecutive(const std::vector<Weight>& labels) {
    std::vector<Weight> sums;
    for (std::size_t i = 0; i + 1 < labels.size(); ++i) sums.push_back(labels[i] + labels[i + 1]);
    std::sort(sums.begin(), sums.end());
    for (std::size_t i = 0; i < sums.size(); ++i)
        if (sums[i] != static_cast<Weight>(i + 1))
            throw std::logic_error("path construction does not cover 1..m-1");
}

// 1-based labels for the optimal path; see path_optimal.
std::vector<Weight> path_labels(std::size_t m) {
    std::vector<Weight> lam(m + 1, 0);  // lam[0] unused
    const auto M = static_cast<Weight>(m);
    auto ascend = [&](std::size_t upto) {
        for (std::size_t i = 1; i <= upto; ++i) lam[i] = static_cast<Weight>(i) - 1;
    };
    switch (m % 4) {
    case 0:
        ascend(m / 2 + 1);
        for (std::size_t i = m / 4 + 1; i + 1 <= m / 2; ++i)
            lam[2 * i] = lam[2 * i + 1] = M - 2 * static_cast<Weight>(i);
        lam[m] = 0;
        break;
    case 1:
        ascend((m - 1) / 2);
        for (std::size_t i = (m + 3) / 4; i <= (m - 1) / 2; ++i)
            lam[2 * i - 1] = lam[2 * i] = M - 2 * static_cast<Weight>(i) + 1;
        lam[m] = 0;
        break;
    case 2:
        ascend(m / 2 + 1);
        for (std::size_t i = (m + 6) / 4; i <= m / 2; ++i)
            lam[2 * i - 1] = lam[2 * i] = M - 2 * static_cast<Weight>(i) + 1;
        break;
    default:
        ascend((m - 1) / 2);
        for (std::size_t i = (m + 1) / 4; i <= (m - 1) / 2; ++i)
            lam[2 * i] = lam[2 * i + 1] = M - 2 * static_cast<Weight>(i);
        break;
    }
    lam.erase(lam.begin());
    certify_consecutive(lam);
    return lam;
}

std::vector<Weight> path_end2_labels(std::size_t m) {
    std::vector<Weight> lam;
    if (m == 4) {
        lam = {0, 1, 1, 2};
    } else if (m == 5) {
        lam = {0, 1, 1, 2, 2};
    } else {
        lam = path_labels(m - 4);
        const auto M = static_cast<Weight>(m);
        lam.insert(lam.end(), {M - 4, 1, M - 3, 2});
    }
    certify_consecutive(lam);
    return lam;
}

}  // namespace

FamilyResult nested_chain(std::size_t n) {
    if (n < 1) throw std::invalid_argument("nested chain needs n >= 1");
    std::vector<std::vector<VertexIndex>> edges;
    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<VertexIndex> e(i);
        for (std::size_t v = 0; v < i; ++v) e[v] = v;
        edges.push_back(std::move(e));
    }
    return finish(Hypergraph(numbered("", n), std::move(edges)), std::vector<Weight>(n, 1));
}

FamilyResult power_set_optimal(std::size_t m) {
    if (m < 1 || m > kMaxPowerSetVertices)
        throw std::invalid_argument("power set needs 1 <= m <= " + std::to_string(kMaxPowerSetVertices));
    std::vector<std::vector<VertexIndex>> edges;
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<VertexIndex> e;
        for (std::size_t v = 0; v < m; ++v)
            if (mask >> v & 1U) e.push_back(v);
        edges.push_back(std::move(e));
    }
    std::vector<Weight> labels(m);
    for (std::size_t v = 0; v < m; ++v) labels[v] = Weight{1} << v;
    return finish(Hypergraph(numbered("v", m), std::move(edges)), std::move(labels));
}

FamilyResult path_optimal(std::size_t m) {
    if (m < 2) throw std::invalid_argument("path needs m >= 2");
    return finish(path_graph(m), path_labels(m));
}

FamilyResult path_end2(std::size_t m) {
    if (m < 4 || (m % 4 != 0 && m % 4 != 1))
        throw std::invalid_argument("path with end labels (0, 2) needs m >= 4 and m = 0 or 1 mod 4");
    return finish(path_graph(m), path_end2_labels(m));
}

FamilyResult cycle_optimal(std::size_t m) {
    if (m < 3) throw std::invalid_argument("cycle needs m >= 3");
    std::vector<Weight> open;  // labels of a path on m+1 vertices with both ends 0
    if (m % 4 == 0 || m % 4 == 3) {
        open = path_labels(m + 1);
    } else {
        open = path_end2_labels(m - 1);
        open.push_back(static_cast<Weight>(m) - 1);
        open.push_back(0);
    }
    // Glue the two ends into v1.
    std::vector<Weight> labels(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(m));
    labels[0] = std::max(open.front(), open.back());

    std::vector<std::vector<VertexIndex>> edges;
    for (std::size_t i = 0; i + 1 < m; ++i) edges.push_back({i, i + 1});
    edges.push_back({m - 1, 0});
    return finish(Hypergraph(numbered("v", m), std::move(edges)), std::move(labels));
}

PartiteSizes::PartiteSizes(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw InvariantError("at least one part is required");
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (sizes_[i] == 0) throw InvariantError("part sizes must be positive");
        if (i && sizes_[i] > sizes_[i - 1])
            throw InvariantError("part sizes must be non-increasing");
    }
}

std::size_t PartiteSizes::prefix_product(std::size_t q) const {
    std::size_t p = 1;
    for (std::size_t i = 0; i < q; ++i) p *= sizes_.at(i);
    return p;
}

Weight partite_optimal_weight(const PartiteSizes& sizes) {
    const auto r = sizes.parts();
    Weight twice = 0;
    for (std::size_t q = 1; q <= r; ++q)
        twice += static_cast<Weight>(sizes.sizes()[q - 1] - 1) *
                 static_cast<Weight>(sizes.prefix_product(q));
    return static_cast<Weight>(sizes.sizes().back()) + twice / 2;
}

FamilyResult r_partite_optimal(const PartiteSizes& sizes) {
    const auto r = sizes.parts();
    if (sizes.prefix_product(r) > kMaxPartiteEdges)
        throw std::invalid_argument("complete r-partite hypergraph too large");

    std::vector<std::string> names;
    std::vector<Weight> labels;
    std::vector<std::size_t> offset(r);
    for (std::size_t i = 0; i < r; ++i) {
        offset[i] = names.size();
        const auto step = static_cast<Weight>(sizes.prefix_product(i));
        for (std::size_t j = 0; j < sizes.sizes()[i]; ++j) {
            names.push_back("a" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
            labels.push_back(static_cast<Weight>(j) * step + (i + 1 == r ? 1 : 0));
        }
    }

    std::vector<std::vector<VertexIndex>> edges;
    std::vector<std::size_t> pick(r, 0);
    for (;;) {
        std::vector<VertexIndex> e(r);
        for (std::size_t i = 0; i < r; ++i) e[i] = offset[i] + pick[i];
        edges.push_back(std::move(e));
        std::size_t i = 0;
        while (i < r && ++pick[i] == sizes.sizes()[i]) pick[i++] = 0;
        if (i == r) break;
    }
    return finish(Hypergraph(std::move(names), std::move(edges)), std::move(labels));
}

FamilyResult star(std::size_t n) {
    if (n < 1) throw std::invalid_argument("star needs n >= 1");
    std::vector<std::string> names{"c"};
    auto leaves = numbered("l", n);
    names.insert(names.end(), leaves.begin(), leaves.end());
    std::vector<std::vector<VertexIndex>> edges;
    std::vector<Weight> labels{1};
    for (std::size_t i = 1; i <= n; ++i) {
        edges.push_back({0, i});
        labels.push_back(static_cast<Weight>(i) - 1);
    }
    return finish(Hypergraph(std::move(names), std::move(edges)), std::move(labels));
}

FamilyResult disjoint(std::size_t n) {
    if (n < 1) throw std::invalid_argument("disjoint family needs n >= 1");
    std::vector<std::vector<VertexIndex>> edges;
    std::vector<Weight> labels;
    for (std::size_t i = 0; i < n; ++i) {
        edges.push_back({i});
        labels.push_back(static_cast<Weight>(i) + 1);
    }
    return finish(Hypergraph(numbered("v", n), std::move(edges)), std::move(labels));
}

}  // namespace edisc
