#include <algorithm>
#include <sstream>

#include "edisc/analysis.hpp"

namespace edisc {

namespace {

class MatchingSearch {
public:
    explicit MatchingSearch(const Hypergraph& h) : h_(h), used_(h.vertex_count(), false) {}

    Matching run() {
        visit(0);
        return best_;
    }

private:
    void visit(EdgeIndex i) {
        if (current_.size() > best_.size) {
            best_.size = current_.size();
            best_.edges = current_;
        }
        if (i == h_.edge_count()) return;
        if (current_.size() + (h_.edge_count() - i) <= best_.size) return;
        const auto& e = h_.edge(i);
        if (std::none_of(e.begin(), e.end(), [&](VertexIndex v) { return used_[v]; })) {
            for (auto v : e) used_[v] = true;
            current_.push_back(i);
            visit(i + 1);
            current_.pop_back();
            for (auto v : e) used_[v] = false;
        }
        visit(i + 1);
    }

    const Hypergraph& h_;
    std::vector<bool> used_;
    std::vector<EdgeIndex> current_;
    Matching best_;
};

class HittingSearch {
public:
    explicit HittingSearch(const Hypergraph& h) : h_(h), hits_(h.edge_count(), 0) {
        best_.size = h.vertex_count() + 1;
    }

    HittingSet run() {
        visit();
        std::sort(best_.vertices.begin(), best_.vertices.end());
        return best_;
    }

private:
    // Size of a greedy packing of pairwise-disjoint unhit edges: each needs
    // its own vertex.
    std::size_t packing_bound() const {
        std::vector<bool> used(h_.vertex_count(), false);
        std::size_t count = 0;
        for (EdgeIndex i = 0; i < h_.edge_count(); ++i) {
            if (hits_[i]) continue;
            const auto& e = h_.edge(i);
            if (std::any_of(e.begin(), e.end(), [&](VertexIndex v) { return used[v]; })) continue;
            for (auto v : e) used[v] = true;
            ++count;
        }
        return count;
    }

    void visit() {
        std::optional<EdgeIndex> target;
        for (EdgeIndex i = 0; i < h_.edge_count(); ++i)
            if (!hits_[i] && (!target || h_.edge(i).size() < h_.edge(*target).size())) target = i;
        if (!target) {
            if (chosen_.size() < best_.size) {
                best_.size = chosen_.size();
                best_.vertices = chosen_;
            }
            return;
        }
        if (chosen_.size() + packing_bound() >= best_.size) return;
        auto candidates = h_.edge(*target);
        std::sort(candidates.begin(), candidates.end(), [&](VertexIndex a, VertexIndex b) {
            if (h_.degree(a) != h_.degree(b)) return h_.degree(a) > h_.degree(b);
            return a < b;
        });
        for (auto v : candidates) {
            for (auto i : h_.incident_edges(v)) ++hits_[i];
            chosen_.push_back(v);
            visit();
            chosen_.pop_back();
            for (auto i : h_.incident_edges(v)) --hits_[i];
        }
    }

    const Hypergraph& h_;
    std::vector<std::size_t> hits_;
    std::vector<VertexIndex> chosen_;
    HittingSet best_;
};

Weight ceil_div(Weight a, Weight b) { return (a + b - 1) / b; }

}  // namespace

Matching max_matching(const Hypergraph& h) { return MatchingSearch(h).run(); }

HittingSet min_hitting_set(const Hypergraph& h) {
    if (h.edge_count() == 0) return {};
    return HittingSearch(h).run();
}

Weight lower_bound(const Hypergraph& h) {
    const auto n = static_cast<Weight>(h.edge_count());
    if (n == 0) return 0;
    const auto delta = static_cast<Weight>(max_matching(h).size);
    const auto degree = static_cast<Weight>(h.max_degree());
    return std::max({n, delta * (delta + 1) / 2, ceil_div(n * (n + 1), 2 * degree)});
}

BoundsReport bounds(const Hypergraph& h) {
    BoundsReport r;
    r.n = h.edge_count();
    const auto n = static_cast<Weight>(r.n);
    r.matching = max_matching(h);
    r.hitting = min_hitting_set(h);
    r.max_degree = h.max_degree();
    r.lower = lower_bound(h);
    r.upper_general = n * (n + 1) / 2;
    r.upper_hitting = n * (n - 1) / 2 + static_cast<Weight>(r.hitting.size);
    return r;
}

std::string format_bounds(const Hypergraph& h, const BoundsReport& r) {
    std::ostringstream os;
    os << "n " << r.n << '\n';
    os << "matching " << r.matching.size;
    for (std::size_t k = 0; k < r.matching.edges.size(); ++k)
        os << (k ? ',' : ' ') << r.matching.edges[k] + 1;
    os << '\n';
    os << "hitting-set " << r.hitting.size;
    for (std::size_t k = 0; k < r.hitting.vertices.size(); ++k)
        os << (k ? ',' : ' ') << h.vertex_name(r.hitting.vertices[k]);
    os << '\n';
    os << "max-degree " << r.max_degree << '\n';
    os << "lower " << r.lower << '\n';
    os << "upper-general " << r.upper_general << '\n';
    os << "upper-hitting " << r.upper_hitting << '\n';
    return os.str();
}

}  // namespace edisc
