#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <thread>

#include "edisc/analysis.hpp"
#include "edisc/solver.hpp"

namespace edisc {

namespace {

// Induced edges must be non-empty and pairwise distinct.
bool induces_valid_edges(std::size_t n, const std::vector<std::uint64_t>& classes) {
    std::vector<std::uint64_t> support(n, 0);  // bit k: class k contains edge e
    for (std::size_t k = 0; k < classes.size(); ++k)
        for (std::size_t e = 0; e < n; ++e)
            if (classes[k] >> e & 1U) support[e] |= std::uint64_t{1} << k;
    for (std::size_t e = 0; e < n; ++e) {
        if (support[e] == 0) return false;
        for (std::size_t f = 0; f < e; ++f)
            if (support[e] == support[f]) return false;
    }
    return true;
}

std::uint64_t permute_mask(std::uint64_t mask, const std::vector<std::size_t>& perm) {
    std::uint64_t out = 0;
    for (std::size_t e = 0; e < perm.size(); ++e)
        if (mask >> e & 1U) out |= std::uint64_t{1} << perm[e];
    return out;
}

// True if no edge relabeling produces a lexicographically smaller sorted
// class list.
bool is_orbit_minimum(const std::vector<std::uint64_t>& sorted_classes, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<std::uint64_t> image(sorted_classes.size());
    while (std::next_permutation(perm.begin(), perm.end())) {
        for (std::size_t k = 0; k < sorted_classes.size(); ++k)
            image[k] = permute_mask(sorted_classes[k], perm);
        std::sort(image.begin(), image.end());
        if (image < sorted_classes) return false;
    }
    return true;
}

ReducedHypergraph from_masks(std::size_t n, const std::vector<std::uint64_t>& masks) {
    std::vector<IncidenceVector> classes;
    classes.reserve(masks.size());
    for (auto m : masks) classes.push_back(IncidenceVector::from_mask(m));
    return ReducedHypergraph(n, std::move(classes));
}

// Fewest classes first, then lexicographic on the class masks.
bool smaller_witness(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

void enumerate_reduced(std::size_t n, bool dedup,
                       const std::function<void(const ReducedHypergraph&)>& visit) {
    if (n == 0 || n > kMaxCensusEdges)
        throw TooLargeError("exhaustive enumeration supports 1 <= n <= " +
                            std::to_string(kMaxCensusEdges));
    const std::size_t vectors = (std::size_t{1} << n) - 1;  // masks 1..2^n-1
    const std::uint64_t subsets = std::uint64_t{1} << vectors;
    std::vector<std::uint64_t> chosen;
    for (std::uint64_t s = 1; s < subsets; ++s) {
        chosen.clear();
        for (std::size_t b = 0; b < vectors; ++b)
            if (s >> b & 1U) chosen.push_back(b + 1);
        if (!induces_valid_edges(n, chosen)) continue;
        if (dedup && !is_orbit_minimum(chosen, n)) continue;
        visit(from_masks(n, chosen));
    }
}

std::vector<ReducedHypergraph> enumerate_reduced(std::size_t n, bool dedup) {
    std::vector<ReducedHypergraph> out;
    enumerate_reduced(n, dedup, [&](const ReducedHypergraph& r) { out.push_back(r); });
    return out;
}

std::vector<Weight> CensusReport::attainable() const {
    std::vector<Weight> out;
    for (const auto& e : entries)
        if (e.witness) out.push_back(e.weight);
    return out;
}

std::vector<Weight> CensusReport::non_attainable() const {
    std::vector<Weight> out;
    for (const auto& e : entries)
        if (!e.witness) out.push_back(e.weight);
    return out;
}

bool CensusReport::is_attainable(Weight w) const {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const CensusEntry& e) { return e.weight == w && e.witness; });
}

CensusReport census(std::size_t n, const CensusOptions& options) {
    auto instances = enumerate_reduced(n, options.dedup);
    std::vector<Weight> optimal(instances.size(), 0);

    SolveOptions solve;
    if (options.node_cap) solve.node_cap = options.node_cap;

    const unsigned workers = std::max(1U, options.workers);
    auto run = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t k = begin; k < instances.size(); k += stride)
            optimal[k] = exact_optimal(instances[k], solve).optimal_weight;
    };
    if (workers == 1) {
        run(0, 1);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    run(w, workers);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    CensusReport report;
    report.n = n;
    report.instances = instances.size();
    const auto nw = static_cast<Weight>(n);
    std::vector<std::optional<std::vector<std::uint64_t>>> best(
        static_cast<std::size_t>(nw * (nw + 1) / 2 - nw + 1));
    report.per_instance.reserve(instances.size());
    for (std::size_t k = 0; k < instances.size(); ++k) {
        std::vector<std::uint64_t> masks;
        for (const auto& c : instances[k].classes()) masks.push_back(c.mask());
        const Weight w = optimal[k];
        if (w < nw || w > nw * (nw + 1) / 2)
            throw std::logic_error("census produced an out-of-range optimum");
        auto& slot = best[static_cast<std::size_t>(w - nw)];
        if (!slot || smaller_witness(masks, *slot)) slot = masks;
        report.per_instance.push_back({std::move(masks), w});
    }
    for (std::size_t k = 0; k < best.size(); ++k) {
        CensusEntry entry;
        entry.weight = nw + static_cast<Weight>(k);
        if (best[k]) entry.witness = from_masks(n, *best[k]);
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::string format_census(const CensusReport& report) {
    std::ostringstream os;
    os << "n=" << report.n << " instances=" << report.instances << '\n';
    for (const auto& e : report.entries) {
        os << "w=" << e.weight << (e.witness ? " attainable" : " non-attainable");
        if (e.witness) {
            os << " witness=";
            const auto& classes = e.witness->classes();
            for (std::size_t k = 0; k < classes.size(); ++k) os << (k ? ";" : "") << classes[k].to_string();
        }
        os << '\n';
    }
    return os.str();
}

ConjectureScan conjecture_scan(const CensusReport& report) {
    const auto n = static_cast<Weight>(report.n);
    ConjectureScan scan;
    scan.lo = n * (n - 1) / 2 + 2;
    scan.hi = n * (n + 1) / 2 - 1;
    for (Weight w = scan.lo; w <= scan.hi; ++w)
        if (report.is_attainable(w)) scan.attained.push_back(w);
    return scan;
}

ConjectureScan conjecture_scan(std::size_t n, const CensusOptions& options) {
    return conjecture_scan(census(n, options));
}

}  // namespace edisc
