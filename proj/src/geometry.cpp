#include "edisc/geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace edisc {

Region::Region(std::vector<Rational> lo, std::vector<Rational> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
    for (std::size_t a = 0; a < lo_.size(); ++a)
        if (!(lo_[a] < hi_[a])) throw InvariantError("region has no interior");
}

Region Region::interval(Rational a, Rational b) { return Region({a}, {b}); }

Region Region::rect(Rational x0, Rational y0, Rational x1, Rational y1) {
    return Region({x0, y0}, {x1, y1});
}

bool Region::contains(const std::vector<Rational>& point) const {
    if (point.size() != lo_.size()) return false;
    for (std::size_t a = 0; a < lo_.size(); ++a)
        if (!(lo_[a] < point[a] && point[a] < hi_[a])) return false;
    return true;
}

std::vector<Rational> Cell::midpoint() const {
    std::vector<Rational> m;
    for (std::size_t a = 0; a < lo.size(); ++a) m.push_back((lo[a] + hi[a]) / 2);
    return m;
}

std::vector<Cell> arrangement_cells(const std::vector<Region>& regions) {
    if (regions.empty()) throw std::invalid_argument("region family is empty");
    const auto dim = regions.front().dimension();
    for (const auto& r : regions)
        if (r.dimension() != dim) throw std::invalid_argument("regions mix dimensions");

    std::vector<std::vector<Rational>> coords(dim);
    for (std::size_t a = 0; a < dim; ++a) {
        for (const auto& r : regions) {
            coords[a].push_back(r.lo(a));
            coords[a].push_back(r.hi(a));
        }
        std::sort(coords[a].begin(), coords[a].end());
        coords[a].erase(std::unique(coords[a].begin(), coords[a].end()), coords[a].end());
    }

    std::vector<Cell> cells;
    std::vector<std::size_t> slot(dim, 0);  // slab index per axis, x outermost
    for (;;) {
        Cell c;
        for (std::size_t a = 0; a < dim; ++a) {
            c.lo.push_back(coords[a][slot[a]]);
            c.hi.push_back(coords[a][slot[a] + 1]);
        }
        auto mid = c.midpoint();
        std::vector<EdgeIndex> inside;
        for (std::size_t i = 0; i < regions.size(); ++i)
            if (regions[i].contains(mid)) inside.push_back(i);
        if (!inside.empty()) {
            c.incidence = IncidenceVector(std::move(inside));
            cells.push_back(std::move(c));
        }
        std::size_t a = dim;
        while (a > 0 && slot[a - 1] + 2 == coords[a - 1].size()) slot[--a] = 0;
        if (a == 0) break;
        ++slot[a - 1];
    }
    return cells;
}

GeometricHypergraph geometric_hypergraph(const std::vector<Region>& regions) {
    auto cells = arrangement_cells(regions);
    std::map<IncidenceVector, std::size_t> index;
    std::vector<IncidenceVector> classes;
    std::vector<std::size_t> cell_class, representatives;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        auto [it, fresh] = index.emplace(cells[k].incidence, classes.size());
        if (fresh) {
            classes.push_back(cells[k].incidence);
            representatives.push_back(k);
        }
        cell_class.push_back(it->second);
    }
    for (std::size_t i = 0; i < regions.size(); ++i)
        if (std::none_of(classes.begin(), classes.end(),
                         [&](const IncidenceVector& c) { return c.contains(i); }))
            throw std::logic_error("region " + std::to_string(i + 1) + " is covered by no cell");
    return {ReducedHypergraph(regions.size(), std::move(classes)), std::move(cells),
            std::move(cell_class), std::move(representatives)};
}

namespace {

// k distinct points in the open cell, spaced len / 2^p along the longer
// axis (2^p > k, so decimal coordinates stay finite), centered on the other.
std::vector<std::vector<Rational>> points_in_cell(const Cell& cell, Weight k) {
    std::size_t axis = 0;
    for (std::size_t a = 1; a < cell.lo.size(); ++a)
        if (cell.hi[a] - cell.lo[a] > cell.hi[axis] - cell.lo[axis]) axis = a;
    std::int64_t parts = 1;
    while (parts <= k) parts *= 2;
    const Rational step = (cell.hi[axis] - cell.lo[axis]) / parts;
    auto base = cell.midpoint();
    std::vector<std::vector<Rational>> out;
    for (Weight j = 1; j <= k; ++j) {
        auto p = base;
        p[axis] = cell.lo[axis] + step * j;
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

Weight count_points_in_region(const PointPlacement& placement, const Region& region) {
    Weight count = 0;
    for (const auto& p : placement.points)
        if (region.contains(p.coords)) count += p.multiplicity;
    return count;
}

Verdict verify_placement(const std::vector<Region>& regions, const PointPlacement& placement) {
    Verdict v;
    for (const auto& r : regions) v.weights.push_back(count_points_in_region(placement, r));
    for (std::size_t i = 0; i < v.weights.size() && !v.violation; ++i)
        if (v.weights[i] <= 0) v.violation = Violation{Violation::Kind::ZeroWeight, i, i, v.weights[i]};
    for (std::size_t j = 0; j < v.weights.size() && !v.violation; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (v.weights[i] == v.weights[j]) {
                v.violation = Violation{Violation::Kind::Collision, i, j, v.weights[i]};
                break;
            }
    return v;
}

PointPlacement geometric_discriminator(const std::vector<Region>& regions, const SolveOptions& options) {
    auto gh = geometric_hypergraph(regions);
    auto solved = exact_optimal(gh.reduced, options);

    PointPlacement placement;
    placement.dimension = regions.front().dimension();
    for (std::size_t c = 0; c < gh.reduced.class_count(); ++c) {
        const Weight k = solved.class_labels[c];
        for (auto& p : points_in_cell(gh.cells[gh.representatives[c]], k))
            placement.points.push_back({std::move(p), c, 1});
        placement.total += k;
    }

    const auto expected = edge_weights(gh.reduced.to_hypergraph(), solved.class_labels);
    for (std::size_t i = 0; i < regions.size(); ++i) {
        auto counted = count_points_in_region(placement, regions[i]);
        if (counted != expected[i])
            throw std::logic_error("region " + std::to_string(i + 1) + " holds " + std::to_string(counted) +
                                   " points, labeling says " + std::to_string(expected[i]));
        placement.region_counts.push_back(counted);
    }
    return placement;
}

std::vector<Region> parse_regions(std::string_view text) {
    std::vector<Region> regions;
    std::istringstream in{std::string(text)};
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        std::vector<Rational> v;
        try {
            for (std::size_t k = 1; k < tok.size(); ++k) v.push_back(Rational::parse(tok[k]));
            if (tok[0] == "interval" && v.size() == 2) {
                regions.push_back(Region::interval(v[0], v[1]));
            } else if (tok[0] == "rect" && v.size() == 4) {
                regions.push_back(Region::rect(v[0], v[1], v[2], v[3]));
            } else {
                throw std::invalid_argument("expected `interval a b` or `rect x0 y0 x1 y1`");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
        if (regions.back().dimension() != regions.front().dimension())
            throw ParseError(lineno, "regions mix dimensions");
    }
    return regions;
}

std::string format_placement(const PointPlacement& placement) {
    std::ostringstream os;
    for (const auto& p : placement.points) {
        for (std::size_t m = 0; m < static_cast<std::size_t>(p.multiplicity); ++m) {
            os << "point";
            for (const auto& x : p.coords) os << ' ' << x.to_string();
            os << " cell=" << p.cell_class + 1 << '\n';
        }
    }
    for (std::size_t i = 0; i < placement.region_counts.size(); ++i)
        os << "region " << i + 1 << " count=" << placement.region_counts[i] << '\n';
    os << "total " << placement.total << '\n';
    return os.str();
}

}  // namespace edisc
