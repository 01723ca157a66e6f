#pragma once

// Discrimination of axis-aligned regions by finite point sets: the grid
// cells of a region family become the vertices of a reduced hypergraph,
// and an optimal labeling is realized as points inside those cells.

#include <string>
#include <string_view>
#include <vector>

#include "edisc/core.hpp"
#include "edisc/rational.hpp"
#include "edisc/solver.hpp"

namespace edisc {

/// Open interval (dimension 1) or open axis-aligned rectangle (dimension 2).
class Region {
public:
    /// Throws InvariantError unless a < b.
    static Region interval(Rational a, Rational b);
    /// Throws InvariantError unless x0 < x1 and y0 < y1.
    static Region rect(Rational x0, Rational y0, Rational x1, Rational y1);

    std::size_t dimension() const noexcept { return lo_.size(); }
    const Rational& lo(std::size_t axis) const { return lo_.at(axis); }
    const Rational& hi(std::size_t axis) const { return hi_.at(axis); }

    /// Strict interior membership.
    bool contains(const std::vector<Rational>& point) const;

private:
    Region(std::vector<Rational> lo, std::vector<Rational> hi);

    std::vector<Rational> lo_;
    std::vector<Rational> hi_;
};

/// Open grid box between consecutive arrangement coordinates.
struct Cell {
    std::vector<Rational> lo;
    std::vector<Rational> hi;
    IncidenceVector incidence;  // regions containing the cell, 0-based

    std::vector<Rational> midpoint() const;
};

/// Cells with non-empty incidence, x-major then y order. Throws
/// std::invalid_argument on an empty family or mixed dimensions.
std::vector<Cell> arrangement_cells(const std::vector<Region>& regions);

struct GeometricHypergraph {
    ReducedHypergraph reduced;
    std::vector<Cell> cells;
    std::vector<std::size_t> cell_class;       // class index of each cell
    std::vector<std::size_t> representatives;  // first cell of each class
};

/// Distinct cell incidences become classes, numbered in order of first
/// appearance among the cells.
GeometricHypergraph geometric_hypergraph(const std::vector<Region>& regions);

struct PlacedPoint {
    std::vector<Rational> coords;
    std::size_t cell_class = 0;  // 0-based
    Weight multiplicity = 1;
};

struct PointPlacement {
    std::size_t dimension = 0;
    std::vector<PlacedPoint> points;
    std::vector<Weight> region_counts;  // indexed by region
    Weight total = 0;
};

/// Solves the reduced hypergraph exactly and places k distinct points in the
/// representative cell of each class of weight k. The per-region counts are
/// recomputed geometrically; a mismatch with the labeling is a logic_error.
PointPlacement geometric_discriminator(const std::vector<Region>& regions,
                                       const SolveOptions& options = {});

/// Points (with multiplicity) strictly inside the region.
Weight count_points_in_region(const PointPlacement& placement, const Region& region);

/// Geometric check: every region count positive and all counts distinct.
Verdict verify_placement(const std::vector<Region>& regions, const PointPlacement& placement);

/// .rg format: `rect x0 y0 x1 y1` or `interval a b` per line, '#' starts a
/// comment, numbers are integers, decimals or p/q.
std::vector<Region> parse_regions(std::string_view text);

/// `point <coords..> cell=<class>` per point, `region <i> count=<k>` per
/// region, then `total <points>`. Classes and regions are numbered from 1.
std::string format_placement(const PointPlacement& placement);

}  // namespace edisc
