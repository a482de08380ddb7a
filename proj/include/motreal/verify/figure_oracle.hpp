#pragma once

// Region labels read off the drawn geometry of the reference chart for the
// sphere S^{8 + 9 alpha}: the hatched polygons and drawn lines, given by the
// coordinates of their vertices and endpoints. Used to check the decision
// tree of classify_sphere_unstable cell by cell.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace motreal::verify {

struct Point {
    std::int64_t d, e;
};

/// Sign of the cross product (b - a) x (p - a).
inline std::int64_t orientation(Point a, Point b, Point p) {
    return (b.d - a.d) * (p.e - a.e) - (b.e - a.e) * (p.d - a.d);
}

inline bool on_segment_line(Point a, Point b, Point p) { return orientation(a, b, p) == 0; }

/// Convex polygon with vertices in counter-clockwise order. `closed_edges[i]`
/// says whether the edge from vertex i to vertex i+1 belongs to the region.
struct ConvexRegion {
    std::vector<Point> vertices;
    std::vector<bool> closed_edges;

    bool contains(Point p) const {
        const std::size_t n = vertices.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto o = orientation(vertices[i], vertices[(i + 1) % n], p);
            if (o < 0) return false;
        }
        // On the boundary: every edge through p must be closed.
        for (std::size_t i = 0; i < n; ++i) {
            const Point a = vertices[i], b = vertices[(i + 1) % n];
            if (orientation(a, b, p) != 0) continue;
            if (!closed_edges[i]) return false;
        }
        return true;
    }
};

struct ReferenceChart {
    // Drawn lines, as two points each.
    Point coweight0_a{8, -2}, coweight0_b{8, 20};
    Point freudenthal_a{14, -2}, freudenthal_b{14, 20};
    Point weight_a{1, 8}, weight_b{20, 8};
    Point comparison_a{1, 4}, comparison_b{16, 19};
    Point stem0_a{1, 16}, stem0_b{18, -1};
    Point stem1_a{1, 15}, stem1_b{17, -1};

    // Closed pentagon (vertical hatching).
    ConvexRegion iso{{{9, 8}, {14, 8}, {14, 17}, {8, 11}, {8, 9}}, {true, true, true, true, true}};
    // Triangle (crosshatching) with only its rightmost edge (14,8)-(14,3) included.
    // Counter-clockwise: (9,8) -> (14,3) -> (14,8).
    ConvexRegion beilinson_soule{{{9, 8}, {14, 3}, {14, 8}}, {false, true, false}};
    // Vertical strip with slanted top (horizontal hatching), closed, cut off at the bottom of the grid.
    ConvexRegion divisible{{{8, -2}, {14, -2}, {14, 2}, {8, 8}}, {true, true, true, true}};

    /// Label of a lattice point, in the chart's region codes.
    ///
    /// Ties on shared boundaries are broken as the drawn lines dictate: the
    /// zero region and anything past the Freudenthal or comparison lines come
    /// first, then the 0-stem line (the comparison theorems exclude it even where
    /// it bounds the pentagon), then the -1-stem segment of the div strip.
    std::string label(Point p) const {
        if (orientation(coweight0_a, coweight0_b, p) > 0) return "Z";  // left of d = 8
        if (orientation(freudenthal_a, freudenthal_b, p) < 0) return "NC";  // right of d = 14
        if (orientation(comparison_a, comparison_b, p) > 0) return "NC";  // above e = d + 3
        if (on_segment_line(stem0_a, stem0_b, p)) return "S0";
        if (on_segment_line(stem1_a, stem1_b, p) && divisible.contains(p)) return "S-1";
        if (iso.contains(p)) return "ISO";
        if (beilinson_soule.contains(p)) return "BS";
        if (divisible.contains(p)) return "DIV";
        return "?";
    }
};

}  // namespace motreal::verify
