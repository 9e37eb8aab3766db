#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "fibertwist/singloc.hpp"

namespace fibertwist {

// A lattice point on the junior simplex of 1/d(a,b,c), stored as integer
// numerators over d: barycentric coordinate i is num[i]/d.
struct JuniorPoint {
    enum class Location { Corner, Edge, Interior };
    Int k = 0;  // group element (0 for corners)
    std::array<Int, 3> num{};
    Location location = Location::Interior;
    int index = -1;  // Corner: the nonzero coordinate; Edge: the zero coordinate
};

struct LemmaCounts {
    Int v = 0, e = 0, s = 0;
    bool operator==(const LemmaCounts&) const = default;
};

LemmaCounts lemma_counts(const QuotientType& q);
std::vector<JuniorPoint> junior_points(const QuotientType& q);  // corners first

struct JuniorTriangulation {
    QuotientType type;
    std::vector<JuniorPoint> points;
    std::vector<std::array<int, 3>> triangles;

    std::vector<std::pair<int, int>> edges() const;
    int triangles_at(int vertex) const;
    LemmaCounts counts() const;
    std::array<Int, 3> boundary_split() const;  // edge points per side (by zero coordinate)
    Int interior_count() const;
};

// Placing triangulation; default order puts interior points first (by group
// element), then boundary points.
JuniorTriangulation triangulate(const QuotientType& q);
JuniorTriangulation triangulate(const QuotientType& q, const std::vector<int>& order);
void verify_triangulation(const JuniorTriangulation& t);  // throws InvariantViolation

// Surface case 1/m(a,b): A_{m-1} chain.
Int hj_chain(const QuotientType& q);

struct ChainPoint {
    Int j = 0;
    std::array<Int, 2> num{};  // over m
};
// Exceptional curves ordered from the first coordinate's corner to the second.
std::vector<ChainPoint> chain_points(const QuotientType& q);

std::string triangulation_svg(const JuniorTriangulation& t, const std::vector<bool>& circled,
                              const std::array<std::string, 3>& corner_labels);

}  // namespace fibertwist
