#pragma once

#include <array>
#include <vector>

#include "metricquad/mesh.hpp"

namespace metricquad {

// Unit square [0,1]^2 with n×n cells; diagonals mirror across both midlines.
TriangleMesh make_square_grid(int n);

// Torus of revolution, major radius R, minor radius r.
TriangleMesh make_torus(int nu, int nv, double R, double r);

// Unit flat torus on an n×n grid: connectivity plus flat edge lengths.
struct FlatTorus {
    TriangleMesh mesh;
    std::vector<double> lengths;
};
FlatTorus make_flat_torus(int n);

// Rectangle [0,4]×[0,2] with holes of radius 0.5 at (1,1) and (3,1).
// ntheta must be a multiple of 8; nr radial layers per hole cell.
TriangleMesh make_two_hole(int ntheta, int nr);

// Genus-2 double of the two-hole domain: the sheets bulge to ±thickness.
TriangleMesh make_eight(int ntheta, int nr, double thickness);

TriangleMesh make_tetrahedron(const std::array<Vec3, 4>& p);

int nearest_vertex(const TriangleMesh& mesh, const Vec3& p);
std::array<int, 4> two_hole_corners(const TriangleMesh& mesh);

}  // namespace metricquad
