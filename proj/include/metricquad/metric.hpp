#pragma once

#include <array>
#include <vector>

#include "metricquad/mesh.hpp"

namespace metricquad {

struct ConeMetric {
    std::vector<double> edge_length;  // per edge
    std::vector<double> u;            // per vertex
    std::vector<double> beta;         // per edge

    static ConeMetric from_positions(const TriangleMesh& mesh);
    static ConeMetric from_lengths(const TriangleMesh& mesh, std::vector<double> lengths);
    // recompute edge_length from u and beta
    void apply_scaling(const TriangleMesh& mesh);
};

struct CurvatureField {
    std::vector<double> K;
};

// Angle opposite l_i. Throws DegenerateTriangle.
double corner_angle(double l_i, double l_j, double l_k);

// Angles at the three corners of f (order of face_halfedges). Throws DegenerateTriangle.
std::array<double, 3> face_angles(const TriangleMesh& mesh, const std::vector<double>& len, int f);
// Same, but a triangle violating the inequality gets (π at the long side's apex, 0, 0).
std::array<double, 3> face_angles_extended(const TriangleMesh& mesh, const std::vector<double>& len, int f);
bool face_valid(const TriangleMesh& mesh, const std::vector<double>& len, int f);

std::vector<double> angle_sums(const TriangleMesh& mesh, const std::vector<double>& len, bool extended = false);
CurvatureField vertex_curvature(const TriangleMesh& mesh, const ConeMetric& metric);
CurvatureField curvature_from_lengths(const TriangleMesh& mesh, const std::vector<double>& len,
                                      bool extended = false);

// Corner positions of f in its own chart: corner 0 at the origin, corner 1 on +x.
std::array<Vec2, 3> face_chart(const TriangleMesh& mesh, const std::vector<double>& len, int f);

// A point on a triangulation, barycentric in face_vertices order.
struct SurfacePoint {
    int face = -1;
    Vec3 bary = Vec3::Zero();
};

struct FlipRecord {
    int edge = -1;
    int f0 = -1, f1 = -1;
    // corner positions of the two faces before and after the flip, in one common layout
    std::array<Vec2, 3> old0, old1, new0, new1;
};

class FlipLog {
public:
    void push(const FlipRecord& r) { records_.push_back(r); }
    size_t size() const { return records_.size(); }
    const std::vector<FlipRecord>& records() const { return records_; }
    // Map a point on the current triangulation to the one before any logged flip.
    SurfacePoint pull_back(SurfacePoint p) const;

private:
    std::vector<FlipRecord> records_;
};

// Flips edge e if its quad is convex. β of the new edge is set from u.
bool flip_edge(TriangleMesh& mesh, ConeMetric& metric, int e, FlipLog* log);

bool is_delaunay_edge(const TriangleMesh& mesh, const std::vector<double>& len, int e, double slack = 1e-10);

// In-place: returns number of flips. Throws NonFlippable past the budget.
long make_delaunay(TriangleMesh& mesh, ConeMetric& metric, FlipLog* log, long budget = -1);

struct DelaunayResult {
    TriangleMesh mesh;
    ConeMetric metric;
    FlipLog log;
    long flips = 0;
};
DelaunayResult intrinsic_delaunay(const TriangleMesh& mesh, const ConeMetric& metric);

// Milnor's Lobachevsky function.
double lobachevsky(double theta);

}  // namespace metricquad
