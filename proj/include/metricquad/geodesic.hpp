#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "metricquad/cut.hpp"
#include "metricquad/metric.hpp"
#include "metricquad/seamless.hpp"

namespace metricquad {

// Flat cone surface ready for tracing: charts, vertex fans and cone angles.
struct FlatSurface {
    const TriangleMesh* mesh = nullptr;
    std::vector<double> lengths;
    std::vector<std::array<Vec2, 3>> chart;   // face_chart per face
    std::vector<std::array<double, 3>> angle;  // corner angles per face
    std::vector<std::vector<int>> fan;         // outgoing halfedges, counterclockwise
    std::vector<std::vector<double>> fan_start;  // cumulative angle where each fan face starts
    std::vector<double> cone_angle;
    std::vector<char> singular;
    double scale = 1;  // reference length (bounding-box diagonal of the flat image)

    static FlatSurface build(const TriangleMesh& mesh, std::vector<double> lengths,
                             const SingularityPrescription& presc, double scale);

    Vec2 direction(int h) const;  // unit direction of h in its face chart
    // position of the fan direction psi at v: face/corner index into fan, offset inside it
    int fan_index(int v, double psi) const;
    // fan angle at v of a vector leaving the corner (face f, corner c)
    double fan_angle(int v, int f, int c, const Vec2& vec) const;
    SurfacePoint surface_point(int f, const Vec2& p) const;
};

// 3D position on the input surface of a point given in a face chart of the traced triangulation.
Vec3 surface_position(const FlatSurface& s, const TriangleMesh& original, const FlipLog& flips, int f,
                      const Vec2& p);

enum class Terminal { Singularity, Boundary, ClosedLoop, Budget };
const char* terminal_name(Terminal t);

struct GeodesicStep {
    int face = -1;
    Vec2 a = Vec2::Zero(), b = Vec2::Zero();  // face chart
    int entry = -1, exit = -1;                // halfedges of face crossed at a and b
    double entry_t = 0, exit_t = 0;           // parameter along those halfedges from their origin
    int entry_vertex = -1, exit_vertex = -1;  // passage through a vertex
    double length() const { return (b - a).norm(); }
};

struct VertexPassage {
    int vertex = -1;
    double arc_length = 0;
    double psi_back = 0, psi_out = 0;
};

struct GeodesicPath {
    std::vector<GeodesicStep> steps;
    std::vector<VertexPassage> passages;
    int start_face = -1;
    Vec2 start_point = Vec2::Zero();
    double start_angle = 0;
    int start_vertex = -1;  // separatrices start on a vertex
    double start_psi = 0;
    double length = 0;
    Terminal terminal = Terminal::Budget;
    int end_vertex = -1;  // singularity reached, or boundary vertex hit
    double end_psi = 0;   // fan angle at end_vertex pointing back along the path
    int end_halfedge = -1;  // boundary hit inside an edge: interior halfedge and parameter
    double end_t = 0;
};

struct TraceOptions {
    double max_length = 1;
    double stop_radius = 1e-6;
};

struct GeodesicStart {
    int face = -1;
    Vec2 point = Vec2::Zero();  // face chart
    double angle = 0;           // direction in the face chart
};

// Throws StartOnVertex.
GeodesicPath trace_geodesic(const FlatSurface& s, const GeodesicStart& start, const TraceOptions& opt);
// Same without the vertex check; used when starting on an edge or at a node.
GeodesicPath trace_from_point(const FlatSurface& s, const GeodesicStart& start, const TraceOptions& opt);
GeodesicPath trace_from_vertex(const FlatSurface& s, int v, double psi, const TraceOptions& opt);

// Point and forward direction at arc length t along a traced path.
struct PathPoint {
    int face = -1;
    Vec2 point = Vec2::Zero();
    Vec2 dir = Vec2::UnitX();
};
PathPoint point_along(const std::vector<GeodesicStep>& steps, double t);

struct Separatrix {
    int source = -1;
    int ray = -1;
    double psi = 0;
    GeodesicPath path;
    int target_ray = -1;  // ray index at the singularity reached, if any
};

// Fan angles of the cross-field rays at a singular vertex.
std::vector<double> separatrix_angles(const FlatSurface& s, const CrossField& cf, int v);

// Throws InfiniteSeparatrix.
std::vector<Separatrix> trace_separatrices(const FlatSurface& s, const SingularityPrescription& presc,
                                           const CrossField& cf, const TraceOptions& opt);

TraceOptions separatrix_defaults(const FlatSurface& s);  // 50·scale budget, 1e-4·scale radius

struct Alignment {
    CrossField field;
    double rotation = 0;  // added to every face angle
    int candidates = 0;
    bool finite = false;
};

// Closed surfaces only: rotate the cross field so that every separatrix is finite
// (or, without singularities, along the shortest period). Surfaces with boundary
// are returned unchanged.
Alignment align_cross_field(const FlatSurface& s, const SingularityPrescription& presc, const CrossField& cf,
                            const SlicedMesh& sliced, const DeformedImmersion& def, const TraceOptions& opt);

struct SkeletonNode {
    enum class Kind { Singularity, Foot, Crossing, Marker };
    Kind kind = Kind::Singularity;
    int vertex = -1;  // vertex nodes
    int face = -1;    // chart of the point and of the angles for in-face nodes
    Vec2 point = Vec2::Zero();
    int halfedge = -1;  // feet inside a boundary edge: interior halfedge, parameter
    double t = 0;
    bool boundary = false;
    double cone_angle = 0;
    std::vector<std::pair<double, int>> ends;  // (angle, half-arc leaving through it), sorted
};

struct SkeletonArc {
    int from = -1, to = -1;
    bool boundary = false;
    double length = 0;
    double angle_from = 0, angle_to = 0;
    std::vector<GeodesicStep> steps;
};

struct SkeletonPatch {
    std::vector<int> cycle;         // half-arcs 2a (forward) / 2a+1 (reverse), patch on the left
    std::vector<double> turn;       // angle between consecutive half-arcs
    std::array<int, 4> corner{};    // positions in cycle where each side starts
    std::array<std::vector<int>, 4> sides;
    double width = 0, height = 0;
};

struct Skeleton {
    std::vector<SkeletonNode> nodes;
    std::vector<SkeletonArc> arcs;
    std::vector<SkeletonPatch> patches;
    int euler_characteristic = 0;
    // closed singularity-free surfaces: one periodic patch spanned from a base point
    bool periodic = false;
    GeodesicStart base;
    double period_x = 0, period_y = 0;
};

// Throws NonRectangularPatch or OverlappingSeparatrices.
Skeleton build_skeleton(const FlatSurface& s, const std::vector<Separatrix>& seps, const CrossField& cf,
                        const SingularityPrescription& presc, double tol = 1e-6);

struct QuadMesh {
    std::vector<Vec3> positions;
    std::vector<std::vector<int>> faces;
    std::vector<SurfacePoint> anchors;  // on the traced (flipped) triangulation
    std::vector<int> valence;
    std::vector<int> singular_vertices;
    std::vector<int> node_vertex;  // quad vertex per skeleton node
};

// `original` carries the 3D positions; `flips` maps the traced triangulation back to it.
// Throws TooCoarse or QuantizationInfeasible.
QuadMesh quantize_and_subdivide(const Skeleton& sk, double h, const FlatSurface& s, const TriangleMesh& original,
                                const FlipLog& flips);

// Segment counts per arc after reconciliation.
std::vector<int> quantize_arcs(const Skeleton& sk, double h);

struct QualityReport {
    std::map<int, int> interior_census;  // valence → count
    std::map<int, int> boundary_census;
    double max_angle_deviation = 0;
    double edge_length_cv = 0;
    int index_sum = 0;
    int euler_characteristic = 0;
    int vertices = 0, faces = 0;
};

// Throws NonQuadFace.
QualityReport quad_quality(const QuadMesh& q);

std::string quad_to_obj(const QuadMesh& q);

}  // namespace metricquad
