#pragma once

#include <vector>

#include "metricquad/cut.hpp"
#include "metricquad/metric.hpp"

namespace metricquad {

// Rotation acquired by a vector carried across the halfedges h_i, each taking
// face(h_i) to face(twin(h_i)). The crossings must form a closed face loop.
double holonomy_of_crossings(const TriangleMesh& mesh, const std::vector<double>& lengths,
                             const std::vector<int>& crossings);
// Same, reading each face in the given per-face planar image instead.
double holonomy_of_crossings(const TriangleMesh& mesh, const std::vector<std::array<Vec2, 3>>& corners,
                             const std::vector<int>& crossings);

// Face loop σ_0 … σ_{n−1} (closing step σ_{n−1} → σ_0 implied; a repeated σ_0 at
// the end is accepted). Throws NotAFacePath.
double holonomy_of_loop(const TriangleMesh& mesh, const std::vector<double>& lengths, const std::vector<int>& faces);

// Closed crossing loops for the generators
std::vector<int> vertex_loop(const TriangleMesh& mesh, int v);                      // counterclockwise
std::vector<int> boundary_loop(const TriangleMesh& mesh, int boundary_halfedge);  // inside fans, boundary order
std::vector<int> segment_loop(const TriangleMesh& mesh, const CutGraph& cut, int segment);
std::vector<int> crossings_to_faces(const TriangleMesh& mesh, const std::vector<int>& crossings);

enum class GeneratorKind { CutSegment, Singularity, Boundary };

struct HolonomyGenerator {
    GeneratorKind kind = GeneratorKind::CutSegment;
    int id = -1;  // segment index, vertex, or boundary loop index
    std::vector<int> crossings;
    double angle = 0;     // (−π, π]
    double distance = 0;  // to the nearest multiple of π/2
};

struct HolonomySignature {
    std::vector<HolonomyGenerator> generators;
};

double quarter_turn_distance(double angle);

HolonomySignature holonomy_signature(const TriangleMesh& mesh, const std::vector<double>& lengths,
                                     const CutGraph& cut, const SingularityPrescription& presc);

struct HolonomyCheck {
    bool pass = true;
    std::vector<char> generator_pass;
    double worst = 0;
};

struct DeformedImmersion;
// Generators read in the deformed image charts (valid with foldovers present).
HolonomySignature holonomy_signature(const TriangleMesh& mesh, const DeformedImmersion& def, const CutGraph& cut,
                                     const SingularityPrescription& presc);

HolonomyCheck check_holonomy_condition(const HolonomySignature& sig, double tol_snap);

struct DeformedImmersion {
    std::vector<Vec2> vertex;                 // per disk vertex
    std::vector<std::array<Vec2, 3>> corner;  // per face
    std::vector<int> pairing_k;               // quarter turns per pairing
    std::vector<Vec2> pairing_translation;
    std::vector<double> pairing_residual;
    std::vector<int> tau_segment;  // cut segment index of each boundary segment
    std::vector<char> tau_vertical;
    std::vector<double> tau_value;
    std::vector<double> tau_residual;
    std::vector<std::vector<int>> tau_vertices;  // disk vertices per boundary segment
    std::vector<int> foldovers;  // faces with non-positive image area
    double prerotation = 0;
    double bbox_diagonal = 0;
    double energy = 0;
};

// Throws SnapInfeasible or SingularSystem. Foldovers are listed, not thrown.
DeformedImmersion snap_and_solve(const TriangleMesh& mesh, const SlicedMesh& sliced, const SlicedImmersion& imm,
                                 const std::vector<SegmentPairing>& pairings, const CutGraph& cut,
                                 double tol_snap = 0.35);

// Throws FoldoverPresent or CopyMismatch.
ConeMetric induced_metric(const TriangleMesh& mesh, const SlicedMesh& sliced, const DeformedImmersion& def);

struct CrossField {
    std::vector<double> angle;  // per face of M, in its face_chart, [0, π/2)
};

CrossField build_cross_field(const TriangleMesh& mesh, const DeformedImmersion& def);

// Chart transfer of a direction across halfedge h: angle in face(h) → angle in face(twin(h)).
double transfer_angle(const TriangleMesh& mesh, const std::vector<double>& lengths, int h, double angle);

}  // namespace metricquad
