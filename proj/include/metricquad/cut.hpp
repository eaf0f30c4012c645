#pragma once

#include <array>
#include <vector>

#include "metricquad/mesh.hpp"

namespace metricquad {

struct CutSegment {
    // Halfedge chain in M between two nodes. Boundary segments run along the
    // interior halfedges of boundary edges.
    std::vector<int> halfedges;
    bool boundary = false;  // original boundary (tau) vs cut (gamma)
    int start = -1, end = -1;  // node vertices
};

struct CutGraph {
    std::vector<char> in_cut;   // per edge of M; boundary edges included
    std::vector<int> valence;   // L-valence per vertex
    std::vector<int> nodes;
    std::vector<CutSegment> segments;
    // edges of the path joining each prescribed singularity to the rest of L,
    // in prescription order (empty when it already lay on L)
    std::vector<std::vector<int>> singular_paths;
    int tree_complement_edges = 0;  // |G| after pruning

    int num_cut_edges() const;
    int num_interior_cut_edges(const TriangleMesh& mesh) const;
};

// Dual BFS tree from face 0, pruned complement, plus one shortest-path forest
// joining singularities to G ∪ ∂M. Throws DisconnectedMesh.
CutGraph build_cut_graph(const TriangleMesh& mesh, const std::vector<double>& lengths,
                         const SingularityPrescription& presc);

struct SlicedMesh {
    TriangleMesh mesh;               // the disk; face ids shared with M
    std::vector<int> vertex_origin;  // projection to M
    std::vector<int> edge_origin;
    std::vector<double> lengths;     // per edge of the disk
    // copy of (face, corner) of M, i.e. the disk vertex at that corner
    int corner_vertex(int f, int corner) const { return mesh.face_vertices(f)[corner]; }
};

// Throws InvalidCut when the result is not a disk.
SlicedMesh slice_along(const TriangleMesh& mesh, const std::vector<double>& lengths, const CutGraph& cut);

struct SlicedImmersion {
    std::vector<std::array<Vec2, 3>> corner;  // per face, face_halfedges order
    std::vector<Vec2> vertex;                 // per disk vertex
    double bbox_diagonal = 0;
};

// BFS layout from face 0 with its longest edge on +x. Throws NotFlat.
SlicedImmersion immerse(const SlicedMesh& sliced, double flat_tol = 1e-6);

struct SegmentPairing {
    int segment = -1;
    std::vector<int> plus, minus;        // disk vertices, matched pointwise
    std::vector<Vec2> plus_pts, minus_pts;
    double rotation = 0;                 // (−π, π]
    Vec2 translation = Vec2::Zero();
    double residual = 0;
};

// Rigid motion taking the left copy of every cut segment onto the right copy.
// Throws DegenerateSegment.
std::vector<SegmentPairing> segment_pairings(const TriangleMesh& mesh, const SlicedMesh& sliced,
                                             const SlicedImmersion& imm, const CutGraph& cut);

// Disk vertex at the corner of face(h) at origin(h), and at tip(h).
int corner_copy_at_origin(const TriangleMesh& mesh, const SlicedMesh& sliced, int h);
int corner_copy_at_tip(const TriangleMesh& mesh, const SlicedMesh& sliced, int h);

double wrap_angle(double a);  // to (−π, π]

}  // namespace metricquad
