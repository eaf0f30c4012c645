#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace metricquad {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;

// Halfedge triangle mesh. Boundary halfedges carry face -1 and are linked
// into loops by next/prev. Faces keep their ids across flips.
class TriangleMesh {
public:
    TriangleMesh() = default;

    // Throws NonManifold on bad connectivity.
    static TriangleMesh from_faces(int num_vertices,
                                   const std::vector<std::array<int, 3>>& faces,
                                   std::vector<Vec3> positions = {});
    // Explicit gluing: adj[f][j] = 3g+k names the twin slot of the edge from
    // corner j to j+1 of face f, or -1 on the boundary. Allows multi-edges.
    static TriangleMesh from_gluing(int num_vertices,
                                    const std::vector<std::array<int, 3>>& faces,
                                    const std::vector<std::array<int, 3>>& adj,
                                    std::vector<Vec3> positions = {});

    int num_vertices() const { return nv_; }
    int num_edges() const { return static_cast<int>(edge_he_.size()); }
    int num_faces() const { return static_cast<int>(face_he_.size()); }
    int num_halfedges() const { return static_cast<int>(next_.size()); }

    int next(int h) const { return next_[h]; }
    int prev(int h) const { return prev_[h]; }
    int twin(int h) const { return h ^ 1; }
    int origin(int h) const { return origin_[h]; }
    int tip(int h) const { return origin_[h ^ 1]; }
    int face(int h) const { return face_[h]; }
    int edge(int h) const { return h >> 1; }
    bool is_boundary_halfedge(int h) const { return face_[h] < 0; }

    int face_halfedge(int f) const { return face_he_[f]; }
    int edge_halfedge(int e) const;  // the side with a face
    // For boundary vertices: the outgoing halfedge whose twin is a boundary halfedge.
    int vertex_halfedge(int v) const { return vertex_he_[v]; }

    bool is_boundary_edge(int e) const { return face_[2 * e] < 0 || face_[2 * e + 1] < 0; }
    bool is_boundary_vertex(int v) const { return face_[twin(vertex_he_[v])] < 0; }

    std::array<int, 3> face_halfedges(int f) const;
    std::array<int, 3> face_vertices(int f) const;
    // position of h in face_halfedges(face(h))
    int corner_index(int h) const;

    // Outgoing halfedges of v that carry a face, counterclockwise. For a
    // boundary vertex the list starts at the boundary edge with the domain
    // on its left.
    std::vector<int> outgoing(int v) const;

    bool has_positions() const { return !positions_.empty(); }
    const std::vector<Vec3>& positions() const { return positions_; }
    const Vec3& position(int v) const { return positions_[v]; }

    std::vector<std::array<int, 3>> faces() const;

    // Combinatorial flip of an interior edge. Returns false if the edge is a
    // boundary edge or both sides are the same face.
    bool flip(int e);

private:
    int nv_ = 0;
    std::vector<int> next_, prev_, origin_, face_;
    std::vector<int> face_he_, vertex_he_, edge_he_;
    std::vector<Vec3> positions_;
};

struct TopologyReport {
    int vertices = 0, edges = 0, faces = 0;
    int euler_characteristic = 0;
    int genus = 0;
    int components = 0;
    std::vector<std::vector<int>> boundary_loops;  // vertex cycles along boundary halfedges
};

TopologyReport topology_report(const TriangleMesh& mesh);

enum class MeshFormat { OFF, OBJ };

TriangleMesh load_mesh(std::string_view bytes, MeshFormat format);
TriangleMesh load_mesh_file(const std::string& path);
MeshFormat format_from_path(const std::string& path);

std::string to_off(const TriangleMesh& mesh);
// OBJ with per-corner texture coordinates (vt), faces "f v/vt".
std::string to_obj_with_uv(const std::vector<Vec3>& positions,
                           const std::vector<std::array<int, 3>>& faces,
                           const std::vector<std::array<Vec2, 3>>& corner_uv);

struct SingularityEntry {
    int vertex = 0;
    int index = 0;
    bool operator==(const SingularityEntry&) const = default;
};

struct SingularityPrescription {
    std::vector<SingularityEntry> entries;
    int index_at(int v) const;  // 0 if not listed
    bool contains(int v) const;
};

struct PrescriptionCheck {
    bool ok = false;
    int residual = 0;  // Σk − 4χ, units of π/2
};

// Throws UnknownVertex, or InvalidPrescription for duplicates and target valence < 1.
PrescriptionCheck validate_prescription(const TriangleMesh& mesh,
                                        const SingularityPrescription& presc);

}  // namespace metricquad
