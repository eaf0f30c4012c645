#pragma once

#include <string>

#include <json.hpp>

#include "metricquad/cut.hpp"
#include "metricquad/geodesic.hpp"
#include "metricquad/mesh.hpp"
#include "metricquad/ricci.hpp"
#include "metricquad/seamless.hpp"

namespace metricquad {

using json = nlohmann::json;

// [{"vertex": v, "index": k}, ...]; throws InvalidConfig on malformed input.
SingularityPrescription prescription_from_json(const json& j);
json to_json(const SingularityPrescription& p);

json to_json(const TopologyReport& r);
json mesh_geometry_json(const TriangleMesh& mesh);  // flat positions / indices for viewers
json to_json(const ConeMetric& m);
json to_json(const RicciReport& r);
json to_json(const TriangleMesh& mesh, const CutGraph& cut);
json to_json(const std::vector<SegmentPairing>& pairs);
json to_json(const HolonomySignature& sig, const HolonomyCheck& check);
json to_json(const DeformedImmersion& def);

// Per-face cross directions on the input surface: face centroid and one arm in 3D.
json cross_field_json(const FlatSurface& s, const CrossField& cf, const TriangleMesh& original, const FlipLog& flips);
json separatrices_json(const FlatSurface& s, const std::vector<Separatrix>& seps, const TriangleMesh& original,
                       const FlipLog& flips);
json skeleton_json(const FlatSurface& s, const Skeleton& sk, const TriangleMesh& original, const FlipLog& flips);
json to_json(const QualityReport& r);

const char* generator_kind_name(GeneratorKind k);

}  // namespace metricquad
