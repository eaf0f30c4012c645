#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "metricquad/error.hpp"
#include "metricquad/geodesic.hpp"
#include "metricquad/json_io.hpp"
#include "metricquad/ricci.hpp"

namespace metricquad {

inline constexpr std::array<const char*, 6> kStages = {"topology", "ricci", "cut", "deform", "separatrices", "quad"};
int stage_index(const std::string& name);  // throws InvalidConfig

struct PipelineConfig {
    std::string model = "mesh";
    std::string mesh_path;
    std::optional<MeshFormat> mesh_format;
    SingularityPrescription prescription;
    double ricci_tolerance = 1e-10;
    double snap_tolerance = 0.35;
    double h = 0.02;
    bool h_relative = true;  // h times the bounding-box diagonal of the flat image
    std::string output_dir;
    std::string through = "quad";

    // Relative paths resolve against base_dir. Throws InvalidConfig.
    static PipelineConfig from_json(const json& j, const std::string& base_dir = ".");
    void validate() const;
};

PipelineConfig load_config(const std::string& path);

std::string sha256_hex(const std::string& bytes);

// Stage failure: the stage name plus the underlying error kind and details.
class StageError : public Error {
public:
    StageError(std::string stage, ErrorKind cause, const std::string& what, json detail = json::object())
        : Error(ErrorKind::StageFailed, stage + ": " + what), stage_(std::move(stage)), cause_(cause),
          detail_(std::move(detail)) {}
    const std::string& stage() const { return stage_; }
    ErrorKind cause() const { return cause_; }
    const json& detail() const { return detail_; }

private:
    std::string stage_;
    ErrorKind cause_;
    json detail_;
};

struct StageRecord {
    std::string name;
    std::string key;  // content hash of inputs and parameters
    bool cached = false;
    double ms = 0;
    json checks = json::object();
    std::vector<std::string> artifacts;
};

struct PipelineArtifacts {
    std::map<std::string, std::string> files;  // name → bytes
    std::vector<StageRecord> stages;
    std::optional<json> failure;  // {stage, error, message, detail}

    // Keys and content hashes only; identical for identical inputs.
    json manifest() const;
    // Manifest plus timings and checks.
    json report(const std::string& model, int vertices, int singularities) const;
};

// One mesh, one mutable prescription and parameter set, and the cached state of
// every stage. Not thread-safe; callers serialize.
class Pipeline {
public:
    Pipeline();
    ~Pipeline();
    Pipeline(Pipeline&&) noexcept;
    Pipeline& operator=(Pipeline&&) noexcept;

    void set_mesh(TriangleMesh mesh);
    bool has_mesh() const;
    const TriangleMesh& mesh() const;

    // Runs stages up to and including `through`, reusing cached stages whose key
    // is unchanged. Failures are recorded in the result; nothing is thrown for
    // stage errors.
    PipelineArtifacts run(const PipelineConfig& cfg, const std::string& through);

    // Cut-graph holonomy of the flat metric before deformation (runs through "cut").
    json check_holonomy(const PipelineConfig& cfg);

    struct State;

private:
    std::unique_ptr<State> st_;
};

// Writes each artifact atomically (temporary file + rename); creates the directory.
void write_artifacts(const std::string& dir, const std::map<std::string, std::string>& files);
void write_file_atomic(const std::string& path, const std::string& bytes);

TriangleMesh load_config_mesh(const PipelineConfig& cfg);

// Load the mesh named by the config and run it.
PipelineArtifacts run_pipeline(const PipelineConfig& cfg);

}  // namespace metricquad
