#pragma once

#include <stdexcept>
#include <string>

namespace metricquad {

enum class ErrorKind {
    ParseError,
    NonManifold,
    NonTriangleFace,
    UnknownVertex,
    InvalidPrescription,
    DegenerateTriangle,
    DegenerateMetric,
    NonFlippable,
    GaussBonnetViolation,
    NoConvergence,
    DisconnectedMesh,
    InvalidCut,
    NotFlat,
    DegenerateSegment,
    NotAFacePath,
    SnapInfeasible,
    SingularSystem,
    Foldover,
    FoldoverPresent,
    CopyMismatch,
    StartOnVertex,
    InfiniteSeparatrix,
    NonRectangularPatch,
    OverlappingSeparatrices,
    QuantizationInfeasible,
    TooCoarse,
    NonQuadFace,
    InvalidConfig,
    StageFailed,
    BindError,
    SessionLimitExceeded,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace metricquad
