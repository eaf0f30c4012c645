#pragma once

#include <vector>

#include "metricquad/mesh.hpp"
#include "metricquad/metric.hpp"

namespace metricquad {

struct RicciReport {
    int iterations = 0;
    double max_error = 0;        // max |K̄ − K|, radians
    std::vector<double> energy;  // convex energy after each accepted step, starts at 0
    std::vector<double> residuals;
    long flips = 0;
};

struct RicciResult {
    TriangleMesh mesh;  // intrinsically flipped
    ConeMetric metric;
    RicciReport report;
    FlipLog flips;
    CurvatureField target;
};

CurvatureField target_curvature(const TriangleMesh& mesh, const SingularityPrescription& presc);

struct EnergyGradient {
    double energy = 0;
    std::vector<double> gradient;  // K̄ − K
};

// E(u) = ∫_0^u Σ(K̄_i − K_i) du_i on the triangulation of `mesh`, with
// l_ij = e^{u_i} β_ij e^{u_j} taken from metric0.beta.
EnergyGradient ricci_energy_gradient(const TriangleMesh& mesh, const ConeMetric& metric0,
                                     const CurvatureField& target, const std::vector<double>& u);

RicciResult ricci_flow(const TriangleMesh& mesh, const ConeMetric& metric0, const SingularityPrescription& presc,
                       double tol = 1e-10, int max_iter = 50);

}  // namespace metricquad
