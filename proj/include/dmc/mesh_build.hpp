#pragma once

#include "dmc/immersion.hpp"

namespace dmc {

/// Validates and assembles a closed triangle mesh immersed in flat space.
/// Throws dmc::Error with OPEN_BOUNDARY / NON_MANIFOLD_EDGE /
/// NON_ORIENTABLE / DISCONNECTED / DEGENERATE_TRIANGLE codes.
/// The mean curvature field is computed by mean_curvature_mesh.
Immersion build_mesh(const Eigen::MatrixXd& positions, const Eigen::MatrixXi& triangles,
                     const std::string& name = "mesh");

/// Cotangent-Laplacian mean curvature: per vertex,
///   H_i = (1/(2 A_i)) sum_j (cot a_ij + cot b_ij) (x_i - x_j),
/// which converges to (k1 + k2) n on smooth surfaces (Trace convention).
MeanCurvatureField mean_curvature_mesh(const Immersion& mesh);

} // namespace dmc
