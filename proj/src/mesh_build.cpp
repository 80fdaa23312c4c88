#include "dmc/mesh_build.hpp"

#include "dmc/errors.hpp"

#include <cmath>

namespace dmc {

Immersion build_mesh(const Eigen::MatrixXd& positions, const Eigen::MatrixXi& triangles,
                     const std::string& name) {
    Immersion imm;
    imm.ambient = AmbientSpace::flat(static_cast<int>(positions.cols()));
    imm.name = name;
    imm.positions = positions;
    imm.triangles = triangles;
    imm.finalize_connectivity();
    imm.compute_intrinsic_metric();
    imm.compute_mixed_dual_areas();
    imm.curvature = mean_curvature_mesh(imm);
    return imm;
}

MeanCurvatureField mean_curvature_mesh(const Immersion& mesh) {
    if (mesh.ambient.kind() != AmbientSpace::Kind::Flat)
        throw Error(ErrorCode::InvalidArgument,
                    "cotangent mean curvature needs a flat ambient space");
    const int V = mesh.num_vertices();
    const int F = mesh.num_triangles();
    const int dim = static_cast<int>(mesh.positions.cols());

    Eigen::MatrixXd accum = Eigen::MatrixXd::Zero(V, dim);
    for (int f = 0; f < F; ++f) {
        const int i0 = mesh.triangles(f, 0);
        const int i1 = mesh.triangles(f, 1);
        const int i2 = mesh.triangles(f, 2);
        const int idx[3] = {i0, i1, i2};
        for (int j = 0; j < 3; ++j) {
            // corner j contributes cot(angle at j) to the opposite edge
            const int a = idx[(j + 1) % 3];
            const int b = idx[(j + 2) % 3];
            const Eigen::VectorXd u = mesh.positions.row(idx[j]).transpose();
            const Eigen::VectorXd pa = mesh.positions.row(a).transpose();
            const Eigen::VectorXd pb = mesh.positions.row(b).transpose();
            const Eigen::VectorXd e1 = pa - u;
            const Eigen::VectorXd e2 = pb - u;
            const double dot = e1.dot(e2);
            const double cross2 = e1.squaredNorm() * e2.squaredNorm() - dot * dot;
            const double cot = dot / std::sqrt(std::max(cross2, 1e-300));
            accum.row(a) += 0.5 * cot * (pa - pb).transpose();
            accum.row(b) += 0.5 * cot * (pb - pa).transpose();
        }
    }

    MeanCurvatureField field;
    field.tag = Convention::Trace;
    field.vectors.resize(V, dim);
    field.magnitude.resize(V);
    for (int v = 0; v < V; ++v) {
        field.vectors.row(v) = accum.row(v) / mesh.dual_area[v];
        field.magnitude[v] = field.vectors.row(v).norm();
    }
    return field;
}

} // namespace dmc
