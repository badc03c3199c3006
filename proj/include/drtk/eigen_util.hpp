#pragma once

#include <Eigen/Dense>

#include "drtk/linalg.hpp"

namespace drtk {

inline Eigen::MatrixXd to_eigen(const DMat& m) {
    Eigen::MatrixXd r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

inline DMat from_eigen(const Eigen::MatrixXd& m) {
    DMat r(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

/// Ascending eigenvalues of a symmetric matrix.
inline std::vector<double> sym_eigenvalues(const DMat& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(m), Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    return ev;
}

inline std::size_t numeric_rank(const DMat& m, double tol = 1e-10) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m));
    std::size_t r = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > tol) ++r;
    return r;
}

/// Real roots of a cubic x^3 + a2 x^2 + a1 x + a0, via the companion matrix.
inline std::vector<double> cubic_real_roots(double a2, double a1, double a0, double imag_tol = 1e-9) {
    Eigen::Matrix3d c = Eigen::Matrix3d::Zero();
    c(0, 2) = -a0;
    c(1, 0) = 1.0;
    c(1, 2) = -a1;
    c(2, 1) = 1.0;
    c(2, 2) = -a2;
    Eigen::EigenSolver<Eigen::Matrix3d> es(c);
    std::vector<double> roots;
    for (int i = 0; i < 3; ++i) {
        auto z = es.eigenvalues()(i);
        if (std::abs(z.imag()) < imag_tol * (1.0 + std::abs(z.real()))) roots.push_back(z.real());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace drtk
