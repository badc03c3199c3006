#pragma once

#include <array>
#include <string>
#include <vector>

#include "drtk/linalg.hpp"

namespace drtk {

/// Exact algebraic scalar of the form a + b*sqrt(root) with a, b rational and
/// root a positive non-square integer. Arithmetic requires matching roots.
struct AlgNum {
    Rat a{0}, b{0};
    long root = 1;

    AlgNum() = default;
    AlgNum(Rat a_, Rat b_, long root_) : a(std::move(a_)), b(std::move(b_)), root(root_) {
        if (b == 0) root = 1; // canonical form so rationals compare equal
    }
    static AlgNum rational(Rat r) { return {std::move(r), Rat(0), 1}; }

    AlgNum operator-() const { return {-a, -b, root}; }
    bool operator==(const AlgNum& o) const = default;
};

AlgNum operator+(const AlgNum& x, const AlgNum& y);
AlgNum operator-(const AlgNum& x, const AlgNum& y);
AlgNum operator*(const AlgNum& x, const AlgNum& y);
double to_double(const AlgNum& x);
std::string to_string(const AlgNum& x);

/// Exact square root of a rational of the form c^2 * root, returned as c*sqrt(root).
AlgNum alg_sqrt(const Rat& square, long root);

/// Principal-curvature data of a hypersurface of the 16-dimensional rank-one
/// model space with curvature sign eps.
struct HypersurfaceData {
    int eps = 1;
    int n = 16;
    std::vector<double> lambda;            // 15 principal curvatures
    double H = 0;                          // mean curvature, sum of lambda
    double C = 0;                          // difference of the Einstein constants
    std::array<int, 4> p{0, 0, 0, 0};      // multiplicities of the block values
    std::array<double, 4> alpha{0, 0, 0, 0};
};

/// Max over i of |(-lambda_i^2 + H lambda_i + C) - e_i| where e_i is eps for
/// the first 7 curvatures and eps/4 for the remaining 8.
double gauss_einstein_residual(const HypersurfaceData& h);

struct MeanCurvatureSolution {
    double H;
    int q1, q2, q3, q4; // counts of the +/- radical branches in each block
};

/// All mean curvatures compatible with the two-block quadratic constraints:
/// for each (q1..q4) with q1+q2 = 7, q3+q4 = 8, solves
/// 13H = (q2-q1) sqrt(H^2+4C-4eps) + (q4-q3) sqrt(H^2+4C-eps) via the cleared
/// biquadratic and keeps only roots that survive back-substitution.
std::vector<MeanCurvatureSolution> enumerate_H(int eps, double C);

/// Reconstructs the 15 principal curvatures from an enumerate_H solution.
HypersurfaceData hypersurface_from_solution(int eps, double C, const MeanCurvatureSolution& s);

/// Block values for the multiplicity pattern (7, 0, 8, 0), exact. The system
/// alpha1 = 2 alpha3 + H, H = 7 alpha1 + 8 alpha3,
/// (alpha3 - alpha1)(alpha3 + alpha1 - H) = (3/4) eps has real solutions only
/// for eps = +1; sign_prime = +-1 selects the normal direction.
struct Case78Result {
    int eps;
    AlgNum alpha1, alpha3, H;
    Rat C;
};
Case78Result solve_case_78(int sign_prime);
/// Empty unless eps == +1.
std::vector<Case78Result> solve_case_78_branch(int eps, int sign_prime);

/// Block values for the multiplicity pattern (7, 0, 7, 1), exact, plus the
/// printed 3x3 matrix of the differentiated-Gauss linear system and its
/// determinant. printed_det is the value as published; det_q is the exact
/// recomputation from the printed entries. The two are reported side by side;
/// only det_q != 0 is asserted.
struct Case717Result {
    int eps;
    AlgNum alpha1, alpha3, alpha4, H;
    Rat C;
    RatMat printed_q;  // prefactor 1/(4*91)^3 times the factored entries
    Rat det_q;         // exact determinant of printed_q as a matrix
    Rat det_scaled;    // prefactor times the determinant of the bare entries
    Rat printed_det;   // the published value -39051/16562
    bool dets_agree;   // whether either recomputation matches the published value
};
Case717Result solve_case_717(int sign_prime);
std::vector<Case717Result> solve_case_717_branch(int eps, int sign_prime);

/// Coefficients of the differentiated Gauss equation
/// (li-lj)(li+lj-2lk-H) <nab_k X_i, X_j> + lk (lj-lk) <nab_i X_j, X_k>
///   + lk (lk-li) <nab_j X_k, X_i> = 0
/// in that slot order.
template <class T>
std::array<T, 3> difgauss_row(const T& li, const T& lj, const T& lk, const T& H) {
    return {(li - lj) * (li + lj - T(2) * lk - H), lk * (lj - lk), lk * (lk - li)};
}

/// Coefficients of the Codazzi relation
/// R(X_k, X_i, X_j, xi) = (li-lj) <nab_k X_i, X_j> - (lk-lj) <nab_i X_k, X_j>.
template <class T>
std::array<T, 2> codazzi_row(const T& li, const T& lj, const T& lk) {
    return {li - lj, -(lk - lj)};
}

/// 3x3 system for (u1, u2, u3) = (<nab_Z X, Y>, <nab_X Y, Z>, <nab_Y Z, X>)
/// with X, Y, Z in the blocks of alpha1, alpha3, alpha4: rows are the cyclic
/// substitutions (a1,a3,a4; X,Y,Z), (a4,a1,a3; Z,X,Y), (a3,a4,a1; Y,Z,X) of
/// the differentiated Gauss equation. Throws if the block values repeat.
template <class T>
Matrix<T> difgauss_system(const T& a1, const T& a3, const T& a4, const T& H) {
    if (a1 == a3 || a1 == a4 || a3 == a4)
        throw std::invalid_argument("difgauss_system: block values must be distinct");
    Matrix<T> m(3, 3);
    const auto r1 = difgauss_row(a1, a3, a4, H); // slots already (u1, u2, u3)
    const auto r2 = difgauss_row(a4, a1, a3, H); // slots (u3, u1, u2)
    const auto r3 = difgauss_row(a3, a4, a1, H); // slots (u2, u3, u1)
    for (int c = 0; c < 3; ++c) m(0, static_cast<std::size_t>(c)) = r1[static_cast<std::size_t>(c)];
    m(1, 0) = r2[1];
    m(1, 1) = r2[2];
    m(1, 2) = r2[0];
    m(2, 0) = r3[2];
    m(2, 1) = r3[0];
    m(2, 2) = r3[1];
    return m;
}

/// Geodesic sphere of radius r in the compact model: principal curvatures
/// cot r on the eigenvalue-1 block (multiplicity 7) and (1/2)cot(r/2) on the
/// eigenvalue-1/4 block (multiplicity 8).
struct SphereModel {
    double r;
    double cot_r() const;
    double half_cot_half_r() const;
    double mean_curvature() const; // 7 cot r + 4 cot(r/2)
    HypersurfaceData data() const;
};

/// Radius (as cot r0) at which the geodesic sphere is Einstein, found by
/// bisection of the Einstein condition on (0, pi).
double sphere_einstein_radius();

/// Jacobi-field coefficients along the normal geodesic of the Einstein
/// sphere: f1(r) = cos r + (5 sqrt 6 / 24) sin r on the multiplicity-7 block,
/// f2(r) = cos(r/2) - (sqrt 6 / 4) sin(r/2) on the multiplicity-8 block.
double focal_coeff_f1(double r);
double focal_coeff_f2(double r);

/// Rank of the normal exponential differential at radius r:
/// 7 [f1 != 0] + 8 [f2 != 0].
int normal_exp_rank(double r, double tol = 1e-9);

struct FocalScan {
    double r_focal;
    double f1_at, f2_at;
    int rank_at_focal;
};

/// Locates the common zero of f1 and f2 on a grid in (0, pi); throws if the
/// two zeros do not coincide or none is bracketed.
FocalScan jacobi_focal_scan(const std::vector<double>& grid);

} // namespace drtk
