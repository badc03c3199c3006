#include "drtk/two_stein.hpp"

#include <cmath>

#include "drtk/cayley.hpp"
#include "drtk/eigen_util.hpp"
#include "drtk/rng.hpp"

namespace drtk {

TwoSteinFrame::TwoSteinFrame(CurvatureEvaluator curv, std::vector<std::vector<double>> basis,
                             DMat sh, double c1, double c2, double ct1, double ct2)
    : curv_(std::move(curv)),
      basis_(std::move(basis)),
      sh_(std::move(sh)),
      c1_(c1),
      c2_(c2),
      ct1_(ct1),
      ct2_(ct2) {
    const std::size_t n = basis_.size();
    if (n < 2) throw std::invalid_argument("TwoSteinFrame: need ambient dimension >= 2");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (std::abs(dot(basis_[i], basis_[j]) - (i == j ? 1.0 : 0.0)) > 1e-10)
                throw std::invalid_argument("TwoSteinFrame: basis is not orthonormal");
    if (sh_.rows() != n - 1 || sh_.cols() != n - 1)
        throw std::invalid_argument("TwoSteinFrame: shape operator has wrong size");
    for (std::size_t i = 0; i < n - 1; ++i)
        for (std::size_t j = i + 1; j < n - 1; ++j)
            if (std::abs(sh_(i, j) - sh_(j, i)) > 1e-10)
                throw std::invalid_argument("TwoSteinFrame: shape operator is not symmetric");
    b_ = DMat(n - 1, n - 1);
    for (std::size_t i = 0; i < n - 1; ++i)
        for (std::size_t j = 0; j < n - 1; ++j)
            b_(i, j) = curv_(basis_[i], basis_[n - 1], basis_[n - 1], basis_[j]);
    for (std::size_t i = 0; i < n - 1; ++i)
        for (std::size_t j = i + 1; j < n - 1; ++j)
            if (std::abs(b_(i, j) - b_(j, i)) > 1e-9)
                throw std::invalid_argument("TwoSteinFrame: normal Jacobi operator not symmetric");
}

std::vector<double> TwoSteinFrame::embed(const std::vector<double>& coeffs) const {
    if (coeffs.size() != basis_.size() && coeffs.size() != basis_.size() - 1)
        throw std::invalid_argument("TwoSteinFrame: coefficient vector has wrong length");
    std::vector<double> v(basis_.front().size(), 0.0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) v = axpy(coeffs[i], basis_[i], v);
    return v;
}

double TwoSteinFrame::curv_frame(const std::vector<double>& a, const std::vector<double>& b,
                                 const std::vector<double>& c,
                                 const std::vector<double>& d) const {
    return curv_(embed(a), embed(b), embed(c), embed(d));
}

double TwoSteinFrame::induced_curv(const std::vector<double>& a, const std::vector<double>& b,
                                   const std::vector<double>& c,
                                   const std::vector<double>& d) const {
    const auto sa = sh_.apply(a), sb = sh_.apply(b);
    return curv_(embed(a), embed(b), embed(c), embed(d)) - dot(sa, c) * dot(sb, d) +
           dot(sb, c) * dot(sa, d);
}

DMat TwoSteinFrame::induced_jacobi(const std::vector<double>& x) const {
    const std::size_t m = n() - 1;
    if (x.size() != m) throw std::invalid_argument("induced_jacobi: tangent vector expected");
    DMat r(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            std::vector<double> ei(m, 0.0), ej(m, 0.0);
            ei[i] = 1.0;
            ej[j] = 1.0;
            r(i, j) = r(j, i) = induced_curv(ei, x, x, ej);
        }
    return r;
}

TwoSteinFrame space_form_frame(std::size_t n, double rho, DMat sh) {
    auto curv = [rho](const std::vector<double>& a, const std::vector<double>& b,
                      const std::vector<double>& c, const std::vector<double>& d) {
        return rho * (dot(b, c) * dot(a, d) - dot(a, c) * dot(b, d));
    };
    std::vector<std::vector<double>> basis;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        basis.push_back(std::move(e));
    }
    const double ct1 = (static_cast<double>(n) - 1) * rho;
    const double ct2 = (static_cast<double>(n) - 1) * rho * rho;
    // Jacobi trace constants of the hypersurface, measured from the induced
    // curvature at a few directions.
    TwoSteinFrame probe(curv, basis, sh, 0, 0, ct1, ct2);
    double c1 = 0, c2 = 0;
    {
        SampleRng rng(2, 0);
        const auto x = rng.unit_vector(n - 1);
        const auto j = probe.induced_jacobi(x);
        c1 = j.trace();
        c2 = (j * j).trace();
    }
    return TwoSteinFrame(curv, std::move(basis), std::move(sh), c1, c2, ct1, ct2);
}

TwoSteinFrame cayley_sphere_frame() {
    auto curv = [](const std::vector<double>& a, const std::vector<double>& b,
                   const std::vector<double>& c, const std::vector<double>& d) {
        return dot(cayley_flatten(cayley_curvature(cayley_unflatten(a, 1), cayley_unflatten(b, 1),
                                                   cayley_unflatten(c, 1))),
                   d);
    };
    // Tangent basis: the eigenvalue-1 block (e_i, 0), i = 1..7, then the
    // eigenvalue-1/4 block (0, e_j), j = 0..7; the normal (1, 0) comes last.
    std::vector<std::vector<double>> basis;
    for (std::size_t i = 1; i < 8; ++i) {
        std::vector<double> e(16, 0.0);
        e[i] = 1.0;
        basis.push_back(std::move(e));
    }
    for (std::size_t i = 8; i < 16; ++i) {
        std::vector<double> e(16, 0.0);
        e[i] = 1.0;
        basis.push_back(std::move(e));
    }
    std::vector<double> xi(16, 0.0);
    xi[0] = 1.0;
    basis.push_back(std::move(xi));

    // Principal curvatures of the Einstein sphere: cot r0 on the first block,
    // (1/2) cot(r0 / 2) on the second.
    const double a1 = -5.0 * std::sqrt(6.0) / 24.0;
    const double a3 = std::sqrt(6.0) / 8.0;
    DMat sh(15, 15);
    for (std::size_t i = 0; i < 7; ++i) sh(i, i) = a1;
    for (std::size_t i = 7; i < 15; ++i) sh(i, i) = a3;

    const double ct1 = 7.0 + 8.0 * 0.25;          // eigenvalues 1 x7 and 1/4 x8
    const double ct2 = 7.0 + 8.0 * 0.25 * 0.25;   // their squares
    TwoSteinFrame probe(curv, basis, sh, 0, 0, ct1, ct2);
    SampleRng rng(3, 0);
    const auto x = rng.unit_vector(15);
    const auto j = probe.induced_jacobi(x);
    return TwoSteinFrame(curv, std::move(basis), std::move(sh), j.trace(), (j * j).trace(), ct1,
                         ct2);
}

namespace {

/// M(t) = M0 + t M1 + t^2 M2 with M(t)_ab = R(X_a, X + t X_n, X + t X_n, X_b)
/// over the full ambient frame.
std::array<DMat, 3> jacobi_blocks(const TwoSteinFrame& fr, const std::vector<double>& x) {
    const std::size_t n = fr.n();
    if (x.size() != n - 1)
        throw std::invalid_argument("jacobi_t_expansion: tangent vector of length n-1 expected");
    std::vector<double> xf(n, 0.0);
    for (std::size_t i = 0; i < n - 1; ++i) xf[i] = x[i];
    std::vector<double> nf(n, 0.0);
    nf[n - 1] = 1.0;

    std::array<DMat, 3> m{DMat(n, n), DMat(n, n), DMat(n, n)};
    std::vector<double> ea(n, 0.0), eb(n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        ea.assign(n, 0.0);
        ea[a] = 1.0;
        for (std::size_t b = 0; b < n; ++b) {
            eb.assign(n, 0.0);
            eb[b] = 1.0;
            m[0](a, b) = fr.curv_frame(ea, xf, xf, eb);
            m[1](a, b) = fr.curv_frame(ea, xf, nf, eb) + fr.curv_frame(ea, nf, xf, eb);
            m[2](a, b) = fr.curv_frame(ea, nf, nf, eb);
        }
    }
    return m;
}

} // namespace

std::vector<double> jacobi_t_expansion(const TwoSteinFrame& fr, const std::vector<double>& x,
                                       int degree) {
    const auto m = jacobi_blocks(fr, x);
    if (degree == 1) return {m[0].trace(), m[1].trace(), m[2].trace()};
    if (degree == 2)
        return {(m[0] * m[0]).trace(), 2.0 * (m[0] * m[1]).trace(),
                (m[1] * m[1]).trace() + 2.0 * (m[0] * m[2]).trace(), 2.0 * (m[1] * m[2]).trace(),
                (m[2] * m[2]).trace()};
    throw std::invalid_argument("jacobi_t_expansion: degree must be 1 or 2");
}

std::array<double, 8> coefficient_identity_residuals(const TwoSteinFrame& fr,
                                                     const std::vector<double>& x) {
    const double x2 = norm2(x);
    const auto d1 = jacobi_t_expansion(fr, x, 1);
    const auto d2 = jacobi_t_expansion(fr, x, 2);
    return {
        d1[2] - fr.ct1(),                    // t^2: Tr B = ct1
        d1[1],                               // t^1: mixed trace vanishes
        d1[0] - fr.ct1() * x2,               // t^0: Tr R_X^~ = ct1 |X|^2
        d2[4] - fr.ct2(),                    // t^4: Tr B^2 = ct2
        d2[3],                               // t^3
        d2[2] - 2.0 * fr.ct2() * x2,         // t^2
        d2[1],                               // t^1
        d2[0] - fr.ct2() * x2 * x2,          // t^0
    };
}

Eine3Residual eine3_residual(const TwoSteinFrame& fr) {
    const std::size_t m = fr.n() - 1;
    const auto& sh = fr.sh();
    const double tr_sh = sh.trace();
    DMat lhs = fr.b() + sh * sh - tr_sh * sh;
    const double shift = fr.ct1() - fr.c1();
    for (std::size_t i = 0; i < m; ++i) lhs(i, i) -= shift;
    double worst = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) worst = std::max(worst, std::abs(lhs(i, j)));
    const double nn = static_cast<double>(fr.n());
    const double traced = (nn - 1) * fr.c1() - (nn - 2) * fr.ct1() -
                          (tr_sh * tr_sh - (sh * sh).trace());
    return {worst, std::abs(traced)};
}

RankShVerdict rank_sh_conclusion(const TwoSteinFrame& fr, double rho, double tol) {
    const std::size_t m = fr.n() - 1;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (std::abs(fr.b()(i, j) - (i == j ? rho : 0.0)) > tol)
                throw std::invalid_argument("rank_sh_conclusion: ambient is not constant curvature");
    if (std::abs(fr.c1() - (static_cast<double>(fr.n()) - 2) * rho) > tol)
        throw std::invalid_argument("rank_sh_conclusion: c1 != (n-2) rho");
    const auto& sh = fr.sh();
    const DMat gap = sh * sh - sh.trace() * sh;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (std::abs(gap(i, j)) > tol)
                throw std::invalid_argument("rank_sh_conclusion: Sh^2 != (Tr Sh) Sh");
    const int rank = static_cast<int>(numeric_rank(sh));
    if (rank > 1) throw std::logic_error("rank_sh_conclusion: rank exceeds 1 despite constraints");
    return {rank, fr.c1()};
}

bool cauchy_schwarz_constant_curvature(double ct1, double ct2, std::size_t n, double tol) {
    return std::abs(ct2 * (static_cast<double>(n) - 1) - ct1 * ct1) <= tol;
}

} // namespace drtk
