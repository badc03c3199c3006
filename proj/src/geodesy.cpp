#include "drtk/geodesy.hpp"

#include <algorithm>
#include <cmath>

namespace drtk {
namespace {

std::vector<double> project_off(const std::vector<std::vector<double>>& onb,
                                std::vector<double> v) {
    for (const auto& b : onb) v = axpy(-dot(v, b), b, v);
    return v;
}

/// Deterministic Gram-Schmidt over flat vectors; drops near-zero remainders.
std::vector<std::vector<double>> orthonormalize(const std::vector<std::vector<double>>& vs,
                                                double drop_tol) {
    std::vector<std::vector<double>> onb;
    for (auto v : vs) {
        v = project_off(onb, std::move(v));
        v = project_off(onb, std::move(v)); // second pass for stability
        const double n = std::sqrt(norm2(v));
        if (n < drop_tol) continue;
        onb.push_back((1.0 / n) * v);
    }
    return onb;
}

} // namespace

Subspace::Subspace(const DRSpace& sp, const std::vector<TangentVec<double>>& spanning,
                   double drop_tol)
    : sp_(sp) {
    std::vector<std::vector<double>> flat;
    for (const auto& t : spanning) flat.push_back(sp.flatten(t));
    auto onb = orthonormalize(flat, drop_tol);
    if (onb.empty()) throw std::invalid_argument("Subspace: spanning set is (numerically) zero");
    for (auto& v : onb) basis_.push_back(sp.unflatten(v));
}

double Subspace::off_residual(const TangentVec<double>& v) const {
    auto w = sp_.flatten(v);
    for (const auto& b : basis_) {
        const auto bf = sp_.flatten(b);
        w = axpy(-dot(w, bf), bf, w);
    }
    return std::sqrt(norm2(w));
}

bool Subspace::contains(const TangentVec<double>& v, double tol) const {
    return off_residual(v) <= tol * std::max(1.0, std::sqrt(norm2(v)));
}

double Subspace::orthonormality_defect() const {
    double d = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i; j < basis_.size(); ++j)
            d = std::max(d, std::abs(dot(basis_[i], basis_[j]) - (i == j ? 1.0 : 0.0)));
    return d;
}

double r_invariance_residual(const Subspace& L) {
    const auto& sp = L.space();
    double res = 0;
    // R_T is quadratic in T, so R on basis vectors and on pairwise sums
    // covers all polarized values R(.,Ta)Tb + R(.,Tb)Ta.
    for (std::size_t a = 0; a < L.dim(); ++a)
        for (std::size_t b = a; b < L.dim(); ++b) {
            const auto t = L.basis(a) + L.basis(b);
            for (std::size_t k = 0; k < L.dim(); ++k) {
                res = std::max(res, L.off_residual(sp.jacobi_apply(t, L.basis(k))));
                if (b == a) continue;
                res = std::max(res, L.off_residual(sp.jacobi_apply(L.basis(a), L.basis(k))));
            }
        }
    return res;
}

double nabla_r_invariance_residual(const Subspace& L) {
    const auto& sp = L.space();
    const auto N = [&](const TangentVec<double>& t, const TangentVec<double>& x) {
        return sp.nabla_jacobi(t, x);
    };
    double res = 0;
    for (std::size_t a = 0; a < L.dim(); ++a)
        for (std::size_t b = a; b < L.dim(); ++b)
            for (std::size_t c = b; c < L.dim(); ++c) {
                const auto &ta = L.basis(a), &tb = L.basis(b), &tc = L.basis(c);
                for (std::size_t k = 0; k < L.dim(); ++k) {
                    const auto& x = L.basis(k);
                    // third finite difference = 6 * symmetric trilinear value
                    auto p = N(ta + tb + tc, x) - N(ta + tb, x) - N(ta + tc, x) -
                             N(tb + tc, x) + N(ta, x) + N(tb, x) + N(tc, x);
                    res = std::max(res, L.off_residual((1.0 / 6.0) * p));
                }
            }
    return res;
}

Certificate is_homogeneous_tg(const Subspace& L, double tol) {
    const auto& sp = L.space();
    Certificate cert;
    auto fail = [&](const std::string& cond, double r, std::vector<std::size_t> w) {
        cert.ok = false;
        cert.failed_condition = cond;
        cert.residual = r;
        cert.witness = std::move(w);
        return cert;
    };

    auto A = sp.zero_vec<double>();
    A.s = 1.0;
    if (double r = L.off_residual(A); r > tol) return fail("A_in_L", r, {});

    std::vector<std::vector<double>> vproj, zproj;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        auto tv = sp.zero_vec<double>();
        tv.V = L.basis(i).V;
        auto tz = sp.zero_vec<double>();
        tz.Y = L.basis(i).Y;
        if (double r = L.off_residual(tv); r > tol) return fail("well_positioned_v", r, {i});
        if (double r = L.off_residual(tz); r > tol) return fail("well_positioned_z", r, {i});
        vproj.push_back(tv.V);
        zproj.push_back(tz.Y);
    }
    const auto vbasis = orthonormalize(vproj, 1e-9);
    const auto zbasis = orthonormalize(zproj, 1e-9);

    for (std::size_t i = 0; i < vbasis.size(); ++i)
        for (std::size_t j = i + 1; j < vbasis.size(); ++j) {
            auto br = sp.bracket_vv(vbasis[i], vbasis[j]);
            double r = std::sqrt(norm2(project_off(zbasis, br)));
            if (r > tol) return fail("bracket_vv_in_zprime", r, {i, j});
        }
    for (std::size_t i = 0; i < zbasis.size(); ++i)
        for (std::size_t j = 0; j < vbasis.size(); ++j) {
            auto jv = j_apply(sp.rep(), zbasis[i], vbasis[j]);
            double r = std::sqrt(norm2(project_off(vbasis, jv)));
            if (r > tol) return fail("J_zprime_vprime_in_vprime", r, {i, j});
        }
    return cert;
}

std::pair<bool, double> is_minus_one_subspace(const Subspace& L, double tol) {
    if (L.dim() < 2) throw std::invalid_argument("is_minus_one_subspace: need dim >= 2");
    const auto& sp = L.space();
    double worst = -1.0;
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (std::size_t j = i + 1; j < L.dim(); ++j) {
            const double k = sp.sectional(L.basis(i), L.basis(j));
            if (std::abs(k + 1.0) > std::abs(worst + 1.0)) worst = k;
        }
    return {std::abs(worst + 1.0) <= tol, worst};
}

bool weak_j2_check(const DRSpace& sp, const std::vector<double>& V,
                   const std::vector<std::vector<double>>& zprime, double tol,
                   double* max_residual) {
    if (norm2(V) == 0.0) throw std::invalid_argument("weak_j2_check: V must be nonzero");
    const auto zb = orthonormalize(zprime, 1e-9);
    const double nv2 = norm2(V);
    // {V} and {J_{e_k} V} are mutually orthogonal with norms ||V||.
    double worst = 0;
    for (std::size_t i = 0; i < zb.size(); ++i)
        for (std::size_t j = i + 1; j < zb.size(); ++j) {
            auto w = j_apply(sp.rep(), zb[i], j_apply(sp.rep(), zb[j], V));
            auto rem = axpy(-dot(w, V) / nv2, V, w);
            for (std::size_t k = 0; k < sp.dim_z(); ++k) {
                std::vector<double> ek(sp.dim_z(), 0.0);
                ek[k] = 1.0;
                const auto jkv = j_apply(sp.rep(), ek, V);
                rem = axpy(-dot(rem, jkv) / nv2, jkv, rem);
            }
            worst = std::max(worst, std::sqrt(norm2(rem)));
        }
    if (max_residual) *max_residual = worst;
    return worst <= tol;
}

ZDoubleResult zdouble_closure(const DRSpace& sp, const std::vector<double>& V,
                              const std::vector<std::vector<double>>& zprime, double tol) {
    double wres = 0;
    if (!weak_j2_check(sp, V, zprime, 1e-8, &wres))
        throw std::invalid_argument("zdouble_closure: weak J^2 condition fails for this input");
    const auto zb = orthonormalize(zprime, 1e-9);
    const double nv2 = norm2(V);

    std::vector<std::vector<double>> zvecs = zb;
    for (std::size_t i = 0; i < zb.size(); ++i)
        for (std::size_t j = i + 1; j < zb.size(); ++j) {
            auto w = j_apply(sp.rep(), zb[i], j_apply(sp.rep(), zb[j], V));
            std::vector<double> z(sp.dim_z(), 0.0);
            for (std::size_t k = 0; k < sp.dim_z(); ++k) {
                std::vector<double> ek(sp.dim_z(), 0.0);
                ek[k] = 1.0;
                z[k] = dot(w, j_apply(sp.rep(), ek, V)) / nv2;
            }
            if (std::sqrt(norm2(z)) > tol) zvecs.push_back(std::move(z));
        }
    auto zdb = orthonormalize(zvecs, 1e-7);

    // Cl(z')-orbit of V.
    std::vector<std::vector<double>> orbit = orthonormalize({V}, 1e-12);
    for (bool grew = true; grew;) {
        grew = false;
        const auto snapshot = orbit;
        for (const auto& w : snapshot)
            for (const auto& x : zb) {
                auto jv = project_off(orbit, j_apply(sp.rep(), x, w));
                if (std::sqrt(norm2(jv)) > 1e-7) {
                    orbit.push_back((1.0 / std::sqrt(norm2(jv))) * jv);
                    grew = true;
                }
            }
    }

    ZDoubleResult res;
    res.zdouble = zdb;
    res.dim_zprime = zb.size();
    res.dim_zdouble = zdb.size();
    res.dim_vprime = orbit.size();
    const std::size_t d = res.dim_zprime, dd = res.dim_zdouble;
    if (d == 1 && dd == 1)
        res.case_label = 1;
    else if ((d == 2 || d == 3) && dd == 3)
        res.case_label = 2;
    else if (d == 3 && dd == 6)
        res.case_label = 3;
    else if (d >= 4 && d <= 7 && dd == 7)
        res.case_label = 4;
    else
        throw std::domain_error("zdouble_closure: dimension pattern (" + std::to_string(d) + "," +
                                std::to_string(dd) + ") matches no case");
    return res;
}

Example15d build_example_15d(int cls, double a, double b, double s) {
    if (cls != 1 && cls != -1) throw std::invalid_argument("build_example_15d: class must be +-1");
    if (a == 0.0 && b == 0.0)
        throw std::invalid_argument("build_example_15d: (a, b) must be nonzero");
    auto rep = build_irreducible(6);
    RatMat J7 = rep.generators[0];
    for (int i = 1; i < 6; ++i) J7 = J7 * rep.generators[static_cast<std::size_t>(i)];
    RatMat P = rep.generators[0] * rep.generators[1] * rep.generators[2];

    auto ker = exact_kernel(P - Rat(cls) * RatMat::identity(rep.dim_v));
    if (ker.empty()) throw std::logic_error("build_example_15d: eigenspace is empty");
    const std::vector<Rat> W = ker.front();

    const auto j7w = to_double(J7.apply(W));
    const auto wd = to_double(W);
    std::vector<double> V = axpy(b, j7w, a * wd);

    DRSpace sp(rep);
    std::vector<TangentVec<double>> vecs;
    auto t0 = sp.zero_vec<double>();
    t0.V = V;
    t0.s = s;
    vecs.push_back(t0);
    for (int i = 0; i < 3; ++i) {
        auto t = sp.zero_vec<double>();
        t.Y[static_cast<std::size_t>(i)] = s;
        t.V = sp.rep().generators_d[static_cast<std::size_t>(i)].apply(V);
        vecs.push_back(t);
    }
    Subspace L(sp, vecs);
    return Example15d{std::move(sp), std::move(L), std::move(V), std::move(J7), std::move(P),
                      W, cls};
}

std::vector<std::pair<double, std::vector<double>>> k2_eigenpairs(const DRSpace& sp,
                                                                  const std::vector<double>& V,
                                                                  const std::vector<double>& Y) {
    const std::size_t m = sp.dim_z();
    if (m < 2) throw std::invalid_argument("k2_eigenpairs: need dim z >= 2");
    // Orthonormal basis of Y-perp inside z.
    std::vector<std::vector<double>> cand = {(1.0 / std::sqrt(norm2(Y))) * Y};
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<double> e(m, 0.0);
        e[k] = 1.0;
        cand.push_back(std::move(e));
    }
    auto onb = orthonormalize(cand, 1e-9);
    const std::vector<std::vector<double>> perp(onb.begin() + 1, onb.end());

    const auto K = sp.k_operator(V, Y);
    const auto K2 = K * K;
    DMat restr(perp.size(), perp.size());
    for (std::size_t j = 0; j < perp.size(); ++j) {
        const auto img = K2.apply(perp[j]);
        for (std::size_t i = 0; i < perp.size(); ++i) restr(i, j) = dot(perp[i], img);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(restr));
    std::vector<std::pair<double, std::vector<double>>> out;
    for (int c = 0; c < static_cast<int>(perp.size()); ++c) {
        std::vector<double> x(m, 0.0);
        for (std::size_t i = 0; i < perp.size(); ++i)
            x = axpy(es.eigenvectors()(static_cast<int>(i), c), perp[i], x);
        out.emplace_back(es.eigenvalues()(c), std::move(x));
    }
    return out;
}

std::vector<JacobiEigenPair> eigen_E(const DRSpace& sp, const TangentVec<double>& T,
                                     const std::vector<double>& X, double mu) {
    const double nv2 = norm2(T.V), ny2 = norm2(T.Y);
    if (nv2 == 0.0 || ny2 == 0.0)
        throw std::invalid_argument("eigen_E: V and Y components must be nonzero");
    if (std::abs(norm2(T) - 1.0) > 1e-9)
        throw std::invalid_argument("eigen_E: T must be a unit vector");
    if (std::abs(mu + 1.0) < 1e-9)
        throw std::domain_error("eigen_E: mu = -1 is excluded");
    const double ny = std::sqrt(ny2);

    const auto K = sp.k_operator(T.V, T.Y);
    const auto KX = K.apply(X);
    const auto jyv = j_apply(sp.rep(), T.Y, T.V);
    const auto jxv = j_apply(sp.rep(), X, T.V);
    const auto jxjyv = j_apply(sp.rep(), X, jyv);
    const auto jkxv = j_apply(sp.rep(), KX, T.V);

    // (4k+4)(4k+1)^2 = c, as u^3 + 6u^2 + 9u + (4 - c) = 0 with u = 4k.
    const double c = 27.0 * nv2 * nv2 * ny2 * (1.0 + mu);
    std::vector<JacobiEigenPair> out;
    for (double u : cubic_real_roots(6.0, 9.0, 4.0 - c)) {
        const double kappa = u / 4.0;
        const double f1 = 4.0 * kappa + 1.0;
        const double f2 = f1 + 3.0 * nv2;
        if (std::abs(f2) < 1e-9) continue; // excluded by the construction
        auto E = sp.zero_vec<double>();
        E.Y = (f1 * f2) * X;
        E.V = axpy(3.0 * f2, jxjyv, axpy(-3.0 * T.s * f1, jxv, (-9.0 * nv2 * ny) * jkxv));
        const double nE = std::sqrt(norm2(E));
        if (nE < 1e-12) continue;
        auto resvec = sp.jacobi_apply(T, E) - kappa * E;
        out.push_back({kappa, E, std::sqrt(norm2(resvec)) / nE});
    }
    return out;
}

} // namespace drtk
