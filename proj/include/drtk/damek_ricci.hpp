#pragma once

#include <cmath>
#include <stdexcept>

#include "drtk/clifford.hpp"
#include "drtk/eigen_util.hpp"
#include "drtk/rng.hpp"

namespace drtk {

/// Element of s = a + v + z, written as V + Y + sA.
template <class T>
struct TangentVec {
    std::vector<T> V; // v-component
    std::vector<T> Y; // z-component
    T s{0};           // A-component

    TangentVec() = default;
    TangentVec(std::vector<T> v, std::vector<T> y, T a)
        : V(std::move(v)), Y(std::move(y)), s(std::move(a)) {}
};

template <class T>
T dot(const TangentVec<T>& a, const TangentVec<T>& b) {
    return dot(a.V, b.V) + dot(a.Y, b.Y) + a.s * b.s;
}
template <class T>
T norm2(const TangentVec<T>& a) {
    return dot(a, a);
}
template <class T>
TangentVec<T> operator+(const TangentVec<T>& a, const TangentVec<T>& b) {
    return {a.V + b.V, a.Y + b.Y, a.s + b.s};
}
template <class T>
TangentVec<T> operator-(const TangentVec<T>& a, const TangentVec<T>& b) {
    return {a.V - b.V, a.Y - b.Y, a.s - b.s};
}
template <class T>
TangentVec<T> operator*(const T& c, const TangentVec<T>& a) {
    return {c * a.V, c * a.Y, c * a.s};
}

inline TangentVec<double> to_double(const TangentVec<Rat>& t) {
    return {to_double(t.V), to_double(t.Y), to_double(t.s)};
}

/// Per-sample statistics of the two Jacobi trace functionals.
struct TwoSteinProbe {
    double c1;      // mean of Tr R_T over unit samples
    double c2;      // mean of Tr (R_T^2)
    double maxdev;  // max deviation from either mean
    double maxdev1; // deviation of Tr R_T only
    double maxdev2; // deviation of Tr (R_T^2) only
};

/// The metric solvable Lie algebra s = a + v + z built over a Clifford
/// representation, with curvature evaluated at the identity. Coordinates on s
/// are flattened in the order (A, v-basis, z-basis).
class DRSpace {
public:
    explicit DRSpace(CliffordRep rep) : rep_(std::move(rep)) {
        rep_.validate();
        dim_v_ = rep_.dim_v;
        m_ = static_cast<std::size_t>(rep_.m);
        dim_s_ = 1 + dim_v_ + m_;
    }

    const CliffordRep& rep() const { return rep_; }
    std::size_t dim_v() const { return dim_v_; }
    std::size_t dim_z() const { return m_; }
    std::size_t dim_s() const { return dim_s_; }

    /// Trace constant of the Jacobi operator: Tr R_T = c1 ||T||^2.
    Rat einstein_c1() const { return -(Rat(dim_v_) / 4 + Rat(m_)); }

    template <class T>
    TangentVec<T> zero_vec() const {
        return {std::vector<T>(dim_v_, T(0)), std::vector<T>(m_, T(0)), T(0)};
    }

    template <class T>
    std::vector<T> flatten(const TangentVec<T>& t) const {
        check(t);
        std::vector<T> r;
        r.reserve(dim_s_);
        r.push_back(t.s);
        r.insert(r.end(), t.V.begin(), t.V.end());
        r.insert(r.end(), t.Y.begin(), t.Y.end());
        return r;
    }

    template <class T>
    TangentVec<T> unflatten(const std::vector<T>& x) const {
        if (x.size() != dim_s_) throw std::invalid_argument("unflatten: dimension mismatch");
        TangentVec<T> t = zero_vec<T>();
        t.s = x[0];
        std::copy(x.begin() + 1, x.begin() + 1 + static_cast<std::ptrdiff_t>(dim_v_), t.V.begin());
        std::copy(x.begin() + 1 + static_cast<std::ptrdiff_t>(dim_v_), x.end(), t.Y.begin());
        return t;
    }

    /// z-valued bracket of two v-vectors: <[U,V], Z_k> = <J_k U, V>.
    template <class T>
    std::vector<T> bracket_vv(const std::vector<T>& u, const std::vector<T>& v) const {
        std::vector<T> z(m_, T(0));
        for (std::size_t k = 0; k < m_; ++k)
            z[k] = dot(rep_.gen<T>(static_cast<int>(k)).apply(u), v);
        return z;
    }

    /// Lie bracket on s: [A,U] = U/2, [A,Z] = Z, [v,v] in z, z central.
    template <class T>
    TangentVec<T> bracket(const TangentVec<T>& t1, const TangentVec<T>& t2) const {
        check(t1);
        check(t2);
        TangentVec<T> r = zero_vec<T>();
        const T half = T(1) / T(2);
        r.V = axpy(T(-t2.s * half), t1.V, T(t1.s * half) * t2.V);
        r.Y = bracket_vv(t1.V, t2.V);
        for (std::size_t k = 0; k < m_; ++k) r.Y[k] += t1.s * t2.Y[k] - t2.s * t1.Y[k];
        return r;
    }

    /// Jacobi operator image R_{T1} T2 = R(T2, T1) T1.
    template <class T>
    TangentVec<T> jacobi_apply(const TangentVec<T>& t1, const TangentVec<T>& t2) const {
        check(t1);
        check(t2);
        const std::vector<T>&V = t1.V, &Y = t1.Y, &U = t2.V, &X = t2.Y;
        const T &s = t1.s, &r = t2.s;
        const T q = T(1) / T(4), tq = T(3) / T(4);
        const T n1 = norm2(t1), ip = dot(t1, t2), nv = norm2(V);

        const auto jyv = j_apply(rep_, Y, V);
        const auto uv = bracket_vv(U, V);

        TangentVec<T> out = zero_vec<T>();
        // v-part
        out.V = j_apply(rep_, X, jyv);
        for (auto& x : out.V) x *= tq;
        out.V = axpy(tq, j_apply(rep_, uv, V), out.V);
        out.V = axpy(tq * r, jyv, out.V);
        out.V = axpy(-tq * s, j_apply(rep_, X, V), out.V);
        out.V = axpy(-q * n1, U, out.V);
        out.V = axpy(tq * dot(X, Y) + q * ip, V, out.V);
        // z-part
        out.Y = bracket_vv(U, jyv);
        for (auto& x : out.Y) x *= -tq;
        out.Y = axpy(tq * s, uv, out.Y);
        out.Y = axpy(-(n1 - tq * nv), X, out.Y);
        out.Y = axpy(ip, Y, out.Y);
        // a-part
        out.s = tq * dot(U, jyv) - r * (n1 - tq * nv) + s * (ip - tq * dot(U, V));
        return out;
    }

    /// Matrix of R_{T1} in flattened (A, v, z) coordinates.
    DMat jacobi_matrix(const TangentVec<double>& t1) const {
        DMat mtx(dim_s_, dim_s_);
        for (std::size_t j = 0; j < dim_s_; ++j) {
            std::vector<double> e(dim_s_, 0.0);
            e[j] = 1.0;
            auto col = flatten(jacobi_apply(t1, unflatten(e)));
            for (std::size_t i = 0; i < dim_s_; ++i) mtx(i, j) = col[i];
        }
        return mtx;
    }

    /// (nabla_{T1} R_{T1}) T2; the image lies in v.
    template <class T>
    TangentVec<T> nabla_jacobi(const TangentVec<T>& t1, const TangentVec<T>& t2) const {
        check(t1);
        check(t2);
        const std::vector<T>&V = t1.V, &Y = t1.Y, &U = t2.V;
        const auto jyv = j_apply(rep_, Y, V);
        std::vector<T> out = j_apply(rep_, bracket_vv(U, V), jyv);
        out = out + j_apply(rep_, bracket_vv(U, jyv), V);
        out = axpy(-dot(U, V), jyv, out);
        out = axpy(-dot(U, jyv), V, out);
        const T c = T(3) / T(2);
        TangentVec<T> res = zero_vec<T>();
        res.V = c * out;
        return res;
    }

    /// Sectional curvature of span(T1, T2) through the Jacobi operator.
    double sectional(const TangentVec<double>& t1, const TangentVec<double>& t2) const {
        const double gram = norm2(t1) * norm2(t2) - dot(t1, t2) * dot(t1, t2);
        if (gram < 1e-14) throw std::invalid_argument("sectional: degenerate plane");
        return dot(jacobi_apply(t1, t2), t2) / gram;
    }

    /// Closed-form sectional curvature for orthonormal T1 = V+Y+sA, T2 = U+X.
    double sectional_special(const TangentVec<double>& t1, const TangentVec<double>& t2) const {
        if (std::abs(t2.s) > 1e-12)
            throw std::invalid_argument("sectional_special: second vector must have no A-component");
        const auto& U = t2.V;
        const auto& X = t2.Y;
        const auto w = axpy(-1.0, bracket_vv(U, t1.V), t1.s * X); // sX - [U,V]
        const double xy = dot(X, t1.Y);
        const double jux = dot(j_apply(rep_, X, U), j_apply(rep_, t1.Y, t1.V));
        return -0.75 * norm2(w) - 0.75 * xy * xy -
               0.25 * (3.0 * norm2(X) * norm2(t1.Y) + 6.0 * jux + 1.0);
    }

    /// K_{V,Y} as an m x m matrix on z that annihilates the Y-direction and
    /// acts on z intersect Y-perp by X -> |V|^-2 |Y|^-1 [V, J_X J_Y V].
    /// norm_y must equal ||Y|| (passed explicitly so exact callers can supply
    /// a rational value).
    template <class T>
    Matrix<T> k_operator(const std::vector<T>& V, const std::vector<T>& Y, const T& norm_y) const {
        const T nv = norm2(V), ny2 = norm2(Y);
        if (nv == T(0) || ny2 == T(0)) throw std::invalid_argument("k_operator: V and Y must be nonzero");
        const auto jyv = j_apply(rep_, Y, V);
        Matrix<T> K(m_, m_);
        for (std::size_t k = 0; k < m_; ++k) {
            std::vector<T> x(m_, T(0));
            x[k] = T(1);
            x = axpy(T(-Y[k] / ny2), Y, x); // project onto Y-perp
            auto img = bracket_vv(V, j_apply(rep_, x, jyv));
            for (std::size_t i = 0; i < m_; ++i) K(i, k) = img[i] / (nv * norm_y);
        }
        return K;
    }

    Matrix<double> k_operator(const std::vector<double>& V, const std::vector<double>& Y) const {
        return k_operator(V, Y, std::sqrt(norm2(Y)));
    }

    TangentVec<double> random_unit(std::uint64_t seed, std::uint64_t index) const {
        SampleRng rng(seed, index);
        return unflatten(rng.unit_vector(dim_s_));
    }

    TwoSteinProbe two_stein_probe(std::size_t samples, std::uint64_t seed) const;

private:
    template <class T>
    void check(const TangentVec<T>& t) const {
        if (t.V.size() != dim_v_ || t.Y.size() != m_)
            throw std::invalid_argument("TangentVec does not belong to this space");
    }

    CliffordRep rep_;
    std::size_t dim_v_, m_, dim_s_;
};

} // namespace drtk
