#pragma once

#include <cstdint>
#include <stdexcept>

#include "drtk/eigen_util.hpp"
#include "drtk/octonion.hpp"

namespace drtk {

/// Tangent vector of the rank-one 16-dimensional model space: a pair of
/// octonions with a sign eps = +1 (compact, curvature in [1/4, 1]) or
/// eps = -1 (noncompact dual).
template <class T>
struct CayleyTangent {
    Octonion<T> a, b;
    int eps = 1;

    CayleyTangent() = default;
    CayleyTangent(Octonion<T> a_, Octonion<T> b_, int eps_)
        : a(std::move(a_)), b(std::move(b_)), eps(eps_) {
        if (eps != 1 && eps != -1) throw std::invalid_argument("CayleyTangent: eps must be +-1");
    }
};

template <class T>
T dot(const CayleyTangent<T>& x, const CayleyTangent<T>& y) {
    return oct_dot(x.a, y.a) + oct_dot(x.b, y.b);
}
template <class T>
T norm2(const CayleyTangent<T>& x) {
    return dot(x, x);
}
template <class T>
CayleyTangent<T> operator+(const CayleyTangent<T>& x, const CayleyTangent<T>& y) {
    return {x.a + y.a, x.b + y.b, x.eps};
}
template <class T>
CayleyTangent<T> operator-(const CayleyTangent<T>& x, const CayleyTangent<T>& y) {
    return {x.a - y.a, x.b - y.b, x.eps};
}
template <class T>
CayleyTangent<T> operator*(const T& c, const CayleyTangent<T>& x) {
    return {c * x.a, c * x.b, x.eps};
}

/// R((a,b),(c,d))(e,f) = (eps/4)(4<c,e>a - 4<a,e>c + (ed)b* - (eb)d* +
/// (ad - cb)f*, 4<d,f>b - 4<b,f>d + a*(cf) - c*(af) - e*(ad - cb)),
/// exact on exact scalars.
template <class T>
CayleyTangent<T> cayley_curvature(const CayleyTangent<T>& x1, const CayleyTangent<T>& x2,
                                  const CayleyTangent<T>& x3) {
    if (x1.eps != x2.eps || x1.eps != x3.eps)
        throw std::invalid_argument("cayley_curvature: mismatched eps");
    const Octonion<T>&a = x1.a, &b = x1.b, &c = x2.a, &d = x2.b, &e = x3.a, &f = x3.b;
    const auto adcb = oct_mul(a, d) - oct_mul(c, b);
    Octonion<T> first = (T(4) * oct_dot(c, e)) * a - (T(4) * oct_dot(a, e)) * c +
                        oct_mul(oct_mul(e, d), oct_conj(b)) -
                        oct_mul(oct_mul(e, b), oct_conj(d)) + oct_mul(adcb, oct_conj(f));
    Octonion<T> second = (T(4) * oct_dot(d, f)) * b - (T(4) * oct_dot(b, f)) * d +
                         oct_mul(oct_conj(a), oct_mul(c, f)) -
                         oct_mul(oct_conj(c), oct_mul(a, f)) - oct_mul(oct_conj(e), adcb);
    const T q = T(x1.eps) / T(4);
    return {q * first, q * second, x1.eps};
}

/// Jacobi operator image R(x, t) t.
template <class T>
CayleyTangent<T> cayley_jacobi(const CayleyTangent<T>& t, const CayleyTangent<T>& x) {
    return cayley_curvature(x, t, t);
}

/// Base point direction: xi = (1, 0).
template <class T>
CayleyTangent<T> cayley_xi(int eps) {
    return {Octonion<T>::one(), Octonion<T>(), eps};
}

inline CayleyTangent<double> to_double(const CayleyTangent<Rat>& x) {
    CayleyTangent<double> r;
    r.eps = x.eps;
    for (int i = 0; i < 8; ++i) {
        r.a.c[i] = to_double(x.a.c[i]);
        r.b.c[i] = to_double(x.b.c[i]);
    }
    return r;
}

std::vector<double> cayley_flatten(const CayleyTangent<double>& x);
CayleyTangent<double> cayley_unflatten(const std::vector<double>& v, int eps);

/// 16x16 matrix of the Jacobi operator R(., t)t in flattened coordinates.
DMat cayley_jacobi_matrix(const CayleyTangent<double>& t);

/// Sectional curvature of the plane spanned by x and y.
double cayley_sectional(const CayleyTangent<double>& x, const CayleyTangent<double>& y);

struct PerpXiReport {
    double max_in_family = 0;  // max |<R(.,.)., xi>| over the three stated families
    double max_control = 0;    // max |<R(.,.)., xi>| over unconstrained triples
    bool families_orthogonal = false;
};

/// Checks <R(X,Y)Z, xi> = 0 for seeded random triples drawn from the three
/// families R(L_e, L_e)L_e, R(L_{e/4}, L_e)L_e, R(L_{e/4}, L_{e/4})L_{e/4},
/// with a generic-triple control group. Exact rational arithmetic.
PerpXiReport perp_xi_checks(int eps, std::size_t samples, std::uint64_t seed);

} // namespace drtk
