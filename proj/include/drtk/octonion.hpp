#pragma once

#include <array>
#include <cstdint>

#include "drtk/linalg.hpp"

namespace drtk {

/// Signed basis product: e_i * e_j = sign * e_index.
struct BasisProduct {
    int sign;
    int index;
};

/// 8x8 octonion basis multiplication table, built by Cayley-Dickson doubling
/// of the quaternions with the convention (a,b)(c,d) = (ac - d*b, da + bc*).
/// This table is the single source of truth for octonion arithmetic.
const std::array<std::array<BasisProduct, 8>, 8>& octonion_table();

template <class T>
struct Octonion {
    std::array<T, 8> c{};

    Octonion() { c.fill(T(0)); }
    explicit Octonion(const std::array<T, 8>& coords) : c(coords) {}

    static Octonion unit(int i) {
        Octonion o;
        o.c[i] = T(1);
        return o;
    }
    static Octonion one() { return unit(0); }

    Octonion operator+(const Octonion& o) const {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
        return r;
    }
    Octonion operator-(const Octonion& o) const {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
        return r;
    }
    Octonion operator-() const {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c[i] = -c[i];
        return r;
    }
    friend Octonion operator*(const T& s, Octonion o) {
        for (auto& x : o.c) x *= s;
        return o;
    }
    bool operator==(const Octonion& o) const { return c == o.c; }
};

template <class T>
Octonion<T> oct_mul(const Octonion<T>& a, const Octonion<T>& b) {
    const auto& tab = octonion_table();
    Octonion<T> r;
    for (int i = 0; i < 8; ++i) {
        if (a.c[i] == T(0)) continue;
        for (int j = 0; j < 8; ++j) {
            if (b.c[j] == T(0)) continue;
            const auto p = tab[i][j];
            r.c[p.index] += T(p.sign) * a.c[i] * b.c[j];
        }
    }
    return r;
}

/// a* = 2<a,1>1 - a.
template <class T>
Octonion<T> oct_conj(const Octonion<T>& a) {
    Octonion<T> r = -a;
    r.c[0] = a.c[0];
    return r;
}

template <class T>
T oct_dot(const Octonion<T>& a, const Octonion<T>& b) {
    T s(0);
    for (int i = 0; i < 8; ++i) s += a.c[i] * b.c[i];
    return s;
}

template <class T>
T oct_norm2(const Octonion<T>& a) {
    return oct_dot(a, a);
}

/// Matrix of x -> a x.
template <class T>
Matrix<T> left_mul_operator(const Octonion<T>& a) {
    Matrix<T> m(8, 8);
    for (int j = 0; j < 8; ++j) {
        auto col = oct_mul(a, Octonion<T>::unit(j));
        for (int i = 0; i < 8; ++i) m(i, j) = col.c[i];
    }
    return m;
}

/// Matrix of x -> x a.
template <class T>
Matrix<T> right_mul_operator(const Octonion<T>& a) {
    Matrix<T> m(8, 8);
    for (int j = 0; j < 8; ++j) {
        auto col = oct_mul(Octonion<T>::unit(j), a);
        for (int i = 0; i < 8; ++i) m(i, j) = col.c[i];
    }
    return m;
}

using OctQ = Octonion<Rat>;
using OctD = Octonion<double>;

} // namespace drtk
