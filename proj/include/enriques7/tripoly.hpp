#pragma once

#include "enriques7/errors.hpp"
#include "enriques7/gaussian.hpp"

#include <array>
#include <optional>
#include <vector>

namespace enr7 {

inline bool exact_zero(const Qi& a) { return a.is_zero(); }
inline bool exact_zero(const Cd& a) { return a == Cd(0.0, 0.0); }

// Size key used for chart selection: exact for Qi, |.|^2 for floating scalars.
inline Rat chart_key(const Qi& a) { return a.norm(); }
inline double chart_key(const Cd& a) { return std::norm(a); }

// A point of P1 x P1 x P1: three projective factor points, none with both
// coordinates zero.
template <class S>
struct TriPointT {
    std::array<std::array<S, 2>, 3> f;

    const std::array<S, 2>& operator[](int i) const { return f[i]; }
    std::array<S, 2>& operator[](int i) { return f[i]; }
};

using TriPoint = TriPointT<Qi>;
using TriPointD = TriPointT<Cd>;

template <class S>
TriPointT<S> make_point(S x0, S x1, S y0, S y1, S z0, S z1) {
    TriPointT<S> P;
    P.f[0] = {std::move(x0), std::move(x1)};
    P.f[1] = {std::move(y0), std::move(y1)};
    P.f[2] = {std::move(z0), std::move(z1)};
    return P;
}

bool valid_point(const TriPoint& P);
// Factorwise projective equality (cross products vanish).
bool proj_equal(const TriPoint& P, const TriPoint& Q);
TriPointD to_double(const TriPoint& P);

// Trihomogeneous polynomial, homogeneous of degree deg[k] in the k-th factor's
// coordinate pair. Coefficients are stored densely, indexed by the power of the
// second coordinate in each factor: index (a,b,c) is the monomial
//   x0^(deg0-a) x1^a  y0^(deg1-b) y1^b  z0^(deg2-c) z1^c.
template <class S>
struct TriPolyT {
    std::array<int, 3> deg{};
    std::vector<S> c;

    TriPolyT() = default;
    explicit TriPolyT(std::array<int, 3> d)
        : deg(d), c((d[0] + 1) * (d[1] + 1) * (d[2] + 1), S(0)) {}

    int stride1() const { return deg[2] + 1; }
    int stride0() const { return (deg[1] + 1) * (deg[2] + 1); }
    S& at(int a, int b, int c_) { return c[a * stride0() + b * stride1() + c_]; }
    const S& at(int a, int b, int c_) const { return c[a * stride0() + b * stride1() + c_]; }

    bool is_zero() const {
        for (const auto& v : c)
            if (!exact_zero(v)) return false;
        return true;
    }
};

using TriForm = TriPolyT<Qi>;   // multidegree (2,2,2) by convention
using TriFormD = TriPolyT<Cd>;

template <class S>
TriPolyT<S> zero_form222() { return TriPolyT<S>({2, 2, 2}); }

// Product of one binary quadratic per factor; q[k] holds coefficients by power
// of the second coordinate.
template <class S>
TriPolyT<S> product_form(const std::array<S, 3>& qx, const std::array<S, 3>& qy,
                         const std::array<S, 3>& qz) {
    TriPolyT<S> f({2, 2, 2});
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c)
                f.at(a, b, c) = qx[a] * qy[b] * qz[c];
    return f;
}

// Per-factor monomial values m[j] = first^(deg-j) * second^j.
template <class S>
std::vector<S> factor_monomials(int deg, const std::array<S, 2>& p) {
    std::vector<S> m(deg + 1, S(1));
    for (int j = 1; j <= deg; ++j)
        m[j] = m[j - 1] * p[1];
    S pw(1);
    for (int j = deg - 1; j >= 0; --j) {
        pw = pw * p[0];
        m[j] = m[j] * pw;
    }
    return m;
}

template <class S>
S eval(const TriPolyT<S>& f, const TriPointT<S>& P) {
    std::array<std::vector<S>, 3> m;
    for (int k = 0; k < 3; ++k)
        m[k] = factor_monomials(f.deg[k], P[k]);
    S acc(0);
    int idx = 0;
    for (int a = 0; a <= f.deg[0]; ++a)
        for (int b = 0; b <= f.deg[1]; ++b)
            for (int c = 0; c <= f.deg[2]; ++c) {
                const S& v = f.c[idx++];
                if (!exact_zero(v))
                    acc += v * m[0][a] * m[1][b] * m[2][c];
            }
    return acc;
}

// Partial derivative with respect to coordinate `coord` (0 or 1) of factor `k`.
template <class S>
TriPolyT<S> partial(const TriPolyT<S>& f, int k, int coord) {
    std::array<int, 3> d = f.deg;
    d[k] = std::max(d[k] - 1, 0);
    TriPolyT<S> g(d);
    if (f.deg[k] == 0)
        return g; // derivative of a constant factor-degree: zero
    int idx = 0;
    for (int a = 0; a <= f.deg[0]; ++a)
        for (int b = 0; b <= f.deg[1]; ++b)
            for (int c = 0; c <= f.deg[2]; ++c) {
                const S& v = f.c[idx++];
                if (exact_zero(v)) continue;
                int e[3] = {a, b, c}; // power of the second coordinate per factor
                int second = e[k];
                int first = f.deg[k] - second;
                if (coord == 0) {
                    if (first == 0) continue;
                    g.at(e[0], e[1], e[2]) += S(first) * v;
                } else {
                    if (second == 0) continue;
                    e[k] = second - 1;
                    g.at(e[0], e[1], e[2]) += S(second) * v;
                }
            }
    return g;
}

// Chart = per factor, which coordinate is scaled to 1. Auto-selection takes the
// coordinate of larger size, ties going to coordinate 0.
template <class S>
std::array<int, 3> auto_chart(const TriPointT<S>& P) {
    std::array<int, 3> c{};
    for (int k = 0; k < 3; ++k)
        c[k] = chart_key(P[k][1]) > chart_key(P[k][0]) ? 1 : 0;
    return c;
}

// Representative of P scaled so the chart coordinate of each factor equals 1.
template <class S>
TriPointT<S> normalize_in_chart(const TriPointT<S>& P, const std::array<int, 3>& chart) {
    TriPointT<S> Q = P;
    for (int k = 0; k < 3; ++k) {
        const S& pivot = P[k][chart[k]];
        if (exact_zero(pivot))
            throw ChartDegenerate("point has zero coordinate in chart factor " + std::to_string(k));
        Q[k][0] = P[k][0] / pivot;
        Q[k][1] = P[k][1] / pivot;
    }
    return Q;
}

// All six homogeneous partial derivatives evaluated at P, in order
// (x0, x1, y0, y1, z0, z1).
template <class S>
std::array<S, 6> gradient6(const TriPolyT<S>& f, const TriPointT<S>& P) {
    std::array<S, 6> g;
    for (int k = 0; k < 3; ++k)
        for (int coord = 0; coord < 2; ++coord)
            g[2 * k + coord] = eval(partial(f, k, coord), P);
    return g;
}

template <class S>
struct AffineHessian {
    std::array<std::array<S, 3>, 3> h;
    std::array<int, 3> chart;
};

// Hessian of the dehomogenization of f in the given chart (chart coordinate of
// each factor set to 1), evaluated at the chart-normalized representative of P.
// Meaningful as a singularity certificate only at critical points of f.
template <class S>
AffineHessian<S> affine_hessian(const TriPolyT<S>& f, const TriPointT<S>& P,
                                std::optional<std::array<int, 3>> chart_hint = std::nullopt) {
    std::array<int, 3> chart = chart_hint ? *chart_hint : auto_chart(P);
    TriPointT<S> Q = normalize_in_chart(P, chart);
    AffineHessian<S> out;
    out.chart = chart;
    for (int i = 0; i < 3; ++i) {
        TriPolyT<S> fi = partial(f, i, 1 - chart[i]);
        for (int j = i; j < 3; ++j) {
            S v = eval(partial(fi, j, 1 - chart[j]), Q);
            out.h[i][j] = v;
            out.h[j][i] = v;
        }
    }
    return out;
}

template <class S>
S det3(const std::array<std::array<S, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Homogeneous polynomial in one projective coordinate pair; coefficient i is
// the monomial u0^(deg-i) u1^i.
template <class S>
struct UniPolyT {
    std::vector<S> c;
    int deg() const { return int(c.size()) - 1; }
    bool is_zero() const {
        for (const auto& v : c)
            if (!exact_zero(v)) return false;
        return true;
    }
};

using UniPoly = UniPolyT<Qi>;

// Restriction of f to the line where the factor `free_k` stays free and the
// other two factors are pinned at the given points (in increasing factor order).
template <class S>
UniPolyT<S> restrict_to_line(const TriPolyT<S>& f, int free_k,
                             const std::array<S, 2>& pin_a, const std::array<S, 2>& pin_b) {
    UniPolyT<S> q;
    q.c.assign(f.deg[free_k] + 1, S(0));
    std::array<std::vector<S>, 3> m;
    int pin_idx = 0;
    const std::array<S, 2>* pins[2] = {&pin_a, &pin_b};
    for (int k = 0; k < 3; ++k) {
        if (k == free_k) continue;
        m[k] = factor_monomials(f.deg[k], *pins[pin_idx++]);
    }
    int idx = 0;
    for (int a = 0; a <= f.deg[0]; ++a)
        for (int b = 0; b <= f.deg[1]; ++b)
            for (int c = 0; c <= f.deg[2]; ++c) {
                const S& v = f.c[idx++];
                if (exact_zero(v)) continue;
                int e[3] = {a, b, c};
                S coeff = v;
                for (int k = 0; k < 3; ++k)
                    if (k != free_k) coeff = coeff * m[k][e[k]];
                q.c[e[free_k]] += coeff;
            }
    return q;
}

// Discriminant of a degree-2 homogeneous binary polynomial.
Qi disc2(const UniPoly& q);

// True iff q has no repeated projective root. Throws ZeroPolynomial on the zero
// polynomial.
bool squarefree(const UniPoly& q);

// Both projective roots of a degree-2 binary form, when they exist in Q(i).
std::optional<std::array<std::array<Qi, 2>, 2>> quad_roots_exact(const UniPoly& q);

// Scale so the first nonzero coefficient in index order equals 1.
TriForm normalized(const TriForm& f);
bool proj_equal_forms(const TriForm& f, const TriForm& g);

TriFormD to_double(const TriForm& f);

} // namespace enr7
