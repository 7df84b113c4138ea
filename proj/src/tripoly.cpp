#include "enriques7/tripoly.hpp"

namespace enr7 {

bool valid_point(const TriPoint& P) {
    for (int k = 0; k < 3; ++k)
        if (P[k][0].is_zero() && P[k][1].is_zero())
            return false;
    return true;
}

bool proj_equal(const TriPoint& P, const TriPoint& Q) {
    for (int k = 0; k < 3; ++k)
        if (!(P[k][0] * Q[k][1] - P[k][1] * Q[k][0]).is_zero())
            return false;
    return true;
}

TriPointD to_double(const TriPoint& P) {
    TriPointD Q;
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 2; ++j)
            Q[k][j] = to_cd(P[k][j]);
    return Q;
}

TriFormD to_double(const TriForm& f) {
    TriFormD g(f.deg);
    for (size_t i = 0; i < f.c.size(); ++i)
        g.c[i] = to_cd(f.c[i]);
    return g;
}

Qi disc2(const UniPoly& q) {
    if (q.deg() != 2)
        throw DegenerateInput("discriminant requires a degree-2 binary form");
    return q.c[1] * q.c[1] - Qi(4) * q.c[0] * q.c[2];
}

bool squarefree(const UniPoly& q) {
    if (q.is_zero())
        throw ZeroPolynomial();
    if (q.deg() < 2)
        return true;
    return !disc2(q).is_zero();
}

std::optional<std::array<std::array<Qi, 2>, 2>> quad_roots_exact(const UniPoly& q) {
    if (q.is_zero())
        throw ZeroPolynomial();
    if (q.deg() != 2)
        throw DegenerateInput("quadratic root extraction requires degree 2");
    const Qi& c0 = q.c[0];
    const Qi& c1 = q.c[1];
    const Qi& c2 = q.c[2];
    std::array<std::array<Qi, 2>, 2> roots;
    if (c2.is_zero()) {
        if (c1.is_zero()) {
            roots[0] = {Qi(0), Qi(1)};
            roots[1] = roots[0]; // double root
            return roots;
        }
        roots[0] = {Qi(0), Qi(1)};
        roots[1] = {c1, -c0};
        return roots;
    }
    auto s = qi_sqrt(disc2(q));
    if (!s)
        return std::nullopt;
    Qi two_c2 = Qi(2) * c2;
    roots[0] = {Qi(1), (-c1 + *s) / two_c2};
    roots[1] = {Qi(1), (-c1 - *s) / two_c2};
    return roots;
}

TriForm normalized(const TriForm& f) {
    TriForm g = f;
    for (const Qi& v : g.c) {
        if (!v.is_zero()) {
            Qi pivot = v;
            for (Qi& w : g.c)
                w = w / pivot;
            return g;
        }
    }
    return g; // zero form
}

bool proj_equal_forms(const TriForm& f, const TriForm& g) {
    if (f.deg != g.deg)
        return false;
    TriForm a = normalized(f);
    TriForm b = normalized(g);
    for (size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] != b.c[i])
            return false;
    return true;
}

} // namespace enr7
