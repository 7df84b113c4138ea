#pragma once

#include "enriques7/tripoly.hpp"

#include <array>
#include <string>
#include <vector>

namespace enr7 {

// The group is (Z/2)^3 with generators, in bit order,
//   bit 0: (e1, e1, 1)    bit 1: (e1, 1, e1)    bit 2: (e2, e2, e2)
// where e1 = diag(1,-1) and e2 = antidiag(1,1) on P1. The subgroup with bit 2
// clear acts with 1-dimensional fixed loci; the four elements with bit 2 set
// act with isolated fixed points.
struct GroupElement {
    unsigned bits = 0;

    friend GroupElement operator*(GroupElement a, GroupElement b) { return {a.bits ^ b.bits}; }
    friend bool operator==(GroupElement a, GroupElement b) { return a.bits == b.bits; }
    bool is_identity() const { return bits == 0; }
    bool in_isotropic_half() const { return (bits & 4u) == 0; } // the subgroup with fixed lines
};

inline const GroupElement kIdentity{0};
inline const GroupElement kGen12{1};     // (e1, e1, 1)
inline const GroupElement kGen13{2};     // (e1, 1, e1)
inline const GroupElement kGen23{3};     // (1, e1, e1), the product of the first two
inline const GroupElement kGenSwap{4};   // (e2, e2, e2)

// Per-factor involution tags (alpha, beta) meaning e1^alpha * e2^beta.
std::array<std::array<int, 2>, 3> factor_tags(GroupElement g);

template <class S>
TriPointT<S> act_on_point(GroupElement g, const TriPointT<S>& P) {
    auto tags = factor_tags(g);
    TriPointT<S> Q;
    for (int k = 0; k < 3; ++k) {
        S a = P[k][0], b = P[k][1];
        if (tags[k][1]) std::swap(a, b);   // e2: (u0,u1) -> (u1,u0)
        if (tags[k][0]) b = -b;            // e1 applied after e2
        Q[k][0] = a;
        Q[k][1] = b;
    }
    return Q;
}

// Substitution action on trihomogeneous polynomials. The matrix representatives
// only satisfy the group law up to sign, but every factor degree used here is
// even, so the action is well defined and is a group action.
template <class S>
TriPolyT<S> act_on_form(GroupElement g, const TriPolyT<S>& f) {
    auto tags = factor_tags(g);
    TriPolyT<S> out(f.deg);
    int idx = 0;
    for (int a = 0; a <= f.deg[0]; ++a)
        for (int b = 0; b <= f.deg[1]; ++b)
            for (int c = 0; c <= f.deg[2]; ++c) {
                const S& v = f.c[idx++];
                if (exact_zero(v)) continue;
                int e[3] = {a, b, c};
                int sign = 0;
                for (int k = 0; k < 3; ++k) {
                    // substitute u0 -> u1, u1 -> -u0 for e1*e2; see factor_tags
                    if (tags[k][0]) sign += e[k];
                    if (tags[k][1]) e[k] = f.deg[k] - e[k];
                }
                S w = (sign % 2) ? S(-1) * v : v;
                out.at(e[0], e[1], e[2]) += w;
            }
    return out;
}

struct Eigenspace {
    int index = 0;                         // 0..7
    std::array<int, 3> gen_signs{};        // character on the three generators, +1/-1
    std::vector<std::string> names;        // e.g. "sds" (factor parts among s,d,p)
    std::vector<TriForm> basis;
};

// The eight character spaces of (2,2,2)-forms, with the invariant space first.
// Dimensions are [5,4,3,3,3,3,3,3].
const std::vector<Eigenspace>& eigenspace_decomposition();

// Character of the space with the given index at g.
int character(int space_index, GroupElement g);

// Form built from per-factor quadratic tags: each of qx,qy,qz is one of
// 's' (u0^2+u1^2), 'd' (u0^2-u1^2), 'p' (u0*u1).
TriForm sdp_form(char qx, char qy, char qz);

// Eigenspace index a pure s/d/p product belongs to.
int sdp_space(char qx, char qy, char qz);

using ProjPt = std::array<Qi, 2>;

struct FixedLine {
    int free_factor = 0;            // factor left pointwise free
    std::array<ProjPt, 3> pin;      // entries for the two pinned factors; pin[free_factor] unused
};

struct FixedLocus {
    GroupElement g;
    std::vector<FixedLine> lines;   // 4 lines for nonidentity elements of the line half
    std::vector<TriPoint> points;   // 8 isolated points for the other four elements
};

FixedLocus fixed_locus(GroupElement g); // throws IdentityElement

// All 8 images of P, indexed by group bits.
std::array<TriPoint, 8> orbit(const TriPoint& P);
int orbit_size(const TriPoint& P);
bool is_group_fixed(const TriPoint& P); // fixed by some nonidentity element

// Points a fixed line passes through, materialized as a TriPoint with the free
// factor set to the given value.
TriPoint point_on_fixed_line(const FixedLine& L, const ProjPt& free_value);

} // namespace enr7
