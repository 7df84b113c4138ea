#include "enriques7/symmetry.hpp"

#include "enriques7/errors.hpp"

namespace enr7 {

namespace {

// Character of s, d, p under e1 and e2 (e1*e2 follows by multiplying).
// s is invariant under both; d flips under e2; p flips under e1.
int part_sign(char part, int alpha, int beta) {
    int s = 1;
    if (part == 'd' && beta) s = -s;
    if (part == 'p' && alpha) s = -s;
    return s;
}

std::array<Qi, 3> quad_coeffs(char part) {
    switch (part) {
    case 's': return {Qi(1), Qi(0), Qi(1)};
    case 'd': return {Qi(1), Qi(0), Qi(-1)};
    case 'p': return {Qi(0), Qi(1), Qi(0)};
    }
    throw DegenerateInput(std::string("unknown quadratic tag '") + part + "'");
}

const char* kSpaceNames[8][5] = {
    {"sss", "sdd", "dsd", "dds", "ppp"},
    {"ssd", "sds", "dss", "ddd", nullptr},
    {"ssp", "pps", "ddp", nullptr, nullptr},
    {"spp", "pss", "pdd", nullptr, nullptr},
    {"psd", "pds", "dpp", nullptr, nullptr},
    {"sps", "psp", "dpd", nullptr, nullptr},
    {"sdp", "ppd", "dsp", nullptr, nullptr},
    {"spd", "pdp", "dps", nullptr, nullptr},
};

} // namespace

std::array<std::array<int, 2>, 3> factor_tags(GroupElement g) {
    int b0 = (g.bits >> 0) & 1; // (e1, e1, 1)
    int b1 = (g.bits >> 1) & 1; // (e1, 1, e1)
    int b2 = (g.bits >> 2) & 1; // (e2, e2, e2)
    return {{{(b0 + b1) % 2, b2}, {b0, b2}, {b1, b2}}};
}

TriForm sdp_form(char qx, char qy, char qz) {
    return product_form(quad_coeffs(qx), quad_coeffs(qy), quad_coeffs(qz));
}

int sdp_space(char qx, char qy, char qz) {
    // The character of the product at g is the product of the per-factor signs.
    auto sign_at = [&](GroupElement g) {
        auto tags = factor_tags(g);
        char parts[3] = {qx, qy, qz};
        int s = 1;
        for (int k = 0; k < 3; ++k)
            s *= part_sign(parts[k], tags[k][0], tags[k][1]);
        return s;
    };
    std::array<int, 3> sig = {sign_at(kGen12), sign_at(kGen13), sign_at(kGenSwap)};
    for (const Eigenspace& E : eigenspace_decomposition())
        if (E.gen_signs == sig)
            return E.index;
    throw DegenerateInput("no eigenspace matches signature"); // unreachable: all 8 occur
}

const std::vector<Eigenspace>& eigenspace_decomposition() {
    static const std::vector<Eigenspace> spaces = [] {
        std::vector<Eigenspace> out(8);
        // Character values on (kGen12, kGen13, kGenSwap), derived by evaluating
        // the per-factor signs of each listed product; each signature occurs once.
        const std::array<std::array<int, 3>, 8> signs = {{
            {+1, +1, +1},
            {+1, +1, -1},
            {+1, -1, +1},
            {-1, -1, +1},
            {-1, -1, -1},
            {-1, +1, +1},
            {+1, -1, -1},
            {-1, +1, -1},
        }};
        for (int i = 0; i < 8; ++i) {
            out[i].index = i;
            out[i].gen_signs = signs[i];
            for (const char* name : kSpaceNames[i]) {
                if (!name) break;
                out[i].names.emplace_back(name);
                out[i].basis.push_back(sdp_form(name[0], name[1], name[2]));
            }
        }
        return out;
    }();
    return spaces;
}

int character(int space_index, GroupElement g) {
    const auto& signs = eigenspace_decomposition()[space_index].gen_signs;
    int s = 1;
    if (g.bits & 1u) s *= signs[0];
    if (g.bits & 2u) s *= signs[1];
    if (g.bits & 4u) s *= signs[2];
    return s;
}

namespace {

// Fixed points on P1 of e1, e2 and e1*e2.
std::array<ProjPt, 2> involution_fixed_points(int alpha, int beta) {
    if (!beta)
        return {ProjPt{Qi(1), Qi(0)}, ProjPt{Qi(0), Qi(1)}};         // e1
    if (!alpha)
        return {ProjPt{Qi(1), Qi(1)}, ProjPt{Qi(1), Qi(-1)}};        // e2
    return {ProjPt{Qi(1), Qi(0, 1)}, ProjPt{Qi(1), Qi(0, -1)}};      // e1*e2: (1:i), (1:-i)
}

} // namespace

FixedLocus fixed_locus(GroupElement g) {
    if (g.is_identity())
        throw IdentityElement();
    FixedLocus out;
    out.g = g;
    auto tags = factor_tags(g);
    if (g.in_isotropic_half()) {
        // Exactly one factor carries the identity; the other two are pinned at
        // the 2 fixed points of e1, giving 4 lines.
        int free_k = -1;
        for (int k = 0; k < 3; ++k)
            if (tags[k][0] == 0 && tags[k][1] == 0) free_k = k;
        std::array<int, 2> pinned{};
        int n = 0;
        for (int k = 0; k < 3; ++k)
            if (k != free_k) pinned[n++] = k;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                FixedLine L;
                L.free_factor = free_k;
                auto fp_a = involution_fixed_points(tags[pinned[0]][0], tags[pinned[0]][1]);
                auto fp_b = involution_fixed_points(tags[pinned[1]][0], tags[pinned[1]][1]);
                L.pin[pinned[0]] = fp_a[i];
                L.pin[pinned[1]] = fp_b[j];
                L.pin[free_k] = ProjPt{Qi(0), Qi(0)};
                out.lines.push_back(L);
            }
        return out;
    }
    // No factor acts trivially: 2^3 isolated fixed points.
    std::array<std::array<ProjPt, 2>, 3> fp;
    for (int k = 0; k < 3; ++k)
        fp[k] = involution_fixed_points(tags[k][0], tags[k][1]);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l) {
                TriPoint P;
                P[0] = fp[0][i];
                P[1] = fp[1][j];
                P[2] = fp[2][l];
                out.points.push_back(P);
            }
    return out;
}

std::array<TriPoint, 8> orbit(const TriPoint& P) {
    std::array<TriPoint, 8> out;
    for (unsigned b = 0; b < 8; ++b)
        out[b] = act_on_point(GroupElement{b}, P);
    return out;
}

int orbit_size(const TriPoint& P) {
    auto imgs = orbit(P);
    int n = 0;
    for (int i = 0; i < 8; ++i) {
        bool seen = false;
        for (int j = 0; j < i; ++j)
            if (proj_equal(imgs[i], imgs[j])) { seen = true; break; }
        if (!seen) ++n;
    }
    return n;
}

bool is_group_fixed(const TriPoint& P) {
    for (unsigned b = 1; b < 8; ++b)
        if (proj_equal(act_on_point(GroupElement{b}, P), P))
            return true;
    return false;
}

TriPoint point_on_fixed_line(const FixedLine& L, const ProjPt& free_value) {
    TriPoint P;
    for (int k = 0; k < 3; ++k)
        P[k] = (k == L.free_factor) ? free_value : L.pin[k];
    return P;
}

} // namespace enr7
