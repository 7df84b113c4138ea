#include "doctest.h"

#include "enriques7/errors.hpp"
#include "enriques7/tripoly.hpp"

#include <random>

using namespace enr7;

namespace {

Qi q(long n) { return Qi(n); }

TriPoint pt(long x0, long x1, long y0, long y1, long z0, long z1) {
    return make_point(q(x0), q(x1), q(y0), q(y1), q(z0), q(z1));
}

std::array<Qi, 3> S_ = {Qi(1), Qi(0), Qi(1)};
std::array<Qi, 3> D_ = {Qi(1), Qi(0), Qi(-1)};
std::array<Qi, 3> P_ = {Qi(0), Qi(1), Qi(0)};

TriForm random_form(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-5, 5);
    TriForm f = zero_form222<Qi>();
    for (auto& c : f.c)
        c = Qi(Rat(d(rng)), Rat(d(rng)));
    return f;
}

TriPoint random_pt(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-7, 7);
    while (true) {
        TriPoint P = pt(d(rng), d(rng), d(rng), d(rng), d(rng), d(rng));
        if (valid_point(P)) return P;
    }
}

} // namespace

TEST_SUITE("tripoly") {

TEST_CASE("eval on basic products") {
    CHECK(eval(product_form(S_, S_, S_), pt(1, 0, 1, 0, 1, 0)) == q(1));
    CHECK(eval(product_form(P_, P_, P_), pt(1, 0, 1, 1, 1, 1)) == q(0));
    // d(1,1)=0, d(1,2)=-3, s(1,3)=10
    CHECK(eval(product_form(D_, D_, S_), pt(1, 1, 1, 2, 1, 3)) == q(0));
    CHECK(eval(product_form(S_, D_, S_), pt(1, 1, 1, 2, 1, 3)) == q(2) * q(-3) * q(10));
}

TEST_CASE("eval is multiplicative over per-factor quadratics") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int t = 0; t < 50; ++t) {
        std::array<Qi, 3> qx = {q(d(rng)), q(d(rng)), q(d(rng))};
        std::array<Qi, 3> qy = {q(d(rng)), q(d(rng)), q(d(rng))};
        std::array<Qi, 3> qz = {q(d(rng)), q(d(rng)), q(d(rng))};
        TriPoint P = random_pt(rng);
        auto quad = [](const std::array<Qi, 3>& co, const std::array<Qi, 2>& u) {
            return co[0] * u[0] * u[0] + co[1] * u[0] * u[1] + co[2] * u[1] * u[1];
        };
        CHECK(eval(product_form(qx, qy, qz), P) ==
              quad(qx, P[0]) * quad(qy, P[1]) * quad(qz, P[2]));
    }
}

TEST_CASE("eval scales by lambda^2 per factor") {
    std::mt19937_64 rng(8);
    TriForm f = random_form(rng);
    TriPoint P = pt(1, 2, 1, 3, 2, 5);
    TriPoint Q = P;
    Qi lam(Rat(3), Rat(1));
    Q[1][0] = Q[1][0] * lam;
    Q[1][1] = Q[1][1] * lam;
    CHECK(eval(f, Q) == lam * lam * eval(f, P));
}

TEST_CASE("partial derivative of a product form") {
    // d/dx1 of s(x)s(y)s(z) = 2 x1 s(y) s(z)
    TriForm f = product_form(S_, S_, S_);
    auto g = partial(f, 0, 1);
    REQUIRE(g.deg == std::array<int, 3>{1, 2, 2});
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int c = 0; c <= 2; ++c) {
                Qi expect = (a == 1) ? q(2) * S_[b] * S_[c] : q(0);
                CHECK(g.at(a, b, c) == expect);
            }
}

TEST_CASE("partials of the zero form vanish") {
    TriForm z = zero_form222<Qi>();
    for (int k = 0; k < 3; ++k)
        for (int coord = 0; coord < 2; ++coord)
            CHECK(partial(z, k, coord).is_zero());
}

TEST_CASE("per-factor Euler identity") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 30; ++t) {
        TriForm f = random_form(rng);
        TriPoint P = random_pt(rng);
        Qi fv = eval(f, P);
        for (int k = 0; k < 3; ++k) {
            Qi lhs = P[k][0] * eval(partial(f, k, 0), P) + P[k][1] * eval(partial(f, k, 1), P);
            CHECK(lhs == q(2) * fv);
        }
    }
}

TEST_CASE("restriction to a line") {
    TriForm f = product_form(S_, S_, S_);
    UniPoly r = restrict_to_line(f, 2, {q(1), q(0)}, {q(1), q(0)});
    REQUIRE(r.deg() == 2);
    CHECK(r.c[0] == q(1));
    CHECK(r.c[1] == q(0));
    CHECK(r.c[2] == q(1));

    TriForm g = product_form(P_, S_, D_);
    UniPoly rz = restrict_to_line(g, 2, {q(1), q(0)}, {q(1), q(2)});
    CHECK(rz.is_zero()); // p(1,0) = 0 kills everything

    // restriction agrees with evaluation at sample free values
    std::mt19937_64 rng(10);
    for (int t = 0; t < 20; ++t) {
        TriForm h = random_form(rng);
        UniPoly ry = restrict_to_line(h, 1, {q(1), q(4)}, {q(2), q(3)});
        for (long v = -2; v <= 2; ++v) {
            Qi direct = eval(h, pt(1, 4, 1, v, 2, 3));
            Qi via = ry.c[0] + ry.c[1] * q(v) + ry.c[2] * q(v) * q(v);
            CHECK(direct == via);
        }
    }
}

TEST_CASE("affine Hessian certifies a rank-3 critical point") {
    // u^2 + v^2 + w^2 at ((1:0),(1:0),(1:0)) in the chart with coordinate 0 scaled to 1
    TriForm f = zero_form222<Qi>();
    f.at(2, 0, 0) = q(1);
    f.at(0, 2, 0) = q(1);
    f.at(0, 0, 2) = q(1);
    TriPoint P = pt(1, 0, 1, 0, 1, 0);
    for (auto v : gradient6(f, P))
        CHECK(v == q(0));
    auto H = affine_hessian(f, P);
    CHECK(H.chart == std::array<int, 3>{0, 0, 0});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(H.h[i][j] == (i == j ? q(2) : q(0)));
    CHECK(det3(H.h) == q(8));
}

TEST_CASE("affine Hessian detects a rank-2 critical point") {
    // u^2 + v^2: critical with a flat third direction, so not a node
    TriForm f = zero_form222<Qi>();
    f.at(2, 0, 0) = q(1);
    f.at(0, 2, 0) = q(1);
    TriPoint P = pt(1, 0, 1, 0, 1, 0);
    auto H = affine_hessian(f, P);
    CHECK(det3(H.h) == q(0));
    CHECK(H.h[0][0] == q(2));
    CHECK(H.h[2][2] == q(0));
}

TEST_CASE("Hessian is symmetric and chart hints are honoured") {
    std::mt19937_64 rng(11);
    TriForm f = random_form(rng);
    TriPoint P = pt(2, 3, 1, 1, 5, 4);
    auto H = affine_hessian(f, P, std::array<int, 3>{1, 0, 0});
    CHECK(H.chart == std::array<int, 3>{1, 0, 0});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(H.h[i][j] == H.h[j][i]);
    CHECK_THROWS_AS(affine_hessian(f, pt(1, 0, 1, 1, 1, 1), std::array<int, 3>{1, 0, 0}),
                    ChartDegenerate);
}

TEST_CASE("auto chart picks the larger coordinate, ties to the first") {
    CHECK(auto_chart(pt(1, 2, 3, 1, 1, 1)) == std::array<int, 3>{1, 0, 0});
    CHECK(auto_chart(pt(0, 1, 5, 0, 2, -2)) == std::array<int, 3>{1, 0, 0});
}

TEST_CASE("squarefree by discriminant") {
    UniPoly a{{q(1), q(0), q(-1)}};
    CHECK(squarefree(a));
    UniPoly b{{q(1), q(-2), q(1)}}; // (u0-u1)^2
    CHECK(!squarefree(b));
    UniPoly c{{q(1), q(0), q(1)}};
    CHECK(squarefree(c)); // roots +-i, distinct
    UniPoly z{{q(0), q(0), q(0)}};
    CHECK_THROWS_AS(squarefree(z), ZeroPolynomial);
}

TEST_CASE("exact quadratic roots") {
    UniPoly c{{q(1), q(0), q(1)}};
    auto roots = quad_roots_exact(c);
    REQUIRE(roots);
    for (const auto& r : *roots) {
        Qi v = c.c[0] * r[0] * r[0] + c.c[1] * r[0] * r[1] + c.c[2] * r[1] * r[1];
        CHECK(v == q(0));
    }
    CHECK(!((*roots)[0][0] * (*roots)[1][1] - (*roots)[0][1] * (*roots)[1][0]).is_zero());

    UniPoly dbl{{q(1), q(-2), q(1)}};
    auto r2 = quad_roots_exact(dbl);
    REQUIRE(r2);
    CHECK(((*r2)[0][0] * (*r2)[1][1] - (*r2)[0][1] * (*r2)[1][0]).is_zero());

    UniPoly irr{{q(1), q(0), q(-2)}}; // roots (±sqrt(1/2) style, not in Q(i))
    CHECK(!quad_roots_exact(irr));

    UniPoly degen{{q(3), q(1), q(0)}}; // u0 (3 u0 + u1)
    auto r3 = quad_roots_exact(degen);
    REQUIRE(r3);
    for (const auto& r : *r3) {
        Qi v = degen.c[0] * r[0] * r[0] + degen.c[1] * r[0] * r[1] + degen.c[2] * r[1] * r[1];
        CHECK(v == q(0));
    }
}

TEST_CASE("projective form equality") {
    std::mt19937_64 rng(12);
    TriForm f = random_form(rng);
    TriForm g = f;
    for (auto& c : g.c)
        c = c * Qi(Rat(-3), Rat(2));
    CHECK(proj_equal_forms(f, g));
    g.at(0, 0, 0) += q(1);
    CHECK(!proj_equal_forms(f, g));
}

} // TEST_SUITE
