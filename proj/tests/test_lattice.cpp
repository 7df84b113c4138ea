#include "doctest.h"

#include "enriques7/errors.hpp"
#include "enriques7/io.hpp"
#include "enriques7/lattice.hpp"

#include <random>

using namespace enr7;

namespace {

GramMatrix gm(std::vector<std::vector<long>> m) {
    return GramMatrix::make({}, std::move(m));
}

// independent determinant oracle: rational Gaussian elimination
Rat det_oracle(const GramMatrix& g) {
    int n = g.size();
    const size_t sn = size_t(n);
    std::vector<std::vector<Rat>> m(sn, std::vector<Rat>(sn));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[size_t(i)][size_t(j)] = g.entries[size_t(i)][size_t(j)];
    Rat det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        while (piv < n && m[size_t(piv)][size_t(k)] == 0)
            ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[size_t(piv)], m[size_t(k)]);
            det = -det;
        }
        det *= m[size_t(k)][size_t(k)];
        for (int i = k + 1; i < n; ++i) {
            Rat f = m[size_t(i)][size_t(k)] / m[size_t(k)][size_t(k)];
            for (int j = k; j < n; ++j)
                m[size_t(i)][size_t(j)] -= f * m[size_t(k)][size_t(j)];
        }
    }
    return det;
}

GramMatrix random_symmetric(std::mt19937_64& rng, int n, int spread) {
    std::uniform_int_distribution<long> d(-spread, spread);
    const size_t sn = size_t(n);
    std::vector<std::vector<long>> m(sn, std::vector<long>(sn));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            m[size_t(i)][size_t(j)] = m[size_t(j)][size_t(i)] = d(rng);
    return gm(m);
}

DualGraph load_graph(const std::string& name) {
    return graph_from_json(load_json(data_file(name)));
}

} // namespace

TEST_SUITE("lattice") {

TEST_CASE("discriminants the configuration arithmetic relies on") {
    auto tri = discriminant(gm({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
    CHECK(tri.det == 2);
    CHECK(tri.abs_det == 2);
    auto diff = discriminant(gm({{-2, -1}, {-1, -2}}));
    CHECK(diff.det == 3);
    CHECK(diff.abs_det == 3);
    std::vector<std::vector<long>> d7(7, std::vector<long>(7, 0));
    for (int i = 0; i < 7; ++i) d7[size_t(i)][size_t(i)] = -2;
    auto diag = discriminant(gm(d7));
    CHECK(diag.det == -128);
    CHECK(diag.abs_det == 128);
}

TEST_CASE("overlattice index bookkeeping has a unique solution") {
    // index [L:M] satisfies disc(M) = disc(L)·[L:M]^2; the observed pairs pin
    // the index (hence the code dimension) uniquely
    mpz_class target1 = mpz_class(256) * 3; // observed 2^8·3 against base 3
    int hits1 = 0, dim1 = -1;
    for (int d = 0; d <= 8; ++d)
        if (mpz_class(3) * (mpz_class(1) << (2 * d)) == target1) {
            ++hits1;
            dim1 = d;
        }
    CHECK(hits1 == 1);
    CHECK(dim1 == 4);
    mpz_class target2 = 128; // observed 2^7 against base 2
    int hits2 = 0, dim2 = -1;
    for (int d = 0; d <= 8; ++d)
        if (mpz_class(2) * (mpz_class(1) << (2 * d)) == target2) {
            ++hits2;
            dim2 = d;
        }
    CHECK(hits2 == 1);
    CHECK(dim2 == 3);
}

TEST_CASE("determinant agrees with a rational elimination oracle") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 40; ++t) {
        int n = 1 + int(rng() % 6);
        GramMatrix g = random_symmetric(rng, n, 4);
        auto d = discriminant(g);
        Rat oracle = det_oracle(g);
        CHECK(oracle.get_den() == 1);
        CHECK(d.det == oracle.get_num());
    }
}

TEST_CASE("inertia basics") {
    Inertia one = signature(gm({{-2}}));
    CHECK(one.positive == 0);
    CHECK(one.negative == 1);
    CHECK(one.zero == 0);
    Inertia hyper = signature(gm({{0, 1}, {1, 0}}));
    CHECK(hyper.positive == 1);
    CHECK(hyper.negative == 1);
    CHECK(hyper.zero == 0);
    Inertia z2 = signature(gm({{0, 0}, {0, 0}}));
    CHECK(z2.zero == 2);
}

TEST_CASE("inertia counts sum to the size and survive congruence") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + int(rng() % 5);
        GramMatrix g = random_symmetric(rng, n, 3);
        Inertia s = signature(g);
        CHECK(s.positive + s.negative + s.zero == n);

        // random unimodular congruence: shears and swaps
        std::vector<std::vector<long>> u(size_t(n), std::vector<long>(size_t(n), 0));
        for (int i = 0; i < n; ++i) u[size_t(i)][size_t(i)] = 1;
        for (int step = 0; step < 6; ++step) {
            int i = int(rng() % n), j = int(rng() % n);
            if (i == j) continue;
            long c = long(rng() % 5) - 2;
            for (int k = 0; k < n; ++k)
                u[size_t(i)][size_t(k)] += c * u[size_t(j)][size_t(k)];
        }
        std::vector<std::vector<long>> t1(size_t(n), std::vector<long>(size_t(n), 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    t1[size_t(i)][size_t(j)] +=
                        u[size_t(i)][size_t(k)] * g.entries[size_t(k)][size_t(j)];
        std::vector<std::vector<long>> t2(size_t(n), std::vector<long>(size_t(n), 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    t2[size_t(i)][size_t(j)] += t1[size_t(i)][size_t(k)] * u[size_t(j)][size_t(k)];
        Inertia s2 = signature(gm(t2));
        CHECK(s2.positive == s.positive);
        CHECK(s2.negative == s.negative);
        CHECK(s2.zero == s.zero);
    }
}

TEST_CASE("tree of ten nodal curves is unexpectedly nondegenerate") {
    DualGraph fig2 = load_graph("figure2.json");
    REQUIRE(fig2.verts.size() == 10);
    REQUIRE(fig2.edges.size() == 9);
    Inertia s = signature(fig2.gram());
    CHECK(s.positive == 1);
    CHECK(s.negative == 9);
    CHECK(s.zero == 0);

    // two disjoint copies: positive index 2 exceeds what a surface allows
    int n = 20;
    std::vector<std::vector<long>> big(size_t(n), std::vector<long>(size_t(n), 0));
    GramMatrix base = fig2.gram();
    const auto& m = base.entries;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            big[size_t(i)][size_t(j)] = m[size_t(i)][size_t(j)];
            big[size_t(i + 10)][size_t(j + 10)] = m[size_t(i)][size_t(j)];
        }
    Inertia sd = signature(gm(big));
    CHECK(sd.positive == 2);
    CHECK(sd.negative == 18);
    CHECK(sd.zero == 0);
}

TEST_CASE("nine-curve configuration stays within one positive direction") {
    DualGraph fig1 = load_graph("figure1.json");
    REQUIRE(fig1.verts.size() == 9);
    REQUIRE(fig1.edges.size() == 9);
    Inertia s = signature(fig1.gram());
    CHECK(s.positive <= 1);
    CHECK(s.positive + s.negative + s.zero == 9);
}

TEST_CASE("fibre divisors inside the nine-curve configuration") {
    for (const char* name : {"figure1_g1.json", "figure1_g2.json", "figure1_g3.json"}) {
        DualGraph g = load_graph(name);
        auto z = zariski_fibre_check(g);
        CHECK(z.is_fibre);
        CHECK(z.inertia.positive == 0);
        CHECK(z.inertia.zero == 1);
        auto t = fibre_type(g);
        CHECK(t.tag == FibreTag::I2star);
        CHECK(t.euler_catalog == 8);
        CHECK(t.euler_formula == 8);
    }
}

TEST_CASE("catalog fibres verify and recognize") {
    struct Row {
        const char* file;
        FibreTag tag;
        int euler;
    };
    for (const Row& r : {Row{"fibre_I2.json", FibreTag::I2, 2},
                         Row{"fibre_2I2.json", FibreTag::I2double, 2},
                         Row{"fibre_I0star.json", FibreTag::I0star, 6},
                         Row{"fibre_I2star.json", FibreTag::I2star, 8}}) {
        DualGraph g = load_graph(r.file);
        auto z = zariski_fibre_check(g);
        CHECK(z.is_fibre);
        CHECK(z.radical.size() == g.verts.size());
        auto t = fibre_type(g);
        CHECK(t.tag == r.tag);
        CHECK(t.euler_catalog == r.euler);
        CHECK(t.euler_formula == r.euler);
    }
}

TEST_CASE("non-fibre configurations are rejected") {
    DualGraph path;
    path.verts = {{"C1", -2, 1}, {"C2", -2, 1}, {"C3", -2, 1}};
    path.add_edge("C1", "C2");
    path.add_edge("C2", "C3");
    auto z = zariski_fibre_check(path);
    CHECK(!z.is_fibre);
    CHECK_THROWS_AS(fibre_type(path), UnknownType);

    DualGraph split;
    split.verts = {{"C1", -2, 1}, {"C2", -2, 1}};
    CHECK_THROWS_AS(zariski_fibre_check(split), Disconnected);

    DualGraph bad_star = load_graph("fibre_I0star.json");
    bad_star.verts[0].mult = 1; // center multiplicity must be 2
    CHECK(!zariski_fibre_check(bad_star).is_fibre);
    CHECK_THROWS_AS(fibre_type(bad_star), UnknownType);
}

TEST_CASE("euler budgets per pencil") {
    auto b1 = euler_budget({FibreTag::I2star, FibreTag::I2, FibreTag::I2});
    CHECK(b1.total == 12);
    CHECK(b1.exact);
    auto b2 = euler_budget({FibreTag::I0star, FibreTag::I2, FibreTag::I2, FibreTag::I2});
    CHECK(b2.total == 12);
    CHECK(b2.exact);
    auto b3 = euler_budget({FibreTag::I0star, FibreTag::I0star});
    CHECK(b3.total == 12);
    CHECK(b3.exact);
    auto over = euler_budget({FibreTag::I2star, FibreTag::I2star});
    CHECK(over.total == 16);
    CHECK(!over.within_budget);
    auto part = euler_budget({FibreTag::I2double});
    CHECK(part.total == 2);
    CHECK(part.within_budget);
    CHECK(!part.exact);
}

TEST_CASE("every bundled fibre configuration saturates the budget") {
    auto cases = fibre_cases_from_json(load_json(data_file("fibre_configurations.json")));
    REQUIRE(cases.size() == 3);
    for (const auto& c : cases) {
        CHECK(c.pencils.size() == 3);
        for (const auto& pencil : c.pencils) {
            auto b = euler_budget(pencil);
            CHECK(b.total == 12);
            CHECK(b.exact);
        }
    }
}

TEST_CASE("tag parsing round-trips") {
    for (FibreTag t : {FibreTag::I2, FibreTag::I2double, FibreTag::I0star, FibreTag::I2star})
        CHECK(parse_fibre_tag(fibre_tag_name(t)) == t);
    CHECK(parse_fibre_tag("I0star") == FibreTag::I0star);
    CHECK_THROWS_AS(parse_fibre_tag("I3"), UnknownType);
}

TEST_CASE("graph JSON round-trip") {
    DualGraph g = load_graph("fibre_I2.json");
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].mult == 2);
    Json j = graph_to_json(g);
    DualGraph g2 = graph_from_json(j);
    CHECK(g2.verts.size() == g.verts.size());
    REQUIRE(g2.edges.size() == 1);
    CHECK(g2.edges[0].mult == 2);
    CHECK(graph_to_json(g2) == j);
}

TEST_CASE("malformed matrices are rejected") {
    CHECK_THROWS_AS(GramMatrix::make({}, {{0, 1}, {2, 0}}), DegenerateInput);
    CHECK_THROWS_AS(GramMatrix::make({}, {{0, 1}}), DegenerateInput);
    CHECK_THROWS_AS(GramMatrix::make({"a"}, {{0, 1}, {1, 0}}), DegenerateInput);
}

} // TEST_SUITE
