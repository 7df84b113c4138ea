#include "enriques7/lattice.hpp"

#include "enriques7/errors.hpp"

#include <algorithm>

namespace enr7 {

GramMatrix GramMatrix::make(std::vector<std::string> labels,
                            std::vector<std::vector<long>> entries) {
    size_t n = entries.size();
    for (const auto& row : entries)
        if (row.size() != n)
            throw DegenerateInput("intersection matrix must be square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (entries[i][j] != entries[j][i])
                throw DegenerateInput("intersection matrix must be symmetric");
    if (labels.empty())
        for (size_t i = 0; i < n; ++i)
            labels.push_back("C" + std::to_string(i + 1));
    if (labels.size() != n)
        throw DegenerateInput("label count must match matrix size");
    return {std::move(labels), std::move(entries)};
}

Discriminant discriminant(const GramMatrix& g) {
    // fraction-free Bareiss elimination over the integers
    int n = g.size();
    if (n == 0)
        return {1, 1};
    const size_t sn = size_t(n);
    std::vector<std::vector<mpz_class>> a(sn, std::vector<mpz_class>(sn));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[size_t(i)][size_t(j)] = g.entries[size_t(i)][size_t(j)];
    int sign = 1;
    mpz_class prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        int pivot = k;
        while (pivot < n && a[size_t(pivot)][size_t(k)] == 0)
            ++pivot;
        if (pivot == n)
            return {0, 0};
        if (pivot != k) {
            std::swap(a[size_t(pivot)], a[size_t(k)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                mpz_class num = a[size_t(i)][size_t(j)] * a[size_t(k)][size_t(k)] -
                                a[size_t(i)][size_t(k)] * a[size_t(k)][size_t(j)];
                mpz_divexact(a[size_t(i)][size_t(j)].get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
        prev = a[size_t(k)][size_t(k)];
    }
    mpz_class det = sign * a[size_t(n - 1)][size_t(n - 1)];
    return {det, abs(det)};
}

Inertia signature(const GramMatrix& g) {
    int n = g.size();
    const size_t sn = size_t(n);
    std::vector<std::vector<Rat>> m(sn, std::vector<Rat>(sn));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[size_t(i)][size_t(j)] = g.entries[size_t(i)][size_t(j)];
    Inertia out;
    auto row_is_zero = [&](int r, int from) {
        for (int j = from; j < n; ++j)
            if (m[size_t(r)][size_t(j)] != 0) return false;
        return true;
    };
    for (int k = 0; k < n; ++k) {
        if (row_is_zero(k, k)) {
            ++out.zero;
            continue;
        }
        if (m[size_t(k)][size_t(k)] == 0) {
            // prefer a congruence swap with a nonzero diagonal entry
            int d = -1;
            for (int j = k + 1; j < n; ++j)
                if (m[size_t(j)][size_t(j)] != 0 && m[size_t(k)][size_t(j)] != 0) {
                    d = j;
                    break;
                }
            if (d >= 0) {
                std::swap(m[size_t(k)], m[size_t(d)]);
                for (int i = 0; i < n; ++i)
                    std::swap(m[size_t(i)][size_t(k)], m[size_t(i)][size_t(d)]);
            } else {
                // zero diagonal everywhere this row touches: row/col addition
                // makes the pivot 2*m[k][j] without changing the inertia
                int j = k + 1;
                while (m[size_t(k)][size_t(j)] == 0)
                    ++j;
                for (int t = 0; t < n; ++t)
                    m[size_t(k)][size_t(t)] += m[size_t(j)][size_t(t)];
                for (int t = 0; t < n; ++t)
                    m[size_t(t)][size_t(k)] += m[size_t(t)][size_t(j)];
            }
        }
        Rat piv = m[size_t(k)][size_t(k)];
        if (piv > 0)
            ++out.positive;
        else
            ++out.negative;
        for (int i = k + 1; i < n; ++i) {
            if (m[size_t(i)][size_t(k)] == 0) continue;
            Rat f = m[size_t(i)][size_t(k)] / piv;
            for (int j = k; j < n; ++j)
                m[size_t(i)][size_t(j)] -= f * m[size_t(k)][size_t(j)];
            for (int j = k; j < n; ++j)
                m[size_t(j)][size_t(i)] = m[size_t(i)][size_t(j)];
        }
    }
    return out;
}

int DualGraph::index_of(const std::string& name) const {
    for (size_t i = 0; i < verts.size(); ++i)
        if (verts[i].name == name) return int(i);
    return -1;
}

void DualGraph::add_edge(const std::string& x, const std::string& y) {
    int a = index_of(x), b = index_of(y);
    if (a < 0 || b < 0)
        throw DegenerateInput("edge endpoint '" + (a < 0 ? x : y) + "' is not a vertex");
    if (a == b)
        throw DegenerateInput("self-loops are not allowed in a dual graph");
    if (a > b) std::swap(a, b);
    for (auto& e : edges)
        if (e.a == a && e.b == b) {
            ++e.mult;
            return;
        }
    edges.push_back({a, b, 1});
}

GramMatrix DualGraph::gram() const {
    int n = int(verts.size());
    std::vector<std::vector<long>> m(size_t(n), std::vector<long>(size_t(n), 0));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        m[size_t(i)][size_t(i)] = verts[size_t(i)].self;
        labels.push_back(verts[size_t(i)].name);
    }
    for (const auto& e : edges) {
        m[size_t(e.a)][size_t(e.b)] += e.mult;
        m[size_t(e.b)][size_t(e.a)] += e.mult;
    }
    return GramMatrix::make(labels, m);
}

bool DualGraph::connected() const {
    if (verts.empty()) return false;
    std::vector<char> seen(verts.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& e : edges) {
            int other = e.a == v ? e.b : (e.b == v ? e.a : -1);
            if (other >= 0 && !seen[size_t(other)]) {
                seen[size_t(other)] = 1;
                stack.push_back(other);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<int> DualGraph::degrees() const {
    std::vector<int> deg(verts.size(), 0);
    for (const auto& e : edges) {
        deg[size_t(e.a)] += e.mult;
        deg[size_t(e.b)] += e.mult;
    }
    return deg;
}

ZariskiResult zariski_fibre_check(const DualGraph& g) {
    if (!g.connected())
        throw Disconnected("fibre support must be connected");
    ZariskiResult out;
    GramMatrix gram = g.gram();
    out.inertia = signature(gram);
    if (out.inertia.positive != 0 || out.inertia.zero != 1)
        return out;
    // the multiplicity vector must span the one-dimensional radical
    int n = gram.size();
    for (int i = 0; i < n; ++i) {
        long acc = 0;
        for (int j = 0; j < n; ++j)
            acc += gram.entries[size_t(i)][size_t(j)] * g.verts[size_t(j)].mult;
        if (acc != 0)
            return out;
    }
    out.is_fibre = true;
    for (const auto& v : g.verts)
        out.radical.push_back(v.mult);
    return out;
}

std::string fibre_tag_name(FibreTag t) {
    switch (t) {
    case FibreTag::I2: return "I2";
    case FibreTag::I2double: return "2I2";
    case FibreTag::I0star: return "I0*";
    case FibreTag::I2star: return "I2*";
    }
    throw UnknownType("unhandled fibre tag");
}

FibreTag parse_fibre_tag(const std::string& s) {
    if (s == "I2") return FibreTag::I2;
    if (s == "2I2" || s == "_2I2") return FibreTag::I2double;
    if (s == "I0*" || s == "I0star") return FibreTag::I0star;
    if (s == "I2*" || s == "I2star") return FibreTag::I2star;
    throw UnknownType("unknown fibre tag '" + s + "'");
}

int fibre_euler(FibreTag t) {
    switch (t) {
    case FibreTag::I2:
    case FibreTag::I2double: return 2;
    case FibreTag::I0star: return 6;
    case FibreTag::I2star: return 8;
    }
    throw UnknownType("unhandled fibre tag");
}

FibreType fibre_type(const DualGraph& g) {
    for (const auto& v : g.verts)
        if (v.self != -2)
            throw UnknownType("fibre components must be -2 curves");
    auto deg = g.degrees();
    int n = int(g.verts.size());
    int incidences = 0; // Σ pairwise intersection numbers
    for (const auto& e : g.edges)
        incidences += e.mult;
    FibreType out;
    out.euler_formula = 2 * n - incidences;
    auto mult_of_degree = [&](int d) {
        std::vector<long> out_m;
        for (int i = 0; i < n; ++i)
            if (deg[size_t(i)] == d) out_m.push_back(g.verts[size_t(i)].mult);
        return out_m;
    };
    auto count_degree = [&](int d) {
        int c = 0;
        for (int i = 0; i < n; ++i)
            if (deg[size_t(i)] == d) ++c;
        return c;
    };
    if (n == 2 && g.edges.size() == 1 && g.edges[0].mult == 2) {
        long m0 = g.verts[0].mult, m1 = g.verts[1].mult;
        if (m0 == 1 && m1 == 1)
            out.tag = FibreTag::I2;
        else if (m0 == 2 && m1 == 2)
            out.tag = FibreTag::I2double;
        else
            throw UnknownType("two-component cycle with mixed multiplicities");
    } else if (n == 5 && count_degree(4) == 1 && count_degree(1) == 4) {
        auto center = mult_of_degree(4);
        auto leaves = mult_of_degree(1);
        if (center == std::vector<long>{2} && leaves == std::vector<long>(4, 1))
            out.tag = FibreTag::I0star;
        else
            throw UnknownType("five-point star with wrong multiplicities");
    } else if (n == 7 && count_degree(3) == 2 && count_degree(2) == 1 &&
               count_degree(1) == 4) {
        bool ok = mult_of_degree(3) == std::vector<long>(2, 2) &&
                  mult_of_degree(2) == std::vector<long>{2} &&
                  mult_of_degree(1) == std::vector<long>(4, 1);
        // the degree-2 vertex must join the two degree-3 vertices
        int mid = -1;
        for (int i = 0; i < n; ++i)
            if (deg[size_t(i)] == 2) mid = i;
        int mid_links = 0;
        for (const auto& e : g.edges)
            if (e.a == mid || e.b == mid) {
                int other = e.a == mid ? e.b : e.a;
                if (deg[size_t(other)] == 3) ++mid_links;
            }
        if (ok && mid_links == 2)
            out.tag = FibreTag::I2star;
        else
            throw UnknownType("seven-component graph outside the catalog");
    } else {
        throw UnknownType("graph outside the fibre catalog");
    }
    out.name = fibre_tag_name(out.tag);
    out.euler_catalog = fibre_euler(out.tag);
    return out;
}

EulerBudget euler_budget(const std::vector<FibreTag>& fibres) {
    EulerBudget out;
    for (FibreTag t : fibres)
        out.total += fibre_euler(t);
    out.within_budget = out.total <= 12;
    out.exact = out.total == 12;
    return out;
}

} // namespace enr7
