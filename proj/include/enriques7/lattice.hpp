#pragma once

#include "enriques7/gaussian.hpp"

#include <string>
#include <vector>

namespace enr7 {

struct GramMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<long>> entries; // symmetric integer matrix

    int size() const { return int(entries.size()); }
    static GramMatrix make(std::vector<std::string> labels,
                           std::vector<std::vector<long>> entries);
};

struct Discriminant {
    mpz_class det;      // signed determinant
    mpz_class abs_det;  // discriminant as the paper quotes it
};

Discriminant discriminant(const GramMatrix& g);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

// Exact inertia via rational symmetric congruence elimination.
Inertia signature(const GramMatrix& g);

struct GraphVertex {
    std::string name;
    long self = -2; // self-intersection
    long mult = 1;  // multiplicity in the fibre divisor
};

struct GraphEdge {
    int a = 0, b = 0; // vertex indices, a < b
    int mult = 1;     // intersection number (2 for a double edge)
};

struct DualGraph {
    std::vector<GraphVertex> verts;
    std::vector<GraphEdge> edges;

    int index_of(const std::string& name) const; // -1 if absent
    void add_edge(const std::string& x, const std::string& y);
    GramMatrix gram() const;
    bool connected() const;
    // degree counted with edge multiplicities
    std::vector<int> degrees() const;
};

struct ZariskiResult {
    bool is_fibre = false;
    Inertia inertia;
    std::vector<long> radical; // the multiplicity vector when is_fibre
};

ZariskiResult zariski_fibre_check(const DualGraph& g); // throws Disconnected

enum class FibreTag { I2, I2double, I0star, I2star };

std::string fibre_tag_name(FibreTag t);
FibreTag parse_fibre_tag(const std::string& s); // throws UnknownType
int fibre_euler(FibreTag t);                    // catalog Euler numbers

struct FibreType {
    FibreTag tag;
    std::string name;
    int euler_catalog = 0;
    int euler_formula = 0; // 2·#vertices − Σ edge multiplicities
};

FibreType fibre_type(const DualGraph& g); // throws UnknownType

struct EulerBudget {
    int total = 0;
    bool within_budget = false; // total ≤ 12
    bool exact = false;         // total == 12
};

EulerBudget euler_budget(const std::vector<FibreTag>& fibres);

} // namespace enr7
