#include "enriques7/io.hpp"

#include "enriques7/errors.hpp"

#include <fstream>

namespace enr7 {

Json qi_to_json(const Qi& z) {
    Json j = Json::object();
    j["re"] = rat_str(z.re);
    j["im"] = rat_str(z.im);
    return j;
}

Qi qi_from_json(const Json& j) {
    Rat re = 0, im = 0;
    if (j.contains("re")) re = parse_rat(j.at("re").get<std::string>());
    if (j.contains("im")) im = parse_rat(j.at("im").get<std::string>());
    return Qi(re, im);
}

Json form_to_json(const TriForm& f) {
    Json j = Json::object();
    j["field"] = "Qi";
    j["convention"] = "x1-degree";
    Json coeffs = Json::array();
    for (int a = 0; a <= f.deg[0]; ++a)
        for (int b = 0; b <= f.deg[1]; ++b)
            for (int c = 0; c <= f.deg[2]; ++c) {
                const Qi& v = f.at(a, b, c);
                if (v.is_zero()) continue;
                Json entry = Json::object();
                entry["exp"] = Json::array({a, b, c});
                entry["re"] = rat_str(v.re);
                entry["im"] = rat_str(v.im);
                coeffs.push_back(entry);
            }
    j["coeffs"] = coeffs;
    return j;
}

TriForm form_from_json(const Json& j) {
    if (j.value("field", "Qi") != std::string("Qi"))
        throw DegenerateInput("unsupported coefficient field");
    if (j.value("convention", "x1-degree") != std::string("x1-degree"))
        throw DegenerateInput("unsupported exponent convention");
    TriForm f = zero_form222<Qi>();
    if (!j.contains("coeffs") || !j.at("coeffs").is_array())
        throw DegenerateInput("form JSON needs a 'coeffs' array");
    for (const auto& entry : j.at("coeffs")) {
        const auto& e = entry.at("exp");
        int a = e.at(0).get<int>(), b = e.at(1).get<int>(), c = e.at(2).get<int>();
        if (a < 0 || a > 2 || b < 0 || b > 2 || c < 0 || c > 2)
            throw DegenerateInput("form exponent out of range for degree (2,2,2)");
        f.at(a, b, c) = qi_from_json(entry);
    }
    return f;
}

Json point_to_json(const TriPoint& p) {
    Json factors = Json::array();
    for (int k = 0; k < 3; ++k)
        factors.push_back(Json::array({qi_str(p[k][0]), qi_str(p[k][1])}));
    Json j = Json::object();
    j["factors"] = factors;
    return j;
}

TriPoint point_from_json(const Json& j) {
    const auto& f = j.at("factors");
    if (!f.is_array() || f.size() != 3)
        throw DegenerateInput("point JSON needs 3 coordinate pairs");
    TriPoint p;
    for (int k = 0; k < 3; ++k) {
        const auto& pair = f.at(size_t(k));
        if (!pair.is_array() || pair.size() != 2)
            throw DegenerateInput("each factor needs 2 homogeneous coordinates");
        p[k][0] = parse_qi(pair.at(0).get<std::string>());
        p[k][1] = parse_qi(pair.at(1).get<std::string>());
        if (p[k][0].is_zero() && p[k][1].is_zero())
            throw DegenerateInput("(0:0) is not a point of the projective line");
    }
    return p;
}

TriPoint parse_point_arg(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 3)
        throw DegenerateInput("point argument needs 3 comma-separated factors");
    TriPoint p;
    for (int k = 0; k < 3; ++k) {
        const std::string& t = parts[size_t(k)];
        auto colon = t.find(':');
        if (colon == std::string::npos || t.find(':', colon + 1) != std::string::npos)
            throw DegenerateInput("factor '" + t + "' must look like a:b");
        p[k][0] = parse_qi(t.substr(0, colon));
        p[k][1] = parse_qi(t.substr(colon + 1));
        if (p[k][0].is_zero() && p[k][1].is_zero())
            throw DegenerateInput("(0:0) is not a point of the projective line");
    }
    return p;
}

Json code_to_json(const BinaryCode& c) {
    Json j = Json::object();
    j["length"] = c.length;
    Json gens = Json::array();
    for (Word w : c.generators)
        gens.push_back(word_string(w, c.length));
    j["generators"] = gens;
    return j;
}

BinaryCode code_from_json(const Json& j) {
    int length = j.at("length").get<int>();
    std::vector<std::string> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back(g.get<std::string>());
    return BinaryCode::from_strings(length, gens);
}

Json graph_to_json(const DualGraph& g) {
    Json verts = Json::array();
    for (const auto& v : g.verts) {
        Json jv = Json::object();
        jv["name"] = v.name;
        jv["self"] = v.self;
        jv["mult"] = v.mult;
        verts.push_back(jv);
    }
    Json edges = Json::array();
    for (const auto& e : g.edges)
        for (int t = 0; t < e.mult; ++t)
            edges.push_back(Json::array(
                {g.verts[size_t(e.a)].name, g.verts[size_t(e.b)].name}));
    Json j = Json::object();
    j["vertices"] = verts;
    j["edges"] = edges;
    return j;
}

DualGraph graph_from_json(const Json& j) {
    DualGraph g;
    for (const auto& jv : j.at("vertices")) {
        GraphVertex v;
        v.name = jv.at("name").get<std::string>();
        v.self = jv.value("self", -2L);
        v.mult = jv.value("mult", 1L);
        if (v.mult < 1)
            throw DegenerateInput("vertex multiplicity must be at least 1");
        if (g.index_of(v.name) >= 0)
            throw DegenerateInput("duplicate vertex name '" + v.name + "'");
        g.verts.push_back(v);
    }
    for (const auto& je : j.at("edges")) {
        if (!je.is_array() || je.size() != 2)
            throw DegenerateInput("each edge needs exactly 2 endpoints");
        g.add_edge(je.at(0).get<std::string>(), je.at(1).get<std::string>());
    }
    return g;
}

std::vector<FibreCase> fibre_cases_from_json(const Json& j) {
    std::vector<FibreCase> out;
    if (j.contains("fibres")) {
        FibreCase c;
        c.name = j.value("name", "pencil");
        std::vector<FibreTag> pencil;
        for (const auto& t : j.at("fibres"))
            pencil.push_back(parse_fibre_tag(t.get<std::string>()));
        c.pencils.push_back(pencil);
        out.push_back(c);
        return out;
    }
    for (const auto& jc : j.at("cases")) {
        FibreCase c;
        c.name = jc.at("name").get<std::string>();
        for (const auto& jp : jc.at("pencils")) {
            std::vector<FibreTag> pencil;
            for (const auto& t : jp)
                pencil.push_back(parse_fibre_tag(t.get<std::string>()));
            c.pencils.push_back(pencil);
        }
        out.push_back(c);
    }
    return out;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DegenerateInput("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DegenerateInput("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out)
        throw DegenerateInput("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

std::string data_file(const std::string& name) {
    return std::string(ENR7_DATA_DIR) + "/" + name;
}

} // namespace enr7
