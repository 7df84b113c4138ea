#pragma once

#include "enriques7/codes.hpp"
#include "enriques7/lattice.hpp"
#include "enriques7/tripoly.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace enr7 {

// ordered_json keeps member order stable so serialized output is byte-deterministic
using Json = nlohmann::ordered_json;

Json qi_to_json(const Qi& z);
Qi qi_from_json(const Json& j);

// {"field":"Qi","convention":"x1-degree","coeffs":[{"exp":[a,b,c],"re":…,"im":…},…]}
// exponents count the second coordinate of each factor; zero coefficients omitted
Json form_to_json(const TriForm& f);
TriForm form_from_json(const Json& j);

Json point_to_json(const TriPoint& p);
TriPoint point_from_json(const Json& j);
// command-line form "1:2,1:3,1:5"
TriPoint parse_point_arg(const std::string& s);

Json code_to_json(const BinaryCode& c);
BinaryCode code_from_json(const Json& j);

Json graph_to_json(const DualGraph& g);
DualGraph graph_from_json(const Json& j);

struct FibreCase {
    std::string name;
    std::vector<std::vector<FibreTag>> pencils;
};
std::vector<FibreCase> fibre_cases_from_json(const Json& j);

Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

// resolves a bundled data file name against the build-time data directory
std::string data_file(const std::string& name);

} // namespace enr7
