#include "ordercone/spec_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "ordercone/errors.hpp"

namespace ordercone {

using json = nlohmann::ordered_json;

ConeSpec parse_cone_spec(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("cone spec must be a JSON object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw ParseError("cone spec: missing integer field 'dim'");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw ParseError("cone spec: missing array field 'generators'");

    ConeSpec spec;
    const long long dim = j["dim"].get<long long>();
    if (dim < 1) throw ParseError("cone spec: 'dim' must be positive");
    spec.dim = static_cast<std::size_t>(dim);

    std::size_t row = 0;
    for (const auto& gen : j["generators"]) {
        if (!gen.is_array())
            throw ParseError("cone spec: generators[" + std::to_string(row) +
                             "] is not an array");
        Vec v;
        std::size_t col = 0;
        for (const auto& entry : gen) {
            std::string text;
            if (entry.is_string())
                text = entry.get<std::string>();
            else if (entry.is_number_integer())
                text = std::to_string(entry.get<long long>());
            else
                throw ParseError("cone spec: generators[" + std::to_string(row) + "][" +
                                 std::to_string(col) +
                                 "] must be a rational string or integer");
            try {
                v.push_back(parse_rat(text));
            } catch (const ParseError& e) {
                throw ParseError("cone spec: generators[" + std::to_string(row) + "][" +
                                 std::to_string(col) + "]: " + e.what());
            }
            ++col;
        }
        if (v.size() != spec.dim)
            throw ParseError("cone spec: generators[" + std::to_string(row) +
                             "] has length " + std::to_string(v.size()) + ", expected " +
                             std::to_string(spec.dim));
        spec.generators.push_back(std::move(v));
        ++row;
    }
    if (spec.generators.empty()) throw ParseError("cone spec: no generators");

    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ParseError("cone spec: 'name' must be a string");
        spec.name = j["name"].get<std::string>();
    }
    if (j.contains("description")) {
        if (!j["description"].is_string())
            throw ParseError("cone spec: 'description' must be a string");
        spec.description = j["description"].get<std::string>();
    }
    return spec;
}

ConeSpec load_cone_spec(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return parse_cone_spec(text);
}

std::string cone_spec_to_json(const ConeSpec& spec) {
    json j;
    j["dim"] = spec.dim;
    j["generators"] = json::array();
    for (const auto& g : spec.generators) {
        json row = json::array();
        for (const auto& x : g) row.push_back(rat_to_string(x));
        j["generators"].push_back(row);
    }
    if (!spec.name.empty()) j["name"] = spec.name;
    if (!spec.description.empty()) j["description"] = spec.description;
    return j.dump(2) + "\n";
}

OrderedSpace load_spec(const std::string& path) {
    ConeSpec spec = load_cone_spec(path);
    return validate(spec.generators, spec.dim);
}

} // namespace ordercone
