#pragma once

#include <string>

#include "ordercone/order_space.hpp"

namespace ordercone {

// On-disk cone description:
//   {"dim": 3, "generators": [["1","0","1"], ...], "name": "...", "description": "..."}
// Entries are rational strings; floats are rejected.
struct ConeSpec {
    std::size_t dim = 0;
    std::vector<Vec> generators;
    std::string name;
    std::string description;
};

ConeSpec parse_cone_spec(const std::string& json_text);

// Reads a file, or stdin when the path is "-".
ConeSpec load_cone_spec(const std::string& path);

std::string cone_spec_to_json(const ConeSpec& spec);

// Parse + validate in one step.
OrderedSpace load_spec(const std::string& path);

} // namespace ordercone
