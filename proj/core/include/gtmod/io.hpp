#pragma once

#include <string>

#include "gtmod/singular_module.hpp"
#include "gtmod/tableau.hpp"

namespace gtmod {

struct TableauInput {
  SeedTableau seed;
  IntegerPattern z0;  // nonzero only when the seed was normalized from raw entries
};

// {"n": 3, "rows": [["0/1","1/1","1/2"], ["0/1","0/1"], ["0/1"]], "singular": [[2,1,2]]}
// Rows are listed top row first. Without "singular" the entries are treated as
// raw and normalized.
TableauInput parse_tableau(const std::string& json_text);
std::string tableau_to_json(const SeedTableau& seed);

// Rows n-1 down to 1, matching the tableau layout.
IntegerPattern parse_pattern(int n, const std::string& json_text);
std::string pattern_to_json(const IntegerPattern& z);

// I as a list of 1-based pair indices.
std::uint32_t parse_index(int t, const std::string& json_text);

// [{"I": [r,...], "z": [[...],...], "coeff": "p/q"}, ...]
std::string module_element_to_json(const ModuleElement& e);
ModuleElement parse_module_element(int n, const std::string& json_text);

std::string module_element_to_text(const ModuleElement& e);

}  // namespace gtmod
