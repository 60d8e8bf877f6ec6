#include "gtmod/io.hpp"

#include <sstream>

#include "gtmod/errors.hpp"
#include "json.hpp"

namespace gtmod {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

ExactScalar scalar_from(const json& j) {
  if (j.is_string()) return ExactScalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return ExactScalar(j.get<std::int64_t>());
  throw ParseError("rational entries must be \"p/q\" strings or integers");
}

json pattern_json(const IntegerPattern& z) {
  json rows = json::array();
  for (int i = z.n() - 1; i >= 1; --i) {
    json row = json::array();
    for (int j = 1; j <= i; ++j) row.push_back(z.at(i, j));
    rows.push_back(row);
  }
  return rows;
}

IntegerPattern pattern_from(int n, const json& rows) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n - 1)
    throw ParseError("pattern must list " + std::to_string(n - 1) + " rows");
  IntegerPattern z(n);
  for (int i = n - 1; i >= 1; --i) {
    const json& row = rows[n - 1 - i];
    if (!row.is_array() || static_cast<int>(row.size()) != i)
      throw ParseError("pattern row " + std::to_string(i) + " must have " + std::to_string(i) + " entries");
    for (int j = 1; j <= i; ++j) {
      if (!row[j - 1].is_number_integer()) throw ParseError("pattern entries must be integers");
      z.set(i, j, row[j - 1].get<int>());
    }
  }
  return z;
}

std::uint32_t index_from(int t, const json& j) {
  if (!j.is_array()) throw ParseError("derivative index must be a list of pair numbers");
  std::uint32_t mask = 0;
  for (const auto& r : j) {
    if (!r.is_number_integer()) throw ParseError("pair numbers must be integers");
    int v = r.get<int>();
    if (v < 1 || v > t) throw ParseError("pair number " + std::to_string(v) + " out of range");
    mask |= 1u << (v - 1);
  }
  return mask;
}

json index_json(std::uint32_t mask) {
  json out = json::array();
  for (int r = 1; r <= 32; ++r)
    if (mask & (1u << (r - 1))) out.push_back(r);
  return out;
}

}  // namespace

TableauInput parse_tableau(const std::string& json_text) {
  json doc = parse_json(json_text);
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows")) throw ParseError("tableau needs \"n\" and \"rows\"");
  if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const int n = doc["n"].get<int>();
  if (n < 1 || n > kMaxRank) throw ParseError("rank must be between 1 and " + std::to_string(kMaxRank));
  const json& rows = doc["rows"];
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw ParseError("tableau must list n rows");
  std::vector<ExactScalar> entries(tableau_size(n));
  for (int i = n; i >= 1; --i) {
    const json& row = rows[n - i];
    if (!row.is_array() || static_cast<int>(row.size()) != i)
      throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(i) + " entries");
    for (int j = 1; j <= i; ++j) entries[cell_index(i, j)] = scalar_from(row[j - 1]);
  }
  if (!doc.contains("singular")) {
    NormalizedSeed ns = normalize_seed(n, entries);
    return {std::move(ns.seed), ns.z0};
  }
  std::vector<Triple> declared;
  for (const auto& tr : doc["singular"]) {
    if (!tr.is_array() || tr.size() != 3) throw ParseError("singular triples are [k, i, j]");
    declared.push_back({tr[0].get<int>(), tr[1].get<int>(), tr[2].get<int>()});
  }
  return {validate_seed(n, std::move(entries), std::move(declared)), IntegerPattern(n)};
}

std::string tableau_to_json(const SeedTableau& seed) {
  const int n = seed.n();
  json rows = json::array();
  for (int i = n; i >= 1; --i) {
    json row = json::array();
    for (int j = 1; j <= i; ++j) row.push_back(seed.at(i, j).str());
    rows.push_back(row);
  }
  json sing = json::array();
  for (const auto& tr : seed.singular()) sing.push_back({tr.k, tr.i, tr.j});
  json doc;
  doc["n"] = n;
  doc["rows"] = rows;
  doc["singular"] = sing;
  return doc.dump();
}

IntegerPattern parse_pattern(int n, const std::string& json_text) { return pattern_from(n, parse_json(json_text)); }

std::string pattern_to_json(const IntegerPattern& z) { return pattern_json(z).dump(); }

std::uint32_t parse_index(int t, const std::string& json_text) { return index_from(t, parse_json(json_text)); }

std::string module_element_to_json(const ModuleElement& e) {
  json out = json::array();
  for (const auto& [b, c] : e) {
    json term;
    term["I"] = index_json(b.index);
    term["z"] = pattern_json(b.pattern);
    term["coeff"] = c.str();
    out.push_back(term);
  }
  return out.dump();
}

ModuleElement parse_module_element(int n, const std::string& json_text) {
  json doc = parse_json(json_text);
  if (!doc.is_array()) throw ParseError("module element must be a list of terms");
  ModuleElement out;
  for (const auto& term : doc) {
    if (!term.is_object() || !term.contains("I") || !term.contains("z") || !term.contains("coeff"))
      throw ParseError("terms need \"I\", \"z\" and \"coeff\"");
    CanonicalBasisVector b{index_from(32, term["I"]), pattern_from(n, term["z"])};
    add_term(out, b, scalar_from(term["coeff"]));
  }
  return out;
}

std::string module_element_to_text(const ModuleElement& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : e) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ") D{";
    bool f2 = true;
    for (int r = 1; r <= 32; ++r)
      if (b.index & (1u << (r - 1))) {
        os << (f2 ? "" : ",") << r;
        f2 = false;
      }
    os << "} T(v + " << pattern_json(b.pattern).dump() << ")";
  }
  return os.str();
}

}  // namespace gtmod
