// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#include "isoradix/curvefile.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace isoradix {

namespace {

bigint parse_bigint(const nlohmann::json& v, const char* field, int line) {
  try {
    if (v.is_string()) return bigint(v.get<std::string>());
    if (v.is_number_integer()) return bigint(v.get<long long>());
  } catch (const std::exception&) {
    // fall through to the shared error
  }
  throw UserError("curve file line " + std::to_string(line) + ": field '" + field +
                  "' must be a decimal-string integer");
}

}  // namespace

IngestResult ingest_curves(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UserError("cannot open curve file '" + path.string() + "'");

  IngestResult result;
  std::map<std::string, int> seen;  // label -> first line
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;

    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw UserError("curve file line " + std::to_string(line_no) + ": malformed JSON (" + e.what() + ")");
    }
    if (!j.is_object() || !j.contains("label") || !j["label"].is_string() || !j.contains("a") || !j.contains("b"))
      throw UserError("curve file line " + std::to_string(line_no) +
                      ": expected {\"label\": string, \"a\": decimal string, \"b\": decimal string}");

    const std::string label = j["label"].get<std::string>();
    if (auto it = seen.find(label); it != seen.end())
      throw UserError("DuplicateLabel: '" + label + "' at line " + std::to_string(line_no) + " (first at line " +
                      std::to_string(it->second) + ")");
    seen.emplace(label, line_no);

    bigint a = parse_bigint(j["a"], "a", line_no);
    bigint b = parse_bigint(j["b"], "b", line_no);
    if (4 * a * a * a + 27 * b * b == 0) {
      result.rejected.push_back(
          RejectedCurve{label, line_no, "singular model: disc = -16(4a^3 + 27b^2) = 0"});
      continue;
    }
    result.curves.emplace_back(label, std::move(a), std::move(b));
  }
  return result;
}

const std::vector<RationalCurve>& builtin_curves() {
  // cm_i / cm_i_iso are a 2-isogenous pair (kernel generated by (0,0));
  // c11a is the conductor-11 model with c11a_t5 its twist by 5;
  // e37a / e389a are short models of the standard rank-1 and rank-2 curves;
  // gen_* are unremarkable non-CM curves for pair scans.
  static const std::vector<RationalCurve> curves = {
      RationalCurve("cm_i", 1, 0),
      RationalCurve("cm_i_iso", -4, 0),
      RationalCurve("cm_j", 0, 1),
      RationalCurve("c11a", -13392, -1080432),
      RationalCurve("c11a_t5", bigint(-13392) * 25, bigint(-1080432) * 125),
      RationalCurve("e37a", -16, 16),
      RationalCurve("e389a", -3024, 46224),
      RationalCurve("gen_a", -2, 2),
      RationalCurve("gen_b", 3, 4),
      RationalCurve("gen_c", -7, 10),
  };
  return curves;
}

const RationalCurve& find_curve(const std::string& label, const IngestResult* ingested) {
  if (ingested)
    for (const RationalCurve& E : ingested->curves)
      if (E.label == label) return E;
  for (const RationalCurve& E : builtin_curves())
    if (E.label == label) return E;

  std::ostringstream hint;
  hint << "unknown curve label '" << label << "'; available:";
  if (ingested)
    for (const RationalCurve& E : ingested->curves) hint << " " << E.label;
  for (const RationalCurve& E : builtin_curves()) hint << " " << E.label;
  hint << " (pass --curves FILE to add your own)";
  throw UserError(hint.str());
}

}  // namespace isoradix
