// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "isoradix/curve.hpp"

namespace isoradix {

struct RejectedCurve {
  std::string label;
  int line = 0;
  std::string reason;
};

struct IngestResult {
  std::vector<RationalCurve> curves;
  std::vector<RejectedCurve> rejected;  // singular models, kept as diagnostics
};

// JSON-lines curve file: {"label": "...", "a": "<decimal>", "b": "<decimal>"}
// per line, integers as decimal strings so coefficients of any size survive.
// Malformed lines and duplicate labels are hard errors with line numbers;
// disc = 0 only rejects that curve.
IngestResult ingest_curves(const std::filesystem::path& path);

// Curves compiled into the tool: the CM pair, a 2-isogenous partner, the
// conductor-11 model with its quadratic twist by 5, and a few generic curves.
const std::vector<RationalCurve>& builtin_curves();

// Label lookup, user file first, then builtins.  Unknown labels raise a
// UserError listing what is available.
const RationalCurve& find_curve(const std::string& label, const IngestResult* ingested);

}  // namespace isoradix
