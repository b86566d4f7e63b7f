// Copyright (c) 2026 the isoradix authors
//
// Licensed under the Apache License, Version 2.0
// (see https://www.apache.org/licenses/LICENSE-2.0).

#pragma once

namespace isoradix {

inline constexpr const char* kToolName = "isoradix";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace isoradix
