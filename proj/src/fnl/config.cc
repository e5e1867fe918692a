// Copyright 2026 The fnl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fnl/config.h"

#include <cstdlib>
#include <string>

#include "fnl/errors.h"

namespace fnl {

namespace {

std::uint64_t parse_positive(const char *name, const char *text) {
    std::string s(text);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception &) {
        throw ValidationError(std::string(name) + " must be a positive integer, got '" + s + "'");
    }
    if (used != s.size() || v == 0) {
        throw ValidationError(std::string(name) + " must be a positive integer, got '" + s + "'");
    }
    return v;
}

}  // namespace

Limits Limits::from_environment() {
    Limits limits;
    if (const char *cap = std::getenv("FNL_DET_CAP")) {
        limits.deterministic_cap = parse_positive("FNL_DET_CAP", cap);
    }
    if (const char *cap = std::getenv("FNL_DIM_CAP")) {
        limits.dimension_cap = static_cast<int>(parse_positive("FNL_DIM_CAP", cap));
    }
    return limits;
}

}  // namespace fnl
