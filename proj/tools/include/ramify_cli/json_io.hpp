// Copyright 2026 The Ramify Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RAMIFY_CLI_JSON_IO_HPP_
#define RAMIFY_CLI_JSON_IO_HPP_

#include "json.hpp"

#include "ramify/census.hpp"
#include "ramify/cover.hpp"
#include "ramify/deform.hpp"
#include "ramify/family.hpp"

namespace ramify::cli {

using nlohmann::json;

json to_json(const Point& p);
json to_json(const Divisor& d);
json to_json(const Mobius& m, char var);
json to_json(const NormalizedCover& n);
json to_json(const DeformationVector& v, FieldSpec field);
json to_json(const CensusRecord& r);
json to_json(const FamilyReport& r);
json to_json(const PolyVec& v);

// Inverse of to_json(Divisor) over `field` (points may live in an extension
// named by the element format, so the caller passes the field they were printed in).
Divisor divisor_from_json(const json& j, FieldSpec field);

}  // namespace ramify::cli

#endif  // RAMIFY_CLI_JSON_IO_HPP_
