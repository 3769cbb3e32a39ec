// Copyright 2026 The Authors.
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

// JSON forms of fans, divisors, polytopes and dimension functions.

#ifndef FANLAB_JSON_IO_HPP_
#define FANLAB_JSON_IO_HPP_

#include <nlohmann/json.hpp>

#include <string>

#include "fanlab/fan.hpp"
#include "fanlab/istheory.hpp"
#include "fanlab/polymat.hpp"

namespace fanlab::io {

using Json = nlohmann::ordered_json;

// {"dim": d, "rays": [[...]], "cones": [[...]]}, 0-based indices.
fan::Fan fan_from_json(const Json& j);
Json fan_to_json(const fan::Fan& f);

// {"coeffs": ["p/q", ...]}
istheory::Divisor divisor_from_json(const Json& j, const fan::Fan& f);
Json divisor_to_json(const istheory::Divisor& d);

// {"vertices": [["p/q", ...], ...], "dim": k}
Json polytope_to_json(const istheory::Polytope& p);
istheory::Polytope polytope_from_json(const Json& j);

// {"N": n, "b": {"1": .., "12": .., ...}}
polymat::DimFunction dimfn_from_json(const Json& j);
Json dimfn_to_json(const polymat::DimFunction& b);

Json rat_vec_to_json(const exactlin::RatVec& v);
Json cone_to_json(const fan::Cone& c);

// Reads and parses a file; throws SchemaError on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace fanlab::io

#endif  // FANLAB_JSON_IO_HPP_
