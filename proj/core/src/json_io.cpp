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

#include "fanlab/json_io.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "fanlab/error.hpp"

namespace fanlab::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

void only_keys(const Json& j, std::set<std::string> allowed) {
  allowed.insert("name");
  allowed.insert("description");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw SchemaError("unexpected field '" + it.key() + "'");
}

std::int64_t as_int(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    throw SchemaError(std::string(what) + " is out of range");
  return v.get<std::int64_t>();
}

mpq_class as_rational(const Json& v) {
  if (v.is_string()) return exactlin::parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return mpq_class(mpz_class(std::to_string(v.get<std::int64_t>())));
  throw SchemaError("rational entries must be strings like \"p/q\" or integers");
}

}  // namespace

fan::Fan fan_from_json(const Json& j) {
  only_keys(j, {"dim", "rays", "cones"});
  const std::int64_t d = as_int(field(j, "dim"), "dim");
  if (d < 0 || d > 64) throw SchemaError("dim out of range");
  const Json& rays = field(j, "rays");
  const Json& cones = field(j, "cones");
  if (!rays.is_array() || !cones.is_array()) throw SchemaError("rays and cones must be arrays");
  std::vector<exactlin::IntVec> rv;
  for (const Json& r : rays) {
    if (!r.is_array()) throw SchemaError("each ray must be an array");
    exactlin::IntVec v;
    for (const Json& x : r) v.push_back(as_int(x, "ray entry"));
    rv.push_back(std::move(v));
  }
  std::vector<fan::Cone> cv;
  for (const Json& c : cones) {
    if (!c.is_array()) throw SchemaError("each cone must be an array");
    fan::Cone cone;
    for (const Json& x : c) {
      std::int64_t i = as_int(x, "cone index");
      if (i < 0 || i >= static_cast<std::int64_t>(rv.size()))
        throw SchemaError("cone index " + std::to_string(i) + " is out of range");
      cone.push_back(static_cast<int>(i));
    }
    cv.push_back(std::move(cone));
  }
  return fan::Fan(static_cast<int>(d), std::move(rv), std::move(cv));
}

Json fan_to_json(const fan::Fan& f) {
  Json j;
  j["dim"] = f.dim();
  j["rays"] = Json::array();
  for (const auto& r : f.rays()) j["rays"].push_back(r);
  j["cones"] = Json::array();
  for (const auto& c : f.max_cones()) j["cones"].push_back(c);
  return j;
}

istheory::Divisor divisor_from_json(const Json& j, const fan::Fan& f) {
  only_keys(j, {"coeffs"});
  const Json& c = field(j, "coeffs");
  if (!c.is_array()) throw SchemaError("coeffs must be an array");
  if (static_cast<int>(c.size()) != f.num_rays())
    throw SchemaError("coeffs has " + std::to_string(c.size()) + " entries but the fan has " +
                      std::to_string(f.num_rays()) + " rays");
  istheory::Divisor d;
  for (const Json& x : c) d.coeffs.push_back(as_rational(x));
  return d;
}

Json divisor_to_json(const istheory::Divisor& d) {
  Json j;
  j["coeffs"] = Json::array();
  for (const auto& q : d.coeffs) j["coeffs"].push_back(exactlin::to_string(q));
  return j;
}

Json rat_vec_to_json(const exactlin::RatVec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(exactlin::to_string(q));
  return a;
}

Json cone_to_json(const fan::Cone& c) {
  Json a = Json::array();
  for (int i : c) a.push_back(i);
  return a;
}

Json polytope_to_json(const istheory::Polytope& p) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : p.vertices) j["vertices"].push_back(rat_vec_to_json(v));
  j["dim"] = p.dim();
  return j;
}

istheory::Polytope polytope_from_json(const Json& j) {
  only_keys(j, {"vertices", "dim"});
  const Json& vs = field(j, "vertices");
  if (!vs.is_array() || vs.empty()) throw SchemaError("vertices must be a nonempty array");
  istheory::Polytope p;
  for (const Json& v : vs) {
    if (!v.is_array()) throw SchemaError("each vertex must be an array");
    exactlin::RatVec rv;
    for (const Json& x : v) rv.push_back(as_rational(x));
    if (!p.vertices.empty() && rv.size() != p.vertices[0].size())
      throw SchemaError("vertices have different lengths");
    p.vertices.push_back(std::move(rv));
  }
  std::sort(p.vertices.begin(), p.vertices.end());
  p.vertices.erase(std::unique(p.vertices.begin(), p.vertices.end()), p.vertices.end());
  std::vector<exactlin::RatVec> diffs;
  for (std::size_t i = 1; i < p.vertices.size(); ++i) diffs.push_back(exactlin::sub(p.vertices[i], p.vertices[0]));
  p.direction = exactlin::Subspace::span(p.vertices[0].size(), diffs);
  if (j.contains("dim") && as_int(j["dim"], "dim") != static_cast<std::int64_t>(p.dim()))
    throw SchemaError("stated dim does not match the vertices");
  return p;
}

polymat::DimFunction dimfn_from_json(const Json& j) {
  only_keys(j, {"N", "b"});
  const std::int64_t n = as_int(field(j, "N"), "N");
  if (n < 1 || n > 9) throw SchemaError("N must be between 1 and 9");
  const Json& b = field(j, "b");
  if (!b.is_object()) throw SchemaError("b must be an object keyed by subsets");
  std::map<std::string, int> values;
  for (auto it = b.begin(); it != b.end(); ++it) {
    std::int64_t v = as_int(it.value(), "b value");
    if (v < 0 || v > std::numeric_limits<int>::max()) throw SchemaError("b value out of range");
    values[it.key()] = static_cast<int>(v);
  }
  try {
    return polymat::DimFunction::from_digits(static_cast<int>(n), values);
  } catch (const PreconditionError& e) {
    throw SchemaError(e.what());
  }
}

Json dimfn_to_json(const polymat::DimFunction& b) {
  Json j;
  j["N"] = b.n();
  Json vals;
  // Order by size, then lexicographically, so "12" follows "3".
  std::vector<polymat::Subset> subsets;
  for (polymat::Subset s = 1; s <= b.full_mask(); ++s) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end(), [](polymat::Subset x, polymat::Subset y) {
    const int px = std::popcount(x), py = std::popcount(y);
    if (px != py) return px < py;
    return polymat::subset_digits(x) < polymat::subset_digits(y);
  });
  for (polymat::Subset s : subsets) vals[polymat::subset_digits(s)] = b[s];
  j["b"] = vals;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

}  // namespace fanlab::io
