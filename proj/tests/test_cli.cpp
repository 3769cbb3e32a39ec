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

#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fanlab::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus_file(const std::string& name) { return std::string(FANLAB_CORPUS_DIR) + "/" + name + ".json"; }

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("fanlab_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents = "") const {
    const fs::path p = path_ / name;
    if (!contents.empty()) std::ofstream(p) << contents;
    return p.string();
  }

 private:
  fs::path path_;
};

TEST(Validate, ExitCodes) {
  const Result sq = call({"validate", corpus_file("sq2")});
  EXPECT_EQ(sq.code, 0);
  EXPECT_TRUE(sq.json()["complete"].get<bool>());
  const Result p2 = call({"validate", corpus_file("p2")});
  EXPECT_EQ(p2.code, 1);
  EXPECT_EQ(p2.json()["flag"]["witness"], Json({0, 1, 2}));
  TempDir tmp;
  EXPECT_EQ(call({"validate", tmp.file("bad.json", "{\"dim\": 2, \"rays\": [")}).code, 2);
  EXPECT_EQ(call({"validate", tmp.file("shape.json", "{\"dim\": 2, \"rays\": [[1,0]], \"cones\": [[0,3]]}")}).code, 2);
  EXPECT_EQ(call({"validate", tmp.file("missing.json")}).code, 2);
}

TEST(Signature, Reports) {
  const Json pe = call({"signature", corpus_file("pent")}).json();
  EXPECT_EQ(pe["signature"], -1);
  EXPECT_EQ(pe["witnesses"].size(), 3u);
  EXPECT_TRUE(pe["agrees"].get<bool>());
  const Result cp = call({"signature", corpus_file("cp4"), "--threads", "2"});
  EXPECT_EQ(cp.code, 0);
  EXPECT_EQ(cp.json()["gamma"], Json({1, 0, 0}));
  EXPECT_EQ(call({"signature", corpus_file("p2")}).code, 1);
}

TEST(Structure, Analyses) {
  EXPECT_EQ(call({"structure", "four-cycles", corpus_file("sq2")}).json()["cycles"], Json::parse("[[0,1,2,3]]"));
  for (const char* a : {"special-rays", "suspensions", "blocks", "dichotomy", "cross-polytope", "pdover2"})
    EXPECT_EQ(call({"structure", a, corpus_file("cp4")}).code, 0) << a;
  EXPECT_EQ(call({"structure", "special-rays", corpus_file("cp4"), "--p-max", "1"}).code, 0);
  EXPECT_EQ(call({"structure", "special-rays", corpus_file("cp4"), "--p-max", "3"}).code, 1);
  EXPECT_EQ(call({"structure", "nonsense", corpus_file("cp4")}).code, 2);
}

TEST(Oddtuple, Runs) {
  const Json m = call({"oddtuple", corpus_file("modular-triple"), "--oracle"}).json();
  EXPECT_EQ(m["runs"][0]["a"], Json({3, 3, 3}));
  EXPECT_TRUE(m["agree"].get<bool>());
  const Result inc = call({"oddtuple", corpus_file("incompat-triple"), "--all-perms", "--oracle"});
  EXPECT_EQ(inc.code, 0);
  EXPECT_EQ(inc.json()["compatible_runs"], 0);
  EXPECT_EQ(inc.json()["incompatible_runs"], 6);
  const Json one = call({"oddtuple", corpus_file("incompat-triple"), "--perm", "123", "--ledgers"}).json();
  EXPECT_EQ(one["runs"][0]["a"], Json({3, 1, 3}));
  EXPECT_EQ(one["runs"][0]["first_failure"], "1");
  EXPECT_EQ(call({"oddtuple", corpus_file("parity-mismatch")}).code, 1);
  EXPECT_EQ(call({"oddtuple", corpus_file("modular-triple"), "--perm", "112"}).code, 2);
}

TEST(Conormal, Report) {
  const Result r = call({"conormal", corpus_file("pent"), "--pcone", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["polytope"]["dim"], 1);
  EXPECT_EQ(call({"conormal", corpus_file("pent"), "--pcone", "0,2"}).code, 1);
}

TEST(Nef, Report) {
  TempDir tmp;
  EXPECT_EQ(call({"nef", corpus_file("sq2"), tmp.file("d.json", R"({"coeffs": ["1", "0", "0", "0"]})")}).code, 0);
  EXPECT_EQ(call({"nef", corpus_file("pent"), tmp.file("e.json", R"({"coeffs": ["0", "0", "0", "0", "-1"]})")}).code, 1);
  EXPECT_EQ(call({"nef", corpus_file("sq2"), tmp.file("f.json", R"({"coeffs": ["1"]})")}).code, 2);
}

TEST(Corpus, BuildAndProduct) {
  TempDir tmp;
  const std::string dir = tmp.file("corpus");
  EXPECT_EQ(call({"corpus", "build", dir}).code, 0);
  EXPECT_TRUE(fs::exists(dir + "/cp4.json"));
  EXPECT_TRUE(fs::exists(dir + "/modular-triple.json"));
  const std::string out = tmp.file("prod.json");
  EXPECT_EQ(call({"corpus", "product", dir + "/sq2.json", dir + "/pent.json", out}).code, 0);
  std::ifstream a(out), b(corpus_file("sq2xpent"));
  Json ja = Json::parse(a), jb = Json::parse(b);
  ja.erase("name");
  jb.erase("name");
  EXPECT_EQ(ja, jb);
}

TEST(Global, PrettyAndHelp) {
  const Result p = call({"signature", corpus_file("sq2"), "--pretty"});
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("signature"), std::string::npos);
  EXPECT_THROW(Json::parse(p.out), Json::parse_error);
  EXPECT_EQ(call({"--help"}).code, 0);
  EXPECT_EQ(call({}).code, 2);
}

}  // namespace
}  // namespace fanlab::cli
