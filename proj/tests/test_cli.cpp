// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"

#include "cli.hpp"
#include "schema.hpp"

#include "ncg/finite_triple.hpp"
#include "ncg/triple_io.hpp"

#include "json.hpp"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ncg-cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = ncg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

class Scratch {
 public:
  Scratch() {
    dir_ = fs::temp_directory_path() / ("ncg-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string write_json(const std::string& name, const json& doc) const { return write(name, doc.dump()); }
  fs::path path(const std::string& name) const { return dir_ / name; }

 private:
  fs::path dir_;
};

json parse_valid(const Outcome& o, const std::string& schema) {
  const json doc = json::parse(o.out);
  const auto problems = ncg::cli::SchemaRegistry::builtin().validate(doc, schema);
  for (const auto& p : problems) MESSAGE(p);
  CHECK(problems.empty());
  return doc;
}

json event(double t, double x) { return {{"t", t}, {"x", {x, 0.0, 0.0}}}; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("embedded schemas are present and self-consistent") {
  const auto& registry = ncg::cli::SchemaRegistry::builtin();
  for (const char* name : {"common.schema.json", "triple.schema.json", "distance.result.schema.json",
                           "causal.input.schema.json", "error.schema.json"}) {
    CHECK(registry.contains(name));
  }
  CHECK(registry.validate(ncg::triple_to_json(ncg::electroweak_triple({0.3, 0.4})), "triple.schema.json").empty());
  CHECK_FALSE(registry.validate(json{{"dim_H", 2}}, "triple.schema.json").empty());
  CHECK_FALSE(registry.validate(json{{"dim_H", 2}, {"generators", json::array()}, {"D_F", {{0, 1}, {1, 0}}},
                                     {"extra", 1}},
                                "triple.schema.json")
                  .empty());
}

TEST_CASE("distance on the two-point space") {
  Scratch s;
  const std::string triple = s.write_json("two_point.json", ncg::triple_to_json(ncg::two_point_triple(2.0)));
  const Outcome o = invoke({"distance", "--triple", triple, "--state-a", "0", "--state-b", "1"});
  REQUIRE(o.code == 0);
  const json r = parse_valid(o, "distance.result.schema.json");
  CHECK(r["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r["oracle"].is_null());

  const Outcome mixed = invoke({"distance", "--triple", triple, "--state-a", "0.25,0.75", "--state-b", "1",
                                "--oracle-step", "1e-3"});
  REQUIRE(mixed.code == 0);
  const json rm = parse_valid(mixed, "distance.result.schema.json");
  CHECK(rm["value"].get<double>() == doctest::Approx(0.125).epsilon(1e-9));
  CHECK(rm["gap"].get<double>() <= 2e-3);

  const std::string degenerate = s.write_json("m0.json", ncg::triple_to_json(ncg::two_point_triple(0.0)));
  const Outcome inf = invoke({"distance", "--triple", degenerate, "--state-a", "0", "--state-b", "1"});
  REQUIRE(inf.code == 0);
  const json ri = parse_valid(inf, "distance.result.schema.json");
  CHECK(ri["value"] == "inf");
  CHECK(ri["infinite"] == true);
}

TEST_CASE("validate") {
  Scratch s;
  const std::string good = s.write_json("ew.json", ncg::triple_to_json(ncg::electroweak_triple(1.0)));
  const Outcome o = invoke({"validate", good});
  REQUIRE(o.code == 0);
  CHECK(parse_valid(o, "validate.result.schema.json")["passed"] == true);

  const std::string bad = s.write("bad.json", R"({"dim_H": 2, "generators": [], "D_F": [[0, 1], [2, 0]]})");
  const Outcome b = invoke({"validate", bad});
  REQUIRE(b.code == 0);
  const json rb = parse_valid(b, "validate.result.schema.json");
  CHECK(rb["passed"] == false);
  CHECK(rb["checks"][0]["name"] == "dirac_hermitian");
  CHECK(rb["checks"][0]["passed"] == false);
}

TEST_CASE("causal") {
  Scratch s;
  const std::string same = s.write_json("same.json", json{{"eventA", event(0, 0)}, {"eventB", event(0, 0)},
                                                     {"sheets", {0, 0}}, {"m", 1.0}});
  const Outcome o = invoke({"causal", same});
  REQUIRE(o.code == 0);
  CHECK(parse_valid(o, "causal.result.schema.json")["related"] == true);

  const double half_pi = std::numbers::pi / 2.0;
  const std::string cross = s.write_json("cross.json", json{{"eventA", event(0, 0)}, {"eventB", event(half_pi, 0)},
                                                       {"sheets", {0, 1}}, {"m", {1.0, 0.0}}});
  const json rc = parse_valid(invoke({"causal", cross}), "causal.result.schema.json");
  CHECK(rc["related"] == true);
  CHECK(rc["L2m"].get<double>() == 0.0);
  CHECK(rc["threshold"].get<double>() == half_pi);

  const std::string mixed = s.write_json("mixed.json", json{{"eventA", event(0, 0)}, {"eventB", event(1.0, 0.5)},
                                                       {"xis", {0.2, 0.9}}, {"m", 0.0}});
  const json rm = parse_valid(invoke({"causal", mixed}), "causal.result.schema.json");
  CHECK(rm["related"] == false);
  CHECK(rm["threshold"] == "inf");
}

TEST_CASE("cone") {
  Scratch s;
  const json t = parse_valid(invoke({"cone", s.write_json("t.json", json{{"gradient", {1, 0, 0, 0}}})}),
                             "cone.result.schema.json");
  CHECK(t["causal"] == true);
  CHECK(t["worst_eigenvalue"].get<double>() == doctest::Approx(-1.0));
  const json x = parse_valid(invoke({"cone", s.write_json("x.json", json{{"gradient", {0, 1, 0, 0}}})}),
                             "cone.result.schema.json");
  CHECK(x["causal"] == false);

  const json box = {{"t", {0, 1}}, {"x", {-1, 1}}, {"y", {0, 0}}, {"z", {0, 0}}, {"samples_per_axis", 3}};
  const json two = {{"sheet0", {{"gradient", {1, 0, 0, 0}}}},
                    {"sheet1", {{"gradient", {1, 0, 0, 0}}, {"constant", 0.4}}},
                    {"m", 2.0},
                    {"box", box}};
  const json r = parse_valid(invoke({"cone", s.write_json("two.json", two)}), "cone.result.schema.json");
  CHECK(r["causal"] == true);
  CHECK(r["samples"] == 81);
  CHECK(r["worst_eigenvalue"].get<double>() == doctest::Approx(-0.2));
}

TEST_CASE("lightcone-scan") {
  const Outcome o = invoke({"lightcone-scan", "--m", "1", "--t-max", "2", "--r-max", "1", "--steps", "3"});
  REQUIRE(o.code == 0);
  std::istringstream lines(o.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "t,r,sheet_crossing_allowed");
  int rows = 0;
  int allowed = 0;
  while (std::getline(lines, line)) {
    ++rows;
    allowed += line.back() == '1';
  }
  CHECK(rows == 9);
  // Crossing needs t^2 - r^2 >= pi^2 / 4: only the t = 2 row qualifies.
  CHECK(allowed == 3);
}

TEST_CASE("classify") {
  Scratch s;
  s.write_json("m4.json", ncg::triple_to_json(ncg::two_point_triple(4.0)));
  const std::string scenario = s.write_json(
      "classify.json", json{{"triple_file", "m4.json"}, {"E", 5}, {"p", {3, 0, 0}}, {"internal_index", 0}});
  const Outcome o = invoke({"classify", scenario});
  REQUIRE(o.code == 0);
  const json r = parse_valid(o, "classify.result.schema.json");
  CHECK(r["class"] == "Harmonic");
  CHECK(r["on_shell_E"].get<double>() == 5.0);

  const std::string inline_triple = s.write_json(
      "inline.json", json{{"triple", ncg::triple_to_json(ncg::two_point_triple(1.0))},
                          {"E", 10},
                          {"p", {1, 0, 0}},
                          {"internal_index", 1},
                          {"tol", 1e-6}});
  const json ri = parse_valid(invoke({"classify", inline_triple}), "classify.result.schema.json");
  CHECK(ri["class"] == "Causal");
  CHECK(ri["tolerance"].get<double>() == 1e-6);

  const std::string null_spinor = s.write_json(
      "null.json", json{{"triple_file", "m4.json"}, {"E", 5}, {"p", {3, 0, 0}}, {"internal_index", 0},
                        {"spinor", {1, 0, 1, 0}}});
  const Outcome n = invoke({"classify", null_spinor});
  CHECK(n.code == 1);
  CHECK(parse_valid(n, "error.schema.json")["error"] == "KreinNullError");
}

TEST_CASE("fluctuate and ew-dispersion") {
  Scratch s;
  const std::string f = s.write_json("f.json", json{{"m_e", 1.0}, {"h1", 0.0}, {"h2", 0.0}});
  const json r = parse_valid(invoke({"fluctuate", f}), "fluctuate.result.schema.json");
  CHECK(r["trace_phi_sq"].get<double>() == doctest::Approx(2.0));
  CHECK(r["closed_form"].get<double>() == 2.0);
  CHECK(r["max_abs_diff"].get<double>() <= 1e-12);

  const std::string fb = s.write_json("fb.json", json{{"m_e", {2.0, 0.0}}, {"v", 3.0}, {"h", 0.1}});
  const json rb = parse_valid(invoke({"fluctuate", fb}), "fluctuate.result.schema.json");
  CHECK(rb["closed_form"].get<double>() == doctest::Approx(2 * 4 * 3.1 * 3.1));
  CHECK(rb["trace_abs_diff"].get<double>() <= 1e-12);

  const std::string e = s.write_json("e.json", json{{"m_e", {0.6, 0.8}}, {"v", 2.0}, {"h", 0.1},
                                               {"p", {1.0, 0.0, 0.0}}, {"state", "e_L"}});
  const json re = parse_valid(invoke({"ew-dispersion", e}), "ew-dispersion.result.schema.json");
  CHECK(std::abs(re["residual"].get<double>()) <= 1e-10);
  CHECK(re["E_on_shell"].get<double>() == doctest::Approx(std::sqrt(1.0 + 2.1 * 2.1)));
  CHECK(re["harmonic"] == true);

  const std::string nu = s.write_json("nu.json", json{{"m_e", 1.0}, {"v", 2.0}, {"h", 0.0},
                                                 {"p", {0.0, 3.0, 4.0}}, {"state", "nu_L"}});
  const json rn = parse_valid(invoke({"ew-dispersion", nu}), "ew-dispersion.result.schema.json");
  CHECK(rn["E_on_shell"].get<double>() == doctest::Approx(5.0));
  CHECK(rn["mass_sq"].get<double>() == 0.0);
}

TEST_CASE("exit codes and error objects") {
  Scratch s;
  const Outcome malformed = invoke({"causal", s.write("broken.json", "{\"eventA\": ")});
  CHECK(malformed.code == 2);
  CHECK(parse_valid(malformed, "error.schema.json")["error"] == "MalformedJson");

  const std::string unknown = s.write_json("unknown.json", json{{"eventA", event(0, 0)}, {"eventB", event(0, 0)},
                                                           {"sheets", {0, 0}}, {"m", 1.0}, {"colour", "red"}});
  const Outcome schema = invoke({"causal", unknown});
  CHECK(schema.code == 2);
  CHECK(parse_valid(schema, "error.schema.json")["error"] == "SchemaViolation");

  CHECK(invoke({"causal", s.path("missing.json").string()}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"lightcone-scan"}).code == 2);

  const std::string bad_xi = s.write_json("xi.json", json{{"eventA", event(0, 0)}, {"eventB", event(1, 0)},
                                                     {"xis", {0.2, 0.5}}, {"m", 1.0}});
  CHECK(invoke({"causal", bad_xi}).code == 0);

  const std::string triple = s.write_json("tp.json", ncg::triple_to_json(ncg::two_point_triple(1.0)));
  const Outcome state = invoke({"distance", "--triple", triple, "--state-a", "0.5,0.6", "--state-b", "1"});
  CHECK(state.code == 1);
  CHECK(parse_valid(state, "error.schema.json")["error"] == "StateError");
  const Outcome index = invoke({"distance", "--triple", triple, "--state-a", "7", "--state-b", "1"});
  CHECK(index.code == 1);
  CHECK(invoke({"distance", "--triple", triple, "--state-a", "zero", "--state-b", "1"}).code == 2);

  const std::string wrong = s.write_json("wrong.json", json{{"m_e", 1.0}, {"v", 1.0}, {"h", 0.0},
                                                       {"p", {0, 0, 0}}, {"state", "e_L"}, {"extra", 0}});
  CHECK(invoke({"ew-dispersion", wrong}).code == 2);
}

TEST_CASE("global flags") {
  Scratch s;
  const std::string triple = s.write_json("tp.json", ncg::triple_to_json(ncg::two_point_triple(3.0)));
  const std::string out = s.path("result.json").string();
  const Outcome o = invoke({"--output", out, "distance", "--triple", triple, "--state-a", "0", "--state-b", "1"});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  std::ifstream in(out);
  const json r = json::parse(in);
  CHECK(r["value"].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-9));

  // Flags may follow the subcommand as well.
  const std::string cls = s.write_json("c.json", json{{"triple_file", "tp.json"}, {"E", 3.0 + 1e-7}, {"p", {0, 0, 0}},
                                                 {"internal_index", 0}});
  const json loose = json::parse(invoke({"classify", cls, "--tolerance", "1e-5"}).out);
  CHECK(loose["class"] == "Harmonic");
  const json strict = json::parse(invoke({"--tolerance", "1e-9", "classify", cls}).out);
  CHECK(strict["class"] == "Causal");
}

TEST_CASE("identical inputs give byte-identical output") {
  Scratch s;
  const std::string triple = s.write_json("tp.json", ncg::triple_to_json(ncg::two_point_triple({0.3, 1.7})));
  const std::vector<std::string> args{"--seed", "99", "distance", "--triple", triple, "--state-a", "0.3,0.7",
                                      "--state-b", "0.9,0.1"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const std::string f = s.write_json("f.json", json{{"m_e", {0.3, -0.2}}, {"h1", {0.1, 0.7}}, {"h2", {-1.2, 0.4}}});
  CHECK(invoke({"fluctuate", f}).out == invoke({"fluctuate", f}).out);
}

}  // TEST_SUITE
