// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include "schema.hpp"

#include "ncg/causality.hpp"
#include "ncg/clifford.hpp"
#include "ncg/dispersion.hpp"
#include "ncg/distance.hpp"
#include "ncg/errors.hpp"
#include "ncg/finite_triple.hpp"
#include "ncg/fluctuation.hpp"
#include "ncg/triple_io.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ncg::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Malformed input: unreadable files, bad JSON, schema violations, bad flags.
class InputError : public std::runtime_error {
 public:
  InputError(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

struct GlobalFlags {
  std::optional<double> tolerance;
  std::optional<std::uint64_t> seed;
  std::string output;
};

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("InputError", "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("MalformedJson", path.string() + ": " + e.what());
  }
}

void require_schema(const json& doc, const std::string& schema) {
  const auto problems = SchemaRegistry::builtin().validate(doc, schema);
  if (problems.empty()) return;
  std::string message = "document does not match " + schema + ":";
  for (const auto& p : problems) message += "\n  " + p;
  throw InputError("SchemaViolation", message);
}

json extended(double x) {
  if (std::isinf(x) && x > 0) return "inf";
  return x;
}

Vector3 vector3(const json& j) { return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()}; }

Covector covector(const json& j) {
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

Event event(const json& j) { return {j["t"].get<double>(), vector3(j["x"])}; }

json complex_pair(Complex z) { return json::array({z.real(), z.imag()}); }

AffineFunction affine(const json& j) {
  return {covector(j["gradient"]), j.value("constant", 0.0)};
}

AlgebraState parse_state(const std::string& text, std::size_t dim) {
  if (text.find(',') == std::string::npos) {
    std::size_t used = 0;
    unsigned long index = 0;
    try {
      index = std::stoul(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty()) {
      throw InputError("UsageError", "state '" + text + "' is neither an index nor weights");
    }
    if (index >= dim) throw StateError("state index " + text + " out of range");
    return AlgebraState::pure(dim, index);
  }
  AlgebraState state;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double w = 0.0;
    try {
      w = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw InputError("UsageError", "bad weight '" + item + "' in state '" + text + "'");
    }
    state.weights.push_back(w);
  }
  return state;
}

json validate_command(const std::string& file, const GlobalFlags& flags) {
  const json doc = read_json_file(file);
  require_schema(doc, "triple.schema.json");
  const FiniteTriple triple = triple_from_json(doc);
  const auto report =
      validate_axioms(triple, build_gamma_basis(), flags.tolerance.value_or(kDefaultTolerance));
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"applicable", c.applicable},
                      {"passed", c.passed},
                      {"residual", c.residual}});
  }
  return {{"passed", report.all_passed()}, {"checks", checks}};
}

struct DistanceArgs {
  std::string triple;
  std::string state_a;
  std::string state_b;
  std::optional<double> oracle_step;
  std::optional<double> oracle_radius;
  std::optional<int> starts;
};

json distance_command(const DistanceArgs& args, const GlobalFlags& flags) {
  const json doc = read_json_file(args.triple);
  require_schema(doc, "triple.schema.json");
  const FiniteTriple triple = triple_from_json(doc);
  const auto dim = static_cast<std::size_t>(triple.dim);

  DistanceOptions options;
  if (flags.seed) options.seed = *flags.seed;
  if (flags.tolerance) options.tolerance = *flags.tolerance;
  if (args.starts) options.starts = *args.starts;
  if (args.oracle_step || args.oracle_radius) {
    GridSpec grid;
    if (args.oracle_step) grid.step = *args.oracle_step;
    grid.radius = args.oracle_radius;
    options.oracle = grid;
  }
  const DistanceResult r = connes_distance(triple, parse_state(args.state_a, dim),
                                           parse_state(args.state_b, dim), options);
  return {{"value", extended(r.value)},
          {"infinite", r.infinite()},
          {"maximizer", matrix_to_json(r.maximizer)},
          {"oracle", r.oracle ? json(*r.oracle) : json(nullptr)},
          {"gap", r.gap ? extended(*r.gap) : json(nullptr)}};
}

json causal_command(const std::string& file) {
  const json doc = read_json_file(file);
  require_schema(doc, "causal.input.schema.json");
  const Event a = event(doc["eventA"]);
  const Event b = event(doc["eventB"]);
  const Complex m = complex_from_json(doc["m"]);

  json out;
  out["proper_time"] = minkowski_precedes(a, b) ? json(proper_time(a, b)) : json(nullptr);
  if (doc.contains("sheets")) {
    const SheetPoint p{a, doc["sheets"][0].get<int>()};
    const SheetPoint q{b, doc["sheets"][1].get<int>()};
    out["mode"] = "pure";
    out["related"] = causally_related_pure(p, q, m);
    out["L2m"] = extended(extremal_length_sq_sheets(p, q, m));
    // Sheet 0 is the mixed state with xi = 1, sheet 1 the one with xi = 0.
    out["threshold"] = extended(mixed_state_threshold(p.sheet == 0 ? 1.0 : 0.0,
                                                      q.sheet == 0 ? 1.0 : 0.0, m));
  } else {
    const MixedState p{a, doc["xis"][0].get<double>()};
    const MixedState q{b, doc["xis"][1].get<double>()};
    out["mode"] = "mixed";
    out["related"] = causally_related_mixed(p, q, m);
    out["L2m"] = nullptr;
    out["threshold"] = extended(mixed_state_threshold(p.xi, q.xi, m));
  }
  return out;
}

json cone_command(const std::string& file, const GlobalFlags& flags) {
  const json doc = read_json_file(file);
  require_schema(doc, "cone.input.schema.json");
  const GammaBasis basis = build_gamma_basis();
  const double tol = flags.tolerance.value_or(kDefaultTolerance);

  if (doc.contains("gradient")) {
    const ConeVerdict v = check_causal_affine_function(covector(doc["gradient"]), basis, tol);
    return {{"causal", v.causal}, {"worst_eigenvalue", v.worst_eigenvalue}, {"samples", 1}};
  }

  const json& box = doc["box"];
  const int n = box.value("samples_per_axis", 5);
  auto axis = [&](const char* key, int i) {
    const double lo = box[key][0].get<double>();
    const double hi = box[key][1].get<double>();
    return n == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (n - 1);
  };
  std::vector<Event> samples;
  for (int it = 0; it < n; ++it)
    for (int ix = 0; ix < n; ++ix)
      for (int iy = 0; iy < n; ++iy)
        for (int iz = 0; iz < n; ++iz)
          samples.push_back({axis("t", it), {axis("x", ix), axis("y", iy), axis("z", iz)}});

  const ConeVerdict v = is_causal_element_two_sheet(affine(doc["sheet0"]), affine(doc["sheet1"]),
                                                    complex_from_json(doc["m"]), samples, basis,
                                                    tol);
  return {{"causal", v.causal},
          {"worst_eigenvalue", v.worst_eigenvalue},
          {"samples", samples.size()}};
}

struct ScanArgs {
  double m = 1.0;
  double t_max = 4.0;
  double r_max = 4.0;
  int steps = 41;
};

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string lightcone_scan(const ScanArgs& args) {
  if (args.steps < 2) throw InputError("UsageError", "--steps must be at least 2");
  if (!(args.t_max > 0.0) || !(args.r_max > 0.0)) {
    throw InputError("UsageError", "--t-max and --r-max must be positive");
  }
  std::string csv = "t,r,sheet_crossing_allowed\n";
  const SheetPoint origin{{}, 0};
  for (int i = 0; i < args.steps; ++i) {
    const double t = args.t_max * i / (args.steps - 1);
    for (int j = 0; j < args.steps; ++j) {
      const double r = args.r_max * j / (args.steps - 1);
      const SheetPoint target{{t, {r, 0.0, 0.0}}, 1};
      const bool allowed = causally_related_pure(origin, target, args.m);
      csv += format_double(t) + "," + format_double(r) + "," + (allowed ? "1" : "0") + "\n";
    }
  }
  return csv;
}

json classify_command(const std::string& file, const GlobalFlags& flags) {
  const json doc = read_json_file(file);
  require_schema(doc, "classify.input.schema.json");
  FiniteTriple triple;
  if (doc.contains("triple")) {
    triple = triple_from_json(doc["triple"]);
  } else {
    fs::path path = doc["triple_file"].get<std::string>();
    if (path.is_relative()) path = fs::path(file).parent_path() / path;
    const json tdoc = read_json_file(path);
    require_schema(tdoc, "triple.schema.json");
    triple = triple_from_json(tdoc);
  }

  PlaneWaveMode mode;
  mode.energy = doc["E"].get<double>();
  mode.momentum = vector3(doc["p"]);
  mode.internal = doc["internal_index"].get<Eigen::Index>();
  if (mode.internal >= triple.dim) throw StateError("internal_index out of range");
  if (doc.contains("spinor")) {
    mode.spinor = ComplexVector(4);
    for (int i = 0; i < 4; ++i) mode.spinor(i) = complex_from_json(doc["spinor"][i]);
  }
  const double tol =
      doc.contains("tol") ? doc["tol"].get<double>() : flags.tolerance.value_or(kHarmonicTolerance);
  const SpinorClass c = classify_spinor(triple, mode, build_gamma_basis(), tol);
  const double on_shell = on_shell_energy(mode.momentum, internal_mass(triple.dirac, mode.internal));
  return {{"class", std::string(to_string(c.kind))},
          {"ratio", c.ratio},
          {"on_shell_E", on_shell},
          {"tolerance", c.tolerance}};
}

HiggsField higgs_from(const json& doc) {
  if (doc.contains("v")) return HiggsField::broken(doc["v"].get<double>(), doc["h"].get<double>());
  return {complex_from_json(doc["h1"]), complex_from_json(doc["h2"])};
}

json fluctuate_command(const std::string& file) {
  const json doc = read_json_file(file);
  require_schema(doc, "fluctuate.input.schema.json");
  const Complex m_e = complex_from_json(doc["m_e"]);
  const HiggsField field = higgs_from(doc);

  const ComplexMatrix phi = higgs_phi(m_e, field);
  const auto [a, b] = admissible_pair(field);
  const ComplexMatrix fluctuated = inner_fluctuation(electroweak_triple(m_e), a, b);
  const double block = trace_phi_sq(higgs_phi_block(m_e, field));
  const double closed = trace_phi_sq_closed_form(m_e, field);
  return {{"Phi", matrix_to_json(phi)},
          {"h1", complex_pair(field.h1)},
          {"h2", complex_pair(field.h2)},
          {"trace_phi_sq", block},
          {"trace_Phi_sq_full", trace_phi_sq(phi)},
          {"closed_form", closed},
          {"trace_abs_diff", std::abs(block - closed)},
          {"max_abs_diff", max_abs(fluctuated - phi)}};
}

json ew_dispersion_command(const std::string& file, const GlobalFlags& flags) {
  const json doc = read_json_file(file);
  require_schema(doc, "ew-dispersion.input.schema.json");
  const Complex m_e = complex_from_json(doc["m_e"]);
  const double v = doc["v"].get<double>();
  const double h = doc["h"].get<double>();
  const Vector3 p = vector3(doc["p"]);
  const std::string state = doc["state"].get<std::string>();

  const double mass_sq = electroweak_mass_sq(m_e, v, h, state);
  const double energy = on_shell_energy(p, std::sqrt(mass_sq));
  const double residual = fluctuated_dispersion(electroweak_triple(m_e), m_e,
                                                HiggsField::broken(v, h), energy, p, state,
                                                build_gamma_basis());
  return {{"state", state},
          {"mass_sq", mass_sq},
          {"E_on_shell", energy},
          {"residual", residual},
          {"harmonic", std::abs(residual) <= flags.tolerance.value_or(kHarmonicTolerance)}};
}

json error_object(const std::string& name, const std::string& message, int code) {
  return {{"error", name}, {"message", message}, {"exit_code", code}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerics for almost-commutative Lorentzian spectral geometry", "ncg-cli"};
  app.require_subcommand(1);
  GlobalFlags flags;
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  auto* tol_opt = app.add_option("--tolerance", tolerance, "Numerical tolerance for every check");
  auto* seed_opt = app.add_option("--seed", seed, "Seed for randomized multi-start search");
  app.add_option("--output", flags.output, "Write the result here instead of stdout");

  std::string scenario;
  auto add_scenario_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("scenario", scenario, "Scenario JSON file")->required();
    return sub;
  };
  auto* validate = app.add_subcommand("validate", "Check the axioms of a finite triple");
  validate->fallthrough();
  validate->add_option("triple", scenario, "Triple JSON file")->required();

  DistanceArgs dist;
  auto* distance = app.add_subcommand("distance", "Spectral distance between two states");
  distance->fallthrough();
  distance->add_option("--triple", dist.triple, "Triple JSON file")->required();
  distance->add_option("--state-a", dist.state_a, "Basis index or comma-separated weights")
      ->required();
  distance->add_option("--state-b", dist.state_b, "Basis index or comma-separated weights")
      ->required();
  distance->add_option("--oracle-step", dist.oracle_step, "Also run the grid oracle");
  distance->add_option("--oracle-radius", dist.oracle_radius, "Grid half-width");
  distance->add_option("--starts", dist.starts, "Number of ascent starts");

  auto* causal = add_scenario_command("causal", "Causal relation between two states");
  auto* cone = add_scenario_command("cone", "Causal-cone test for affine elements");

  ScanArgs scan;
  auto* lightcone = app.add_subcommand("lightcone-scan", "CSV of the cross-sheet causal region");
  lightcone->fallthrough();
  lightcone->add_option("--m", scan.m, "Modulus of the finite mass parameter")->required();
  lightcone->add_option("--t-max", scan.t_max, "Largest time separation");
  lightcone->add_option("--r-max", scan.r_max, "Largest spatial separation");
  lightcone->add_option("--steps", scan.steps, "Samples per axis");

  auto* classify = add_scenario_command("classify", "Krein classification of a plane wave");
  auto* fluctuate = add_scenario_command("fluctuate", "Electroweak scalar fluctuation");
  auto* ew = add_scenario_command("ew-dispersion", "Dispersion after symmetry breaking");

  auto emit_error = [&](const std::string& name, const std::string& message, int code) {
    out << error_object(name, message, code).dump(2) << "\n";
    err << name << ": " << message << "\n";
    return code;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return emit_error("UsageError", e.what(), kExitMalformed);
  }
  if (*tol_opt) {
    if (!(tolerance >= 0.0)) return emit_error("UsageError", "--tolerance must be >= 0", kExitMalformed);
    flags.tolerance = tolerance;
  }
  if (*seed_opt) flags.seed = seed;

  try {
    std::string text;
    if (*validate) {
      text = validate_command(scenario, flags).dump(2) + "\n";
    } else if (*distance) {
      text = distance_command(dist, flags).dump(2) + "\n";
    } else if (*causal) {
      text = causal_command(scenario).dump(2) + "\n";
    } else if (*cone) {
      text = cone_command(scenario, flags).dump(2) + "\n";
    } else if (*lightcone) {
      text = lightcone_scan(scan);
    } else if (*classify) {
      text = classify_command(scenario, flags).dump(2) + "\n";
    } else if (*fluctuate) {
      text = fluctuate_command(scenario).dump(2) + "\n";
    } else if (*ew) {
      text = ew_dispersion_command(scenario, flags).dump(2) + "\n";
    }

    if (flags.output.empty()) {
      out << text;
    } else {
      std::ofstream file(flags.output);
      if (!file || !(file << text)) throw InputError("InputError", "cannot write " + flags.output);
    }
    return kExitOk;
  } catch (const InputError& e) {
    return emit_error(e.name(), e.what(), kExitMalformed);
  } catch (const Error& e) {
    return emit_error(e.name(), e.what(), kExitDomain);
  } catch (const json::exception& e) {
    return emit_error("MalformedJson", e.what(), kExitMalformed);
  }
}

}  // namespace ncg::cli
