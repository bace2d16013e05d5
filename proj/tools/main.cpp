// Copyright 2026 The greedybench Authors
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

// greedybench command-line front end.
// Exit codes: 0 pass, 1 expectation failure, 2 usage error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "greedybench/certify.hpp"
#include "greedybench/greedy.hpp"
#include "greedybench/oracle.hpp"
#include "greedybench/repro.hpp"
#include "greedybench/serialize.hpp"

namespace gb = greedybench;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A JSON argument is either inline JSON text or a path to a file holding it.
gb::Json load_json(const std::string& argument, const char* what) {
  std::string text = argument;
  const auto first = argument.find_first_not_of(" \t\n");
  if (first == std::string::npos || (argument[first] != '{' && argument[first] != '[')) {
    std::ifstream in(argument);
    if (!in) throw UsageError(std::string("cannot read ") + what + " '" + argument + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return gb::Json::parse(text);
  } catch (const gb::Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON in ") + what + ": " + e.what());
  }
}

gb::Functional parse_functional(const std::string& argument) {
  gb::Functional out;
  if (argument.find('[') != std::string::npos) {
    for (const gb::Json& v : load_json(argument, "functional")) out.push_back(gb::rational_from_json(v));
    return out;
  }
  std::stringstream stream(argument);
  std::string item;
  while (std::getline(stream, item, ',')) out.push_back(gb::parse_rational(item));
  return out;
}

template <class T>
gb::SparseVector<T> as(const gb::SparseVector<gb::Rational>& f) {
  if constexpr (gb::is_exact_v<T>) {
    return f;
  } else {
    return gb::to_real(f);
  }
}

gb::Rational scalar_of(const gb::NormSpec&) { return {}; }
gb::Real scalar_of(const gb::RealNormSpec&) { return {}; }

void print_json(const gb::Json& j) { std::cout << j.dump(2) << '\n'; }

// --- norm ------------------------------------------------------------------

int run_norm(const std::string& spec_arg, const std::string& vector_arg, bool oracle) {
  const auto spec = gb::norm_spec_from_json(load_json(spec_arg, "spec"));
  const auto f = gb::vector_from_json(load_json(vector_arg, "vector"));
  if (!oracle) {
    std::visit([&f](const auto& s) {
      using T = decltype(scalar_of(s));
      std::cout << gb::format_value(gb::evaluate(s, as<T>(f))) << '\n';
    }, spec);
    return kExitPass;
  }
  if (!std::holds_alternative<gb::NormSpec>(spec)) {
    throw UsageError("--oracle needs an exact (rational) norm specification");
  }
  const auto& exact_spec = std::get<gb::NormSpec>(spec);
  const gb::Rational value = gb::evaluate(exact_spec, f);
  gb::Rational reference;
  if (const auto* dw = std::get_if<gb::DwNorm<gb::Rational>>(&exact_spec)) {
    const std::size_t window = std::max<std::size_t>(1, f.max_index());
    reference = gb::oracle::dw_norm_bruteforce(dw->weight, f, gb::oracle::stable_config(dw->weight, f, window));
  } else if (const auto* poly = std::get_if<gb::PolyhedralNorm>(&exact_spec)) {
    gb::Rational best(0);
    const std::vector<gb::Rational> x = f.to_dense(poly->family.dimension());
    for (const gb::Functional& u : poly->family.functionals()) {
      gb::Rational s(0);
      for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * x[k];
      best = std::max(best, gb::abs_value(s));
    }
    reference = best;
  } else {
    throw UsageError("--oracle supports dw and polyhedral norms");
  }
  std::cout << "value  " << gb::format_rational(value) << '\n'
            << "oracle " << gb::format_rational(reference) << '\n';
  return value == reference ? kExitPass : kExitFail;
}

// --- dual ------------------------------------------------------------------

int run_dual(const std::string& spec_arg, const std::string& functional_arg) {
  const auto spec = gb::norm_spec_from_json(load_json(spec_arg, "spec"));
  const auto* exact_spec = std::get_if<gb::NormSpec>(&spec);
  const auto* poly = exact_spec ? std::get_if<gb::PolyhedralNorm>(exact_spec) : nullptr;
  if (poly == nullptr) throw UsageError("dual needs a polyhedral norm specification");
  const gb::Functional xstar = parse_functional(functional_arg);
  if (xstar.size() != poly->family.dimension()) {
    throw UsageError("functional length must equal the dimension " +
                     std::to_string(poly->family.dimension()));
  }
  const auto result = gb::dual_norm(poly->family, xstar);
  gb::Json out = gb::Json::object();
  out["value"] = gb::format_rational(result.value);
  gb::Json maximizer = gb::Json::array();
  for (const gb::Rational& v : result.maximizer) maximizer.push_back(gb::format_rational(v));
  out["maximizer"] = std::move(maximizer);
  print_json(out);
  return kExitPass;
}

// --- tga -------------------------------------------------------------------

int run_tga(const std::string& spec_arg, const std::string& vector_arg) {
  const auto spec = gb::norm_spec_from_json(load_json(spec_arg, "spec"));
  const auto f = gb::vector_from_json(load_json(vector_arg, "vector"));
  std::visit([&f](const auto& s) {
    using T = decltype(scalar_of(s));
    const auto x = as<T>(f);
    gb::Json out = gb::Json::object();
    out["norm"] = gb::describe(s);
    out["ordering"] = gb::greedy_ordering(x);
    out["trace"] = gb::trace_to_json(gb::trace(x, s));
    print_json(out);
  }, spec);
  return kExitPass;
}

// --- certify ---------------------------------------------------------------

struct CertifyArgs {
  std::string kind;
  std::string spec;
  std::string vector;
  std::string other;
  std::string family = "default-grid";
  std::string instance;
  std::string weight;
  std::size_t m = 10;
};

gb::NormSpec exact_spec(const std::string& argument, const char* what) {
  auto spec = gb::norm_spec_from_json(load_json(argument, "spec"));
  if (!std::holds_alternative<gb::NormSpec>(spec)) {
    throw UsageError(std::string(what) + " needs an exact (rational) norm specification");
  }
  return std::get<gb::NormSpec>(std::move(spec));
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing ") + flag);
}

gb::ExplicitFamily<gb::Rational> explicit_family(const gb::Json& j) {
  gb::ExplicitFamily<gb::Rational> family;
  family.description = j.value("description", std::string("explicit"));
  if (!j.contains("instances") || !j.at("instances").is_array()) {
    throw UsageError("explicit family needs an 'instances' array");
  }
  for (const gb::Json& item : j.at("instances")) {
    family.instances.emplace_back(gb::vector_from_json(item.at("vector")),
                                  gb::indices_from_json(item.at("projection")));
  }
  return family;
}

int run_certify(const CertifyArgs& a) {
  const std::string& kind = a.kind;
  if (kind == "ucc") {
    require(a.weight, "--weight");
    auto weight = gb::weight_from_json(load_json(a.weight, "weight"));
    if (!std::holds_alternative<gb::Weight>(weight)) throw UsageError("ucc needs an eventually-constant weight");
    gb::Json out = gb::Json::array();
    for (const gb::Rational& r : gb::ucc_growth(std::get<gb::Weight>(weight), a.m)) {
      out.push_back(gb::format_rational(r));
    }
    print_json(out);
    return kExitPass;
  }
  require(a.spec, "--spec");
  if (kind == "ks") {
    const gb::NormSpec spec = exact_spec(a.spec, "certify ks");
    const auto cert = a.family == "default-grid"
                          ? gb::ks_lower_bound(spec, gb::default_grid())
                          : gb::ks_lower_bound(spec, explicit_family(load_json(a.family, "family")));
    print_json(gb::certificate_to_json(cert));
    return kExitPass;
  }
  if (kind == "kl") {
    if (a.family != "default-grid") throw UsageError("certify kl supports --family default-grid only");
    print_json(gb::certificate_to_json(gb::kl_lower_bound(exact_spec(a.spec, "certify kl"), gb::default_grid())));
    return kExitPass;
  }
  if (kind == "superdemocracy") {
    const auto report = gb::superdemocracy_report(exact_spec(a.spec, "certify superdemocracy"), a.m);
    gb::Json out = gb::Json::object();
    out["primal"] = gb::certificate_to_json(report.primal);
    if (report.dual) out["dual"] = gb::certificate_to_json(*report.dual);
    print_json(out);
    return kExitPass;
  }
  if (kind == "property-a") {
    require(a.instance, "--instance");
    const gb::NormSpec spec = exact_spec(a.spec, "certify property-a");
    const gb::Json j = load_json(a.instance, "instance");
    auto signed_set = [](const gb::Json& s) {
      std::vector<gb::Index> indices;
      std::vector<int> signs;
      for (const gb::Json& i : s.at("indices")) indices.push_back(i.get<gb::Index>());
      if (s.contains("signs")) {
        for (const gb::Json& e : s.at("signs")) signs.push_back(e.get<int>());
      } else {
        signs.assign(indices.size(), 1);
      }
      return gb::SignedSet(std::move(indices), std::move(signs));
    };
    const gb::PropertyAInstance<gb::Rational> instance{gb::vector_from_json(j.at("f")), signed_set(j.at("a")),
                                                       signed_set(j.at("b"))};
    const auto result = gb::property_a_check(spec, instance);
    print_json(gb::property_a_to_json(result));
    if (result.status == gb::PropertyAStatus::kInvalidInstance) return kExitUsage;
    return result.status == gb::PropertyAStatus::kPass ? kExitPass : kExitFail;
  }
  const auto spec = gb::norm_spec_from_json(load_json(a.spec, "spec"));
  require(a.vector, "--vector");
  const auto f = gb::vector_from_json(load_json(a.vector, "vector"));
  return std::visit([&](const auto& s) -> int {
    using T = decltype(scalar_of(s));
    const auto x = as<T>(f);
    if (kind == "lattice") {
      require(a.other, "--other");
      const auto g = as<T>(gb::vector_from_json(load_json(a.other, "other vector")));
      const auto cert = gb::make_certificate<T>(gb::ConstantKind::kLattice, s, {x, g}, {}, 0,
                                                "command-line pair", gb::BoundKind::kLowerBound, {});
      print_json(gb::certificate_to_json(cert));
      return kExitPass;
    }
    if (kind == "quasi-greedy") {
      const auto r = gb::quasi_greedy_ratio(s, x);
      gb::Json out = gb::Json::object();
      out["value"] = gb::value_to_json(r.value);
      out["m"] = r.m;
      out["ties"] = r.ties;
      print_json(out);
      return kExitPass;
    }
    if (kind == "almost-greedy") {
      const auto entries = gb::almost_greedy_margin(s, x);
      print_json(gb::almost_greedy_to_json(entries));
      for (const auto& e : entries) {
        if (e.margin < 0) return kExitFail;
      }
      return kExitPass;
    }
    throw UsageError("unknown certificate kind '" + kind + "'");
  }, spec);
}

// --- repro -----------------------------------------------------------------

gb::ScenarioParameters parse_extras(const std::vector<std::string>& extras) {
  gb::ScenarioParameters params;
  for (std::size_t k = 0; k < extras.size(); ++k) {
    const std::string& token = extras[k];
    if (token.rfind("--", 0) != 0 || token.size() < 3) throw UsageError("unexpected argument '" + token + "'");
    std::string key = token.substr(2);
    std::string value;
    if (const auto eq = key.find('='); eq != std::string::npos) {
      value = key.substr(eq + 1);
      key.resize(eq);
    } else {
      if (k + 1 >= extras.size()) throw UsageError("missing value for '" + token + "'");
      value = extras[++k];
    }
    params[key] = value;
  }
  return params;
}

int run_repro(const std::string& name, const std::vector<std::string>& extras, const std::string& csv_path,
              const std::string& json_path, bool parallel) {
  std::vector<std::string> names;
  const gb::ScenarioParameters params = parse_extras(extras);
  if (name == "all") {
    if (!params.empty()) throw UsageError("scenario parameters need a single scenario name");
    for (const auto& info : gb::scenario_registry()) names.push_back(info.name);
  } else {
    names.push_back(name);
  }
  gb::ensure_precision();
  std::vector<gb::ScenarioReport> reports;
  try {
    if (parallel && names.size() > 1) {
      std::vector<std::future<gb::ScenarioReport>> futures;
      for (const auto& n : names) {
        futures.push_back(std::async(std::launch::async, [n, &params] { return gb::run_scenario(n, params); }));
      }
      for (auto& fut : futures) reports.push_back(fut.get());
    } else {
      for (const auto& n : names) reports.push_back(gb::run_scenario(n, params));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  bool all_pass = true;
  for (const auto& report : reports) {
    gb::print_report(report, std::cout);
    all_pass = all_pass && report.passed();
  }
  if (!csv_path.empty()) {
    const bool directory = reports.size() > 1;
    if (directory) std::filesystem::create_directories(csv_path);
    for (const auto& report : reports) {
      const std::string path =
          directory ? (std::filesystem::path(csv_path) / (report.name + ".csv")).string() : csv_path;
      std::ofstream out(path);
      if (!out) throw UsageError("cannot write '" + path + "'");
      gb::write_csv(report.csv, out);
    }
  }
  if (!json_path.empty()) {
    gb::Json out;
    if (reports.size() == 1) {
      out = gb::report_to_json(reports.front());
    } else {
      out = gb::Json::array();
      for (const auto& report : reports) out.push_back(gb::report_to_json(report));
    }
    std::ofstream file(json_path);
    if (!file) throw UsageError("cannot write '" + json_path + "'");
    file << out.dump(2) << '\n';
  }
  return all_pass ? kExitPass : kExitFail;
}

int run_list() {
  for (const auto& info : gb::scenario_registry()) {
    std::cout << info.name << "  " << info.summary;
    if (!info.defaults.empty()) {
      std::cout << "  [";
      bool first = true;
      for (const auto& [key, value] : info.defaults) {
        std::cout << (first ? "" : " ") << "--" << key << ' ' << value;
        first = false;
      }
      std::cout << ']';
    }
    std::cout << '\n';
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic laboratory for greedy bases"};
  app.require_subcommand(1);

  std::string spec_arg;
  std::string vector_arg;
  bool oracle = false;
  auto* norm = app.add_subcommand("norm", "Evaluate a norm on a vector");
  norm->add_option("--spec", spec_arg, "Norm specification (JSON file or inline)")->required();
  norm->add_option("--vector", vector_arg, "Sparse vector (JSON file or inline)")->required();
  norm->add_flag("--oracle", oracle)->group("");

  std::string functional_arg;
  auto* dual = app.add_subcommand("dual", "Dual norm of a functional under a polyhedral norm");
  dual->add_option("--spec", spec_arg, "Polyhedral norm specification")->required();
  dual->add_option("--functional", functional_arg, "Coefficients, comma separated or a JSON array")->required();

  auto* tga = app.add_subcommand("tga", "Greedy ordering and residual trace");
  tga->add_option("--spec", spec_arg, "Norm specification")->required();
  tga->add_option("--vector", vector_arg, "Sparse vector")->required();

  CertifyArgs certify_args;
  auto* certify = app.add_subcommand("certify", "Emit a certificate");
  certify
      ->add_option("kind", certify_args.kind,
                   "ks | kl | lattice | property-a | superdemocracy | ucc | quasi-greedy | almost-greedy")
      ->required();
  certify->add_option("--spec", certify_args.spec, "Norm specification");
  certify->add_option("--vector", certify_args.vector, "Sparse vector");
  certify->add_option("--other", certify_args.other, "Second vector for lattice");
  certify->add_option("--family", certify_args.family, "default-grid or an explicit family JSON");
  certify->add_option("--instance", certify_args.instance, "Property (A) instance JSON");
  certify->add_option("--weight", certify_args.weight, "Weight JSON for ucc");
  certify->add_option("--m", certify_args.m, "m_max for superdemocracy and ucc");

  std::string scenario;
  std::string csv_path;
  std::string json_path;
  bool parallel = false;
  auto* repro = app.add_subcommand("repro", "Run a reproduction scenario, or all of them");
  repro->add_option("scenario", scenario, "Scenario name or 'all'")->required();
  repro->add_option("--csv", csv_path, "CSV output (a directory for 'all')");
  repro->add_option("--json", json_path, "JSON report output");
  repro->add_flag("--parallel", parallel, "Run scenarios concurrently");
  repro->allow_extras();

  auto* list = app.add_subcommand("list-scenarios", "List the built-in scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (norm->parsed()) return run_norm(spec_arg, vector_arg, oracle);
    if (dual->parsed()) return run_dual(spec_arg, functional_arg);
    if (tga->parsed()) return run_tga(spec_arg, vector_arg);
    if (certify->parsed()) return run_certify(certify_args);
    if (repro->parsed()) return run_repro(scenario, repro->remaining(), csv_path, json_path, parallel);
    if (list->parsed()) return run_list();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
