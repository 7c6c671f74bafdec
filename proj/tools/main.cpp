// Command-line front end: fidelity and Bures metrics for single-mode Gaussian
// states, kernel algebra, canonical decomposition, parameter sweeps, and
// randomized self-verification.  States are described by JSON (inline, @path,
// or --file); results go to stdout as JSON or CSV.
//
// Exit codes: 0 ok, 1 verification failure, 2 unparseable input,
// 3 unphysical state, 4 oracle truncation failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gaussfid/fidelity.hpp"
#include "gaussfid/fock.hpp"
#include "gaussfid/statespec.hpp"
#include "gaussfid/verify.hpp"

namespace {

using nlohmann::json;
using namespace gaussfid;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnphysical = 3;
constexpr int kExitTruncation = 4;

struct cli_error : std::runtime_error {
  cli_error(int code_, const std::string& what) : std::runtime_error(what), code(code_) {}
  int code;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cli_error(kExitParse, "cannot read spec file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Inline JSON, or @path shorthand for a file.
std::string spec_text(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return slurp(arg.substr(1));
  return arg;
}

std::vector<StateSpec> collect_specs(const std::vector<std::string>& positional,
                                     const std::vector<std::string>& files,
                                     std::size_t expected) {
  std::vector<StateSpec> specs;
  for (const auto& arg : positional) specs.push_back(StateSpec::parse_text(spec_text(arg)));
  for (const auto& path : files) specs.push_back(StateSpec::parse_text(slurp(path)));
  if (specs.size() != expected) {
    throw cli_error(kExitParse, "expected " + std::to_string(expected) +
                                    " state spec(s), got " + std::to_string(specs.size()));
  }
  return specs;
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json kernel_to_json(const GaussianKernel& k) {
  json j;
  j["a"] = complex_to_json(k.a);
  j["d"] = complex_to_json(k.d);
  j["b"] = complex_to_json(k.b);
  j["l"] = complex_to_json(k.l);
  j["k"] = complex_to_json(k.k);
  j["g"] = complex_to_json(k.g);
  return j;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int run_fidelity(const std::vector<std::string>& positional,
                 const std::vector<std::string>& files, bool with_oracle, int dim) {
  const auto specs = collect_specs(positional, files, 2);
  const ResultRecord rec = make_result(specs[0], specs[1], with_oracle, dim);
  std::cout << rec.to_json().dump(2) << "\n";
  return 0;
}

int run_sweep(const std::vector<std::string>& positional, const std::vector<std::string>& files,
              const std::string& vary, const std::vector<double>& range,
              const std::string& output) {
  const auto specs = collect_specs(positional, files, 2);
  if (vary == "kind" || vary == "label") {
    throw cli_error(kExitParse, "--vary must name a numeric parameter");
  }
  const int steps = static_cast<int>(range[2]);
  if (steps < 1) throw cli_error(kExitParse, "--range steps must be >= 1");
  json base = specs[1].to_json();
  const GaussianState s1 = specs[0].to_state();

  struct Row {
    double value;
    FidelityBreakdown fb;
    double bures;
  };
  std::vector<Row> rows;
  rows.reserve(steps);
  for (int i = 0; i < steps; ++i) {
    const double v =
        steps == 1 ? range[0] : range[0] + (range[1] - range[0]) * i / double(steps - 1);
    json j = base;
    j[vary] = v;
    const GaussianState s2 = StateSpec::parse(j).to_state();
    rows.push_back(Row{v, fidelity(s1, s2), bures_distance(s1, s2)});
  }

  std::ostringstream out;
  if (output == "csv") {
    out << vary << ",F,Delta,T,exp_factor,bures_distance\n";
    for (const Row& r : rows) {
      out << format_number(r.value) << ',' << format_number(r.fb.F) << ','
          << format_number(r.fb.Delta) << ',' << format_number(r.fb.T) << ','
          << format_number(r.fb.exp_factor) << ',' << format_number(r.bures) << "\n";
    }
  } else if (output == "json") {
    json arr = json::array();
    for (const Row& r : rows) {
      arr.push_back({{vary, r.value},
                     {"F", r.fb.F},
                     {"Delta", r.fb.Delta},
                     {"T", r.fb.T},
                     {"exp_factor", r.fb.exp_factor},
                     {"bures_distance", r.bures}});
    }
    out << arr.dump(2) << "\n";
  } else {
    throw cli_error(kExitParse, "--output must be json or csv");
  }
  std::cout << out.str();
  return 0;
}

int run_decompose(const std::vector<std::string>& positional,
                  const std::vector<std::string>& files) {
  const auto specs = collect_specs(positional, files, 1);
  const GaussianState s = specs[0].to_state();
  const CanonicalForm c = canonical_decompose(s.cov);
  const TwamleyParams tw = twamley_params(c);
  json j;
  j["gamma"] = c.gamma;
  j["m"] = c.m;
  j["theta"] = c.theta;
  j["twamley_r"] = tw.r;
  if (std::isinf(tw.beta)) {
    j["twamley_beta"] = nullptr;
    j["note"] = "pure state (gamma = 1): twamley_beta diverges";
  } else {
    j["twamley_beta"] = tw.beta;
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_kernel(const std::string& subop, const std::vector<std::string>& positional,
               const std::vector<std::string>& files) {
  json j;
  if (subop == "compose") {
    const auto specs = collect_specs(positional, files, 2);
    j = kernel_to_json(
        compose(specs[0].to_kernel().kernel(), specs[1].to_kernel().kernel()));
  } else if (subop == "sqrt") {
    const auto specs = collect_specs(positional, files, 1);
    j = kernel_to_json(sqrt_kernel(specs[0].to_kernel()));
  } else if (subop == "from-state") {
    const auto specs = collect_specs(positional, files, 1);
    j = kernel_to_json(specs[0].to_kernel().kernel());
  } else if (subop == "to-state") {
    const auto specs = collect_specs(positional, files, 1);
    const GaussianState s = state_from_kernel(specs[0].to_kernel());
    j["a_qq"] = s.cov.a_qq;
    j["a_pp"] = s.cov.a_pp;
    j["a_pq"] = s.cov.a_pq;
    j["alpha"] = s.disp.alpha;
    j["tau"] = s.disp.tau;
  } else {
    throw cli_error(kExitParse, "unknown kernel sub-operation \"" + subop + "\"");
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_verify(std::uint64_t seed, int cases, double tol, int dim) {
  if (cases < 1) throw cli_error(kExitParse, "--cases must be >= 1");
  VerifyOptions opt;
  opt.seed = seed;
  opt.cases = cases;
  opt.tol_override = tol;
  opt.dim_override = dim;
  const VerifyReport report = run_verification(opt);
  json j;
  j["seed"] = seed;
  j["cases"] = cases;
  j["pass"] = report.pass;
  j["categories"] = json::array();
  for (const auto& cat : report.categories) {
    json c;
    c["name"] = cat.name;
    c["cases"] = cat.cases;
    c["max_error"] = cat.max_error;
    c["tolerance"] = cat.tolerance;
    c["pass"] = cat.pass;
    c["worst_case"] = cat.worst_case.empty() ? json() : json::parse(cat.worst_case);
    j["categories"].push_back(c);
  }
  std::cout << j.dump(2) << "\n";
  return report.pass ? 0 : kExitVerifyFailed;
}

int emit_error(int code, const std::string& message) {
  json j;
  j["error"]["code"] = code;
  j["error"]["message"] = message;
  std::cout << j.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian-state fidelity toolkit"};
  app.require_subcommand(1);

  std::vector<std::string> positional, files;
  bool with_oracle = false;
  int dim = 0;
  std::string vary, output = "csv", subop;
  std::vector<double> range;
  std::uint64_t seed = 42;
  int cases = 50;
  double tol = -1.0;

  auto* fid = app.add_subcommand("fidelity", "closed-form fidelity of two states");
  fid->add_option("specs", positional, "state specs (inline JSON or @file)");
  fid->add_option("--file", files, "read a state spec from a file");
  fid->add_flag("--verify", with_oracle, "cross-check against the Fock oracle");
  fid->add_option("--dim", dim, "Fock truncation override");

  auto* sweep = app.add_subcommand("sweep", "vary one parameter of the second state");
  sweep->add_option("specs", positional, "state specs (inline JSON or @file)");
  sweep->add_option("--file", files, "read a state spec from a file");
  sweep->add_option("--vary", vary, "parameter of the second spec to vary")->required();
  sweep->add_option("--range", range, "lo hi steps")->expected(3)->required();
  sweep->add_option("--output", output, "csv (default) or json");

  auto* dec = app.add_subcommand("decompose", "canonical form and Twamley parameters");
  dec->add_option("specs", positional, "state spec (inline JSON or @file)");
  dec->add_option("--file", files, "read a state spec from a file");

  auto* ker = app.add_subcommand("kernel", "kernel-level operations");
  ker->add_option("subop", subop, "compose | sqrt | from-state | to-state")->required();
  ker->add_option("specs", positional, "state specs (inline JSON or @file)");
  ker->add_option("--file", files, "read a state spec from a file");

  auto* ver = app.add_subcommand("verify", "randomized axiom and oracle checks");
  ver->add_option("--seed", seed, "RNG seed");
  ver->add_option("--cases", cases, "cases per category");
  ver->add_option("--tol", tol, "override every category tolerance");
  ver->add_option("--dim", dim, "Fock truncation override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*fid) return run_fidelity(positional, files, with_oracle, dim);
    if (*sweep) return run_sweep(positional, files, vary, range, output);
    if (*dec) return run_decompose(positional, files);
    if (*ker) return run_kernel(subop, positional, files);
    if (*ver) return run_verify(seed, cases, tol, dim);
  } catch (const cli_error& e) {
    return emit_error(e.code, e.what());
  } catch (const spec_parse_error& e) {
    return emit_error(kExitParse, e.what());
  } catch (const truncation_error& e) {
    return emit_error(kExitTruncation, e.what());
  } catch (const std::exception& e) {
    return emit_error(kExitUnphysical, e.what());
  }
  return 0;
}
