#include "gaussfid/statespec.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gaussfid/fock.hpp"

namespace gaussfid {

namespace {

struct KindSchema {
  SpecKind kind;
  std::string_view name;
  std::vector<std::string_view> required;
  std::vector<std::string_view> optional;
};

const std::vector<KindSchema>& schemas() {
  static const std::vector<KindSchema> s = {
      {SpecKind::vacuum, "vacuum", {}, {}},
      {SpecKind::thermal, "thermal", {"beta"}, {}},
      {SpecKind::covariance, "covariance", {"a_qq", "a_pp", "a_pq"}, {"alpha", "tau"}},
      {SpecKind::canonical, "canonical", {"gamma", "m", "theta"}, {"alpha", "tau"}},
      {SpecKind::kernel, "kernel", {"re_a"}, {"im_a", "b", "re_l", "im_l"}},
  };
  return s;
}

const KindSchema& schema_for(SpecKind kind) {
  for (const auto& s : schemas()) {
    if (s.kind == kind) return s;
  }
  throw spec_parse_error("unknown state kind");
}

}  // namespace

std::string_view to_string(SpecKind kind) { return schema_for(kind).name; }

StateSpec StateSpec::parse(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw spec_parse_error("state spec must be a JSON object");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw spec_parse_error("state spec needs a string \"kind\"");
  }
  const std::string kind_name = j["kind"].get<std::string>();
  const auto& all = schemas();
  const auto it = std::find_if(all.begin(), all.end(),
                               [&](const KindSchema& s) { return s.name == kind_name; });
  if (it == all.end()) {
    throw spec_parse_error("unknown state kind \"" + kind_name + "\"");
  }
  StateSpec spec;
  spec.kind = it->kind;
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") continue;
    if (key == "label") {
      if (!value.is_string()) throw spec_parse_error("label must be a string");
      spec.label = value.get<std::string>();
      continue;
    }
    const bool known = std::find(it->required.begin(), it->required.end(), key) !=
                           it->required.end() ||
                       std::find(it->optional.begin(), it->optional.end(), key) !=
                           it->optional.end();
    if (!known) {
      throw spec_parse_error("unknown parameter \"" + key + "\" for kind \"" + kind_name + "\"");
    }
    if (!value.is_number()) {
      throw spec_parse_error("parameter \"" + key + "\" must be a number");
    }
    spec.params[key] = value.get<double>();
  }
  for (const auto& req : it->required) {
    if (!spec.params.contains(std::string(req))) {
      throw spec_parse_error("kind \"" + kind_name + "\" requires parameter \"" +
                             std::string(req) + "\"");
    }
  }
  return spec;
}

StateSpec StateSpec::parse_text(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw spec_parse_error(std::string("invalid JSON: ") + e.what());
  }
  return parse(j);
}

nlohmann::json StateSpec::to_json() const {
  nlohmann::json j;
  j["kind"] = std::string(to_string(kind));
  for (const auto& [key, value] : params) {
    j[key] = value;
  }
  if (label) j["label"] = *label;
  return j;
}

double StateSpec::param(const std::string& name, double fallback) const {
  const auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

GaussianState StateSpec::to_state() const {
  switch (kind) {
    case SpecKind::vacuum:
      return GaussianState{CovarianceMatrix(1.0, 1.0, 0.0), Displacement{}};
    case SpecKind::thermal:
      return thermal_state(param("beta"));
    case SpecKind::covariance:
      return GaussianState{CovarianceMatrix(param("a_qq"), param("a_pp"), param("a_pq")),
                           Displacement{param("alpha"), param("tau")}};
    case SpecKind::canonical:
      return from_canonical(CanonicalForm(param("gamma"), param("m"), param("theta")),
                            Displacement{param("alpha"), param("tau")});
    case SpecKind::kernel: {
      const cplx a(param("re_a"), param("im_a"));
      const cplx l(param("re_l"), param("im_l"));
      const DensityKernel k =
          normalize(GaussianKernel(a, std::conj(a), param("b"), l, std::conj(l), 0.0));
      return state_from_kernel(k);
    }
  }
  throw spec_parse_error("unreachable state kind");
}

DensityKernel StateSpec::to_kernel() const {
  if (kind == SpecKind::kernel) {
    const cplx a(param("re_a"), param("im_a"));
    const cplx l(param("re_l"), param("im_l"));
    return normalize(GaussianKernel(a, std::conj(a), param("b"), l, std::conj(l), 0.0));
  }
  return kernel_from_state(to_state());
}

ResultRecord make_result(const StateSpec& s1, const StateSpec& s2, bool with_oracle,
                         int dim_override) {
  ResultRecord rec;
  rec.spec1 = s1;
  rec.spec2 = s2;
  const GaussianState st1 = s1.to_state();
  const GaussianState st2 = s2.to_state();
  rec.breakdown = fidelity(st1, st2);
  rec.bures_distance = gaussfid::bures_distance(st1, st2);
  rec.bures_angle = gaussfid::bures_angle(st1, st2);
  if (with_oracle) {
    constexpr double budget = 1e-9;
    const int dim = dim_override > 0
                        ? dim_override
                        : std::max(required_dim(st1, budget), required_dim(st2, budget));
    const FockMatrix m1 = kernel_to_fock(kernel_from_state(st1), dim, 0, budget);
    const FockMatrix m2 = kernel_to_fock(kernel_from_state(st2), dim, 0, budget);
    rec.oracle_F = uhlmann_fidelity(m1, m2);
    rec.oracle_dim = dim;
    rec.abs_error = std::abs(*rec.oracle_F - rec.breakdown.F);
  }
  return rec;
}

nlohmann::json ResultRecord::to_json() const {
  nlohmann::json j;
  j["inputs"]["state1"] = spec1.to_json();
  j["inputs"]["state2"] = spec2.to_json();
  j["F"] = breakdown.F;
  j["Delta"] = breakdown.Delta;
  j["T"] = breakdown.T;
  j["exp_factor"] = breakdown.exp_factor;
  j["bures_distance"] = bures_distance;
  j["bures_angle"] = bures_angle;
  if (oracle_F) j["oracle_F"] = *oracle_F;
  if (oracle_dim) j["oracle_dim"] = *oracle_dim;
  if (abs_error) j["abs_error"] = *abs_error;
  return j;
}

}  // namespace gaussfid
