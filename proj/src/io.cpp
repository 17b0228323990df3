#include "sidkit/io.hpp"

#include <fmt/format.h>

#include <cmath>

#include "sidkit/error.hpp"

namespace sidkit::io {

namespace {

template <typename T>
T require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw errors::validation("SchemaError", std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw errors::validation("SchemaError", std::string("field \"") + key + "\": " + e.what());
  }
}

json complex_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

const char* precision_name(Precision p) {
  switch (p) {
    case Precision::Full:
      return "full";
    case Precision::Reduced:
      return "reduced";
    case Precision::Overflow:
      return "overflow";
  }
  return "full";
}

const char* method_name(MLMethod m) {
  switch (m) {
    case MLMethod::Exponential:
      return "exponential";
    case MLMethod::Series:
      return "series";
    case MLMethod::LogSeries:
      return "log-series";
    case MLMethod::Integral:
      return "integral";
  }
  return "series";
}

}  // namespace

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

json to_json(const SignedSeq& s) {
  return json{{"offset", s.offset()}, {"coeffs", s.coeffs()}, {"truncated", s.truncated()}, {"order", s.order()}};
}

SignedSeq signed_seq_from_json(const json& j) {
  auto coeffs = require<std::vector<double>>(j, "coeffs");
  const std::int64_t offset = j.contains("offset") ? require<std::int64_t>(j, "offset") : 0;
  const bool truncated = j.contains("truncated") ? require<bool>(j, "truncated") : false;
  if (coeffs.empty()) throw errors::validation("SchemaError", "\"coeffs\" must not be empty");
  SignedSeq s(offset, std::move(coeffs), truncated);
  if (j.contains("order")) {
    const auto order = require<std::int64_t>(j, "order");
    if (order < offset) throw errors::validation("SchemaError", "\"order\" below \"offset\"");
    if (order != s.order()) {
      if (truncated && order > s.order()) {
        std::vector<double> padded = s.coeffs();
        padded.resize(static_cast<std::size_t>(order - offset + 1), 0.0);
        return SignedSeq(offset, std::move(padded), true);
      }
      s = s.truncated_to(order);
      if (!truncated) s = SignedSeq(offset, s.coeffs(), false);
    }
  }
  return s;
}

json to_json(const DpcpParams& p) {
  return json{{"lambda", p.lambda}, {"alpha", to_json(p.alpha)}, {"normalization_residue", p.normalization_residue()}};
}

DpcpParams dpcp_params_from_json(const json& j) {
  if (!j.contains("alpha")) throw errors::validation("SchemaError", "missing field \"alpha\"");
  return DpcpParams(require<double>(j, "lambda"), signed_seq_from_json(j.at("alpha")));
}

json to_json(const IpcpParams& p) {
  return json{{"lambda", p.lambda}, {"drift", p.drift}, {"alpha", to_json(p.alpha())}};
}

IpcpParams ipcp_params_from_json(const json& j) {
  if (!j.contains("alpha")) throw errors::validation("SchemaError", "missing field \"alpha\"");
  const std::int64_t drift = j.contains("drift") ? require<std::int64_t>(j, "drift") : 0;
  return IpcpParams::from_alpha(require<double>(j, "lambda"), signed_seq_from_json(j.at("alpha")), drift);
}

json to_json(const MixingLaw& mix) {
  json atoms = json::array();
  for (const auto& a : mix.atoms()) atoms.push_back({{"rate", a.rate}, {"weight", a.weight}});
  return json{{"atoms", atoms}};
}

MixingLaw mixing_law_from_json(const json& j) {
  if (!j.contains("atoms") || !j.at("atoms").is_array()) {
    throw errors::validation("SchemaError", "missing array \"atoms\"");
  }
  std::vector<MixingAtom> atoms;
  for (const auto& a : j.at("atoms")) atoms.push_back({require<double>(a, "rate"), require<double>(a, "weight")});
  return MixingLaw(std::move(atoms));
}

json to_json(const ClassificationReport& r) {
  json out{{"family", r.family == Family::Dpcp ? "DPCP" : "IPCP"},
           {"verdict", r.verdict_name()},
           {"witness", r.witness},
           {"min_modulus", r.min_modulus},
           {"zero", r.zero ? complex_json(*r.zero) : json(nullptr)}};
  if (r.family == Family::Ipcp) out["signed_integer_id_not_signed_discrete_id"] = r.contrast;
  return out;
}

json to_json(const JorgensenReport& r) {
  return json{{"grid", r.grid},
              {"admissible", r.admissible},
              {"min_coefficient", r.min_coefficient},
              {"horizon", r.horizon},
              {"tol", r.tol}};
}

json to_json(const ThresholdResult& r) {
  json out{{"threshold", r.threshold ? json(*r.threshold) : json(nullptr)},
           {"bracket", r.bracket ? json::array({r.bracket->first, r.bracket->second}) : json(nullptr)},
           {"grid", r.grid},
           {"admissible", r.admissible},
           {"horizon", r.horizon}};
  return out;
}

json to_json(const ValidityReport& r) {
  json out{{"order", r.order},
           {"levy_necessary", r.levy_necessary()},
           {"first_positive", r.first_positive},
           {"penultimate_positive", r.penultimate_positive},
           {"last_positive", r.last_positive},
           {"horizon", r.horizon},
           {"first_negative", r.first_negative ? json(*r.first_negative) : json(nullptr)},
           {"min_mass", r.min_mass}};
  if (r.van_harn) {
    const auto& v = *r.van_harn;
    out["van_harn"] = {{"a", v.a}, {"b", v.b}, {"c", v.c}, {"d", v.d},
                       {"all_positive", v.all_positive}, {"bound", v.all_positive ? json(v.bound) : json(nullptr)},
                       {"satisfied", v.satisfied}};
  }
  return out;
}

json to_json(const MittagLefflerValue& v) {
  return json{{"value", std::isfinite(v.value) ? json(v.value) : json(nullptr)},
              {"log_value", v.log_value},
              {"precision", precision_name(v.precision)},
              {"method", method_name(v.method)},
              {"error_estimate", v.error_estimate}};
}

std::string to_csv(const LogFourierCoefficients& c) {
  std::string out = "n,c_n\n";
  for (std::int64_t n = -c.max_index; n <= c.max_index; ++n) {
    out += fmt::format("{},{}\n", n, format_real(c.at(n).real()));
  }
  return out;
}

std::string to_csv(const SignedSeq& s) {
  std::string out = "n,p_n\n";
  for (std::int64_t n = s.offset(); n <= s.order(); ++n) out += fmt::format("{},{}\n", n, format_real(s.at(n)));
  return out;
}

}  // namespace sidkit::io
