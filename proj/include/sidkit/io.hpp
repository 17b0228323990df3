#pragma once

#include <json.hpp>
#include <string>

#include "sidkit/divisibility.hpp"
#include "sidkit/dpcp.hpp"
#include "sidkit/ipcp.hpp"
#include "sidkit/signed_series.hpp"
#include "sidkit/special.hpp"

namespace sidkit::io {

using nlohmann::json;

/// {"offset": int, "coeffs": [...], "truncated": bool, "order": int}.
/// On input, offset defaults to 0 and truncated to false; an "order" past
/// the stored coefficients pads known zeros, one below trims.
json to_json(const SignedSeq& s);
SignedSeq signed_seq_from_json(const json& j);

/// {"lambda": real, "alpha": SignedSeq}
json to_json(const DpcpParams& p);
DpcpParams dpcp_params_from_json(const json& j);

/// {"lambda": real, "drift": int, "alpha": two-sided SignedSeq}
json to_json(const IpcpParams& p);
IpcpParams ipcp_params_from_json(const json& j);

/// {"atoms": [{"rate": r, "weight": w}, ...]}
json to_json(const MixingLaw& mix);
MixingLaw mixing_law_from_json(const json& j);

json to_json(const ClassificationReport& r);
json to_json(const JorgensenReport& r);
json to_json(const ThresholdResult& r);
json to_json(const ValidityReport& r);
json to_json(const MittagLefflerValue& v);

/// "n,c_n" rows, real parts, 17 significant digits.
std::string to_csv(const LogFourierCoefficients& c);
/// "n,p_n" rows over the stored window.
std::string to_csv(const SignedSeq& s);

std::string format_real(double v);

}  // namespace sidkit::io
