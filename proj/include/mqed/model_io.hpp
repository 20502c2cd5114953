#pragma once

// Medium model files (schema_version 1):
//
//   {
//     "schema_version": 1,
//     "name": "lorentz",
//     "eps":   <dispersion>,          // optional, default: no terms (eps = I)
//     "mu":    <dispersion>,          // optional (mu = I)
//     "kappa": <dispersion>,          // optional, Condon terms
//     "chi":   <dispersion>,          // optional, Lorentz terms
//     "anisotropy": {"rotation": [[r00, r01, r02], [..], [..]]}   // optional
//   }
//
//   <dispersion> := [<term>, ...]                       isotropic shorthand
//                 | {"diagonal": [[<term>..], [..], [..]]}
//                 | {"tensor": [[[<term>..] x3] x3]}     row-major components
//   <term>       := {"amplitude": a, "resonance": wT, "damping": g}
//
// Unknown keys are rejected.

#include <filesystem>
#include <string>
#include <string_view>

#include "mqed/media.hpp"

namespace mqed {

inline constexpr int kSchemaVersion = 1;

/// Throws ParseError with line/column for malformed JSON and a JSON-pointer
/// style location (line/column 0) for schema violations.
MediumModel parse_model(std::string_view text);
MediumModel load_model(const std::filesystem::path& path);

std::string model_to_json(const MediumModel& model, int indent = 2);

}  // namespace mqed
