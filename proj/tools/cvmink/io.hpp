#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "cvmink/cvmink.hpp"

namespace cvmink::cli {

/// Malformed input file or document; what() carries "path:line:col: ..."
/// context when available.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json_file(const std::string& path);

/// {"format": "standard", "n1", "n2", "ms", "mc"} or
/// {"format": "matrix", "re": 4x4, "im": 4x4}.
CovarianceMatrix cm_from_json(const nlohmann::json& j);

struct TmtssRequest {
  TmtssParams params;
  std::optional<double> ell;
};

/// {"d", "r", "nbar", "ell"}; "ell" is optional, the others default to 0.
TmtssRequest tmtss_from_json(const nlohmann::json& j);

/// Reads a required number, reporting the key on failure.
double json_number(const nlohmann::json& j, const char* key);

}  // namespace cvmink::cli
