#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cvmink/cvmink.hpp"

namespace cvmink::cli {

/// Generator knobs that produced a state, when it came from the TMTSS family.
struct InputParams {
  std::optional<double> d;
  std::optional<double> r;
  std::optional<double> nbar;
  std::optional<double> ell;
};

/// Everything the tool reports about one state.
struct AnalysisRecord {
  InputParams input;
  std::optional<StandardFormParams> standard_form;
  LocalInvariants invariants;
  std::optional<MinkowskiCoords> coords;  // nullopt when singular
  Intervals intervals;
  std::optional<SymplecticPair> symplectic_pt;  // spectrum of V~
  double det = 0.0;
  double seralian = 0.0;
  std::optional<double> purity;
  Classification physical;
  std::optional<double> min_symplectic;  // of V; nullopt if V is not positive definite
  Classification separability;  // kind is kUnphysical when physical is
  std::optional<double> mink_dist;
  std::optional<double> log_neg;
  std::optional<double> eof_bound;
  std::optional<double> eof_symmetric;  // symmetric states only

  bool is_physical() const { return physical.kind != StateKind::kUnphysical; }
};

AnalysisRecord analyze(const CovarianceMatrix& v, const InputParams& input = {});
AnalysisRecord analyze(const TmtssParams& p, std::optional<double> ell);

/// The exact CSV header, in column order.
const std::vector<std::string>& csv_columns();
std::string csv_header();
std::string csv_row(const AnalysisRecord& rec);

/// Inverse of csv_row for the columns the CSV carries; fields not in the
/// CSV (det, seralian, eof_symmetric, the physicality verdict) are rebuilt
/// from the parsed invariants. Throws std::invalid_argument on malformed rows.
AnalysisRecord record_from_csv(std::string_view line);

nlohmann::json to_json(const AnalysisRecord& rec);

}  // namespace cvmink::cli
