#include "record.hpp"

#include <cmath>
#include <stdexcept>

#include "format.hpp"

namespace cvmink::cli {
namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

nlohmann::json number_or_null(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return round_printed(*v);
}

nlohmann::json number_or_null(double v) { return number_or_null(std::optional<double>(v)); }

nlohmann::json classification_json(const Classification& c) {
  return {{"kind", std::string(to_string(c.kind))},
          {"detail", number_or_null(c.detail)},
          {"schur_skipped", c.schur_skipped}};
}

}  // namespace

AnalysisRecord analyze(const CovarianceMatrix& v, const InputParams& input) {
  AnalysisRecord rec;
  rec.input = input;
  rec.standard_form = as_standard_form(v);
  rec.invariants = local_invariants(v);
  rec.coords = try_coordinates(rec.invariants);
  rec.intervals = intervals(rec.invariants);
  rec.det = static_cast<double>(det_via_invariants(rec.invariants));
  rec.seralian = static_cast<double>(seralian(rec.invariants));
  rec.physical = classify_physical(v);
  if (const double nu = physicality_criteria(v).min_symplectic; std::isfinite(nu)) {
    rec.min_symplectic = nu;
  }

  try {
    rec.symplectic_pt = symplectic_eigenvalues(partial_transpose(rec.invariants));
  } catch (const Error&) {
    rec.symplectic_pt.reset();
  }

  if (!rec.is_physical()) {
    rec.separability = {StateKind::kUnphysical,
                        static_cast<double>(rec.intervals.ds2_tilde), false};
    return rec;
  }
  rec.purity = purity(rec.invariants);
  rec.separability = classify_separable(rec.invariants);
  rec.separability.schur_skipped = rec.physical.schur_skipped;
  rec.mink_dist = minkowski_distance_measure(rec.invariants);
  rec.log_neg = log_negativity(rec.invariants);
  rec.eof_bound = eof_lower_bound(rec.invariants);
  try {
    rec.eof_symmetric = eof_symmetric(rec.invariants).bits;
  } catch (const AsymmetricState&) {
    rec.eof_symmetric.reset();
  }
  return rec;
}

AnalysisRecord analyze(const TmtssParams& p, std::optional<double> ell) {
  StandardFormParams sp = tmtss(p);
  if (ell) sp = lossy_fiber(sp, FiberParams::asymmetric(*ell));
  return analyze(build_standard_cm(sp), InputParams{p.d, p.r, p.nbar, ell});
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = {
      "d",    "r",    "nbar", "ell",  "n1",     "n2",    "ms",
      "mc",   "i1",   "i2",   "i3",   "i4",     "dt2",   "dx2",
      "dy2",  "dy2t", "ds2",  "ds2t", "npt",    "nmt",   "purity",
      "class", "mink_dist", "log_neg", "eof_bound"};
  return columns;
}

std::string csv_header() {
  std::string out;
  for (const auto& c : csv_columns()) {
    if (!out.empty()) out += ',';
    out += c;
  }
  return out;
}

std::string csv_row(const AnalysisRecord& rec) {
  std::vector<std::string> f;
  f.reserve(csv_columns().size());
  f.push_back(format_optional(rec.input.d));
  f.push_back(format_optional(rec.input.r));
  f.push_back(format_optional(rec.input.nbar));
  f.push_back(format_optional(rec.input.ell));
  const auto& sf = rec.standard_form;
  f.push_back(sf ? format_real(sf->n1) : "");
  f.push_back(sf ? format_real(sf->n2) : "");
  f.push_back(sf ? format_real(sf->ms) : "");
  f.push_back(sf ? format_real(sf->mc) : "");
  const auto& inv = rec.invariants;
  for (Real x : {inv.i1, inv.i2, inv.i3, inv.i4}) {
    f.push_back(format_real(static_cast<double>(x)));
  }
  const auto& c = rec.coords;
  f.push_back(c ? format_real(static_cast<double>(c->dt2)) : "");
  f.push_back(c ? format_real(static_cast<double>(c->dx2)) : "");
  f.push_back(c ? format_real(static_cast<double>(c->dy2)) : "");
  f.push_back(c ? format_real(static_cast<double>(c->dy2_tilde)) : "");
  f.push_back(format_real(static_cast<double>(rec.intervals.ds2)));
  f.push_back(format_real(static_cast<double>(rec.intervals.ds2_tilde)));
  const auto& sp = rec.symplectic_pt;
  f.push_back(sp ? format_real(static_cast<double>(sp->n_plus)) : "");
  f.push_back(sp ? format_real(static_cast<double>(sp->n_minus)) : "");
  f.push_back(format_optional(rec.purity));
  f.push_back(std::string(to_string(rec.separability.kind)));
  f.push_back(format_optional(rec.mink_dist));
  f.push_back(format_optional(rec.log_neg));
  f.push_back(format_optional(rec.eof_bound));

  std::string out;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += f[i];
  }
  return out;
}

AnalysisRecord record_from_csv(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto fields = split_commas(line);
  if (fields.size() != csv_columns().size()) {
    throw std::invalid_argument("expected " + std::to_string(csv_columns().size()) +
                                " CSV fields, got " + std::to_string(fields.size()));
  }
  size_t i = 0;
  const auto next = [&] { return parse_optional_real(fields[i++]); };
  const auto required = [&] {
    const std::string_view name = csv_columns()[i];
    const auto v = next();
    if (!v) throw std::invalid_argument("empty required field " + std::string(name));
    return *v;
  };

  AnalysisRecord rec;
  rec.input.d = next();
  rec.input.r = next();
  rec.input.nbar = next();
  rec.input.ell = next();
  const auto n1 = next(), n2 = next(), ms = next(), mc = next();
  if (n1 && n2 && ms && mc) rec.standard_form = StandardFormParams{*n1, *n2, *ms, *mc};
  rec.invariants.i1 = required();
  rec.invariants.i2 = required();
  rec.invariants.i3 = required();
  rec.invariants.i4 = required();
  const auto dt2 = next(), dx2 = next(), dy2 = next(), dy2t = next();
  if (dt2 && dx2 && dy2 && dy2t) rec.coords = MinkowskiCoords{*dt2, *dx2, *dy2, *dy2t};
  rec.intervals.ds2 = required();
  rec.intervals.ds2_tilde = required();
  const auto npt = next(), nmt = next();
  if (npt && nmt) rec.symplectic_pt = SymplecticPair{*npt, *nmt};
  rec.purity = next();
  const auto kind = state_kind_from_string(fields[i++]);
  if (!kind) throw std::invalid_argument("unknown class '" + std::string(fields[i - 1]) + "'");
  rec.mink_dist = next();
  rec.log_neg = next();
  rec.eof_bound = next();

  rec.det = static_cast<double>(det_via_invariants(rec.invariants));
  rec.seralian = static_cast<double>(seralian(rec.invariants));
  rec.separability = {*kind, static_cast<double>(rec.intervals.ds2_tilde), false};
  const double ds2 = static_cast<double>(rec.intervals.ds2);
  if (*kind == StateKind::kUnphysical) {
    rec.physical = {StateKind::kUnphysical, ds2, false};
  } else {
    rec.physical = {std::abs(ds2) <= kBoundaryTol ? StateKind::kBoundary
                                                  : StateKind::kPhysical,
                    ds2, false};
    if (std::abs(rec.invariants.i1 - rec.invariants.i2) <= 1e-9L) {
      rec.eof_symmetric = rec.eof_bound;
    }
  }
  return rec;
}

nlohmann::json to_json(const AnalysisRecord& rec) {
  nlohmann::json j;
  j["input"] = {{"d", number_or_null(rec.input.d)},
                {"r", number_or_null(rec.input.r)},
                {"nbar", number_or_null(rec.input.nbar)},
                {"ell", number_or_null(rec.input.ell)}};
  if (rec.standard_form) {
    const auto& sf = *rec.standard_form;
    j["standard_form"] = {{"n1", number_or_null(sf.n1)},
                          {"n2", number_or_null(sf.n2)},
                          {"ms", number_or_null(sf.ms)},
                          {"mc", number_or_null(sf.mc)}};
  } else {
    j["standard_form"] = nullptr;
  }
  const auto& inv = rec.invariants;
  j["invariants"] = {{"i1", number_or_null(static_cast<double>(inv.i1))},
                     {"i2", number_or_null(static_cast<double>(inv.i2))},
                     {"i3", number_or_null(static_cast<double>(inv.i3))},
                     {"i4", number_or_null(static_cast<double>(inv.i4))}};
  if (rec.coords) {
    const auto& c = *rec.coords;
    j["coordinates"] = {{"valid", true},
                        {"dt2", number_or_null(static_cast<double>(c.dt2))},
                        {"dx2", number_or_null(static_cast<double>(c.dx2))},
                        {"dy2", number_or_null(static_cast<double>(c.dy2))},
                        {"dy2t", number_or_null(static_cast<double>(c.dy2_tilde))}};
  } else {
    j["coordinates"] = {{"valid", false}};
  }
  j["intervals"] = {{"ds2", number_or_null(static_cast<double>(rec.intervals.ds2))},
                    {"ds2t", number_or_null(static_cast<double>(rec.intervals.ds2_tilde))}};
  if (rec.symplectic_pt) {
    j["symplectic_pt"] = {
        {"n_plus", number_or_null(static_cast<double>(rec.symplectic_pt->n_plus))},
        {"n_minus", number_or_null(static_cast<double>(rec.symplectic_pt->n_minus))}};
  } else {
    j["symplectic_pt"] = nullptr;
  }
  j["det"] = number_or_null(rec.det);
  j["seralian"] = number_or_null(rec.seralian);
  j["purity"] = number_or_null(rec.purity);
  j["physical"] = classification_json(rec.physical);
  j["physical"]["min_symplectic"] = number_or_null(rec.min_symplectic);
  j["class"] = classification_json(rec.separability);
  j["measures"] = {{"mink_dist", number_or_null(rec.mink_dist)},
                   {"log_neg", number_or_null(rec.log_neg)},
                   {"eof_bound", number_or_null(rec.eof_bound)},
                   {"eof_symmetric", number_or_null(rec.eof_symmetric)}};
  return j;
}

}  // namespace cvmink::cli
