#include "proptest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <Eigen/LU>

#include "format.hpp"
#include "json.hpp"

namespace cvmink::cli {
namespace {

using Matrix4l = Eigen::Matrix<std::complex<long double>, 4, 4>;

struct Context {
  Rng rng;
  int cases;
  const PropertyHooks& hooks;
  PropertyResult result;

  void fail(const std::string& what) {
    if (result.failures++ == 0) result.counterexample = what;
  }
};

template <class T>
T scale_of(std::initializer_list<T> xs) {
  T s = 1;
  for (T x : xs) s = std::max(s, std::abs(x));
  return s;
}

template <class T>
bool rel_close(T a, T b, T tol) {
  return std::abs(a - b) <= tol * scale_of<T>({a, b});
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

bool coin(Rng& rng) { return std::bernoulli_distribution(0.5)(rng); }

std::string num(long double x) { return format_real(static_cast<double>(x)); }

std::string describe(const StandardFormParams& p) {
  std::ostringstream os;
  os << "{\"format\": \"standard\", \"n1\": " << format_real(p.n1)
     << ", \"n2\": " << format_real(p.n2) << ", \"ms\": " << format_real(p.ms)
     << ", \"mc\": " << format_real(p.mc) << "}";
  return os.str();
}

std::string describe(const LocalInvariants& inv) {
  return "invariants (" + num(inv.i1) + ", " + num(inv.i2) + ", " + num(inv.i3) + ", " +
         num(inv.i4) + ")";
}

StandardFormParams random_symmetric_form(Rng& rng) {
  while (true) {
    const double n = uniform(rng, 0.5, 3.0);
    const StandardFormParams p{n, n, uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
    if (classify_physical(build_standard_cm(p)).kind != StateKind::kUnphysical) return p;
  }
}

/// Physical states from the library sampler, with every fourth one symmetric.
CovarianceMatrix mixed_state(Rng& rng, int i) {
  if (i % 4 == 3) {
    return apply_local(build_standard_cm(random_symmetric_form(rng)),
                       random_local_symplectic(rng));
  }
  return random_physical_state(rng);
}

CovarianceMatrix entangled_state(Rng& rng) {
  while (true) {
    CovarianceMatrix v = random_physical_state(rng);
    if (classify_separable(local_invariants(v)).kind == StateKind::kEntangled) return v;
  }
}

bool is_symmetric(const LocalInvariants& inv) { return std::abs(inv.i1 - inv.i2) <= 1e-9L; }

double hermitian_residue(const CovarianceMatrix& v) {
  return (v.entries() - v.entries().adjoint()).cwiseAbs().maxCoeff();
}

long double direct_det(const CovarianceMatrix& v) {
  const Matrix4l m = v.entries().cast<std::complex<long double>>();
  return Eigen::PartialPivLU<Matrix4l>(m).determinant().real();
}

bool separable_like(StateKind k) { return k == StateKind::kSeparable || k == StateKind::kBoundary; }

// ---- core ----

void hermiticity(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    const CovarianceMatrix v = random_physical_state(c.rng);
    const std::pair<const char*, CovarianceMatrix> outputs[] = {
        {"apply_local", apply_local(v, random_local_symplectic(c.rng))},
        {"partial_transpose", partial_transpose(v)},
        {"noise_convolution_cm", noise_convolution_cm(v, random_noise_cm(c.rng))},
        {"build_standard_cm", build_standard_cm(random_standard_form(c.rng))},
    };
    for (const auto& [op, out] : outputs) {
      const double res = hermitian_residue(out);
      if (res > 1e-12) {
        c.fail(std::string(op) + " residue " + format_real(res) + " on " + dump_cm(v));
      }
    }
  }
}

void det_vs_direct(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    const CovarianceMatrix v = random_physical_state(c.rng);
    const long double via = det_via_invariants(local_invariants(v));
    const long double direct = direct_det(v);
    if (!rel_close(via, direct, 1e-10L)) {
      c.fail("det " + num(via) + " vs direct " + num(direct) + " on " + dump_cm(v));
    }
  }
}

void transpose_involution(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    const CovarianceMatrix v = random_physical_state(c.rng);
    if (!(partial_transpose(partial_transpose(v)) == v)) c.fail(dump_cm(v));
  }
}

void transpose_invariant_map(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    const StandardFormParams sp = random_standard_form(c.rng);
    CovarianceMatrix v = build_standard_cm(sp);
    if (coin(c.rng)) v = apply_local(v, random_local_symplectic(c.rng));
    const LocalInvariants inv = local_invariants(v);
    const LocalInvariants mapped = c.hooks.partial_transpose(inv);
    const LocalInvariants direct = local_invariants(partial_transpose(v));
    const bool ok = rel_close(mapped.i1, inv.i1, 1e-10L) && rel_close(mapped.i2, inv.i2, 1e-10L) &&
                    rel_close(mapped.i3, -inv.i3, 1e-10L) &&
                    rel_close(mapped.i4, inv.i4, 1e-10L) &&
                    rel_close(mapped.i3, direct.i3, 1e-10L) &&
                    rel_close(mapped.i4, direct.i4, 1e-10L);
    if (!ok) {
      c.fail(describe(inv) + " mapped to " + describe(mapped) + ", transposed matrix has " +
             describe(direct) + "; state " + dump_cm(v));
    }
  }
}

void physicality_agree(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    StandardFormParams p{uniform(c.rng, 0.2, 3.0), uniform(c.rng, 0.2, 3.0),
                         uniform(c.rng, -2.0, 2.0), uniform(c.rng, -2.0, 2.0)};
    CovarianceMatrix v = build_standard_cm(p);
    if (coin(c.rng)) v = apply_local(v, random_local_symplectic(c.rng));
    const PhysicalityCheck chk = physicality_criteria(v);
    if (!chk.schur_skipped && chk.schur_ok != chk.symplectic_ok) {
      c.fail(std::string("schur ") + (chk.schur_ok ? "ok" : "violated") + ", symplectic " +
             (chk.symplectic_ok ? "ok" : "violated") + " (min " + num(chk.min_symplectic) +
             ") on " + dump_cm(v));
    }
  }
}

void symplectic_at_least_half(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    const CovarianceMatrix v = random_physical_state(c.rng);
    const SymplecticPair nu = symplectic_spectrum(v);
    if (nu.n_minus < 0.5L - 1e-9L || nu.n_plus < 0.5L - 1e-9L) {
      c.fail("spectrum (" + num(nu.n_plus) + ", " + num(nu.n_minus) + ") of " + dump_cm(v));
    }
  }
}

void nonneg_i3_not_entangled(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    StandardFormParams p;
    LocalInvariants inv;
    do {
      p = random_standard_form(c.rng);
      inv = local_invariants(build_standard_cm(p));
    } while (inv.i3 < 0);
    if (classify_separable(build_standard_cm(p)).kind == StateKind::kEntangled) {
      c.fail(describe(p));
    }
  }
}

// ---- minkowski ----

void coordinate_equivalence(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    StandardFormParams p;
    do {
      p = random_standard_form(c.rng);
    } while (p.n1 * p.n1 <= 0.25 + 1e-6);
    const LocalInvariants inv = local_invariants(build_standard_cm(p));
    const MinkowskiCoords k = coordinates(inv);
    const long double scale = scale_of<long double>({k.dt2, k.dx2, k.dy2, k.dy2_tilde});
    const long double e1 = std::abs(k.dt2 - k.dx2 - k.dy2 - interval_physical(inv));
    const long double e2 = std::abs(k.dt2 - k.dx2 - k.dy2_tilde - interval_separability(inv));
    if (e1 > 1e-9L * scale || e2 > 1e-9L * scale) {
      c.fail("residues " + num(e1) + ", " + num(e2) + " on " + describe(p));
    }
  }
}

void pure_state_cone(Context& c) {
  std::vector<double> rs;
  for (int k = 0; k < 100; ++k) rs.push_back(3.0 * k / 99.0);
  for (int i = 0; i < c.cases; ++i) rs.push_back(uniform(c.rng, 0.0, 3.0));
  for (double r : rs) {
    const LocalInvariants inv = local_invariants(build_standard_cm(tmsv(r)));
    const long double ds2 = interval_physical(inv);
    const double pur = purity(inv);
    if (std::abs(ds2) > 1e-9L || std::abs(pur - 1.0) > 1e-9) {
      c.fail("TMSV(r = " + format_real(r) + "): ds2 " + num(ds2) + ", purity " +
             format_real(pur));
    }
  }
  c.result.cases = static_cast<int>(rs.size());
}

void purity_isosurface(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    const CovarianceMatrix v = random_physical_state(c.rng);
    const LocalInvariants inv = local_invariants(v);
    const LocalInvariants flipped{inv.i1, inv.i2, -inv.i3, inv.i4};
    const LocalInvariants swapped{inv.i2, inv.i1, inv.i3, inv.i4};
    if (det_via_invariants(flipped) != det_via_invariants(inv)) continue;
    const double p = purity(inv);
    if (purity(flipped) != p || purity(swapped) != p || purity(v) != p) {
      c.fail("purities differ at equal det on " + dump_cm(v));
    }
  }
}

void sign_dichotomy(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    const CovarianceMatrix v = mixed_state(c.rng, i);
    const LocalInvariants inv = local_invariants(v);
    const long double s = interval_separability(inv);
    const StateKind k = classify_separable(v).kind;
    const bool ok = (k == StateKind::kEntangled) == (s < -kBoundaryTol) &&
                    (k == StateKind::kSeparable) == (s > kBoundaryTol);
    if (!ok) c.fail(std::string(to_string(k)) + " with ds2t " + num(s) + " on " + dump_cm(v));
  }
}

// ---- measures ----

void argument_identity(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    const CovarianceMatrix v = mixed_state(c.rng, i);
    const LocalInvariants inv = local_invariants(v);
    const double x = unified_argument(inv);
    const long double expected = 2 * symplectic_eigenvalues(partial_transpose(inv)).n_minus;
    if (std::abs(x - expected) > 1e-10L) {
      c.fail("x " + format_real(x) + " vs 2 n~- " + num(expected) + " on " + dump_cm(v));
    }
  }
}

std::vector<std::pair<std::string, double>> all_measures(const LocalInvariants& inv) {
  std::vector<std::pair<std::string, double>> out;
  for (MeasureKind k : {MeasureKind::kMinkowskiDistance, MeasureKind::kLogNegativity,
                        MeasureKind::kEofLowerBound, MeasureKind::kEofSymmetric}) {
    if (k == MeasureKind::kEofSymmetric && !is_symmetric(inv)) continue;
    out.emplace_back(std::string(to_string(k)), measure(k, inv));
  }
  return out;
}

void local_unitary_invariance(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    const CovarianceMatrix v = mixed_state(c.rng, i);
    const CovarianceMatrix w = apply_local(v, random_local_symplectic(c.rng));
    const LocalInvariants a = local_invariants(v), b = local_invariants(w);
    auto before = all_measures(a);
    auto after = all_measures(b);
    before.emplace_back("ds2t", static_cast<double>(interval_separability(a)));
    after.emplace_back("ds2t", static_cast<double>(interval_separability(b)));
    if (before.size() != after.size()) {
      c.fail("symmetry lost under local operation on " + dump_cm(v));
      continue;
    }
    for (size_t k = 0; k < before.size(); ++k) {
      if (!rel_close(before[k].second, after[k].second, 1e-8)) {
        c.fail(before[k].first + " " + format_real(before[k].second) + " -> " +
               format_real(after[k].second) + " on " + dump_cm(v));
        break;
      }
    }
  }
}

void discriminance(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    CovarianceMatrix v = mixed_state(c.rng, i);
    if (i % 5 == 4) {
      const TmtssParams tp{uniform(c.rng, 0.0, 5.0), uniform(c.rng, 0.0, 3.0),
                           uniform(c.rng, 0.0, 1.5)};
      v = build_standard_cm(tmtss(tp));
    }
    const LocalInvariants inv = local_invariants(v);
    const bool sep = separable_like(classify_separable(inv).kind);
    for (const auto& [name, value] : all_measures(inv)) {
      if ((value == 0.0) != sep) {
        c.fail(name + " = " + format_real(value) + " but state is " +
               std::string(to_string(classify_separable(inv).kind)) + ": " + dump_cm(v));
        break;
      }
    }
  }
}

void ordering(Context& c) {
  struct Sample {
    long double nm;
    double ln, eof;
    std::string state;
  };
  std::vector<Sample> samples;
  for (int i = 0; i < c.cases; ++i) {
    const CovarianceMatrix v = entangled_state(c.rng);
    const LocalInvariants inv = local_invariants(v);
    const double ln = log_negativity(inv), eof = eof_lower_bound(inv);
    if (ln < eof) {
      c.fail("log_neg " + format_real(ln) + " < eof_bound " + format_real(eof) + " on " +
             dump_cm(v));
    }
    samples.push_back({symplectic_eigenvalues(partial_transpose(inv)).n_minus, ln, eof,
                       dump_cm(v)});
  }
  std::sort(samples.begin(), samples.end(),
            [](const Sample& a, const Sample& b) { return a.nm < b.nm; });
  for (size_t k = 1; k < samples.size(); ++k) {
    const Sample& lo = samples[k - 1];
    const Sample& hi = samples[k];
    if (hi.nm - lo.nm < 1e-6L) continue;
    if (!(hi.ln < lo.ln) || !(hi.eof < lo.eof)) {
      c.fail("not decreasing in n~- between " + lo.state + " and " + hi.state);
    }
  }
}

template <class Measure>
void noise_monotonicity(Context& c, Measure&& m, const char* name) {
  int accepted = 0;
  const long long budget = 200LL * c.cases;
  for (long long attempt = 0; accepted < c.cases && attempt < budget; ++attempt) {
    const CovarianceMatrix vp = entangled_state(c.rng);
    const CovarianceMatrix noise = random_noise_cm(c.rng);
    const CovarianceMatrix v = noise_convolution_cm(vp, noise);
    const LocalInvariants inv = local_invariants(v);
    if (classify_separable(inv).kind != StateKind::kEntangled) continue;
    ++accepted;
    const double before = m(local_invariants(vp));
    const double after = m(inv);
    if (after > before + 1e-10) {
      c.fail(std::string(name) + " grew " + format_real(before) + " -> " +
             format_real(after) + " for V' = " + dump_cm(vp) + ", P = " + dump_cm(noise));
    }
  }
  c.result.cases = accepted;
}

void noise_monotonicity_mink_dist(Context& c) {
  noise_monotonicity(c, [](const LocalInvariants& inv) { return minkowski_distance_measure(inv); },
                     "mink_dist");
}

void noise_monotonicity_log_neg(Context& c) {
  noise_monotonicity(c, [](const LocalInvariants& inv) { return log_negativity(inv); },
                     "log_neg");
}

// ---- states ----

void states_local_invariance(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    const CovarianceMatrix v = random_physical_state(c.rng);
    const CovarianceMatrix w = apply_local(v, random_local_symplectic(c.rng));
    const auto snapshot = [](const CovarianceMatrix& m) {
      const LocalInvariants inv = local_invariants(m);
      const SymplecticPair nt = symplectic_eigenvalues(partial_transpose(inv));
      return std::vector<std::pair<const char*, long double>>{
          {"i1", inv.i1},
          {"i2", inv.i2},
          {"i3", inv.i3},
          {"i4", inv.i4},
          {"det", det_via_invariants(inv)},
          {"seralian", seralian(inv)},
          {"purity", purity(inv)},
          {"n~+", nt.n_plus},
          {"n~-", nt.n_minus},
          {"ds2", interval_physical(inv)},
          {"ds2t", interval_separability(inv)}};
    };
    const auto a = snapshot(v), b = snapshot(w);
    for (size_t k = 0; k < a.size(); ++k) {
      if (!rel_close(a[k].second, b[k].second, 1e-8L)) {
        c.fail(std::string(a[k].first) + " " + num(a[k].second) + " -> " + num(b[k].second) +
               " on " + dump_cm(v));
        break;
      }
    }
  }
}

void generator_physicality(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    const TmtssParams tp{uniform(c.rng, 0.0, 5.0), uniform(c.rng, 0.0, 3.0),
                         uniform(c.rng, 0.0, 1.5)};
    const double ell = uniform(c.rng, 0.0, 3.0);
    const FiberParams channel{0.0, 1.0 - uniform(c.rng, 0.0, 1.0),
                              1.0 - uniform(c.rng, 0.0, 1.0)};
    const std::pair<std::string, StandardFormParams> outputs[] = {
        {"tmtss", tmtss(tp)},
        {"tmsv", tmsv(tp.r)},
        {"lossy_fiber(tmtss)", lossy_fiber(tmtss(tp), FiberParams::asymmetric(ell))},
        {"lossy_fiber(random)", lossy_fiber(random_standard_form(c.rng), channel)},
    };
    for (const auto& [op, sp] : outputs) {
      if (classify_physical(build_standard_cm(sp)).kind == StateKind::kUnphysical) {
        std::ostringstream os;
        os << op << " gave unphysical " << describe(sp) << " (d " << format_real(tp.d)
           << ", r " << format_real(tp.r) << ", nbar " << format_real(tp.nbar) << ", ell "
           << format_real(ell) << ")";
        c.fail(os.str());
      }
    }
  }
}

long double tmtss_ds2t(const TmtssParams& tp, double ell) {
  return interval_separability(
      local_invariants(build_standard_cm(lossy_fiber(tmtss(tp), FiberParams::asymmetric(ell)))));
}

void tmtss_trend(Context& c) {
  constexpr double d = 2.5;
  constexpr int kGrid = 61;
  for (int i = 0; i < c.cases; ++i) {
    const double nbar = uniform(c.rng, 0.0, 1.5);
    const double ell = coin(c.rng) ? 0.0 : 0.5;
    const auto where = [&](double r, double nb) {
      return "(d 2.5, r " + format_real(r) + ", nbar " + format_real(nb) + ", ell " +
             format_real(ell) + ")";
    };

    // |ds2t| non-decreasing in r once entangled.
    long double prev = 0;
    bool entangled = false;
    for (int k = 0; k < kGrid; ++k) {
      const double r = 3.0 * k / (kGrid - 1);
      const long double s = tmtss_ds2t({d, r, nbar}, ell);
      if (s < -kBoundaryTol) {
        if (entangled && std::abs(s) < prev - 1e-10L * scale_of<long double>({prev})) {
          c.fail("|ds2t| fell to " + num(std::abs(s)) + " at " + where(r, nbar));
          break;
        }
        entangled = true;
        prev = std::abs(s);
      } else if (entangled) {
        c.fail("left the entangled region at " + where(r, nbar));
        break;
      }
    }

    // Separable once, separable for every larger nbar.
    const double r = uniform(c.rng, 0.0, 3.0);
    bool separable = false;
    for (int k = 0; k < kGrid; ++k) {
      const double nb = 1.5 * k / (kGrid - 1);
      const bool ent = tmtss_ds2t({d, r, nb}, ell) < -kBoundaryTol;
      if (separable && ent) {
        c.fail("re-entangled at " + where(r, nb));
        break;
      }
      separable = separable || !ent;
    }
  }
}

void fiber_no_new_entanglement(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    StandardFormParams p;
    do {
      p = random_standard_form(c.rng);
    } while (classify_separable(build_standard_cm(p)).kind != StateKind::kSeparable);
    const FiberParams f = coin(c.rng) ? FiberParams::asymmetric(uniform(c.rng, 0.0, 3.0))
                                      : FiberParams{0.0, 1.0 - uniform(c.rng, 0.0, 1.0),
                                                    1.0 - uniform(c.rng, 0.0, 1.0)};
    const StandardFormParams out = lossy_fiber(p, f);
    if (classify_separable(build_standard_cm(out)).kind != StateKind::kSeparable) {
      c.fail("input " + describe(p) + " through (t1 " + format_real(f.t1) + ", t2 " +
             format_real(f.t2) + ") gave " + describe(out));
    }
  }
}

void loss_factor_continuity(Context& c) {
  for (int i = 0; i < c.cases; ++i) {
    const double d = uniform(c.rng, 0.0, 5.0), nbar = uniform(c.rng, 0.0, 1.5);
    const double noise = d * (2.0 * nbar + 1.0);
    const auto h = [&](double p) { return std::exp(-p) + noise * loss_factor(p); };
    const double limit = 1.0 + noise;
    for (double p : {1e-8, -1e-8}) {
      const double gap = std::abs(h(p) - limit);
      if (gap > 1e-10) {
        c.fail("|h(" + format_real(p) + ") - h(0+)| = " + format_real(gap) + " at d " +
               format_real(d) + ", nbar " + format_real(nbar));
        break;
      }
    }
  }
}

struct Suite {
  const char* name;
  void (*run)(Context&);
};

constexpr Suite kSuites[] = {
    {"core.hermiticity", hermiticity},
    {"core.det_via_invariants", det_vs_direct},
    {"core.partial_transpose_involution", transpose_involution},
    {"core.partial_transpose_invariant_map", transpose_invariant_map},
    {"core.physicality_criteria_agree", physicality_agree},
    {"core.symplectic_at_least_half", symplectic_at_least_half},
    {"core.nonnegative_i3_not_entangled", nonneg_i3_not_entangled},
    {"minkowski.coordinate_determinant_equivalence", coordinate_equivalence},
    {"minkowski.pure_state_cone", pure_state_cone},
    {"minkowski.purity_isosurface", purity_isosurface},
    {"minkowski.sign_dichotomy", sign_dichotomy},
    {"measures.argument_identity", argument_identity},
    {"measures.local_unitary_invariance", local_unitary_invariance},
    {"measures.discriminance", discriminance},
    {"measures.ordering", ordering},
    {"measures.noise_monotonicity_mink_dist", noise_monotonicity_mink_dist},
    {"measures.noise_monotonicity_log_neg", noise_monotonicity_log_neg},
    {"states.local_invariance", states_local_invariance},
    {"states.generator_physicality", generator_physicality},
    {"states.tmtss_trend", tmtss_trend},
    {"states.fiber_no_new_entanglement", fiber_no_new_entanglement},
    {"states.loss_factor_continuity", loss_factor_continuity},
};

PropertyResult run_suite(size_t index, std::uint64_t seed, int cases,
                         const PropertyHooks& hooks) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  Context c{Rng(seq), cases, hooks, {kSuites[index].name, cases, 0, {}}};
  try {
    kSuites[index].run(c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  return c.result;
}

}  // namespace

std::string dump_cm(const CovarianceMatrix& v) {
  nlohmann::json re = nlohmann::json::array(), im = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) {
    nlohmann::json rr = nlohmann::json::array(), ir = nlohmann::json::array();
    for (int k = 0; k < 4; ++k) {
      rr.push_back(v(i, k).real());
      ir.push_back(v(i, k).imag());
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  return nlohmann::json{{"format", "matrix"}, {"re", re}, {"im", im}}.dump();
}

std::vector<std::string> property_suite_names() {
  std::vector<std::string> out;
  for (const Suite& s : kSuites) out.emplace_back(s.name);
  return out;
}

PropertyResult run_property_suite(const std::string& name, std::uint64_t seed, int cases,
                                  const PropertyHooks& hooks) {
  for (size_t i = 0; i < std::size(kSuites); ++i) {
    if (name == kSuites[i].name) return run_suite(i, seed, cases, hooks);
  }
  throw std::invalid_argument("unknown property suite '" + name + "'");
}

std::vector<PropertyResult> run_property_suites(std::uint64_t seed, int cases,
                                                const PropertyHooks& hooks) {
  if (cases < 1) throw std::invalid_argument("cases must be at least 1");
  std::vector<PropertyResult> out;
  for (size_t i = 0; i < std::size(kSuites); ++i) out.push_back(run_suite(i, seed, cases, hooks));
  return out;
}

std::string format_report(const std::vector<PropertyResult>& results) {
  std::ostringstream os;
  int failed = 0;
  for (const PropertyResult& r : results) {
    os << (r.passed() ? "PASS " : "FAIL ") << r.name << "  " << r.cases << " cases";
    if (!r.passed()) {
      ++failed;
      os << ", " << r.failures << " failed\n  counterexample: " << r.counterexample;
    }
    os << '\n';
  }
  os << results.size() - failed << "/" << results.size() << " suites passed\n";
  return os.str();
}

}  // namespace cvmink::cli
