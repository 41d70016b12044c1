#include "sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "io.hpp"

namespace cvmink::cli {

std::vector<double> Axis::values() const {
  std::vector<double> out(static_cast<size_t>(count));
  const double step = (stop - start) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = start + i * step;
  out.back() = stop;
  return out;
}

bool is_sweep_parameter(const std::string& name) {
  return name == "d" || name == "r" || name == "nbar" || name == "ell";
}

void SweepSpec::validate() const {
  if (axes.empty()) throw ParseError("sweep spec needs at least one axis");
  for (const auto& [name, value] : fixed) {
    if (!is_sweep_parameter(name)) {
      throw ParseError("unknown fixed parameter \"" + name + "\"");
    }
    if (!std::isfinite(value)) throw ParseError("fixed \"" + name + "\" is not finite");
  }
  for (size_t i = 0; i < axes.size(); ++i) {
    const Axis& a = axes[i];
    if (!is_sweep_parameter(a.name)) {
      throw ParseError("unknown axis parameter \"" + a.name + "\"");
    }
    if (a.count < 2) throw ParseError("axis \"" + a.name + "\" needs count >= 2");
    if (fixed.count(a.name)) {
      throw ParseError("\"" + a.name + "\" is both fixed and swept");
    }
    for (size_t k = 0; k < i; ++k) {
      if (axes[k].name == a.name) throw ParseError("axis \"" + a.name + "\" repeated");
    }
  }
}

size_t SweepSpec::size() const {
  size_t n = 1;
  for (const auto& a : axes) n *= static_cast<size_t>(a.count);
  return n;
}

void ParamPoint::set(const std::string& name, double value) {
  if (name == "d") {
    d = value;
  } else if (name == "r") {
    r = value;
  } else if (name == "nbar") {
    nbar = value;
  } else if (name == "ell") {
    ell = value;
  } else {
    throw ParseError("unknown parameter \"" + name + "\"");
  }
}

StandardFormParams ParamPoint::state() const {
  StandardFormParams sp = tmtss({d, r, nbar});
  if (channel) return lossy_fiber(sp, *channel);
  if (ell) return lossy_fiber(sp, FiberParams::asymmetric(*ell));
  return sp;
}

AnalysisRecord ParamPoint::analyze() const {
  std::optional<double> shown_ell = ell;
  if (channel) shown_ell = channel->ell;
  return cli::analyze(build_standard_cm(state()), InputParams{d, r, nbar, shown_ell});
}

SweepSpec sweep_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("sweep spec must be a JSON object");
  SweepSpec spec;
  if (j.contains("fixed")) {
    const auto& f = j.at("fixed");
    if (!f.is_object()) throw ParseError("\"fixed\" must be an object");
    for (const auto& [key, value] : f.items()) {
      if (!value.is_number()) throw ParseError("fixed \"" + key + "\" must be a number");
      spec.fixed[key] = value.get<double>();
    }
  }
  if (!j.contains("axes") || !j.at("axes").is_array()) {
    throw ParseError("sweep spec needs an \"axes\" array");
  }
  for (const auto& a : j.at("axes")) {
    if (!a.is_object() || !a.contains("name") || !a.at("name").is_string()) {
      throw ParseError("each axis needs a string \"name\"");
    }
    Axis axis;
    axis.name = a.at("name").get<std::string>();
    axis.start = json_number(a, "start");
    axis.stop = json_number(a, "stop");
    const double count = json_number(a, "count");
    if (count != std::floor(count)) throw ParseError("axis count must be an integer");
    axis.count = static_cast<int>(count);
    spec.axes.push_back(axis);
  }
  if (j.contains("channel") && !j.at("channel").is_null()) {
    const auto& c = j.at("channel");
    if (c.contains("t1") || c.contains("t2")) {
      FiberParams f;
      f.t1 = json_number(c, "t1");
      f.t2 = json_number(c, "t2");
      f.ell = c.contains("ell") ? json_number(c, "ell") : -std::log(f.t2);
      spec.channel = f;
    } else {
      spec.channel = FiberParams::asymmetric(json_number(c, "ell"));
    }
  }
  spec.validate();
  return spec;
}

std::vector<AnalysisRecord> run_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  std::vector<std::vector<double>> grids;
  for (const auto& a : spec.axes) grids.push_back(a.values());
  const size_t total = spec.size();

  ParamPoint base;
  for (const auto& [name, value] : spec.fixed) base.set(name, value);
  base.channel = spec.channel;

  const auto point_at = [&](size_t flat) {
    ParamPoint p = base;
    for (size_t k = grids.size(); k-- > 0;) {
      const size_t n = grids[k].size();
      p.set(spec.axes[k].name, grids[k][flat % n]);
      flat /= n;
    }
    return p;
  };

  std::vector<AnalysisRecord> rows(total);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<size_t>(threads, total));
  if (threads <= 1) {
    for (size_t i = 0; i < total; ++i) rows[i] = point_at(i).analyze();
    return rows;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (size_t i = w; i < total; i += threads) rows[i] = point_at(i).analyze();
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<AnalysisRecord>& rows) {
  out << csv_header() << '\n';
  for (const auto& r : rows) out << csv_row(r) << '\n';
}

}  // namespace cvmink::cli
