#include "hybridom/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <execution>
#include <functional>
#include <numeric>

#include "hybridom/amplifier.hpp"
#include "hybridom/bandwidth.hpp"
#include "hybridom/errors.hpp"
#include "hybridom/linear_response.hpp"
#include "hybridom/squeezer.hpp"

namespace hybridom {
namespace {

constexpr std::pair<Sentinel, std::string_view> kSentinels[] = {
    {Sentinel::Infinite, "inf"},
    {Sentinel::Unstable, "unstable"},
    {Sentinel::Pole, "pole"},
    {Sentinel::Undefined, "undefined"},
};

Cell cell(double v) { return std::isfinite(v) ? Cell{v} : Cell{Sentinel::Undefined}; }

Cell cell(const Extended& v) { return v.is_infinite() ? Cell{Sentinel::Infinite} : cell(v.value()); }

std::string suffix(const Observable& o) { return std::string(to_string(o.mode)); }

// Column names contributed by one observable, without the series prefix.
std::vector<std::string> observable_columns(const Observable& o) {
  const std::string m = suffix(o);
  switch (o.kind) {
    case ObservableKind::Gain: return {"gain:" + m, "gain_db:" + m};
    case ObservableKind::AddedNoise: return {"added_noise:" + m};
    case ObservableKind::AmplifiedSpectrum: return {"amplified_spectrum:" + m};
    case ObservableKind::Squeezing: return {"squeezing:" + m, "squeezing_db:" + m};
    case ObservableKind::Purity: return {"n_eff:" + m};
    case ObservableKind::CrossCorrelation: return {"cross_correlation:" + m};
    case ObservableKind::Bandwidth:
      if (o.mode == Subsystem::Optical) return {"bandwidth:" + m, "bandwidth_analytic:" + m};
      return {"bandwidth:" + m};
    case ObservableKind::Stability: return {"max_re_eig", "hurwitz", "xi_m_max", "xi_d_max", "xi_m", "xi_d"};
  }
  return {};
}

// Runs f and maps library errors to sentinels.
void guarded(std::vector<Cell>& out, std::size_t width, const std::function<void(std::vector<Cell>&)>& f) {
  std::vector<Cell> local;
  local.reserve(width);
  Sentinel failure = Sentinel::Undefined;
  bool failed = false;
  try {
    f(local);
  } catch (const PoleError&) {
    failed = true;
    failure = Sentinel::Pole;
  } catch (const NoSteadyState&) {
    failed = true;
    failure = Sentinel::Unstable;
  } catch (const Error&) {
    failed = true;
  }
  if (failed || local.size() != width) local.assign(width, Cell{failure});
  out.insert(out.end(), local.begin(), local.end());
}

void evaluate(const Observable& o, const DimensionlessParams& d, double omega, std::vector<Cell>& out) {
  switch (o.kind) {
    case ObservableKind::Gain: {
      const AmplifierPoint p = evaluate_amplifier(d, omega, o.mode);
      out.push_back(cell(p.gain));
      out.push_back(p.gain.is_infinite() ? Cell{Sentinel::Infinite} : cell(gain_db(p.gain.value())));
      return;
    }
    case ObservableKind::AddedNoise:
      out.push_back(cell(evaluate_amplifier(d, omega, o.mode).added_noise));
      return;
    case ObservableKind::AmplifiedSpectrum:
      out.push_back(cell(evaluate_amplifier(d, omega, o.mode).amplified_spectrum));
      return;
    case ObservableKind::Squeezing: {
      const SqueezePoint p = evaluate_squeezer(d, omega, o.mode);
      out.push_back(cell(p.spectrum));
      out.push_back(cell(p.squeezing_db));
      return;
    }
    case ObservableKind::Purity:
      out.push_back(cell(evaluate_squeezer(d, omega, o.mode).n_eff));
      return;
    case ObservableKind::CrossCorrelation:
      out.push_back(cell(evaluate_squeezer(d, omega, o.mode).cross_corr));
      return;
    case ObservableKind::Bandwidth:
      guarded(out, 1, [&](std::vector<Cell>& c) { c.push_back(cell(fwhm_numeric(d, o.mode))); });
      if (o.mode == Subsystem::Optical) {
        guarded(out, 1, [&](std::vector<Cell>& c) { c.push_back(cell(gain_bandwidth_analytic(d).final_form)); });
      }
      return;
    case ObservableKind::Stability:
      return;  // handled by the caller
  }
}

struct PointInputs {
  std::vector<std::optional<DimensionlessParams>> params;  // per series; nullopt if unresolvable
  double omega = 0.0;
};

}  // namespace

std::string_view to_string(Sentinel s) {
  for (const auto& [k, name] : kSentinels)
    if (k == s) return name;
  return "undefined";
}

std::optional<Sentinel> parse_sentinel(std::string_view text) {
  for (const auto& [k, name] : kSentinels)
    if (text == name) return k;
  return std::nullopt;
}

std::string_view library_version() { return HYBRIDOM_VERSION; }

std::vector<std::string> sweep_columns(const SweepConfig& cfg) {
  std::vector<std::string> cols{cfg.axis ? cfg.axis->name : std::string("point")};
  const bool prefixed = cfg.series.size() > 1 || !cfg.series.front().label.empty();
  for (const Series& s : cfg.series) {
    for (const Observable& o : cfg.observables) {
      for (const std::string& c : observable_columns(o)) cols.push_back(prefixed ? s.label + ":" + c : c);
    }
  }
  return cols;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  SweepResult res;
  res.columns = sweep_columns(cfg);

  SweepMetadata& md = res.metadata;
  md.name = cfg.name;
  md.description = cfg.description;
  md.version = std::string(library_version());
  md.omega = cfg.omega;
  md.base = cfg.base.describe();
  if (cfg.axis) {
    md.axis = cfg.axis->name + " " + format_number(cfg.axis->from) + " " + format_number(cfg.axis->to) + " " +
              std::to_string(cfg.axis->points) + " " + (cfg.axis->scale == AxisScale::Log ? "log" : "linear");
  }
  for (const Series& s : cfg.series) md.series.emplace_back(s.label, s.params.describe());

  const std::vector<double> axis_values = cfg.axis ? cfg.axis->values() : std::vector<double>{0.0};
  const std::size_t n = axis_values.size();
  res.rows.assign(n, {});

  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});

  std::for_each(std::execution::par, idx.begin(), idx.end(), [&](std::size_t i) {
    std::vector<Cell>& row = res.rows[i];
    row.reserve(res.columns.size());
    const double x = axis_values[i];
    row.push_back(cfg.axis ? Cell{x} : Cell{static_cast<double>(i)});

    double omega = cfg.omega;
    for (const Series& s : cfg.series) {
      ParamLayer layer = cfg.base;
      layer.merge(s.params);
      if (cfg.axis) {
        if (cfg.axis->name == "omega") {
          omega = x;
        } else {
          layer.set(cfg.axis->name, x);
        }
      }

      std::optional<DimensionlessParams> d;
      try {
        d = resolve(layer);
      } catch (const Error&) {
      }

      bool hurwitz = false;
      std::optional<StabilityReport> st;
      if (d) {
        try {
          st = stability_report(*d);
          hurwitz = st->hurwitz;
        } catch (const Error&) {
        }
      }

      for (const Observable& o : cfg.observables) {
        const std::size_t width = observable_columns(o).size();
        if (o.kind == ObservableKind::Stability) {
          if (!d || !st) {
            row.insert(row.end(), width, Cell{Sentinel::Undefined});
            continue;
          }
          row.push_back(cell(st->max_real_part));
          row.push_back(Cell{hurwitz ? 1.0 : 0.0});
          try {
            const StabilityBounds b = collective_cooperativities(*d);
            row.push_back(cell(b.xi_m_max));
            row.push_back(cell(b.xi_d_max));
          } catch (const Error&) {
            row.insert(row.end(), 2, Cell{Sentinel::Undefined});
          }
          row.push_back(cell(d->xi_m));
          row.push_back(cell(d->xi_d));
          continue;
        }
        if (!d) {
          row.insert(row.end(), width, Cell{Sentinel::Undefined});
        } else if (!hurwitz) {
          row.insert(row.end(), width, Cell{Sentinel::Unstable});
        } else {
          guarded(row, width, [&](std::vector<Cell>& c) { evaluate(o, *d, omega, c); });
        }
      }
    }
  });
  return res;
}

}  // namespace hybridom
