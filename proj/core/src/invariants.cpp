#include "hybridom/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hybridom/amplifier.hpp"
#include "hybridom/errors.hpp"
#include "hybridom/linear_response.hpp"
#include "hybridom/squeezer.hpp"

namespace hybridom {
namespace {

double rel_err(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

class Recorder {
 public:
  Recorder(InvariantReport& r, const DimensionlessParams& d) : report_(r), d_(d) {}

  void record(const std::string& name, double tol, double deviation, const std::string& where) {
    InvariantResult& res = find(name, tol);
    ++res.checked;
    if (!std::isnan(deviation)) res.worst = std::max(res.worst, deviation);
    if (!(deviation <= tol)) {
      if (res.failures++ == 0) {
        std::ostringstream os;
        os.precision(10);
        os << where << " at C0=" << d_.C0 << " C1=" << d_.C1 << " xi_m=" << d_.xi_m << " xi_d=" << d_.xi_d
           << " (deviation " << deviation << ")";
        res.first_failure = os.str();
      }
    }
  }

 private:
  InvariantResult& find(const std::string& name, double tol) {
    for (auto& r : report_.results)
      if (r.name == name) return r;
    report_.results.push_back(InvariantResult{name, 0, 0, 0.0, tol, {}});
    return report_.results.back();
  }
  InvariantReport& report_;
  const DimensionlessParams& d_;
};

std::string at_omega(double w) {
  std::ostringstream os;
  os << "omega=" << w;
  return os.str();
}

}  // namespace

bool InvariantReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const InvariantResult& r) { return r.ok(); });
}

void check_point(const DimensionlessParams& d, InvariantReport& report) {
  ++report.points;
  const DriftMatrix A = build_drift(d);
  if (!stability_eigen(A).hurwitz) {
    ++report.skipped_unstable;
    return;
  }
  Recorder rec(report, d);

  constexpr int kGrid = 41;
  for (int k = 0; k < kGrid; ++k) {
    const double w = -10.0 * d.kappa + 20.0 * d.kappa * k / (kGrid - 1);
    try {
      const SusceptibilityMatrix cn = susceptibility_numeric(A, w);
      const SusceptibilityMatrix cc = susceptibility_closed(d, w);
      const SusceptibilityMatrix cm = susceptibility_closed(d, -w);
      double dev = 0.0;
      double sym = 0.0;
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
          dev = std::max(dev, rel_err(cn.entries(i, j), cc.entries(i, j)));
          sym = std::max(sym, rel_err(cm.entries(i, j), std::conj(cc.entries(i, j))));
        }
      }
      rec.record("susceptibility closed form vs resolvent", 1e-9, dev, at_omega(w));
      rec.record("susceptibility reality symmetry", 1e-12, sym, at_omega(w));

      const ScatteringMatrix s = scattering_matrix(cc, d);
      for (Subsystem m : kSubsystems) {
        const double sx = squeezing_spectrum(cc, d, m);
        const double sp = amplified_spectrum(s, d, m);
        const double sxp = cross_correlation_spectrum(cc, m, d);
        double n_eff = 0.0;
        try {
          n_eff = purity(sx, sp, sxp, sxp);
        } catch (const UnphysicalSpectra&) {
          n_eff = -1.0;
        }
        rec.record("n_eff non-negative", 1e-9, -n_eff, at_omega(w) + " " + std::string(to_string(m)));
      }
    } catch (const PoleError&) {
      rec.record("no pole on the real axis", 0.0, 1.0, at_omega(w));
    }
  }

  // Zero-frequency route equivalence. The closed-form chi is used here: near-unit |gamma chi_jj|
  // makes 1 - gamma chi_jj cancel, which the resolvent of a stiff A resolves less accurately.
  const SusceptibilityMatrix c0 = susceptibility_closed(d, 0.0);
  const ScatteringMatrix s0 = scattering_matrix(c0, d);
  try {
    const OnResonanceGains gains = gain_on_resonance(d);
    const auto noise = added_noise_on_resonance(d);
    const auto sq = squeezing_on_resonance(d);
    for (Subsystem m : kSubsystems) {
      const auto i = static_cast<std::size_t>(m);
      const std::string tag(to_string(m));
      const Extended G = gains.gain(m);
      if (G.is_finite()) rec.record("gain spectral vs closed form", 1e-9, rel_err(gain_spectrum(s0, m), G.value()), tag);
      if (noise[i].is_finite() && gain_spectrum(s0, m) > 0.0) {
        rec.record("added noise spectral vs closed form", 1e-9,
                   rel_err(added_noise_spectrum(c0, d, m), noise[i].value()), tag);
      }
      rec.record("squeezing spectral vs closed form", 1e-10, rel_err(squeezing_spectrum(c0, d, m), sq[i]), tag);
      rec.record("zero-frequency cross-correlation", 1e-10, std::abs(cross_correlation_spectrum(c0, m, d)), tag);
      if (d.xi_m == 0.0 && d.xi_d == 0.0 && d.n_a == 0.0 && d.n_m == 0.0 && d.n_d == 0.0) {
        rec.record("vacuum preservation", 1e-12, std::abs(sq[i] - 0.5), tag);
      }
    }
  } catch (const SingularConfiguration&) {
    // xi = 1 exactly: the closed forms are not defined there.
  }
}

InvariantReport check_invariants(const SweepConfig& cfg) {
  InvariantReport report;
  const std::vector<double> xs = cfg.axis ? cfg.axis->values() : std::vector<double>{0.0};
  for (const Series& s : cfg.series) {
    for (double x : xs) {
      ParamLayer layer = cfg.base;
      layer.merge(s.params);
      if (cfg.axis && cfg.axis->name != "omega") layer.set(cfg.axis->name, x);
      DimensionlessParams d;
      try {
        d = resolve(layer);
      } catch (const Error&) {
        continue;
      }
      check_point(d, report);
      if (cfg.axis && cfg.axis->name == "omega") break;  // omega sweeps share one parameter point
    }
  }
  return report;
}

}  // namespace hybridom
