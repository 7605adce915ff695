#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace hybridom {

using Complex = std::complex<double>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using CMat6 = Eigen::Matrix<Complex, 6, 6>;

/// Ordering of the fluctuation vector: (X_a, P_a, X_b, P_b, X_d, P_d).
enum class Quadrature : int { Xa = 0, Pa = 1, Xb = 2, Pb = 3, Xd = 4, Pd = 5 };

constexpr int idx(Quadrature q) { return static_cast<int>(q); }

/// Cavity field, mechanical mirror, Bogoliubov mode of the condensate.
enum class Subsystem : int { Optical = 0, Mechanical = 1, Bogoliubov = 2 };

inline constexpr std::array<Subsystem, 3> kSubsystems{Subsystem::Optical, Subsystem::Mechanical,
                                                      Subsystem::Bogoliubov};

constexpr int idx(Subsystem s) { return static_cast<int>(s); }

// Public mode-index table. The amplified quadratures are optical-P, mech-X and bog-X
// (s_22, s_33, s_55 in 1-based notation); their complements are the squeezed ones.
inline constexpr std::array<int, 3> kAmplifiedIndex{idx(Quadrature::Pa), idx(Quadrature::Xb),
                                                    idx(Quadrature::Xd)};
inline constexpr std::array<int, 3> kSqueezedIndex{idx(Quadrature::Xa), idx(Quadrature::Pb),
                                                   idx(Quadrature::Pd)};

constexpr int amplified_index(Subsystem s) { return kAmplifiedIndex[static_cast<std::size_t>(s)]; }
constexpr int squeezed_index(Subsystem s) { return kSqueezedIndex[static_cast<std::size_t>(s)]; }

/// Subsystem a quadrature index belongs to.
constexpr Subsystem subsystem_of(int quadrature) { return static_cast<Subsystem>(quadrature / 2); }

/// True when chi_ij / s_ij can be nonzero. The RWA splits the quadratures into the two
/// uncoupled blocks {X_a, P_b, P_d} and {P_a, X_b, X_d}.
constexpr bool structurally_coupled(int i, int j) {
  auto block = [](int k) { return k == 0 || k == 3 || k == 5; };
  return block(i) == block(j);
}

/// Shortest decimal text that parses back to exactly v.
std::string format_number(double v);

std::string_view to_string(Subsystem s);
std::optional<Subsystem> parse_subsystem(std::string_view text);

/// Real value that may be an explicit divergence (e.g. gain at a vanishing denominator).
class Extended {
 public:
  static Extended finite(double v) { return Extended(v, false); }
  static Extended infinite() { return Extended(0.0, true); }

  bool is_finite() const noexcept { return !infinite_; }
  bool is_infinite() const noexcept { return infinite_; }
  /// Throws std::logic_error when infinite.
  double value() const;
  double value_or(double fallback) const noexcept { return infinite_ ? fallback : value_; }

  friend bool operator==(const Extended&, const Extended&) = default;

 private:
  Extended(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_;
  bool infinite_;
};

}  // namespace hybridom
