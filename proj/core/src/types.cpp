#include "hybridom/types.hpp"

#include <charconv>
#include <stdexcept>

namespace hybridom {

std::string format_number(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string_view to_string(Subsystem s) {
  switch (s) {
    case Subsystem::Optical:
      return "optical";
    case Subsystem::Mechanical:
      return "mech";
    case Subsystem::Bogoliubov:
      return "bog";
  }
  return "?";
}

std::optional<Subsystem> parse_subsystem(std::string_view text) {
  if (text == "optical" || text == "a") return Subsystem::Optical;
  if (text == "mech" || text == "mechanical" || text == "m") return Subsystem::Mechanical;
  if (text == "bog" || text == "bogoliubov" || text == "d") return Subsystem::Bogoliubov;
  return std::nullopt;
}

double Extended::value() const {
  if (infinite_) throw std::logic_error("Extended::value() called on an infinite value");
  return value_;
}

}  // namespace hybridom
