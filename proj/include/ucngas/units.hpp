#pragma once

#include <string_view>

#include "ucngas/constants.hpp"
#include "ucngas/error.hpp"

namespace ucngas {

enum class Dimension { energy, length, number_density };

/// The fixed set of display units used at I/O boundaries.
enum class Unit {
  joule,
  peV,
  kelvin,  // energy expressed as a temperature, E = kB T
  metre,
  centimetre,
  micrometre,
  per_cubic_metre,
  per_cubic_centimetre,
};

inline constexpr double elementary_charge = 1.602176634e-19;  // C, exact

[[nodiscard]] constexpr Dimension dimension_of(Unit u) noexcept {
  switch (u) {
    case Unit::joule:
    case Unit::peV:
    case Unit::kelvin:
      return Dimension::energy;
    case Unit::metre:
    case Unit::centimetre:
    case Unit::micrometre:
      return Dimension::length;
    case Unit::per_cubic_metre:
    case Unit::per_cubic_centimetre:
      return Dimension::number_density;
  }
  return Dimension::energy;
}

[[nodiscard]] constexpr std::string_view unit_name(Unit u) noexcept {
  switch (u) {
    case Unit::joule: return "J";
    case Unit::peV: return "peV";
    case Unit::kelvin: return "K";
    case Unit::metre: return "m";
    case Unit::centimetre: return "cm";
    case Unit::micrometre: return "um";
    case Unit::per_cubic_metre: return "m^-3";
    case Unit::per_cubic_centimetre: return "cm^-3";
  }
  return "?";
}

namespace detail {

// Size of one `u` in the SI unit of its dimension.
[[nodiscard]] inline double si_factor(Unit u, const PhysicalConstants& c) {
  switch (u) {
    case Unit::joule: return 1.0;
    case Unit::peV: return elementary_charge * 1e-12;
    case Unit::kelvin: return c.kB;
    case Unit::metre: return 1.0;
    case Unit::centimetre: return 1e-2;
    case Unit::micrometre: return 1e-6;
    case Unit::per_cubic_metre: return 1.0;
    case Unit::per_cubic_centimetre: return 1e6;
  }
  return 1.0;
}

}  // namespace detail

/// Multiplicative conversion between compatible units.
[[nodiscard]] inline double convert(double value, Unit from, Unit to,
                                    const PhysicalConstants& c = default_constants()) {
  if (dimension_of(from) != dimension_of(to)) {
    throw dimension_error("cannot convert " + std::string(unit_name(from)) + " to " +
                          std::string(unit_name(to)));
  }
  if (from == to) return value;
  return value * (detail::si_factor(from, c) / detail::si_factor(to, c));
}

}  // namespace ucngas
