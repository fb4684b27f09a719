#pragma once

#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>
#include <string>

#include "ucngas/error.hpp"

namespace ucngas {

/// Selects between self-consistent coefficients and the literal printed
/// forms (spin-less 6 pi^2 density prefactor, pi^2/2 and 5 pi^2/8
/// low-temperature expansions).
enum class Coefficients { consistent, paper_literal };

/// SI physical constants. Every field must be strictly positive.
struct PhysicalConstants {
  double m = 0.0;     ///< neutron mass [kg]
  double g = 0.0;     ///< gravitational acceleration [m/s^2]
  double hbar = 0.0;  ///< reduced Planck constant [J s]
  double kB = 0.0;    ///< Boltzmann constant [J/K]

  /// Planck constant [J s].
  [[nodiscard]] constexpr double h() const noexcept {
    return 2.0 * std::numbers::pi * hbar;
  }

  [[nodiscard]] constexpr bool valid() const noexcept {
    return m > 0.0 && g > 0.0 && hbar > 0.0 && kB > 0.0 && std::isfinite(m) &&
           std::isfinite(g) && std::isfinite(hbar) && std::isfinite(kB);
  }

  friend constexpr bool operator==(const PhysicalConstants&,
                                   const PhysicalConstants&) = default;
};

/// CODATA-2018 values and standard gravity.
[[nodiscard]] constexpr PhysicalConstants default_constants() noexcept {
  return {1.67492749804e-27, 9.80665, 1.054571817e-34, 1.380649e-23};
}

inline void require_valid(const PhysicalConstants& c) {
  if (!c.valid()) {
    throw domain_error("physical constants must be finite and strictly positive");
  }
}

/// Natural scales of a mass in a uniform field above a hard floor.
struct GravityScales {
  double alpha = 0.0;  ///< 2 m^2 g / hbar^2 [m^-3]
  double e_g = 0.0;    ///< (m g^2 hbar^2 / 2)^{1/3} [J]
  double l_g = 0.0;    ///< (hbar^2 / (2 m^2 g))^{1/3} [m]
};

[[nodiscard]] inline GravityScales derive_scales(const PhysicalConstants& c) {
  require_valid(c);
  GravityScales s;
  s.alpha = 2.0 * c.m * c.m * c.g / (c.hbar * c.hbar);
  s.e_g = std::cbrt(c.m * c.g * c.g * c.hbar * c.hbar / 2.0);
  s.l_g = std::cbrt(c.hbar * c.hbar / (2.0 * c.m * c.m * c.g));
  return s;
}

/// Reads a flat `key = value` file. Recognized keys: m_kg, g_mps2, hbar_Js,
/// kB_JpK. Absent keys keep their CODATA value; unknown keys, duplicate keys
/// and unparsable values throw config_error. `#` starts a comment.
[[nodiscard]] inline PhysicalConstants parse_constants_config(std::istream& in) {
  PhysicalConstants c = default_constants();
  bool seen[4] = {false, false, false, false};
  std::string line;
  int lineno = 0;

  auto trim = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return std::string{};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw config_error("line " + std::to_string(lineno) + ": expected `key = value`");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string text = trim(line.substr(eq + 1));

    double value = 0.0;
    std::istringstream parse(text);
    if (!(parse >> value) || !(parse >> std::ws).eof()) {
      throw config_error("line " + std::to_string(lineno) + ": bad number `" + text + "`");
    }

    int slot = -1;
    if (key == "m_kg") {
      slot = 0;
      c.m = value;
    } else if (key == "g_mps2") {
      slot = 1;
      c.g = value;
    } else if (key == "hbar_Js") {
      slot = 2;
      c.hbar = value;
    } else if (key == "kB_JpK") {
      slot = 3;
      c.kB = value;
    } else {
      throw config_error("line " + std::to_string(lineno) + ": unknown key `" + key + "`");
    }
    if (seen[slot]) {
      throw config_error("line " + std::to_string(lineno) + ": duplicate key `" + key + "`");
    }
    seen[slot] = true;
  }

  if (!c.valid()) {
    throw config_error("configured constants must be finite and strictly positive");
  }
  return c;
}

}  // namespace ucngas
