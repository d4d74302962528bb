#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jetgeo/poly/polynomial.hpp"

namespace jetgeo {

struct RegistryEntry {
  std::string name;
  Polynomial F;
  /// Set for members built from a class polynomial P.
  std::optional<Polynomial> P;
  bool in_class = false;
  std::string note;
};

/// Named example polynomials:
///   harmonic     x
///   square       x^2
///   double_well  2x^2 - 1
///   cubic        (x^3 - 3x)/2
///   F0, F1       extreme members, P = (x/sqrt3)^14 and P = 1
///   P_quadratic  member with P = (x/sqrt3)^2
///   cubic_peak   1 - 2x^3
///   near_turnback  1 - 1.99 (x^2 - 1)^4
const std::vector<RegistryEntry>& example_registry();

/// Throws DomainError for an unknown name.
const RegistryEntry& registry_entry(std::string_view name);

}  // namespace jetgeo
