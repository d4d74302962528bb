#include "jetgeo/registry.hpp"

#include "jetgeo/error.hpp"
#include "jetgeo/poly/seagull.hpp"

namespace jetgeo {
namespace {

std::vector<RegistryEntry> build() {
  std::vector<RegistryEntry> r;
  r.push_back({"harmonic", Polynomial{0.0, 1.0}, std::nullopt, false, "G = x gives the harmonic oscillator"});
  r.push_back({"square", Polynomial{0.0, 0.0, 1.0}, std::nullopt, false, "periodic for pt = (0, 1)"});
  r.push_back({"double_well", Polynomial{-1.0, 0.0, 2.0}, std::nullopt, false, "homoclinic on each half"});
  r.push_back({"cubic", Polynomial{0.0, -1.5, 0.0, 0.5}, std::nullopt, false, "turn-back heteroclinic on (-1, 1)"});
  const Polynomial P0 = scaled_power(14), P1 = Polynomial::constant(1.0), P2 = scaled_power(2);
  r.push_back({"F0", build_specific_seagull(P0), P0, true, "extreme member of the specific class"});
  r.push_back({"F1", build_specific_seagull(P1), P1, true, "extreme member of the specific class"});
  r.push_back({"P_quadratic", build_specific_seagull(P2), P2, true, "member of the specific class"});
  r.push_back({"cubic_peak", Polynomial{1.0, 0.0, 0.0, -2.0}, std::nullopt, false, "triple root of G - 1 at 0"});
  const Polynomial s = Polynomial{-1.0, 0.0, 1.0};
  r.push_back({"near_turnback", 1.0 - 1.99 * (s * s * s * s), std::nullopt, false,
               "expected non-minimizing in the magnetic space over F; open in J^k"});
  return r;
}

}  // namespace

const std::vector<RegistryEntry>& example_registry() {
  static const std::vector<RegistryEntry> r = build();
  return r;
}

const RegistryEntry& registry_entry(std::string_view name) {
  for (const auto& e : example_registry())
    if (e.name == name) return e;
  throw DomainError("unknown registry entry: " + std::string(name));
}

}  // namespace jetgeo
