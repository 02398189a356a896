#pragma once

#include "rost/graded_ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rost {

/// Torsion ideal T of a ring: the p-power torsion submodule, degree by degree.
struct TorsionIdeal {
  /// Z_(p)-spanning set of T, nonzero elements only.
  std::vector<Element> elements;
  /// Subset generating T as an ideal.
  std::vector<Element> ideal_generators;
  /// With a restriction map: ker(res) = T was checked in every degree.
  bool matches_kernel = false;
  std::vector<std::string> notes;
};

/// Per degree, the saturation of the relation lattice; with res supplied,
/// also checks that ker(res) coincides with it.
TorsionIdeal torsion_ideal(const GradedRing& ring, const GradedMap* res = nullptr);

/// True when target lies in the span of the given same-degree elements plus
/// the module relations.
bool in_span(const GradedFPModule& m, int degree, const std::vector<Element>& span, const Element& target);

struct PowerWitness {
  Element product;
  std::vector<std::size_t> factors;  // indices into the generator list
};

/// Searches products of s ideal generators (with repetition). Returns a
/// nonzero product if one exists; nullopt certifies T^s = 0.
std::optional<PowerWitness> ideal_power_witness(const GradedRing& ring, const std::vector<Element>& generators, int s);

}  // namespace rost
