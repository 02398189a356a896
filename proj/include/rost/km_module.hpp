#pragma once

#include "rost/graded_module.hpp"
#include "rost/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rost {

/// Polynomial in v = v_m with Z_(p) coefficients; index k holds the v^k coefficient.
using ZPoly = std::vector<Int>;

struct KmGenerator {
  std::string name;
  int degree = 0;
  bool operator==(const KmGenerator&) const = default;
};

/// Finitely presented module over k_m* = Z_(p)[v], deg v = -(p^m - 1).
struct KmPresentation {
  unsigned long p = 2;
  int m = 1;
  std::vector<KmGenerator> generators;
  /// Each relation maps generator index to its polynomial coefficient.
  std::vector<std::map<std::size_t, ZPoly>> relations;
  /// Lowest degree the presentation is trusted in; unset means unbounded.
  std::optional<int> window_low;

  bool operator==(const KmPresentation&) const = default;

  /// p^m - 1, the degree drop caused by multiplying with v.
  int period() const;
  /// Degree of relation r; throws if the relation is not homogeneous.
  int relation_degree(std::size_t r) const;
  /// Checks primes, indices and homogeneity.
  void validate() const;
  std::size_t find(const std::string& name) const;
};

void to_json(nlohmann::json& j, const KmPresentation& k);
void from_json(const nlohmann::json& j, KmPresentation& k);

/// Constant presentation: the relations of a Z_(p)-module read over k_m*.
KmPresentation from_module(const GradedFPModule& m, int index);

/// Base change v -> 0.
GradedFPModule to_chow(const KmPresentation& k);

/// The degree-d piece of the presented module as a Z_(p)-module; its
/// generators are v^k g with deg g - k(p^m - 1) = d.
GradedFPModule degree_piece(const KmPresentation& k, int d);

struct KmLocalizedInvariants {
  int period = 1;
  /// Invariants per degree class mod (p^m - 1).
  std::map<int, DegreeInvariants> classes;
  /// Sum over classes (the ungraded view).
  DegreeInvariants aggregate;
  /// Rank of the cokernel over F_p[v, 1/v] from the Laurent Smith form.
  int laurent_rank = 0;
  /// laurent_rank equals aggregate free rank plus torsion count.
  bool laurent_consistent = false;
};

nlohmann::json to_json(const KmLocalizedInvariants& inv);

/// Invariants after inverting v. Below every generator and relation degree
/// multiplication by v is an isomorphism, so each class is read off one
/// such stable degree piece.
KmLocalizedInvariants localize_v(const KmPresentation& k);

/// Classes of CH = to_chow(k) that lift to v-torsion elements, per degree.
std::vector<Element> v_torsion_classes(const KmPresentation& k);

/// to_chow(k) modulo the v-torsion classes.
GradedFPModule gr_geometric(const KmPresentation& k);

/// Ungraded comparison of K_m ⊗ gr(m) with gr_p of the localized bar.
TheoremReport check_cor_3_5_second(const KmPresentation& k, const KmPresentation& bar);

}  // namespace rost
