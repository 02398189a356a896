#pragma once

#include "rost/graded_ring.hpp"
#include "rost/km_module.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace rost {

/// A factor ring together with the names of its classes c_k(y^i).
struct FactorClasses {
  std::shared_ptr<const GradedRing> ring;
  /// Name of c_k(y^i) in ring; empty when the class does not exist.
  std::function<std::string(int k, int i)> name;
  int max_power = 1;
  int n = 2;
};

/// gr(m)*(R_n) with c_k(y^i) named as in the catalog.
FactorClasses rost_factor(unsigned long p, int n, int m);
/// gr(m)* of the maximal Pfister neighbor: c_0 = u_0 = h^(2^n - 1), c_m = u_m.
FactorClasses quadric_factor(int n, int m);

/// Generators c_m(y_r^i)c_0(y_t^j) - c_0(y_r^i)c_m(y_t^j), 1 <= r < t <= s.
struct KunnethIdeal {
  int s = 2;
  int m = 1;
  std::vector<Element> generators;
  std::vector<std::string> names;
};

std::size_t j_ideal_size(unsigned long p, int s);
/// Symbolic generator names for (p, m, s).
std::vector<std::string> j_ideal_names(unsigned long p, int m, int s);
/// The generators inside a tensor ring of the given factors.
KunnethIdeal j_ideal(const GradedRing& tensor, const std::vector<FactorClasses>& factors, int m);

/// (⊗ factors)/(J_s) as a ring.
struct KunnethQuotient {
  std::vector<FactorClasses> factors;
  int m = 1;
  std::shared_ptr<const GradedRing> tensor;
  std::shared_ptr<const GradedRing> quotient;
  KunnethIdeal ideal;
};

KunnethQuotient kunneth_quotient(const std::vector<FactorClasses>& factors, int m);

/// Restriction to the generators accepted by keep; every relation touching a
/// kept generator must be supported on kept generators.
GradedFPModule restrict_generators(const GradedFPModule& m, const std::function<bool(const BasisLabel&)>& keep);

/// gr(m)+(R') ⊗ gr(m)+(R'') split by type: C_0 free ⊗ free, C_1 torsion ⊗
/// torsion, C_2 mixed.
struct CDecomposition {
  GradedFPModule whole;
  GradedFPModule c0;
  GradedFPModule c1;
  GradedFPModule c2;
};

CDecomposition c_decomposition(unsigned long p, int n1, int n2, int m);

/// Quotient by every generator not involving all `factors` factors (some
/// exponent zero). Throws if a label does not carry one exponent per factor.
GradedFPModule tilde_quotient(const GradedFPModule& m, std::size_t factors);

/// Map from a Künneth quotient into a tensor-ring target, multiplicative in
/// the factors. factor_maps[r] sends a generator name of factor r to terms
/// on the generator names of target factor r. Condition (*): target_bar must
/// be isomorphic to the tensor product of factor_bars.
std::shared_ptr<GradedMap> kunneth_map(const KunnethQuotient& domain, std::shared_ptr<const GradedRing> target,
                                       const std::vector<std::function<std::vector<Term>(const std::string&)>>& factor_maps,
                                       const GradedFPModule& target_bar, const std::vector<GradedFPModule>& factor_bars);

// ---------------------------------------------------------------------------
// Bar K-theory elements and condition (**).

/// coeff * v^v_exp * y_1^y[0] ... y_s^y[s-1].
struct BarTerm {
  Int coeff;
  int v_exp = 0;
  std::vector<int> y;
};
using BarElement = std::vector<BarTerm>;

BarElement bar_multiply(const BarElement& a, const BarElement& b, unsigned long p);
bool bar_is_zero(const BarElement& a);
std::string bar_to_string(const BarElement& a);

/// res_K of c_k(y^i) placed in slot t of s: p y_t^i for k = 0, v y_t^i for
/// k = m, zero otherwise; the unit for i = 0.
BarElement res_k(unsigned long p, int m, std::size_t s, std::size_t t, int k, int i);

/// True when res_K kills every J_s generator.
bool res_kills_j(unsigned long p, int m, int s);

struct StarStarResult {
  /// All-positive monomials Y, one entry per exponent vector.
  std::vector<std::vector<int>> monomials;
  /// holds[k]: no p^a v^b Y_k (a + b = order - 1) lies in the span.
  std::vector<bool> holds;
  /// Forbidden elements found in the span.
  std::vector<std::string> members;
  bool all() const;
};

/// Condition (**) for image generators in K[y_1..y_s]/(y^p): for each Y with
/// exponents in [1, p-1], tests p^a v^b Y with a + b = order - 1 against the
/// Z_(p)[v]-span of the generators, degree by degree.
StarStarResult star_star_check(const std::vector<BarElement>& image, unsigned long p, int m, const std::vector<int>& y_degrees,
                               int order = 2);

/// Products of {1, p y_t^i, v y_t^i} over s factors (the versal input).
std::vector<BarElement> versal_image(unsigned long p, int s);
/// Two factors, the second split: {1, p y_1^i, v y_1^i} times y_2^j, 0 <= j <= p-1.
std::vector<BarElement> product_image(unsigned long p);

// ---------------------------------------------------------------------------
// Slotwise comparison K ⊗ (⊗ gr(m)+)/(J_s) versus gr_{p^s} of the tilde bar.

struct SlotComparison {
  std::map<int, DegreeInvariants> left;
  std::map<int, DegreeInvariants> right;
  bool equal = false;
  /// Same comparison keeping degrees mod (p^m - 1); logged, not decisive.
  bool graded_equal = false;
  std::vector<std::string> notes;
};

/// Requires 1 <= m <= n_t - 1 for every factor.
SlotComparison slot_comparison(unsigned long p, const std::vector<int>& ns, int m);

}  // namespace rost
