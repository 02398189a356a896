#pragma once

#include "rost/exact_linalg.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace rost {

/// Name and structural indexing of one generator.
///
/// `exponents` holds one y-exponent per Rost factor (or the exponent vector of
/// a monomial in a presented ring); `indices` holds the c-index per factor,
/// -1 for a plain monomial or the unit.
struct BasisLabel {
  std::string name;
  std::vector<int> exponents;
  std::vector<int> indices;

  bool operator==(const BasisLabel&) const = default;
};

/// Sparse integer column: (generator index, coefficient), sorted by index.
using SparseVec = std::vector<std::pair<std::size_t, Int>>;

/// A homogeneous element: coefficients on the generators of one degree.
struct Element {
  int degree = 0;
  std::map<std::size_t, Rat> coeffs;

  bool empty() const { return coeffs.empty(); }
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element scaled(const Rat& k) const;
};

struct DegreePiece {
  std::vector<BasisLabel> generators;
  std::vector<SparseVec> relations;
};

/// Finitely presented graded module over Z_(p). Each degree holds a set of
/// generators and relation columns; the module is zero outside [low, high].
class GradedFPModule {
 public:
  GradedFPModule(unsigned long p, int low, int high);

  unsigned long prime() const { return p_; }
  int low() const { return low_; }
  int high() const { return high_; }
  const std::map<int, DegreePiece>& pieces() const { return pieces_; }

  std::size_t add_generator(int degree, BasisLabel label);
  void add_relation(int degree, SparseVec relation);
  /// Adds a relation given as a p-integral rational combination.
  void add_relation(const Element& e);

  const DegreePiece* piece(int degree) const;
  std::size_t generator_count(int degree) const;
  std::size_t total_generators() const;
  PLocalMatrix relation_matrix(int degree) const;

  /// First generator whose label name matches.
  std::optional<std::pair<int, std::size_t>> find(const std::string& name) const;
  const BasisLabel& label(int degree, std::size_t idx) const;

  bool in_window(int degree) const { return degree >= low_ && degree <= high_; }

 private:
  unsigned long p_;
  int low_;
  int high_;
  std::map<int, DegreePiece> pieces_;
};

/// Free rank plus torsion exponents e (each meaning a Z/p^e summand).
struct DegreeInvariants {
  int free = 0;
  std::vector<int> torsion;  // ascending

  bool is_zero() const { return free == 0 && torsion.empty(); }
  bool operator==(const DegreeInvariants&) const = default;
  DegreeInvariants& operator+=(const DegreeInvariants& o);
  std::string to_string(unsigned long p) const;
};

struct NormalForm {
  unsigned long p = 2;
  std::map<int, DegreeInvariants> degrees;  // zero degrees omitted

  bool operator==(const NormalForm&) const = default;
  DegreeInvariants at(int degree) const;
  DegreeInvariants total() const;
};

void to_json(nlohmann::json& j, const DegreeInvariants& d);
void from_json(const nlohmann::json& j, DegreeInvariants& d);
void to_json(nlohmann::json& j, const NormalForm& nf);
void from_json(const nlohmann::json& j, NormalForm& nf);

enum class ExecPolicy { serial, parallel };

/// Per-degree invariant factors. Each degree splits into independent blocks
/// (connected components of the relation support) before the Smith form.
NormalForm normalize(const GradedFPModule& m, ExecPolicy policy = ExecPolicy::parallel);
NormalForm normalize_serial(const GradedFPModule& m);

/// Invariants of a single degree piece.
DegreeInvariants piece_invariants(const GradedFPModule& m, int degree);

/// True when e is zero in the module.
bool is_zero(const GradedFPModule& m, const Element& e);
/// Smallest k with p^k e = 0, or nullopt when e has infinite order.
std::optional<int> order_exponent(const GradedFPModule& m, const Element& e);

GradedFPModule direct_sum(const GradedFPModule& a, const GradedFPModule& b);

/// Generator position (degree, index) on each side of a tensor product.
struct TensorIndex {
  std::map<std::tuple<int, std::size_t, int, std::size_t>, std::pair<int, std::size_t>> encode;
  std::map<std::pair<int, std::size_t>, std::tuple<int, std::size_t, int, std::size_t>> decode;
};

/// Generator-pair presentation of A (x) B with relations r(x)g and g(x)r.
GradedFPModule tensor_product(const GradedFPModule& a, const GradedFPModule& b, TensorIndex* index = nullptr);

/// Module extended by the given relations.
GradedFPModule quotient(const GradedFPModule& m, std::span<const Element> relations);

/// Restriction to degrees in [low, high]; generators elsewhere are dropped.
GradedFPModule truncate(const GradedFPModule& m, int low, int high);

/// Drop generators killed outright by a single-entry unit relation. Returns
/// the pruned module; labels are kept so lookups by label still work.
GradedFPModule prune_trivial(const GradedFPModule& m);

struct IsoReport {
  bool equal = true;
  std::vector<int> differing;
  std::string summary;
};

IsoReport iso_equal(const NormalForm& a, const NormalForm& b);
IsoReport iso_equal(const GradedFPModule& a, const GradedFPModule& b);

/// Per (degree, slot) invariants of A^0 + A^+/p + pA^+/p^2A^+ + ... + p^sA^+.
struct FiltrationGraded {
  unsigned long p = 2;
  int s = 1;
  std::map<int, std::map<int, DegreeInvariants>> slots;  // degree -> slot -> invariants

  /// Slot invariants summed over degrees (the ungraded view).
  std::map<int, DegreeInvariants> aggregate() const;
};

FiltrationGraded gr_ps(const NormalForm& a, int s);
FiltrationGraded gr_ps(const GradedFPModule& a, int s);

nlohmann::json slots_to_json(const std::map<int, DegreeInvariants>& slots);

/// Degree-preserving additive map between finitely presented modules, given
/// by the images of source generators.
class GradedMap {
 public:
  GradedMap(std::shared_ptr<const GradedFPModule> source, std::shared_ptr<const GradedFPModule> target);

  const GradedFPModule& source() const { return *source_; }
  const GradedFPModule& target() const { return *target_; }

  void set_image(int degree, std::size_t generator, Element image);
  Element image(int degree, std::size_t generator) const;
  Element apply(const Element& e) const;

  /// Every source relation maps into the target relation span.
  bool well_defined(std::string* why = nullptr) const;

  /// Source generators that are nonzero but map to zero.
  std::vector<std::pair<int, std::size_t>> killed_generators() const;

  /// Kernel of the induced map on the given degree, as integer vectors on
  /// the source generators (not reduced modulo source relations).
  std::vector<std::vector<Int>> kernel_lattice(int degree) const;

  /// Injective as a map of modules.
  bool injective() const;

 private:
  std::shared_ptr<const GradedFPModule> source_;
  std::shared_ptr<const GradedFPModule> target_;
  std::map<int, std::vector<Element>> images_;
};

/// Integer column for e: the rational coefficients scaled by a unit.
std::vector<Int> integral_column(const Element& e, std::size_t length, unsigned long p);

}  // namespace rost
