#pragma once

#include "rost/graded_module.hpp"

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace rost {

/// One term of a product expressed on generator names.
struct Term {
  Rat coeff;
  std::string name;
};

/// Multiplication of basis generators, keyed by generator name. Products
/// naming a generator absent from the module (pruned or outside the window)
/// are zero.
class ProductRule {
 public:
  virtual ~ProductRule() = default;
  virtual std::vector<Term> multiply(const std::string& a, const std::string& b) const = 0;
};

/// Explicit structure constants; missing pairs multiply to zero. Lookups are
/// symmetric, so only one order needs to be stored.
class TableRule : public ProductRule {
 public:
  void set(const std::string& a, const std::string& b, std::vector<Term> product);
  std::vector<Term> multiply(const std::string& a, const std::string& b) const override;
  const std::map<std::pair<std::string, std::string>, std::vector<Term>>& table() const { return table_; }

 private:
  std::map<std::pair<std::string, std::string>, std::vector<Term>> table_;
};

/// Monomial multiplication: exponent vectors add.
class MonomialRule : public ProductRule {
 public:
  void add(const std::string& name, std::vector<int> exponents);
  std::vector<Term> multiply(const std::string& a, const std::string& b) const override;

 private:
  std::map<std::string, std::vector<int>> exps_;
  std::map<std::vector<int>, std::string> names_;
};

class GradedRing;

/// Componentwise multiplication on a tensor product of two rings.
class TensorRule : public ProductRule {
 public:
  TensorRule(std::shared_ptr<const GradedRing> left, std::shared_ptr<const GradedRing> right,
             std::map<std::string, std::pair<std::string, std::string>> split,
             std::map<std::pair<std::string, std::string>, std::string> join);
  std::vector<Term> multiply(const std::string& a, const std::string& b) const override;

 private:
  std::shared_ptr<const GradedRing> left_;
  std::shared_ptr<const GradedRing> right_;
  std::map<std::string, std::pair<std::string, std::string>> split_;
  std::map<std::pair<std::string, std::string>, std::string> join_;
};

/// Commutative graded ring: an additive presentation plus a product rule on
/// generator names. Generator names are unique.
class GradedRing {
 public:
  GradedRing(GradedFPModule module, std::shared_ptr<const ProductRule> rule);

  const GradedFPModule& module() const { return module_; }
  unsigned long prime() const { return module_.prime(); }
  std::shared_ptr<const ProductRule> rule() const { return rule_; }

  /// Basis element by generator name; empty element if the name is absent.
  Element element(const std::string& name) const;
  bool has(const std::string& name) const { return index_.count(name) > 0; }
  Element unit() const { return element("1"); }

  Element multiply(const Element& a, const Element& b) const;
  bool is_zero(const Element& e) const { return rost::is_zero(module_, e); }
  std::string to_string(const Element& e) const;

  /// Quotient by the ideal generated by the given elements; generator
  /// indices are unchanged.
  GradedRing quotient_ideal(std::span<const Element> generators) const;

  /// For rings built by tensor_rings: tuple of factor generator names (before
  /// relabelling) to tensor generator name.
  const std::map<std::vector<std::string>, std::string>& factor_names() const { return tuple_names_; }
  std::size_t factor_count() const { return factors_; }
  /// Tensor generator for a tuple of factor names; empty if zero or absent.
  Element tuple_generator(const std::vector<std::string>& names) const;
  /// Image of a factor element placed in slot r, unit elsewhere.
  Element embed(std::size_t r, const GradedRing& factor, const Element& e) const;

 private:
  friend GradedRing tensor_rings(const std::vector<std::shared_ptr<const GradedRing>>& factors);

  GradedFPModule module_;
  std::shared_ptr<const ProductRule> rule_;
  std::map<std::string, std::pair<int, std::size_t>> index_;
  std::size_t factors_ = 1;
  std::map<std::vector<std::string>, std::string> tuple_names_;
};

/// Factor name as it appears in slot t of a tensor: y becomes y_t, any other
/// name n becomes (n)_t; the unit stays 1.
std::string slot_name(const std::string& name, std::size_t t);

/// Tensor product of rings, factors relabelled by slot (1-based).
GradedRing tensor_rings(const std::vector<std::shared_ptr<const GradedRing>>& factors);

/// Homogeneous integer polynomial: (coefficient, exponent vector) terms.
using IntPoly = std::vector<std::pair<Int, std::vector<int>>>;

struct RingVariable {
  std::string name;
  int degree;
};

/// Z_(p)[vars]/(relations), presented on the monomial basis in degrees
/// [0, top]; generators killed outright by unit relations are pruned.
GradedRing presented_ring(unsigned long p, const std::vector<RingVariable>& vars, const std::vector<IntPoly>& relations,
                          int top);

std::string monomial_name(const std::vector<RingVariable>& vars, const std::vector<int>& exps);

}  // namespace rost
