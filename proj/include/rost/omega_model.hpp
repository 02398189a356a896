#pragma once

#include "rost/graded_ring.hpp"

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace rost {

/// Chow-degree bookkeeping for Rost factors.
struct DegreeRule {
  /// deg y for the factor R_n: (p^n - 1)/(p - 1).
  static int y_degree(unsigned long p, int n);
  /// deg v_i = -(p^i - 1); v_0 = p has degree 0.
  static int v_degree(unsigned long p, int i);
  /// deg c_i(Y) = deg Y - (p^i - 1).
  static int c_degree(unsigned long p, int y_deg, int i);
};

/// Monomial v_1^a_1 ... v_K^a_K y_1^j_1 ... y_s^j_s of the ambient ring.
struct AmbientMonomial {
  std::vector<int> v;
  std::vector<int> y;
  auto operator<=>(const AmbientMonomial&) const = default;
};

using AmbientElement = std::map<AmbientMonomial, Int>;

struct ImageGenerator {
  BasisLabel label;
  int degree = 0;
  AmbientElement res;
};

/// BP*[y_1..y_s]/(y_t^p) truncated to the degrees that image elements reach,
/// with the image generators 1 and c_i(Y), res(c_i(Y)) = v_i Y. With several
/// factors the generators are all tuples of single-factor generators and res
/// is the product.
class OmegaImageModel {
 public:
  OmegaImageModel(unsigned long p, std::vector<int> factors);

  unsigned long prime() const { return p_; }
  const std::vector<int>& factors() const { return factors_; }
  int y_degree(std::size_t t) const { return y_deg_[t]; }
  int top_degree() const { return top_; }
  /// Number K of v_i variables kept: p^K - 1 <= top degree.
  int v_count() const { return vcount_; }

  const std::vector<ImageGenerator>& generators() const { return gens_; }
  const ImageGenerator& generator(const std::string& name) const;

  int degree(const AmbientMonomial& mono) const;
  /// Product in the ambient ring; y exponents reaching p vanish.
  AmbientElement multiply(const AmbientElement& a, const AmbientElement& b) const;
  /// v_i * x (v_0 = p).
  AmbientElement times_v(int i, const AmbientElement& x) const;

  std::string to_string(const AmbientElement& x) const;

 private:
  unsigned long p_;
  std::vector<int> factors_;
  std::vector<int> y_deg_;
  int top_ = 0;
  int vcount_ = 0;
  std::vector<ImageGenerator> gens_;
  std::map<std::string, std::size_t> by_name_;
};

AmbientElement ambient_sub(const AmbientElement& a, const AmbientElement& b);

/// Image modulo (v_1, v_2, ...)·image, on the generator basis, with the
/// induced products precomputed into a table.
GradedRing chow_collapse(const OmegaImageModel& model, ExecPolicy policy = ExecPolicy::parallel);

/// Structure table of a ring built by chow_collapse.
nlohmann::json structure_table_json(const GradedRing& ring);

/// v_s res(c_r(Y)) - k v_r res(c_s(Y)) == 0 in the ambient (single factor,
/// Y = y^j). k = 1 is the actual identity; other k is a control.
bool check_lemma_3_2(const OmegaImageModel& model, int r, int s, int j, long k = 1);

/// Every positive-degree image generator has coefficients in (p, v_1, ..., v_{n-1}).
bool image_in_I_n(const OmegaImageModel& model);

/// Image generators of each degree have linearly independent ambient images.
bool res_injective(const OmegaImageModel& model);

}  // namespace rost
