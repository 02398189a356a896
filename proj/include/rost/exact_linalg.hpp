#pragma once

#include "rost/zp.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rost {

/// Dense integer matrix read over the p-local integers Z_(p): every integer
/// coprime to p is a unit.
class PLocalMatrix {
 public:
  PLocalMatrix() = default;
  PLocalMatrix(std::size_t rows, std::size_t cols, unsigned long p);
  PLocalMatrix(std::initializer_list<std::initializer_list<long>> rows, unsigned long p);

  static PLocalMatrix identity(std::size_t n, unsigned long p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned long prime() const { return p_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Int>& data() const { return data_; }

  PLocalMatrix operator*(const PLocalMatrix& rhs) const;
  bool operator==(const PLocalMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  unsigned long p_ = 2;
  std::vector<Int> data_;
};

/// Dense rational matrix; used for Z_(p) transforms whose denominators are
/// prime to p.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix identity(std::size_t n);
  static RatMatrix from(const PLocalMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RatMatrix operator*(const RatMatrix& rhs) const;
  std::vector<Rat> apply(std::span<const Rat> v) const;
  bool operator==(const RatMatrix& rhs) const = default;

  /// True when every entry lies in Z_(p).
  bool p_integral(unsigned long p) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Exact determinant (fraction-free Bareiss elimination).
Rat determinant(const RatMatrix& m);

/// left * M * right = diag(p^e_0, ..., p^e_{rank-1}, 0, ...).
struct SnfResult {
  std::vector<int> exponents;  // ascending
  std::size_t rank = 0;
  std::size_t rows = 0;
  RatMatrix left;
  RatMatrix right;

  std::size_t free_rank() const { return rows - rank; }
  std::vector<int> torsion() const;
};

/// Smith normal form over Z_(p). Pivot is the entry of minimal p-valuation,
/// ties broken by lowest (row, col).
SnfResult snf_p_local(const PLocalMatrix& m);

/// Diagonal exponents only; skips the transform bookkeeping.
std::vector<int> snf_exponents(const PLocalMatrix& m);

/// Solve M x = b over Z_(p). Returns nullopt when b is not in the column span.
std::optional<std::vector<Rat>> membership(const PLocalMatrix& m, std::span<const Int> b);
std::optional<std::vector<Rat>> membership(const PLocalMatrix& m, std::span<const Rat> b);

/// Columns form a Z_(p)-basis of the kernel of M.
PLocalMatrix kernel_basis(const PLocalMatrix& m);

/// Precomputed Smith form for repeated right-hand sides.
class SnfSolver {
 public:
  explicit SnfSolver(const PLocalMatrix& m);
  std::optional<std::vector<Rat>> solve(std::span<const Rat> b) const;
  const SnfResult& snf() const { return snf_; }

 private:
  unsigned long p_;
  std::size_t cols_;
  SnfResult snf_;
};

// ---------------------------------------------------------------------------
// Polynomials in one variable over F_p, optionally with v inverted.

class FpPoly {
 public:
  explicit FpPoly(unsigned long p = 2) : p_(p) {}
  FpPoly(unsigned long p, std::vector<std::uint64_t> coeffs);
  static FpPoly monomial(unsigned long p, std::int64_t coeff, int exp);

  unsigned long prime() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Exponent of the lowest nonzero term; -1 for zero.
  int lowest() const;
  std::uint64_t coeff(int k) const;
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly scaled(std::uint64_t k) const;
  /// Quotient and remainder; divisor must be nonzero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
  FpPoly monic() const;
  /// Monic with every factor of v removed (the Laurent-unit normal form).
  FpPoly laurent_normal() const;

  bool operator==(const FpPoly& o) const { return p_ == o.p_ && c_ == o.c_; }
  std::string to_string() const;

 private:
  void trim();
  unsigned long p_;
  std::vector<std::uint64_t> c_;
};

struct FpPolyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  unsigned long p = 2;
  bool laurent = false;
  std::vector<FpPoly> entries;  // row-major

  FpPolyMatrix(std::size_t r, std::size_t c, unsigned long prime, bool inv_v);
  FpPoly& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  const FpPoly& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// Nonzero invariant factors d_1 | d_2 | ... (monic; in Laurent mode powers
/// of v are units and are stripped).
std::vector<FpPoly> snf_fp_poly(const FpPolyMatrix& m);

std::uint64_t mod_inverse(std::uint64_t a, unsigned long p);

}  // namespace rost
