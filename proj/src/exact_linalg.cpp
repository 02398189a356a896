#include "rost/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rost {

PLocalMatrix::PLocalMatrix(std::size_t rows, std::size_t cols, unsigned long p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols) {
  if (!is_prime(p)) throw std::invalid_argument("PLocalMatrix: p must be prime");
}

PLocalMatrix::PLocalMatrix(std::initializer_list<std::initializer_list<long>> rows, unsigned long p)
    : PLocalMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0, p) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("PLocalMatrix: ragged rows");
    std::size_t j = 0;
    for (long x : row) (*this)(i, j++) = x;
    ++i;
  }
}

PLocalMatrix PLocalMatrix::identity(std::size_t n, unsigned long p) {
  PLocalMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

PLocalMatrix PLocalMatrix::operator*(const PLocalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("PLocalMatrix: shape mismatch");
  PLocalMatrix out(rows_, rhs.cols_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from(const PLocalMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("RatMatrix: shape mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

std::vector<Rat> RatMatrix::apply(std::span<const Rat> v) const {
  if (v.size() != cols_) throw std::invalid_argument("RatMatrix::apply: shape mismatch");
  std::vector<Rat> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

bool RatMatrix::p_integral(unsigned long p) const {
  return std::all_of(data_.begin(), data_.end(), [p](const Rat& x) { return is_p_integral(x, p); });
}

Rat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::vector<int> SnfResult::torsion() const {
  std::vector<int> t;
  for (int e : exponents)
    if (e > 0) t.push_back(e);
  return t;
}

namespace {

SnfResult snf_impl(const PLocalMatrix& m, bool transforms) {
  const unsigned long p = m.prime();
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<Int> w = m.data();
  auto W = [&](std::size_t i, std::size_t j) -> Int& { return w[i * c + j]; };

  SnfResult out;
  out.rows = r;
  if (transforms) {
    out.left = RatMatrix::identity(r);
    out.right = RatMatrix::identity(c);
  }
  RatMatrix& U = out.left;
  RatMatrix& V = out.right;

  std::size_t t = 0;
  for (; t < std::min(r, c); ++t) {
    int best = -1;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (W(i, j) == 0) continue;
        const int v = valuation(W(i, j), p);
        if (best < 0 || v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    if (best < 0) break;

    if (bi != t) {
      for (std::size_t j = 0; j < c; ++j) std::swap(W(bi, j), W(t, j));
      if (transforms)
        for (std::size_t j = 0; j < r; ++j) std::swap(U(bi, j), U(t, j));
    }
    if (bj != t) {
      for (std::size_t i = 0; i < r; ++i) std::swap(W(i, bj), W(i, t));
      if (transforms)
        for (std::size_t i = 0; i < c; ++i) std::swap(V(i, bj), V(i, t));
    }

    const Int pe = ipow(p, static_cast<unsigned long>(best));
    const Int u = W(t, t) / pe;

    // Row elimination keeps integrality by scaling row i with the unit u.
    for (std::size_t i = t + 1; i < r; ++i) {
      if (W(i, t) == 0) continue;
      const Int q = W(i, t) / pe;
      Int g = 0;
      for (std::size_t k = t; k < c; ++k) {
        W(i, k) = u * W(i, k) - q * W(t, k);
        if (W(i, k) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), W(i, k).get_mpz_t());
      }
      if (transforms)
        for (std::size_t k = 0; k < r; ++k) U(i, k) = u * U(i, k) - q * U(t, k);
      // Prime-to-p content is a unit; divide it out.
      g = strip_p(g, p);
      if (g > 1) {
        for (std::size_t k = t; k < c; ++k) mpz_divexact(W(i, k).get_mpz_t(), W(i, k).get_mpz_t(), g.get_mpz_t());
        if (transforms) {
          const Rat inv(Int(1), g);
          for (std::size_t k = 0; k < r; ++k) U(i, k) *= inv;
        }
      }
    }
    // Column t is now zero below the pivot, so clearing row t only touches row t.
    for (std::size_t j = t + 1; j < c; ++j) {
      if (W(t, j) == 0) continue;
      if (transforms) {
        Rat f(W(t, j), W(t, t));
        f.canonicalize();
        for (std::size_t i = 0; i < c; ++i) V(i, j) -= f * V(i, t);
      }
      W(t, j) = 0;
    }
    if (transforms) {
      const Rat inv(Int(1), u);
      Rat invc = inv;
      invc.canonicalize();
      for (std::size_t k = 0; k < r; ++k) U(t, k) *= invc;
    }
    W(t, t) = pe;
    out.exponents.push_back(best);
  }
  out.rank = out.exponents.size();
  return out;
}

}  // namespace

SnfResult snf_p_local(const PLocalMatrix& m) { return snf_impl(m, true); }

std::vector<int> snf_exponents(const PLocalMatrix& m) { return snf_impl(m, false).exponents; }

SnfSolver::SnfSolver(const PLocalMatrix& m) : p_(m.prime()), cols_(m.cols()), snf_(snf_p_local(m)) {}

std::optional<std::vector<Rat>> SnfSolver::solve(std::span<const Rat> b) const {
  if (b.size() != snf_.rows) throw std::invalid_argument("membership: b has wrong length");
  for (const Rat& x : b)
    if (!is_p_integral(x, p_)) return std::nullopt;
  const std::vector<Rat> cvec = snf_.left.apply(b);
  std::vector<Rat> z(cols_);
  for (std::size_t i = 0; i < snf_.rows; ++i) {
    if (i < snf_.rank) {
      if (cvec[i] == 0) continue;
      const int e = snf_.exponents[i];
      if (!is_p_integral(cvec[i], p_) || valuation(cvec[i], p_) < e) return std::nullopt;
      z[i] = cvec[i] / Rat(ipow(p_, static_cast<unsigned long>(e)));
    } else if (cvec[i] != 0) {
      return std::nullopt;
    }
  }
  return snf_.right.apply(z);
}

std::optional<std::vector<Rat>> membership(const PLocalMatrix& m, std::span<const Rat> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("membership: b has wrong length");
  return SnfSolver(m).solve(b);
}

std::optional<std::vector<Rat>> membership(const PLocalMatrix& m, std::span<const Int> b) {
  std::vector<Rat> rb(b.begin(), b.end());
  return membership(m, std::span<const Rat>(rb));
}

PLocalMatrix kernel_basis(const PLocalMatrix& m) {
  const SnfResult s = snf_p_local(m);
  const std::size_t c = m.cols();
  PLocalMatrix k(c, c - s.rank, m.prime());
  for (std::size_t col = s.rank; col < c; ++col) {
    Int l = 1;
    for (std::size_t i = 0; i < c; ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), s.right(i, col).get_den_mpz_t());
    Int g = 0;
    std::vector<Int> v(c);
    for (std::size_t i = 0; i < c; ++i) {
      Rat x = s.right(i, col) * Rat(l);
      v[i] = x.get_num();
      if (v[i] != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    }
    g = strip_p(g, m.prime());
    for (std::size_t i = 0; i < c; ++i) k(i, col - s.rank) = g > 1 ? Int(v[i] / g) : v[i];
  }
  return k;
}

}  // namespace rost
