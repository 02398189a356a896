#include "rost/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rost {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, unsigned long p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

}  // namespace

std::uint64_t mod_inverse(std::uint64_t a, unsigned long p) {
  a %= p;
  if (a == 0) throw std::domain_error("mod_inverse: zero has no inverse");
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return result;
}

FpPoly::FpPoly(unsigned long p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& x : c_) x %= p_;
  trim();
}

FpPoly FpPoly::monomial(unsigned long p, std::int64_t coeff, int exp) {
  std::int64_t r = coeff % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(exp) + 1, 0);
  c[static_cast<std::size_t>(exp)] = static_cast<std::uint64_t>(r);
  return FpPoly(p, std::move(c));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int FpPoly::lowest() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k]) return static_cast<int>(k);
  return -1;
}

std::uint64_t FpPoly::coeff(int k) const {
  return k >= 0 && static_cast<std::size_t>(k) < c_.size() ? c_[static_cast<std::size_t>(k)] : 0;
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = (coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k))) % p_;
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t k = 0; k < r.size(); ++k)
    r[k] = (coeff(static_cast<int>(k)) + p_ - o.coeff(static_cast<int>(k))) % p_;
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return FpPoly(p_);
  std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = (r[i + j] + mulmod(c_[i], o.c_[j], p_)) % p_;
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::scaled(std::uint64_t k) const {
  std::vector<std::uint64_t> r = c_;
  for (auto& x : r) x = mulmod(x, k % p_, p_);
  return FpPoly(p_, std::move(r));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  if (d.is_zero()) throw std::domain_error("FpPoly: division by zero");
  std::vector<std::uint64_t> rem = c_;
  const int dd = d.degree();
  const std::uint64_t lead_inv = mod_inverse(d.c_.back(), p_);
  std::vector<std::uint64_t> q(rem.size() >= d.c_.size() ? rem.size() - d.c_.size() + 1 : 0, 0);
  for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
    const std::uint64_t f = mulmod(rem[static_cast<std::size_t>(k)], lead_inv, p_);
    if (f == 0) continue;
    q[static_cast<std::size_t>(k - dd)] = f;
    for (int i = 0; i <= dd; ++i) {
      auto& slot = rem[static_cast<std::size_t>(k - dd + i)];
      slot = (slot + p_ - mulmod(f, d.c_[static_cast<std::size_t>(i)], p_)) % p_;
    }
  }
  return {FpPoly(p_, std::move(q)), FpPoly(p_, std::move(rem))};
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(mod_inverse(c_.back(), p_));
}

FpPoly FpPoly::laurent_normal() const {
  if (is_zero()) return *this;
  const int low = lowest();
  std::vector<std::uint64_t> r(c_.begin() + low, c_.end());
  return FpPoly(p_, std::move(r)).monic();
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const auto c = coeff(k);
    if (!c) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || c != 1) os << c;
    if (k >= 1) os << "v";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

FpPolyMatrix::FpPolyMatrix(std::size_t r, std::size_t c, unsigned long prime, bool inv_v)
    : rows(r), cols(c), p(prime), laurent(inv_v), entries(r * c, FpPoly(prime)) {
  if (!is_prime(prime)) throw std::invalid_argument("FpPolyMatrix: p must be prime");
}

std::vector<FpPoly> snf_fp_poly(const FpPolyMatrix& input) {
  FpPolyMatrix m = input;
  const std::size_t r = m.rows, c = m.cols;
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < c; ++j) std::swap(m(a, j), m(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < r; ++i) std::swap(m(i, a), m(i, b));
  };

  std::vector<FpPoly> diag;
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    // Euclidean reduction until the pivot divides its whole row, column and
    // the remaining block.
    for (;;) {
      int best = -1;
      std::size_t bi = 0, bj = 0;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (!m(i, j).is_zero() && (best < 0 || m(i, j).degree() < best)) {
            best = m(i, j).degree();
            bi = i;
            bj = j;
          }
      if (best < 0) break;
      swap_rows(t, bi);
      swap_cols(t, bj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (m(i, t).is_zero()) continue;
        const FpPoly q = m(i, t).divmod(m(t, t)).first;
        for (std::size_t j = t; j < c; ++j) m(i, j) = m(i, j) - q * m(t, j);
        if (!m(i, t).is_zero()) dirty = true;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (m(t, j).is_zero()) continue;
        const FpPoly q = m(t, j).divmod(m(t, t)).first;
        for (std::size_t i = t; i < r; ++i) m(i, j) = m(i, j) - q * m(i, t);
        if (!m(t, j).is_zero()) dirty = true;
      }
      if (dirty) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (!m(i, j).divmod(m(t, t)).second.is_zero()) {
            // Fold row i into row t; the next pass produces a smaller pivot.
            for (std::size_t k = t; k < c; ++k) m(t, k) = m(t, k) + m(i, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (m(t, t).is_zero()) break;
    diag.push_back(m(t, t).monic());
  }

  if (input.laurent) {
    for (auto& d : diag) d = d.laurent_normal();
    std::stable_sort(diag.begin(), diag.end(), [](const FpPoly& a, const FpPoly& b) { return a.degree() < b.degree(); });
  }
  return diag;
}

}  // namespace rost
