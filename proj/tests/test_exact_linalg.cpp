#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rost/exact_linalg.hpp"

#include <numeric>
#include <random>

using namespace rost;
using namespace oracle;

namespace {

RatMatrix as_rat(const PLocalMatrix& m) { return RatMatrix::from(m); }

}  // namespace

TEST_CASE("smith form exponents match gcd of minors") {
  std::mt19937 rng(20240611);
  int checked = 0;
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (int trial = 0; trial < 90; ++trial) {
      const PLocalMatrix m = random_matrix(rng, p, 5, 9);
      const MinorData ref = minor_oracle(m);
      const SnfResult snf = snf_p_local(m);
      CHECK(snf.rank == ref.rank);
      CHECK(snf.exponents == ref.exponents);
      CHECK(snf_exponents(m) == ref.exponents);
      ++checked;
    }
  CHECK(checked >= 200);
}

TEST_CASE("smith transforms are p-local and diagonalize") {
  std::mt19937 rng(7);
  for (unsigned long p : {2ul, 3ul}) {
    for (int trial = 0; trial < 40; ++trial) {
      const PLocalMatrix m = random_matrix(rng, p, 4, 12);
      const SnfResult s = snf_p_local(m);
      CHECK(s.left.p_integral(p));
      CHECK(s.right.p_integral(p));
      CHECK(valuation(determinant(s.left), p) == 0);
      CHECK(valuation(determinant(s.right), p) == 0);
      const RatMatrix d = s.left * as_rat(m) * s.right;
      for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) {
          if (i != j || i >= s.rank) {
            CHECK(d(i, j) == 0);
          } else {
            CHECK(valuation(d(i, j), p) == s.exponents[i]);
          }
        }
    }
  }
}

TEST_CASE("pivot order on a fixed matrix") {
  const PLocalMatrix m({{4, 6}, {2, 3}}, 2);
  const SnfResult s = snf_p_local(m);
  CHECK(s.rank == 1);
  CHECK(s.exponents == std::vector<int>{0});
  CHECK(s.free_rank() == 1);
  const PLocalMatrix z(2, 3, 3);
  CHECK(snf_p_local(z).rank == 0);
  CHECK(snf_p_local(z).free_rank() == 2);
}

TEST_CASE("membership agrees with the index of the lattice") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> small(-3, 3);
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (int trial = 0; trial < 60; ++trial) {
      const PLocalMatrix m = random_matrix(rng, p, 4, 6);
      std::vector<Int> b(m.rows());
      if (trial % 3 == 0) {
        // b = M x is always reachable.
        std::vector<Int> x(m.cols());
        for (auto& v : x) v = small(rng);
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < m.cols(); ++j) b[i] += m(i, j) * x[j];
      } else {
        for (auto& v : b) v = small(rng);
      }
      PLocalMatrix aug(m.rows(), m.cols() + 1, p);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
      }
      const MinorData a = minor_oracle(m), c = minor_oracle(aug);
      const bool expected = a.rank == c.rank && a.top_valuation == c.top_valuation;
      const auto sol = membership(m, std::span<const Int>(b));
      CHECK(sol.has_value() == expected);
      if (trial % 3 == 0) CHECK(sol.has_value());
      if (sol) {
        for (const auto& x : *sol) CHECK(is_p_integral(x, p));
        for (std::size_t i = 0; i < m.rows(); ++i) {
          Rat acc = 0;
          for (std::size_t j = 0; j < m.cols(); ++j) acc += Rat(m(i, j)) * (*sol)[j];
          CHECK(acc == Rat(b[i]));
        }
      }
    }
}

TEST_CASE("membership by exhaustive search on tiny systems") {
  // Any integer solution found by brute force must be seen by membership.
  std::mt19937 rng(5);
  for (unsigned long p : {2ul, 3ul})
    for (int trial = 0; trial < 40; ++trial) {
      PLocalMatrix m(2, 2, p);
      std::uniform_int_distribution<int> e(-4, 4);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m(i, j) = e(rng);
      const std::vector<Int> b{Int(e(rng)), Int(e(rng))};
      bool found = false;
      for (int x = -6; x <= 6 && !found; ++x)
        for (int y = -6; y <= 6 && !found; ++y)
          found = m(0, 0) * x + m(0, 1) * y == b[0] && m(1, 0) * x + m(1, 1) * y == b[1];
      if (found) CHECK(membership(m, std::span<const Int>(b)).has_value());
    }
  const PLocalMatrix two({{2}}, 2);
  const std::vector<Int> one{Int(1)}, three{Int(3)}, four{Int(4)};
  CHECK_FALSE(membership(two, std::span<const Int>(one)).has_value());
  CHECK_FALSE(membership(two, std::span<const Int>(three)).has_value());
  CHECK(membership(two, std::span<const Int>(four)).has_value());
  const PLocalMatrix three_m({{3}}, 2);
  CHECK(membership(three_m, std::span<const Int>(one)).has_value());  // 3 is a unit at p = 2
}

TEST_CASE("kernel basis is a saturated kernel") {
  std::mt19937 rng(11);
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (int trial = 0; trial < 30; ++trial) {
      const PLocalMatrix m = random_matrix(rng, p, 4, 5);
      const PLocalMatrix k = kernel_basis(m);
      const std::size_t rank = snf_p_local(m).rank;
      CHECK(k.cols() == m.cols() - rank);
      if (k.cols() == 0) continue;
      const PLocalMatrix prod = m * k;
      for (const auto& x : prod.data()) CHECK(x == 0);
      for (int e : snf_exponents(k)) CHECK(e == 0);
    }
}

TEST_CASE("SnfSolver reuses one factorization") {
  const PLocalMatrix m({{2, 0}, {0, 4}, {1, 1}}, 2);
  const SnfSolver solver(m);
  const std::vector<Rat> b1{Rat(2), Rat(4), Rat(2)};
  const auto x = solver.solve(b1);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  const std::vector<Rat> b2{Rat(1), Rat(0), Rat(0)};
  CHECK_FALSE(solver.solve(b2).has_value());
}

TEST_CASE("valuations and helpers") {
  CHECK(valuation(Int(48), 2) == 4);
  CHECK(valuation(Rat(3, 8), 2) == -3);
  CHECK(strip_p(Int(48), 2) == 3);
  CHECK(is_p_integral(Rat(1, 3), 2));
  CHECK_FALSE(is_p_integral(Rat(1, 6), 2));
  CHECK(is_prime(5));
  CHECK_FALSE(is_prime(9));
  CHECK(ipow(3, 4) == 81);
  CHECK(mod_inverse(3, 7) == 5);
}

namespace {

FpPoly poly_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a.divmod(b).second;
    a = b;
    b = r;
  }
  return a.is_zero() ? a : a.monic();
}

FpPoly random_poly(std::mt19937& rng, unsigned long p, int max_deg) {
  std::uniform_int_distribution<int> deg(-1, max_deg);
  std::uniform_int_distribution<std::uint64_t> c(0, p - 1);
  const int d = deg(rng);
  std::vector<std::uint64_t> cs;
  for (int i = 0; i <= d; ++i) cs.push_back(c(rng));
  return FpPoly(p, cs);
}

}  // namespace

TEST_CASE("polynomial division identity") {
  std::mt19937 rng(3);
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (int t = 0; t < 50; ++t) {
      const FpPoly a = random_poly(rng, p, 6), d = random_poly(rng, p, 3);
      if (d.is_zero()) continue;
      const auto [q, r] = a.divmod(d);
      CHECK(q * d + r == a);
      CHECK(r.degree() < d.degree());
    }
}

TEST_CASE("polynomial smith form against gcd and determinant") {
  std::mt19937 rng(17);
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (bool laurent : {false, true})
      for (int t = 0; t < 40; ++t) {
        FpPolyMatrix m(2, 2, p, laurent);
        for (auto& e : m.entries) e = random_poly(rng, p, 3);
        FpPoly g(p);
        for (const auto& e : m.entries) g = poly_gcd(g, e);
        const FpPoly det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        const auto inv = snf_fp_poly(m);
        auto norm = [&](const FpPoly& x) { return laurent ? x.laurent_normal() : x.monic(); };
        if (g.is_zero()) {
          CHECK(inv.empty());
          continue;
        }
        REQUIRE(!inv.empty());
        CHECK(inv[0] == norm(g));
        if (det.is_zero()) {
          CHECK(inv.size() == 1);
        } else {
          REQUIRE(inv.size() == 2);
          CHECK(norm(inv[0] * inv[1]) == norm(det));
        }
      }
}
