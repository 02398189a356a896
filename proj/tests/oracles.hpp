// Brute-force references shared by the unit and acceptance tests.
#pragma once

#include "rost/exact_linalg.hpp"
#include "rost/graded_module.hpp"

#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using rost::Int;
using rost::PLocalMatrix;

// Laplace expansion; independent of the library's elimination.
inline Int laplace(const std::vector<std::vector<Int>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<Int>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const Int term = a[0][c] * laplace(minor);
    total += (c % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of all k x k minors.
inline Int minor_gcd(const PLocalMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rs, cs;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rs);
  subsets(m.cols(), k, 0, cur, cs);
  Int g = 0;
  for (const auto& r : rs)
    for (const auto& c : cs) {
      std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(r[i], c[j]);
      const Int d = laplace(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

struct MinorData {
  std::size_t rank = 0;
  std::vector<int> exponents;
  int top_valuation = 0;
};

// Invariant factor exponents e_k = v(d_k) - v(d_(k-1)).
inline MinorData minor_oracle(const PLocalMatrix& m) {
  MinorData out;
  int prev = 0;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    const Int g = minor_gcd(m, k);
    if (g == 0) break;
    const int v = rost::valuation(g, m.prime());
    out.exponents.push_back(v - prev);
    prev = v;
    out.rank = k;
  }
  out.top_valuation = prev;
  return out;
}

inline PLocalMatrix random_matrix(std::mt19937& rng, unsigned long p, std::size_t max_dim, int bound) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-bound, bound);
  std::bernoulli_distribution sparse(0.3);
  PLocalMatrix m(dim(rng), dim(rng), p);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = sparse(rng) ? 0 : entry(rng);
  return m;
}

// Z/p^e in one degree (free when e = 0).
inline rost::GradedFPModule cyclic(unsigned long p, int degree, int e) {
  rost::GradedFPModule m(p, 0, 10);
  const std::size_t g = m.add_generator(degree, rost::BasisLabel{"g", {1}, {0}});
  if (e > 0) m.add_relation(degree, rost::SparseVec{{g, rost::ipow(p, static_cast<unsigned long>(e))}});
  return m;
}

// Slots of Z/p^e by listing the subgroups p^k A element by element.
inline std::map<int, rost::DegreeInvariants> brute_slots(unsigned long p, int e, int s) {
  const long order = rost::ipow_ll(static_cast<long long>(p), e);
  auto multiples = [&](int k) {
    std::set<long> out;
    const long f = rost::ipow_ll(static_cast<long long>(p), k);
    for (long x = 0; x < order; ++x) out.insert((x * f) % order);
    return out;
  };
  auto log_p = [p](long q) {
    int r = 0;
    for (; q > 1; q /= static_cast<long>(p)) ++r;
    return r;
  };
  std::map<int, rost::DegreeInvariants> out;
  for (int k = 1; k <= s; ++k) {
    const int rank = log_p(static_cast<long>(multiples(k - 1).size() / multiples(k).size()));
    if (rank) out[k] = rost::DegreeInvariants{0, std::vector<int>(static_cast<std::size_t>(rank), 1)};
  }
  const int exp = log_p(static_cast<long>(multiples(s).size()));
  if (exp) out[s + 1] = rost::DegreeInvariants{0, {exp}};
  return out;
}

}  // namespace oracle
