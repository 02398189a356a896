#include "rost/torsion.hpp"

#include <algorithm>
#include <stdexcept>

namespace rost {

namespace {

/// Integer vectors spanning the saturation of the relation lattice in one degree.
std::vector<std::vector<Int>> saturation(const GradedFPModule& m, int degree) {
  const auto* pc = m.piece(degree);
  std::vector<std::vector<Int>> out;
  if (!pc || pc->relations.empty()) return out;
  const std::size_t n = pc->generators.size();
  const PLocalMatrix R = m.relation_matrix(degree);
  PLocalMatrix Rt(R.cols(), n, m.prime());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < R.cols(); ++j) Rt(j, i) = R(i, j);
  const PLocalMatrix K = kernel_basis(Rt);  // n x (n - rank)
  if (K.cols() == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Int> v(n);
      v[i] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  PLocalMatrix Kt(K.cols(), n, m.prime());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < K.cols(); ++j) Kt(j, i) = K(i, j);
  const PLocalMatrix S = kernel_basis(Kt);
  for (std::size_t c = 0; c < S.cols(); ++c) {
    std::vector<Int> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = S(i, c);
    out.push_back(std::move(v));
  }
  return out;
}

Element to_element(int degree, const std::vector<Int>& v) {
  Element e{degree, {}};
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) e.coeffs[i] = Rat(v[i]);
  return e;
}

}  // namespace

bool in_span(const GradedFPModule& m, int degree, const std::vector<Element>& span, const Element& target) {
  if (target.empty()) return true;
  const auto* pc = m.piece(degree);
  if (!pc) return true;
  const std::size_t n = pc->generators.size();
  PLocalMatrix M(n, span.size() + pc->relations.size(), m.prime());
  for (std::size_t k = 0; k < span.size(); ++k) {
    const auto col = integral_column(span[k], n, m.prime());
    for (std::size_t i = 0; i < n; ++i) M(i, k) = col[i];
  }
  for (std::size_t r = 0; r < pc->relations.size(); ++r)
    for (const auto& [i, c] : pc->relations[r]) M(i, span.size() + r) = c;
  std::vector<Rat> b(n);
  for (const auto& [i, c] : target.coeffs) b[i] = c;
  return membership(M, std::span<const Rat>(b)).has_value();
}

TorsionIdeal torsion_ideal(const GradedRing& ring, const GradedMap* res) {
  const GradedFPModule& m = ring.module();
  TorsionIdeal out;
  for (const auto& [d, pc] : m.pieces())
    for (const auto& v : saturation(m, d)) {
      Element e = to_element(d, v);
      if (!ring.is_zero(e)) out.elements.push_back(std::move(e));
    }

  if (res) {
    bool ok = true;
    for (const auto& e : out.elements)
      if (!is_zero(res->target(), res->apply(e))) {
        ok = false;
        out.notes.push_back("torsion element " + ring.to_string(e) + " survives restriction");
      }
    for (const auto& [d, pc] : m.pieces())
      for (const auto& v : res->kernel_lattice(d)) {
        const Element e = to_element(d, v);
        if (!order_exponent(m, e)) {
          ok = false;
          out.notes.push_back("kernel element " + ring.to_string(e) + " has infinite order");
        }
      }
    out.matches_kernel = ok;
  }

  // Greedy reduction to ideal generators, lowest degree first.
  std::vector<Element> sorted = out.elements;
  std::stable_sort(sorted.begin(), sorted.end(), [](const Element& a, const Element& b) { return a.degree < b.degree; });
  for (const auto& t : sorted) {
    std::vector<Element> span;
    for (const auto& g : out.ideal_generators) {
      const int rest = t.degree - g.degree;
      const auto* pc = m.piece(rest);
      if (!pc) continue;
      for (std::size_t i = 0; i < pc->generators.size(); ++i) {
        Element prod = ring.multiply(g, Element{rest, {{i, Rat(1)}}});
        if (!prod.empty()) span.push_back(std::move(prod));
      }
    }
    if (!in_span(m, t.degree, span, t)) out.ideal_generators.push_back(t);
  }
  return out;
}

std::optional<PowerWitness> ideal_power_witness(const GradedRing& ring, const std::vector<Element>& generators, int s) {
  if (s < 1) throw std::invalid_argument("ideal_power_witness: s must be positive");
  if (generators.empty()) return std::nullopt;
  std::vector<std::size_t> pick(static_cast<std::size_t>(s), 0);
  for (;;) {
    Element prod = generators[pick[0]];
    for (std::size_t k = 1; k < pick.size() && !prod.empty(); ++k) prod = ring.multiply(prod, generators[pick[k]]);
    if (!prod.empty() && !ring.is_zero(prod)) return PowerWitness{prod, pick};
    // Next non-decreasing index tuple.
    std::size_t k = pick.size();
    while (k > 0 && pick[k - 1] == generators.size() - 1) --k;
    if (k == 0) return std::nullopt;
    ++pick[k - 1];
    for (std::size_t t = k; t < pick.size(); ++t) pick[t] = pick[k - 1];
  }
}

}  // namespace rost
