#include "rost/kunneth.hpp"

#include "rost/catalog.hpp"
#include "rost/report.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rost {

FactorClasses rost_factor(unsigned long p, int n, int m) {
  FactorClasses f;
  f.ring = std::make_shared<const GradedRing>(gr_m_rost(p, n, m));
  f.max_power = static_cast<int>(p) - 1;
  f.n = n;
  auto ring = f.ring;
  f.name = [ring](int k, int i) {
    const std::string s = rost_class(k, i);
    return ring->has(s) ? s : std::string{};
  };
  return f;
}

FactorClasses quadric_factor(int n, int m) {
  FactorClasses f;
  f.ring = std::make_shared<const GradedRing>(gr_m_pfister(n, m));
  f.max_power = 1;
  f.n = n;
  auto ring = f.ring;
  f.name = [ring, n, m](int k, int i) -> std::string {
    if (i != 1) return {};
    std::string s;
    if (k == 0)
      s = quadric_u(n, 0);
    else if (k == m && m < n)
      s = quadric_u(n, m);
    return ring->has(s) ? s : std::string{};
  };
  return f;
}

std::size_t j_ideal_size(unsigned long p, int s) {
  if (s < 2) return 0;
  const std::size_t q = p - 1;
  return q * q * static_cast<std::size_t>(s) * static_cast<std::size_t>(s - 1) / 2;
}

namespace {

std::string slot_class(int k, int i, int t) { return slot_name(rost_class(k, i), static_cast<std::size_t>(t)); }

}  // namespace

std::vector<std::string> j_ideal_names(unsigned long p, int m, int s) {
  std::vector<std::string> out;
  const int top = static_cast<int>(p) - 1;
  for (int r = 1; r <= s; ++r)
    for (int t = r + 1; t <= s; ++t)
      for (int i = 1; i <= top; ++i)
        for (int j = 1; j <= top; ++j)
          out.push_back(slot_class(m, i, r) + slot_class(0, j, t) + " - " + slot_class(0, i, r) + slot_class(m, j, t));
  return out;
}

KunnethIdeal j_ideal(const GradedRing& tensor, const std::vector<FactorClasses>& factors, int m) {
  const std::size_t s = factors.size();
  if (tensor.factor_count() != s) throw std::invalid_argument("j_ideal: factor count mismatch");
  KunnethIdeal out;
  out.s = static_cast<int>(s);
  out.m = m;
  auto tuple = [&](std::size_t r, const std::string& a, std::size_t t, const std::string& b) {
    std::vector<std::string> names(s, "1");
    names[r] = a;
    names[t] = b;
    return tensor.tuple_generator(names);
  };
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t t = r + 1; t < s; ++t)
      for (int i = 1; i <= factors[r].max_power; ++i)
        for (int j = 1; j <= factors[t].max_power; ++j) {
          const std::string mr = factors[r].name(m, i), zr = factors[r].name(0, i);
          const std::string mt = factors[t].name(m, j), zt = factors[t].name(0, j);
          if (mr.empty() || mt.empty() || zr.empty() || zt.empty())
            throw std::invalid_argument("j_ideal: factor lacks c_0 or c_m classes");
          const Element a = tuple(r, mr, t, zt);
          const Element b = tuple(r, zr, t, mt);
          Element g{a.empty() ? b.degree : a.degree, {}};
          g += a;
          g -= b;
          out.generators.push_back(std::move(g));
          out.names.push_back(slot_name(mr, r + 1) + slot_name(zt, t + 1) + " - " + slot_name(zr, r + 1) +
                              slot_name(mt, t + 1));
        }
  return out;
}

KunnethQuotient kunneth_quotient(const std::vector<FactorClasses>& factors, int m) {
  if (factors.size() < 2) throw std::invalid_argument("kunneth_quotient: need at least two factors");
  KunnethQuotient kq;
  kq.factors = factors;
  kq.m = m;
  std::vector<std::shared_ptr<const GradedRing>> rings;
  for (const auto& f : factors) rings.push_back(f.ring);
  kq.tensor = std::make_shared<const GradedRing>(tensor_rings(rings));
  kq.ideal = j_ideal(*kq.tensor, factors, m);
  kq.quotient = std::make_shared<const GradedRing>(kq.tensor->quotient_ideal(kq.ideal.generators));
  return kq;
}

GradedFPModule restrict_generators(const GradedFPModule& m, const std::function<bool(const BasisLabel&)>& keep) {
  GradedFPModule out(m.prime(), m.low(), m.high());
  for (const auto& [d, pc] : m.pieces()) {
    std::vector<std::ptrdiff_t> local(pc.generators.size(), -1);
    for (std::size_t i = 0; i < pc.generators.size(); ++i)
      if (keep(pc.generators[i])) local[i] = static_cast<std::ptrdiff_t>(out.add_generator(d, pc.generators[i]));
    for (const auto& rel : pc.relations) {
      std::size_t inside = 0;
      for (const auto& [i, c] : rel)
        if (local[i] >= 0) ++inside;
      if (inside == 0) continue;
      if (inside != rel.size())
        throw std::logic_error("restrict_generators: relation in degree " + std::to_string(d) + " crosses the split");
      SparseVec sv;
      for (const auto& [i, c] : rel) sv.emplace_back(static_cast<std::size_t>(local[i]), c);
      out.add_relation(d, std::move(sv));
    }
  }
  return out;
}

CDecomposition c_decomposition(unsigned long p, int n1, int n2, int m) {
  if (m < 1 || m > std::min(n1, n2)) throw UsageError("c_decomposition needs 1 <= m <= min(n1, n2)");
  const GradedRing t = tensor_rings({std::make_shared<const GradedRing>(gr_m_rost(p, n1, m)),
                                     std::make_shared<const GradedRing>(gr_m_rost(p, n2, m))});
  auto positive = [](const BasisLabel& l) {
    return l.indices.size() == 2 && l.indices[0] >= 0 && l.indices[1] >= 0;
  };
  auto zeros = [](const BasisLabel& l) { return std::count(l.indices.begin(), l.indices.end(), 0); };
  CDecomposition out{restrict_generators(t.module(), positive),
                     restrict_generators(t.module(), [&](const BasisLabel& l) { return positive(l) && zeros(l) == 2; }),
                     restrict_generators(t.module(), [&](const BasisLabel& l) { return positive(l) && zeros(l) == 0; }),
                     restrict_generators(t.module(), [&](const BasisLabel& l) { return positive(l) && zeros(l) == 1; })};
  return out;
}

GradedFPModule tilde_quotient(const GradedFPModule& m, std::size_t factors) {
  GradedFPModule out = m;
  for (const auto& [d, pc] : m.pieces())
    for (std::size_t i = 0; i < pc.generators.size(); ++i) {
      const auto& e = pc.generators[i].exponents;
      if (e.size() != factors)
        throw std::invalid_argument("tilde_quotient: generator " + pc.generators[i].name + " has " +
                                    std::to_string(e.size()) + " exponents, expected " + std::to_string(factors));
      if (std::find(e.begin(), e.end(), 0) != e.end()) out.add_relation(d, SparseVec{{i, Int(1)}});
    }
  return out;
}

std::shared_ptr<GradedMap> kunneth_map(const KunnethQuotient& domain, std::shared_ptr<const GradedRing> target,
                                       const std::vector<std::function<std::vector<Term>(const std::string&)>>& factor_maps,
                                       const GradedFPModule& target_bar, const std::vector<GradedFPModule>& factor_bars) {
  const std::size_t s = domain.factors.size();
  if (factor_maps.size() != s || factor_bars.size() != s || target->factor_count() != s)
    throw std::invalid_argument("kunneth_map: factor count mismatch");
  GradedFPModule bars = factor_bars[0];
  for (std::size_t t = 1; t < s; ++t) bars = tensor_product(bars, factor_bars[t]);
  if (!iso_equal(normalize(target_bar), normalize(bars)).equal)
    throw std::invalid_argument("kunneth_map: target bar object is not the tensor product of the factor bar objects");

  std::map<std::string, std::vector<std::string>> tuple_of;
  for (const auto& [tuple, name] : domain.quotient->factor_names()) tuple_of[name] = tuple;

  const auto& src = domain.quotient;
  auto map = std::make_shared<GradedMap>(std::shared_ptr<const GradedFPModule>(src, &src->module()),
                                         std::shared_ptr<const GradedFPModule>(target, &target->module()));
  for (const auto& [d, pc] : src->module().pieces())
    for (std::size_t g = 0; g < pc.generators.size(); ++g) {
      const auto& tuple = tuple_of.at(pc.generators[g].name);
      std::vector<std::vector<Term>> images;
      for (std::size_t t = 0; t < s; ++t) images.push_back(factor_maps[t](tuple[t]));
      Element img{d, {}};
      std::vector<std::string> names(s);
      std::function<void(std::size_t, Rat)> walk = [&](std::size_t t, Rat c) {
        if (t == s) {
          const Element e = target->tuple_generator(names);
          if (e.empty()) return;
          if (e.degree != d) throw std::logic_error("kunneth_map: factor maps do not preserve degree");
          img += e.scaled(c);
          return;
        }
        for (const auto& term : images[t]) {
          names[t] = term.name;
          walk(t + 1, c * term.coeff);
        }
      };
      walk(0, Rat(1));
      map->set_image(d, g, std::move(img));
    }
  return map;
}

// ---------------------------------------------------------------------------

namespace {

using BarKey = std::pair<int, std::vector<int>>;

BarElement collect(const std::map<BarKey, Int>& acc) {
  BarElement out;
  for (const auto& [k, c] : acc)
    if (c != 0) out.push_back({c, k.first, k.second});
  return out;
}

}  // namespace

BarElement bar_multiply(const BarElement& a, const BarElement& b, unsigned long p) {
  std::map<BarKey, Int> acc;
  for (const auto& x : a)
    for (const auto& y : b) {
      if (x.y.size() != y.y.size()) throw std::invalid_argument("bar_multiply: variable count mismatch");
      std::vector<int> e(x.y.size());
      bool zero = false;
      for (std::size_t t = 0; t < e.size(); ++t) {
        e[t] = x.y[t] + y.y[t];
        if (e[t] >= static_cast<int>(p)) zero = true;
      }
      if (!zero) acc[{x.v_exp + y.v_exp, e}] += x.coeff * y.coeff;
    }
  return collect(acc);
}

bool bar_is_zero(const BarElement& a) {
  std::map<BarKey, Int> acc;
  for (const auto& t : a) acc[{t.v_exp, t.y}] += t.coeff;
  return collect(acc).empty();
}

std::string bar_to_string(const BarElement& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto& t = a[k];
    if (k) os << " + ";
    bool any = false;
    if (t.coeff != 1) {
      os << t.coeff.get_str();
      any = true;
    }
    if (t.v_exp > 0) {
      os << (any ? "*" : "") << "v" << (t.v_exp > 1 ? "^" + std::to_string(t.v_exp) : "");
      any = true;
    }
    for (std::size_t i = 0; i < t.y.size(); ++i) {
      if (t.y[i] == 0) continue;
      os << (any ? "*" : "") << "y_" << i + 1 << (t.y[i] > 1 ? "^" + std::to_string(t.y[i]) : "");
      any = true;
    }
    if (!any) os << "1";
  }
  return os.str();
}

BarElement res_k(unsigned long p, int m, std::size_t s, std::size_t t, int k, int i) {
  std::vector<int> y(s, 0);
  if (i == 0) return {{Int(1), 0, y}};
  y[t] = i;
  if (k == 0) return {{Int(static_cast<long>(p)), 0, y}};
  if (k == m) return {{Int(1), 1, y}};
  return {};
}

bool res_kills_j(unsigned long p, int m, int s) {
  const auto S = static_cast<std::size_t>(s);
  const int top = static_cast<int>(p) - 1;
  for (std::size_t r = 0; r < S; ++r)
    for (std::size_t t = r + 1; t < S; ++t)
      for (int i = 1; i <= top; ++i)
        for (int j = 1; j <= top; ++j) {
          BarElement a = bar_multiply(res_k(p, m, S, r, m, i), res_k(p, m, S, t, 0, j), p);
          for (auto& term : bar_multiply(res_k(p, m, S, r, 0, i), res_k(p, m, S, t, m, j), p)) {
            term.coeff = -term.coeff;
            a.push_back(term);
          }
          if (!bar_is_zero(a)) return false;
        }
  return true;
}

bool StarStarResult::all() const { return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; }); }

StarStarResult star_star_check(const std::vector<BarElement>& image, unsigned long p, int m, const std::vector<int>& y_degrees,
                               int order) {
  if (order < 1) throw std::invalid_argument("star_star_check: order must be positive");
  const std::size_t s = y_degrees.size();
  const int q = static_cast<int>(ipow_ll(static_cast<long long>(p), m)) - 1;
  auto term_degree = [&](const BarTerm& t) {
    int d = -t.v_exp * q;
    for (std::size_t i = 0; i < s; ++i) d += t.y[i] * y_degrees[i];
    return d;
  };

  struct Gen {
    int degree;
    const BarElement* e;
  };
  std::vector<Gen> gens;
  for (const auto& g : image) {
    if (bar_is_zero(g)) continue;
    for (const auto& t : g)
      if (t.y.size() != s) throw std::invalid_argument("star_star_check: variable count mismatch");
    const int d = term_degree(g.front());
    for (const auto& t : g)
      if (term_degree(t) != d) throw std::invalid_argument("star_star_check: image generator is not homogeneous");
    gens.push_back({d, &g});
  }

  StarStarResult out;
  std::vector<int> Y(s, 1);
  const int top = static_cast<int>(p) - 1;
  if (top < 1) return out;
  while (true) {
    int ydeg = 0;
    for (std::size_t i = 0; i < s; ++i) ydeg += Y[i] * y_degrees[i];
    bool holds = true;
    for (int b = 0; b < order; ++b) {
      const int a = order - 1 - b;
      const int D = ydeg - b * q;
      std::map<BarKey, std::size_t> rows;
      std::vector<std::map<BarKey, Int>> cols;
      for (const auto& g : gens) {
        if (g.degree < D || (g.degree - D) % q != 0) continue;
        const int k = (g.degree - D) / q;
        std::map<BarKey, Int> col;
        for (const auto& t : *g.e) col[{t.v_exp + k, t.y}] += t.coeff;
        for (const auto& [key, c] : col) rows.emplace(key, rows.size());
        cols.push_back(std::move(col));
      }
      const BarKey target{b, Y};
      rows.emplace(target, rows.size());
      PLocalMatrix M(rows.size(), cols.size(), p);
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [key, v] : cols[c]) M(rows.at(key), c) += v;
      std::vector<Int> rhs(rows.size(), Int(0));
      rhs[rows.at(target)] = ipow(p, static_cast<unsigned long>(a));
      const bool member = !cols.empty() && membership(M, std::span<const Int>(rhs)).has_value();
      if (member) {
        holds = false;
        out.members.push_back(bar_to_string({{ipow(p, static_cast<unsigned long>(a)), b, Y}}));
      }
    }
    out.monomials.push_back(Y);
    out.holds.push_back(holds);
    std::size_t k = 0;
    while (k < s && Y[k] == top) Y[k++] = 1;
    if (k == s) break;
    ++Y[k];
  }
  return out;
}

std::vector<BarElement> versal_image(unsigned long p, int s) {
  const auto S = static_cast<std::size_t>(s);
  std::vector<BarElement> out{{{Int(1), 0, std::vector<int>(S, 0)}}};
  for (std::size_t t = 0; t < S; ++t) {
    std::vector<BarElement> options{{{Int(1), 0, std::vector<int>(S, 0)}}};
    for (int i = 1; i < static_cast<int>(p); ++i) {
      std::vector<int> y(S, 0);
      y[t] = i;
      options.push_back({{Int(static_cast<long>(p)), 0, y}});
      options.push_back({{Int(1), 1, y}});
    }
    std::vector<BarElement> next;
    for (const auto& a : out)
      for (const auto& b : options) next.push_back(bar_multiply(a, b, p));
    out = std::move(next);
  }
  return out;
}

std::vector<BarElement> product_image(unsigned long p) {
  std::vector<BarElement> first{{{Int(1), 0, {0, 0}}}};
  for (int i = 1; i < static_cast<int>(p); ++i) {
    first.push_back({{Int(static_cast<long>(p)), 0, {i, 0}}});
    first.push_back({{Int(1), 1, {i, 0}}});
  }
  std::vector<BarElement> out;
  for (const auto& a : first)
    for (int j = 0; j < static_cast<int>(p); ++j) out.push_back(bar_multiply(a, {{Int(1), 0, {0, j}}}, p));
  return out;
}

// ---------------------------------------------------------------------------

SlotComparison slot_comparison(unsigned long p, const std::vector<int>& ns, int m) {
  const int s = static_cast<int>(ns.size());
  if (s < 2) throw std::invalid_argument("slot_comparison: need at least two factors");
  for (int n : ns)
    if (m < 1 || m >= n) throw std::invalid_argument("slot_comparison: needs 1 <= m <= n - 1 for every factor");
  const int q = static_cast<int>(ipow_ll(static_cast<long long>(p), m)) - 1;
  auto residue = [q](int d) { return ((d % q) + q) % q; };

  SlotComparison out;
  std::map<std::pair<int, int>, DegreeInvariants> left_graded, right_graded;

  std::vector<FactorClasses> factors;
  for (int n : ns) factors.push_back(rost_factor(p, n, m));
  const KunnethQuotient kq = kunneth_quotient(factors, m);
  const GradedFPModule left = prune_trivial(tilde_quotient(kq.quotient->module(), ns.size()));

  auto slot_of = [](const BasisLabel& l) {
    return 1 + static_cast<int>(std::count(l.indices.begin(), l.indices.end(), 0));
  };
  std::set<int> slots;
  for (const auto& [d, pc] : left.pieces())
    for (const auto& g : pc.generators) {
      for (int i : g.indices)
        if (i != 0 && i != m) throw std::logic_error("slot_comparison: unexpected class " + g.name);
      slots.insert(slot_of(g));
    }
  bool homogeneous = true;
  for (int k : slots) {
    GradedFPModule sub(p, left.low(), left.high());
    try {
      sub = restrict_generators(left, [&](const BasisLabel& l) { return slot_of(l) == k; });
    } catch (const std::logic_error& e) {
      homogeneous = false;
      out.notes.push_back(std::string("relations mix slots: ") + e.what());
      break;
    }
    const KmLocalizedInvariants loc = localize_v(from_module(sub, m));
    if (!loc.aggregate.is_zero()) out.left[k] = loc.aggregate;
    for (const auto& [d, inv] : normalize(sub).degrees) left_graded[{k, residue(d)}] += inv;
  }

  std::vector<std::shared_ptr<const GradedRing>> bars;
  for (int n : ns) bars.push_back(std::make_shared<const GradedRing>(bar_rost(p, n)));
  const GradedRing bar = tensor_rings(bars);
  const NormalForm right_nf = normalize(prune_trivial(tilde_quotient(bar.module(), ns.size())));
  const FiltrationGraded fg = gr_ps(right_nf, s);
  out.right = fg.aggregate();
  for (const auto& [d, by_slot] : fg.slots)
    for (const auto& [k, inv] : by_slot) right_graded[{k, residue(d)}] += inv;

  out.equal = homogeneous && out.left == out.right;
  out.graded_equal = homogeneous && left_graded == right_graded;
  out.notes.push_back("J_s generators: " + std::to_string(kq.ideal.generators.size()));
  if (!out.graded_equal) out.notes.push_back("slot invariants differ once degrees mod " + std::to_string(q) + " are kept");
  return out;
}

}  // namespace rost
