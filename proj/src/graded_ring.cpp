#include "rost/graded_ring.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace rost {

void TableRule::set(const std::string& a, const std::string& b, std::vector<Term> product) {
  table_[std::minmax(a, b)] = std::move(product);
}

std::vector<Term> TableRule::multiply(const std::string& a, const std::string& b) const {
  if (a == "1") return {{Rat(1), b}};
  if (b == "1") return {{Rat(1), a}};
  auto it = table_.find(std::minmax(a, b));
  return it == table_.end() ? std::vector<Term>{} : it->second;
}

void MonomialRule::add(const std::string& name, std::vector<int> exponents) {
  names_[exponents] = name;
  exps_[name] = std::move(exponents);
}

std::vector<Term> MonomialRule::multiply(const std::string& a, const std::string& b) const {
  auto ia = exps_.find(a), ib = exps_.find(b);
  if (ia == exps_.end() || ib == exps_.end()) throw std::out_of_range("MonomialRule: unknown monomial");
  std::vector<int> e = ia->second;
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += ib->second[k];
  auto it = names_.find(e);
  if (it == names_.end()) return {};
  return {{Rat(1), it->second}};
}

TensorRule::TensorRule(std::shared_ptr<const GradedRing> left, std::shared_ptr<const GradedRing> right,
                       std::map<std::string, std::pair<std::string, std::string>> split,
                       std::map<std::pair<std::string, std::string>, std::string> join)
    : left_(std::move(left)), right_(std::move(right)), split_(std::move(split)), join_(std::move(join)) {}

std::vector<Term> TensorRule::multiply(const std::string& a, const std::string& b) const {
  const auto& [a1, a2] = split_.at(a);
  const auto& [b1, b2] = split_.at(b);
  const auto l = left_->rule()->multiply(a1, b1);
  if (l.empty()) return {};
  const auto r = right_->rule()->multiply(a2, b2);
  std::vector<Term> out;
  for (const auto& tl : l)
    for (const auto& tr : r) {
      auto it = join_.find({tl.name, tr.name});
      if (it != join_.end()) out.push_back({tl.coeff * tr.coeff, it->second});
    }
  return out;
}

GradedRing::GradedRing(GradedFPModule module, std::shared_ptr<const ProductRule> rule)
    : module_(std::move(module)), rule_(std::move(rule)) {
  for (const auto& [d, pc] : module_.pieces())
    for (std::size_t i = 0; i < pc.generators.size(); ++i)
      if (!index_.emplace(pc.generators[i].name, std::make_pair(d, i)).second)
        throw std::invalid_argument("GradedRing: duplicate generator name " + pc.generators[i].name);
}

Element GradedRing::element(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return Element{};
  return Element{it->second.first, {{it->second.second, Rat(1)}}};
}

Element GradedRing::multiply(const Element& a, const Element& b) const {
  const int d = a.degree + b.degree;
  Element out{d, {}};
  if (a.empty() || b.empty() || !module_.in_window(d)) return out;
  for (const auto& [i, ci] : a.coeffs) {
    const std::string& na = module_.label(a.degree, i).name;
    for (const auto& [j, cj] : b.coeffs) {
      for (const auto& t : rule_->multiply(na, module_.label(b.degree, j).name)) {
        auto it = index_.find(t.name);
        if (it == index_.end()) continue;
        if (it->second.first != d) throw std::logic_error("product rule returned wrong degree for " + t.name);
        out += Element{d, {{it->second.second, ci * cj * t.coeff}}};
      }
    }
  }
  return out;
}

std::string GradedRing::to_string(const Element& e) const {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : e.coeffs) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << rost::to_string(c) << "*";
    os << module_.label(e.degree, i).name;
  }
  return os.str();
}

GradedRing GradedRing::quotient_ideal(std::span<const Element> generators) const {
  std::vector<Element> rels;
  for (const auto& g : generators) {
    if (g.empty()) continue;
    for (const auto& [d, pc] : module_.pieces()) {
      if (!module_.in_window(g.degree + d)) continue;
      for (std::size_t i = 0; i < pc.generators.size(); ++i) {
        Element prod = multiply(g, Element{d, {{i, Rat(1)}}});
        if (!prod.empty()) rels.push_back(std::move(prod));
      }
    }
  }
  GradedRing out = *this;
  out.module_ = quotient(module_, rels);
  return out;
}

Element GradedRing::tuple_generator(const std::vector<std::string>& names) const {
  auto it = tuple_names_.find(names);
  if (it == tuple_names_.end()) return Element{};
  return element(it->second);
}

Element GradedRing::embed(std::size_t r, const GradedRing& factor, const Element& e) const {
  if (r >= factors_) throw std::out_of_range("embed: no such factor");
  Element out;
  bool placed = false;
  for (const auto& [i, c] : e.coeffs) {
    std::vector<std::string> names(factors_, "1");
    names[r] = factor.module().label(e.degree, i).name;
    Element g = tuple_generator(names);
    if (g.empty()) continue;
    if (!placed) {
      out.degree = g.degree;
      placed = true;
    }
    out += g.scaled(c);
  }
  return out;
}

std::string slot_name(const std::string& name, std::size_t t) {
  if (name == "1") return name;
  const std::string sub = "y_" + std::to_string(t);
  const bool y_power = name == "y" || name.rfind("y^", 0) == 0;
  if (y_power || name.find("(y") != std::string::npos) {
    std::string out;
    for (char ch : name) {
      if (ch == 'y')
        out += sub;
      else
        out += ch;
    }
    return out;
  }
  return "(" + name + ")_" + std::to_string(t);
}

namespace {

GradedFPModule relabel(const GradedFPModule& m, std::size_t slot) {
  GradedFPModule out(m.prime(), m.low(), m.high());
  for (const auto& [d, pc] : m.pieces()) {
    for (auto g : pc.generators) {
      g.name = slot_name(g.name, slot);
      out.add_generator(d, std::move(g));
    }
    for (const auto& rel : pc.relations) out.add_relation(d, rel);
  }
  return out;
}

}  // namespace

GradedRing tensor_rings(const std::vector<std::shared_ptr<const GradedRing>>& factors) {
  if (factors.empty()) throw std::invalid_argument("tensor_rings: no factors");
  auto relabelled = [](const GradedRing& r, std::size_t slot) {
    // Same rule, seen through renamed generators.
    std::map<std::string, std::string> back;
    const GradedFPModule m = relabel(r.module(), slot);
    std::vector<std::string> names;
    for (const auto& [d, pc] : r.module().pieces())
      for (const auto& g : pc.generators) names.push_back(g.name);
    for (const auto& n : names) back[slot_name(n, slot)] = n;
    GradedRing out(m, nullptr);
    struct Renamed : ProductRule {
      std::shared_ptr<const ProductRule> inner;
      std::map<std::string, std::string> back;
      std::size_t slot;
      std::vector<Term> multiply(const std::string& a, const std::string& b) const override {
        auto t = inner->multiply(back.at(a), back.at(b));
        for (auto& x : t) x.name = slot_name(x.name, slot);
        return t;
      }
    };
    auto renamed = std::make_shared<Renamed>();
    renamed->inner = r.rule();
    renamed->back = std::move(back);
    renamed->slot = slot;
    out.rule_ = renamed;
    for (const auto& n : names) out.tuple_names_[{n}] = slot_name(n, slot);
    return out;
  };

  auto acc = std::make_shared<const GradedRing>(relabelled(*factors[0], 1));
  for (std::size_t t = 1; t < factors.size(); ++t) {
    auto right = std::make_shared<const GradedRing>(relabelled(*factors[t], t + 1));
    TensorIndex idx;
    GradedFPModule m = tensor_product(acc->module(), right->module(), &idx);
    std::map<std::string, std::pair<std::string, std::string>> split;
    std::map<std::pair<std::string, std::string>, std::string> join;
    for (const auto& [key, pos] : idx.encode) {
      const auto& [da, i, db, j] = key;
      const std::string& ln = acc->module().label(da, i).name;
      const std::string& rn = right->module().label(db, j).name;
      const std::string& tn = m.label(pos.first, pos.second).name;
      split[tn] = {ln, rn};
      join[{ln, rn}] = tn;
    }
    auto rule = std::make_shared<TensorRule>(acc, right, split, join);
    GradedRing next(std::move(m), rule);
    next.factors_ = t + 1;
    for (const auto& [tuple, ln] : acc->tuple_names_)
      for (const auto& [rt, rn] : right->tuple_names_) {
        auto it = join.find({ln, rn});
        if (it == join.end()) continue;
        auto full = tuple;
        full.push_back(rt[0]);
        next.tuple_names_[full] = it->second;
      }
    acc = std::make_shared<const GradedRing>(std::move(next));
  }
  return *acc;
}

std::string monomial_name(const std::vector<RingVariable>& vars, const std::vector<int>& exps) {
  std::string out;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (exps[k] == 0) continue;
    out += vars[k].name;
    if (exps[k] > 1) out += "^" + std::to_string(exps[k]);
  }
  return out.empty() ? "1" : out;
}

GradedRing presented_ring(unsigned long p, const std::vector<RingVariable>& vars, const std::vector<IntPoly>& relations,
                          int top) {
  for (const auto& v : vars)
    if (v.degree <= 0) throw std::invalid_argument("presented_ring: variable degrees must be positive");
  auto degree_of = [&](const std::vector<int>& e) {
    int d = 0;
    for (std::size_t k = 0; k < vars.size(); ++k) d += e[k] * vars[k].degree;
    return d;
  };

  std::vector<std::vector<int>> monomials;
  std::vector<int> cur(vars.size(), 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t k, int deg) {
    if (k == vars.size()) {
      monomials.push_back(cur);
      return;
    }
    for (int e = 0; deg + e * vars[k].degree <= top; ++e) {
      cur[k] = e;
      walk(k + 1, deg + e * vars[k].degree);
    }
    cur[k] = 0;
  };
  walk(0, 0);

  GradedFPModule m(p, 0, top);
  auto rule = std::make_shared<MonomialRule>();
  std::map<std::vector<int>, std::pair<int, std::size_t>> where;
  for (const auto& e : monomials) {
    const int d = degree_of(e);
    const std::string name = monomial_name(vars, e);
    where[e] = {d, m.add_generator(d, BasisLabel{name, e, {}})};
    rule->add(name, e);
  }

  for (const auto& rel : relations) {
    if (rel.empty()) continue;
    const int rd = degree_of(rel.front().second);
    for (const auto& [c, e] : rel)
      if (degree_of(e) != rd) throw std::invalid_argument("presented_ring: relation is not homogeneous");
    for (const auto& mono : monomials) {
      const int d = rd + degree_of(mono);
      if (d > top) continue;
      std::map<std::size_t, Int> col;
      for (const auto& [c, e] : rel) {
        std::vector<int> prod = e;
        for (std::size_t k = 0; k < prod.size(); ++k) prod[k] += mono[k];
        col[where.at(prod).second] += c;
      }
      SparseVec sv;
      for (auto& [i, c] : col)
        if (c != 0) sv.emplace_back(i, c);
      m.add_relation(d, std::move(sv));
    }
  }
  return GradedRing(prune_trivial(m), rule);
}

}  // namespace rost
