#include "rost/omega_model.hpp"

#include <omp.h>

#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rost {

int DegreeRule::y_degree(unsigned long p, int n) {
  if (n < 1) throw std::invalid_argument("y_degree: n must be positive");
  return static_cast<int>((ipow_ll(static_cast<long long>(p), n) - 1) / static_cast<long long>(p - 1));
}

int DegreeRule::v_degree(unsigned long p, int i) { return -static_cast<int>(ipow_ll(static_cast<long long>(p), i) - 1); }

int DegreeRule::c_degree(unsigned long p, int y_deg, int i) { return y_deg + v_degree(p, i); }

namespace {

std::string c_name(int i, int j) {
  std::string s = "c_" + std::to_string(i) + "(y";
  if (j > 1) s += "^" + std::to_string(j);
  return s + ")";
}

struct FactorGen {
  std::string name;
  int exp;
  int index;
  int degree;
};

}  // namespace

OmegaImageModel::OmegaImageModel(unsigned long p, std::vector<int> factors) : p_(p), factors_(std::move(factors)) {
  if (!is_prime(p)) throw std::invalid_argument("OmegaImageModel: p must be prime");
  if (factors_.empty()) throw std::invalid_argument("OmegaImageModel: need at least one factor");
  for (int n : factors_) {
    if (n < 1) throw std::invalid_argument("OmegaImageModel: factor index must be positive");
    y_deg_.push_back(DegreeRule::y_degree(p, n));
    top_ += static_cast<int>(p - 1) * y_deg_.back();
  }
  while (ipow_ll(static_cast<long long>(p), vcount_ + 1) - 1 <= top_) ++vcount_;

  const std::size_t s = factors_.size();
  std::vector<std::vector<FactorGen>> per_factor(s);
  for (std::size_t t = 0; t < s; ++t) {
    per_factor[t].push_back({"1", 0, -1, 0});
    for (int j = 1; j <= static_cast<int>(p) - 1; ++j)
      for (int i = 0; i < factors_[t]; ++i)
        per_factor[t].push_back({c_name(i, j), j, i, DegreeRule::c_degree(p, j * y_deg_[t], i)});
  }

  std::vector<std::size_t> pick(s, 0);
  for (;;) {
    ImageGenerator g;
    AmbientMonomial mono{std::vector<int>(static_cast<std::size_t>(vcount_), 0), std::vector<int>(s, 0)};
    Int coeff = 1;
    std::string name;
    for (std::size_t t = 0; t < s; ++t) {
      const FactorGen& f = per_factor[t][pick[t]];
      g.label.exponents.push_back(f.exp);
      g.label.indices.push_back(f.index);
      g.degree += f.degree;
      mono.y[t] = f.exp;
      if (f.index == 0) coeff *= static_cast<long>(p);
      if (f.index >= 1) mono.v[static_cast<std::size_t>(f.index - 1)] += 1;
      if (f.name != "1") name += s == 1 ? f.name : slot_name(f.name, t + 1);
    }
    g.label.name = name.empty() ? "1" : name;
    g.res[mono] = coeff;
    by_name_[g.label.name] = gens_.size();
    gens_.push_back(std::move(g));

    std::size_t t = s;
    while (t > 0) {
      --t;
      if (++pick[t] < per_factor[t].size()) break;
      pick[t] = 0;
      if (t == 0) return;
    }
    if (s == 0) return;
  }
}

const ImageGenerator& OmegaImageModel::generator(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw std::out_of_range("OmegaImageModel: no generator " + name);
  return gens_[it->second];
}

int OmegaImageModel::degree(const AmbientMonomial& mono) const {
  int d = 0;
  for (std::size_t t = 0; t < mono.y.size(); ++t) d += mono.y[t] * y_deg_[t];
  for (std::size_t i = 0; i < mono.v.size(); ++i) d += mono.v[i] * DegreeRule::v_degree(p_, static_cast<int>(i) + 1);
  return d;
}

AmbientElement OmegaImageModel::multiply(const AmbientElement& a, const AmbientElement& b) const {
  AmbientElement out;
  for (const auto& [ma, ca] : a) {
    if (degree(ma) > top_) throw std::out_of_range("omega_multiply: degree outside window");
    for (const auto& [mb, cb] : b) {
      if (degree(mb) > top_) throw std::out_of_range("omega_multiply: degree outside window");
      AmbientMonomial m{ma.v, ma.y};
      bool dead = false;
      for (std::size_t t = 0; t < m.y.size(); ++t) {
        m.y[t] += mb.y[t];
        if (m.y[t] >= static_cast<int>(p_)) dead = true;
      }
      if (dead) continue;
      for (std::size_t i = 0; i < m.v.size(); ++i) m.v[i] += mb.v[i];
      Int& slot = out[m];
      slot += ca * cb;
      if (slot == 0) out.erase(m);
    }
  }
  return out;
}

AmbientElement OmegaImageModel::times_v(int i, const AmbientElement& x) const {
  if (i < 0 || i > vcount_) throw std::out_of_range("times_v: index outside the kept v variables");
  AmbientElement out;
  for (const auto& [m, c] : x) {
    if (i == 0) {
      out[m] = c * static_cast<long>(p_);
    } else {
      AmbientMonomial n = m;
      n.v[static_cast<std::size_t>(i - 1)] += 1;
      out[n] = c;
    }
  }
  return out;
}

std::string OmegaImageModel::to_string(const AmbientElement& x) const {
  if (x.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (std::size_t i = 0; i < m.v.size(); ++i)
      if (m.v[i]) os << "*v_" << i + 1 << (m.v[i] > 1 ? "^" + std::to_string(m.v[i]) : "");
    for (std::size_t t = 0; t < m.y.size(); ++t)
      if (m.y[t]) {
        os << "*y";
        if (m.y.size() > 1) os << "_" << t + 1;
        if (m.y[t] > 1) os << "^" << m.y[t];
      }
  }
  return os.str();
}

AmbientElement ambient_sub(const AmbientElement& a, const AmbientElement& b) {
  AmbientElement out = a;
  for (const auto& [m, c] : b) {
    Int& slot = out[m];
    slot -= c;
    if (slot == 0) out.erase(m);
  }
  return out;
}

namespace {

/// v-monomials (v_1..v_K exponents) of total Chow degree -target.
std::vector<std::vector<int>> v_monomials(unsigned long p, int K, int target) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(K), 0);
  std::function<void(int, int)> walk = [&](int i, int rest) {
    if (i == K) {
      if (rest == 0) out.push_back(cur);
      return;
    }
    const int w = -DegreeRule::v_degree(p, i + 1);
    for (int e = 0; e * w <= rest; ++e) {
      cur[static_cast<std::size_t>(i)] = e;
      walk(i + 1, rest - e * w);
    }
    cur[static_cast<std::size_t>(i)] = 0;
  };
  walk(0, target);
  return out;
}

struct DegreeOutput {
  std::vector<SparseVec> relations;
  std::vector<std::pair<std::pair<std::string, std::string>, std::vector<Term>>> products;
};

}  // namespace

GradedRing chow_collapse(const OmegaImageModel& model, ExecPolicy policy) {
  const unsigned long p = model.prime();
  const int top = model.top_degree();
  const auto& gens = model.generators();

  std::vector<std::vector<std::size_t>> by_degree(static_cast<std::size_t>(top) + 1);
  for (std::size_t g = 0; g < gens.size(); ++g) by_degree[static_cast<std::size_t>(gens[g].degree)].push_back(g);

  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(static_cast<std::size_t>(top) + 1);
  for (std::size_t a = 1; a < gens.size(); ++a)
    for (std::size_t b = a; b < gens.size(); ++b) {
      const int d = gens[a].degree + gens[b].degree;
      if (d <= top) pairs[static_cast<std::size_t>(d)].emplace_back(a, b);
    }

  auto work = [&](int d) {
    DegreeOutput out;
    const auto& A = by_degree[static_cast<std::size_t>(d)];
    if (A.empty()) return out;

    // Span of (v_1, v_2, ...)·image in degree d, reduced to the smallest
    // p-power coefficient per monomial (every res is a single monomial).
    std::map<AmbientMonomial, int> bvals;
    for (const auto& g : gens) {
      if (g.degree <= d) continue;
      for (const auto& alpha : v_monomials(p, model.v_count(), g.degree - d))
        for (const auto& [m, c] : g.res) {
          AmbientMonomial n = m;
          for (std::size_t i = 0; i < alpha.size(); ++i) n.v[i] += alpha[i];
          const int val = valuation(c, p);
          auto [it, fresh] = bvals.try_emplace(n, val);
          if (!fresh) it->second = std::min(it->second, val);
        }
    }

    std::vector<AmbientElement> products;
    for (const auto& [a, b] : pairs[static_cast<std::size_t>(d)]) products.push_back(model.multiply(gens[a].res, gens[b].res));

    std::map<AmbientMonomial, std::size_t> rows;
    for (std::size_t g : A)
      for (const auto& [m, c] : gens[g].res) rows.try_emplace(m, 0);
    for (const auto& prod : products)
      for (const auto& [m, c] : prod) rows.try_emplace(m, 0);
    std::size_t r = 0;
    for (auto& [m, idx] : rows) idx = r++;
    std::vector<std::pair<std::size_t, int>> bcols;
    for (const auto& [m, idx] : rows) {
      auto it = bvals.find(m);
      if (it != bvals.end()) bcols.emplace_back(idx, it->second);
    }

    PLocalMatrix M(rows.size(), A.size() + bcols.size(), p);
    for (std::size_t k = 0; k < A.size(); ++k)
      for (const auto& [m, c] : gens[A[k]].res) M(rows.at(m), k) = c;
    for (std::size_t k = 0; k < bcols.size(); ++k)
      M(bcols[k].first, A.size() + k) = ipow(p, static_cast<unsigned long>(bcols[k].second));

    const PLocalMatrix ker = kernel_basis(M);
    for (std::size_t col = 0; col < ker.cols(); ++col) {
      SparseVec rel;
      for (std::size_t k = 0; k < A.size(); ++k)
        if (ker(k, col) != 0) rel.emplace_back(k, ker(k, col));
      if (!rel.empty()) out.relations.push_back(std::move(rel));
    }

    if (!products.empty()) {
      const SnfSolver solver(M);
      for (std::size_t q = 0; q < products.size(); ++q) {
        std::vector<Rat> rhs(rows.size());
        for (const auto& [m, c] : products[q]) rhs[rows.at(m)] = c;
        const auto x = solver.solve(rhs);
        if (!x) throw std::logic_error("chow_collapse: product leaves the image");
        std::vector<Term> terms;
        for (std::size_t k = 0; k < A.size(); ++k)
          if ((*x)[k] != 0) terms.push_back({(*x)[k], gens[A[k]].label.name});
        const auto& [a, b] = pairs[static_cast<std::size_t>(d)][q];
        out.products.push_back({{gens[a].label.name, gens[b].label.name}, std::move(terms)});
      }
    }
    return out;
  };

  std::vector<DegreeOutput> results(static_cast<std::size_t>(top) + 1);
  if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int d = top; d >= 0; --d) results[static_cast<std::size_t>(d)] = work(d);
  } else {
    for (int d = 0; d <= top; ++d) results[static_cast<std::size_t>(d)] = work(d);
  }

  GradedFPModule module(p, 0, top);
  auto table = std::make_shared<TableRule>();
  for (int d = 0; d <= top; ++d) {
    for (std::size_t g : by_degree[static_cast<std::size_t>(d)]) module.add_generator(d, gens[g].label);
    auto& res = results[static_cast<std::size_t>(d)];
    for (auto& rel : res.relations) module.add_relation(d, std::move(rel));
    for (auto& [key, terms] : res.products) table->set(key.first, key.second, std::move(terms));
  }
  return GradedRing(std::move(module), table);
}

nlohmann::json structure_table_json(const GradedRing& ring) {
  auto table = std::dynamic_pointer_cast<const TableRule>(ring.rule());
  if (!table) throw std::invalid_argument("structure_table_json: ring has no explicit structure table");
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, terms] : table->table()) {
    nlohmann::json prod = nlohmann::json::array();
    for (const auto& t : terms) prod.push_back({{"coeff", rost::to_string(t.coeff)}, {"name", t.name}});
    out.push_back({{"a", key.first}, {"b", key.second}, {"product", prod}});
  }
  return out;
}

bool check_lemma_3_2(const OmegaImageModel& model, int r, int s, int j, long k) {
  if (model.factors().size() != 1) throw std::invalid_argument("check_lemma_3_2: single-factor model required");
  const int n = model.factors()[0];
  if (r < 0 || s < 0 || r >= n || s >= n) throw std::out_of_range("check_lemma_3_2: index out of range");
  if (j < 1 || j >= static_cast<int>(model.prime())) throw std::out_of_range("check_lemma_3_2: exponent out of range");
  const AmbientElement& cr = model.generator(c_name(r, j)).res;
  const AmbientElement& cs = model.generator(c_name(s, j)).res;
  AmbientElement rhs = model.times_v(r, cs);
  for (auto& [m, c] : rhs) c *= k;
  return ambient_sub(model.times_v(s, cr), rhs).empty();
}

bool image_in_I_n(const OmegaImageModel& model) {
  int n = 0;
  for (int f : model.factors()) n = std::max(n, f);
  for (const auto& g : model.generators()) {
    if (g.degree == 0 && g.label.name == "1") continue;
    for (const auto& [m, c] : g.res) {
      bool in = c % static_cast<long>(model.prime()) == 0;
      for (int i = 1; i < n && !in; ++i)
        if (static_cast<std::size_t>(i - 1) < m.v.size() && m.v[static_cast<std::size_t>(i - 1)] > 0) in = true;
      if (!in) return false;
    }
  }
  return true;
}

bool res_injective(const OmegaImageModel& model) {
  std::map<int, std::vector<const ImageGenerator*>> by_degree;
  for (const auto& g : model.generators()) by_degree[g.degree].push_back(&g);
  for (const auto& [d, gs] : by_degree) {
    std::map<AmbientMonomial, std::size_t> rows;
    for (const auto* g : gs)
      for (const auto& [m, c] : g->res) rows.try_emplace(m, rows.size());
    PLocalMatrix M(rows.size(), gs.size(), model.prime());
    for (std::size_t k = 0; k < gs.size(); ++k)
      for (const auto& [m, c] : gs[k]->res) M(rows.at(m), k) = c;
    if (snf_exponents(M).size() != gs.size()) return false;
  }
  return true;
}

}  // namespace rost
