#include "rost/catalog.hpp"

#include "rost/report.hpp"

#include <functional>

namespace rost {

namespace {

GradedRing with_rule(GradedFPModule m, std::shared_ptr<const ProductRule> rule) { return GradedRing(std::move(m), std::move(rule)); }

std::string y_power(int j) {
  if (j == 0) return "1";
  return j == 1 ? "y" : "y^" + std::to_string(j);
}

int pow2(int e) { return static_cast<int>(ipow_ll(2, e)); }

IntPoly mono(long c, std::vector<int> e) { return IntPoly{{Int(c), std::move(e)}}; }

using NameMap = std::function<std::vector<Term>(const std::string&)>;

std::shared_ptr<const GradedMap> make_map(std::shared_ptr<const GradedRing> src, std::shared_ptr<const GradedRing> dst,
                                          const NameMap& f) {
  auto map = std::make_shared<GradedMap>(std::shared_ptr<const GradedFPModule>(src, &src->module()),
                                         std::shared_ptr<const GradedFPModule>(dst, &dst->module()));
  for (const auto& [d, pc] : src->module().pieces())
    for (std::size_t i = 0; i < pc.generators.size(); ++i) {
      Element img{d, {}};
      for (const auto& t : f(pc.generators[i].name)) {
        const Element e = dst->element(t.name);
        if (e.empty()) continue;
        if (e.degree != d) throw std::logic_error("restriction map does not preserve degree at " + t.name);
        img += e.scaled(t.coeff);
      }
      map->set_image(d, i, std::move(img));
    }
  return map;
}

/// res on a single Rost factor: c_0(y^j) -> p y^j, c_i(y^j) -> 0 (i >= 1), 1 -> 1.
std::vector<Term> rost_res(unsigned long p, const std::string& name) {
  if (name == "1") return {{Rat(1), "1"}};
  // name is c_i(y) or c_i(y^j)
  const auto open = name.find('(');
  const int i = std::stoi(name.substr(2, open - 2));
  if (i != 0) return {};
  const auto caret = name.find('^');
  const int j = caret == std::string::npos ? 1 : std::stoi(name.substr(caret + 1));
  return {{Rat(static_cast<long>(p)), y_power(j)}};
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw UsageError(msg);
}

void check_rost(unsigned long p, int n) {
  require(is_prime(p), "p must be prime");
  require(n >= 2, "n must be at least 2");
  require(ipow_ll(static_cast<long long>(p), n) < 100000, "parameters too large for exact enumeration");
}

}  // namespace

std::string rost_class(int i, int j) {
  std::string s = "c_" + std::to_string(i) + "(y";
  if (j > 1) s += "^" + std::to_string(j);
  return s + ")";
}

GradedRing chow_rost(unsigned long p, int n) {
  check_rost(p, n);
  const int yd = DegreeRule::y_degree(p, n);
  GradedFPModule m(p, 0, static_cast<int>(p - 1) * yd);
  m.add_generator(0, BasisLabel{"1", {0}, {-1}});
  for (int j = 1; j <= static_cast<int>(p) - 1; ++j)
    for (int i = 0; i < n; ++i) {
      const int d = DegreeRule::c_degree(p, j * yd, i);
      const std::size_t g = m.add_generator(d, BasisLabel{rost_class(i, j), {j}, {i}});
      if (i >= 1) m.add_relation(d, SparseVec{{g, Int(static_cast<long>(p))}});
    }
  auto table = std::make_shared<TableRule>();
  for (int a = 1; a <= static_cast<int>(p) - 1; ++a)
    for (int b = a; a + b <= static_cast<int>(p) - 1; ++b)
      table->set(rost_class(0, a), rost_class(0, b), {{Rat(static_cast<long>(p)), rost_class(0, a + b)}});
  return with_rule(std::move(m), table);
}

GradedRing bar_rost(unsigned long p, int n) {
  check_rost(p, n);
  const int yd = DegreeRule::y_degree(p, n);
  return presented_ring(p, {{"y", yd}}, {mono(1, {static_cast<int>(p)})}, static_cast<int>(p - 1) * yd);
}

GradedRing gr_m_rost(unsigned long p, int n, int m) {
  require(m >= 1, "m must be positive");
  GradedRing ch = chow_rost(p, n);
  if (m >= n) return ch;
  std::vector<Element> ideal;
  for (int j = 1; j <= static_cast<int>(p) - 1; ++j)
    for (int i = 1; i < n; ++i)
      if (i != m) ideal.push_back(ch.element(rost_class(i, j)));
  GradedRing q = ch.quotient_ideal(ideal);
  return GradedRing(prune_trivial(q.module()), q.rule());
}

KmPresentation km_rost(unsigned long p, int n, int m) {
  check_rost(p, n);
  require(m >= 1, "m must be positive");
  KmPresentation k;
  k.p = p;
  k.m = m;
  const int yd = DegreeRule::y_degree(p, n);
  k.generators.push_back({"1", 0});
  for (int j = 1; j <= static_cast<int>(p) - 1; ++j)
    for (int i = 0; i < n; ++i) k.generators.push_back({rost_class(i, j), DegreeRule::c_degree(p, j * yd, i)});
  const Int pp(static_cast<long>(p));
  for (int j = 1; j <= static_cast<int>(p) - 1; ++j)
    for (int i = 1; i < n; ++i) {
      const std::size_t g = k.find(rost_class(i, j));
      if (m >= n) {
        k.relations.push_back({{g, ZPoly{pp}}});
      } else if (i == m) {
        k.relations.push_back({{g, ZPoly{pp}}, {k.find(rost_class(0, j)), ZPoly{Int(0), Int(-1)}}});
      } else {
        k.relations.push_back({{g, ZPoly{pp}}});
        k.relations.push_back({{g, ZPoly{Int(0), Int(1)}}});
      }
    }
  return k;
}

KmPresentation km_bar_rost(unsigned long p, int n, int m) {
  check_rost(p, n);
  KmPresentation k;
  k.p = p;
  k.m = m;
  const int yd = DegreeRule::y_degree(p, n);
  for (int j = 0; j <= static_cast<int>(p) - 1; ++j) k.generators.push_back({y_power(j), j * yd});
  return k;
}

GradedRing product_rost(unsigned long p, int n) {
  return tensor_rings({std::make_shared<const GradedRing>(chow_rost(p, n)), std::make_shared<const GradedRing>(bar_rost(p, n))});
}

std::string quadric_u(int n, int i) {
  if (i == 0) return "h^" + std::to_string(pow2(n) - 1);
  return "u_" + std::to_string(i);
}

GradedRing pfister_neighbor_chow(int n) {
  require(n >= 2 && n <= 6, "n must be between 2 and 6 for quadrics");
  const int L = pow2(n) - 1;
  std::vector<RingVariable> vars{{"h", 1}};
  for (int i = 1; i < n; ++i) vars.push_back({"u_" + std::to_string(i), pow2(n) - pow2(i)});
  const std::size_t nv = vars.size();
  auto u = [&](int i) {
    std::vector<int> e(nv, 0);
    if (i == 0)
      e[0] = L;
    else
      e[static_cast<std::size_t>(i)] = 1;
    return e;
  };
  std::vector<IntPoly> rels;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      std::vector<int> e = u(i);
      const std::vector<int> f = u(j);
      for (std::size_t k = 0; k < nv; ++k) e[k] += f[k];
      rels.push_back(mono(1, e));
    }
  for (int k = 1; k < n; ++k) rels.push_back(mono(2, u(k)));
  return presented_ring(2, vars, rels, pow2(n + 1) - 1);
}

GradedRing pfister_neighbor_bar(int n) {
  require(n >= 2 && n <= 6, "n must be between 2 and 6 for quadrics");
  const int L = pow2(n) - 1;
  std::vector<RingVariable> vars{{"y", L}, {"h", 1}};
  IntPoly u0{{Int(1), {0, L}}, {Int(-2), {1, 0}}};
  return presented_ring(2, vars, {mono(1, {2, 0}), u0}, pow2(n + 1) - 1);
}

GradedRing gr_m_pfister(int n, int m) {
  require(m >= 1, "m must be positive");
  if (m >= n) return pfister_neighbor_chow(n);
  require(n >= 2 && n <= 6, "n must be between 2 and 6 for quadrics");
  const int L = pow2(n) - 1;
  std::vector<RingVariable> vars{{"h", 1}, {"u_" + std::to_string(m), pow2(n) - pow2(m)}};
  std::vector<IntPoly> rels{mono(1, {2 * L, 0}), mono(1, {L, 1}), mono(1, {0, 2}), mono(2, {0, 1})};
  return presented_ring(2, vars, rels, pow2(n + 1) - 1);
}

GradedRing excellent_quadric_chow(int n, int d, const std::vector<int>& di, const std::vector<int>& cdeg) {
  require(n >= 2 && n <= 6, "n must be between 2 and 6 for quadrics");
  require(d % 2 == 1 && d >= pow2(n) - 1 && d <= pow2(n + 1) - 2, "d must be odd with 2^n-1 <= d <= 2^(n+1)-2");
  require(di.size() == static_cast<std::size_t>(n - 1), "excellent quadric needs n-1 values d_i(d)");
  for (std::size_t i = 0; i < di.size(); ++i) {
    require(di[i] > 0, "d_i(d) must be positive");
    if (i > 0) require(di[i] <= di[i - 1], "d_i(d) must be non-increasing");
  }
  std::vector<int> degs = cdeg;
  if (degs.empty())
    for (int i = 1; i < n; ++i) degs.push_back(pow2(n) - pow2(i));
  require(degs.size() == static_cast<std::size_t>(n - 1), "excellent quadric needs n-1 class degrees");
  std::vector<RingVariable> vars{{"h", 1}};
  for (int i = 1; i < n; ++i) {
    require(degs[static_cast<std::size_t>(i - 1)] > 0, "class degrees must be positive");
    vars.push_back({"c_" + std::to_string(i), degs[static_cast<std::size_t>(i - 1)]});
  }
  const std::size_t nv = vars.size();
  std::vector<IntPoly> rels;
  std::vector<int> e(nv, 0);
  e[0] = d + 1;
  rels.push_back(mono(1, e));
  for (int i = 1; i < n; ++i) {
    std::vector<int> a(nv, 0);
    a[0] = di[static_cast<std::size_t>(i - 1)];
    a[static_cast<std::size_t>(i)] = 1;
    rels.push_back(mono(1, a));
    std::vector<int> b(nv, 0);
    b[static_cast<std::size_t>(i)] = 1;
    rels.push_back(mono(2, b));
    for (int j = i; j < n; ++j) {
      std::vector<int> c(nv, 0);
      c[static_cast<std::size_t>(i)] += 1;
      c[static_cast<std::size_t>(j)] += 1;
      rels.push_back(mono(1, c));
    }
  }
  return presented_ring(2, vars, rels, d);
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids{"chow_rost",        "bar_rost",      "omega_image_rost",
                                            "km_rost",          "gr_m_rost",     "product_rost",
                                            "pfister_neighbor_chow", "gr_m_pfister", "excellent_quadric_chow"};
  return ids;
}

std::shared_ptr<const GradedMap> restriction_map(const CatalogObject& obj) { return obj.res; }

CatalogObject catalog_build(const std::string& id, const CatalogParams& P) {
  CatalogObject obj;
  obj.id = id;
  const unsigned long p = P.p;
  auto rost_res_map = [p](std::shared_ptr<const GradedRing> src, std::shared_ptr<const GradedRing> dst) {
    return make_map(src, dst, [p](const std::string& name) { return rost_res(p, name); });
  };
  auto quadric_res_map = [](std::shared_ptr<const GradedRing> src, std::shared_ptr<const GradedRing> dst) {
    return make_map(src, dst, [](const std::string& name) -> std::vector<Term> {
      if (name == "1" || name.find('u') == std::string::npos) return {{Rat(1), name}};
      return {};
    });
  };
  auto quadric_prime = [&]() { require(p == 2, "quadric objects require p = 2"); };

  if (id == "chow_rost" || id == "bar_rost" || id == "omega_image_rost" || id == "km_rost" || id == "gr_m_rost" ||
      id == "product_rost") {
    check_rost(p, P.n);
    obj.params = {{"p", p}, {"n", P.n}};
    auto bar = std::make_shared<const GradedRing>(bar_rost(p, P.n));
    if (id == "chow_rost") {
      obj.ring = std::make_shared<const GradedRing>(chow_rost(p, P.n));
      obj.bar = bar;
      obj.res = rost_res_map(obj.ring, bar);
    } else if (id == "bar_rost") {
      obj.ring = bar;
    } else if (id == "omega_image_rost") {
      obj.omega = std::make_shared<const OmegaImageModel>(p, std::vector<int>{P.n});
      obj.ring = std::make_shared<const GradedRing>(chow_collapse(*obj.omega));
      obj.bar = bar;
      obj.res = rost_res_map(obj.ring, bar);
    } else if (id == "km_rost") {
      require(P.m >= 1, "m must be positive");
      obj.params["m"] = P.m;
      obj.km = km_rost(p, P.n, P.m);
      obj.ring = std::make_shared<const GradedRing>(chow_rost(p, P.n));
      obj.bar = bar;
      obj.res = rost_res_map(obj.ring, bar);
      obj.notes.push_back(P.m >= P.n ? "k_m* tensor CH (m >= n)" : "amalgam p c_m = v c_0 (m <= n-1)");
    } else if (id == "gr_m_rost") {
      require(P.m >= 1, "m must be positive");
      obj.params["m"] = P.m;
      obj.ring = std::make_shared<const GradedRing>(gr_m_rost(p, P.n, P.m));
      obj.bar = bar;
      obj.res = rost_res_map(obj.ring, bar);
    } else {
      auto ch = std::make_shared<const GradedRing>(chow_rost(p, P.n));
      obj.ring = std::make_shared<const GradedRing>(tensor_rings({ch, bar}));
      auto bar2 = std::make_shared<const GradedRing>(tensor_rings({bar, bar}));
      obj.bar = bar2;
      const GradedRing* src = obj.ring.get();
      std::map<std::string, std::vector<std::string>> tuple_of;
      for (const auto& [tuple, name] : src->factor_names()) tuple_of[name] = tuple;
      obj.res = make_map(obj.ring, bar2, [&, p](const std::string& name) -> std::vector<Term> {
        const auto& t = tuple_of.at(name);
        std::vector<Term> out;
        for (const auto& r : rost_res(p, t[0])) {
          auto it = bar2->factor_names().find({r.name, t[1]});
          if (it != bar2->factor_names().end()) out.push_back({r.coeff, it->second});
        }
        return out;
      });
    }
    return obj;
  }

  if (id == "pfister_neighbor_chow" || id == "gr_m_pfister") {
    quadric_prime();
    obj.params = {{"p", 2}, {"n", P.n}};
    auto bar = std::make_shared<const GradedRing>(pfister_neighbor_bar(P.n));
    if (id == "pfister_neighbor_chow") {
      obj.ring = std::make_shared<const GradedRing>(pfister_neighbor_chow(P.n));
    } else {
      require(P.m >= 1, "m must be positive");
      obj.params["m"] = P.m;
      obj.ring = std::make_shared<const GradedRing>(gr_m_pfister(P.n, P.m));
      obj.notes.push_back("relation 2u_m used where the printed list has 2u_m^2 (redundant given u_m^2 = 0)");
    }
    obj.bar = bar;
    obj.res = quadric_res_map(obj.ring, bar);
    return obj;
  }

  if (id == "excellent_quadric_chow") {
    quadric_prime();
    obj.params = {{"p", 2}, {"n", P.n}, {"d", P.d}, {"di", P.di}};
    obj.ring = std::make_shared<const GradedRing>(excellent_quadric_chow(P.n, P.d, P.di, P.cdeg));
    if (P.cdeg.empty())
      obj.notes.push_back("class degrees deg c_i(d) = 2^n - 2^i assumed (not given explicitly)");
    else
      obj.params["cdeg"] = P.cdeg;
    return obj;
  }

  throw UsageError("unknown object id: " + id);
}

}  // namespace rost
