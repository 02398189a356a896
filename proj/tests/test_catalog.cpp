#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rost/catalog.hpp"
#include "rost/report.hpp"
#include "rost/torsion.hpp"

using namespace rost;

namespace {

DegreeInvariants Z(int r = 1) { return DegreeInvariants{r, {}}; }
DegreeInvariants T(std::vector<int> e) { return DegreeInvariants{0, std::move(e)}; }
DegreeInvariants ZT(int r, std::vector<int> e) { return DegreeInvariants{r, std::move(e)}; }

}  // namespace

TEST_CASE("Rost motive Chow rings") {
  CHECK(normalize(chow_rost(2, 2).module()).degrees == std::map<int, DegreeInvariants>{{0, Z()}, {2, T({1})}, {3, Z()}});
  CHECK(normalize(chow_rost(3, 2).module()).degrees ==
        std::map<int, DegreeInvariants>{{0, Z()}, {2, T({1})}, {4, Z()}, {6, T({1})}, {8, Z()}});
  // n = 3, p = 2: deg y = 7, c_1 in 6, c_2 in 4.
  CHECK(normalize(chow_rost(2, 3).module()).degrees ==
        std::map<int, DegreeInvariants>{{0, Z()}, {4, T({1})}, {6, T({1})}, {7, Z()}});
  CHECK(normalize(gr_m_rost(2, 3, 1).module()).degrees ==
        std::map<int, DegreeInvariants>{{0, Z()}, {6, T({1})}, {7, Z()}});
  CHECK(normalize(bar_rost(2, 3).module()).degrees == std::map<int, DegreeInvariants>{{0, Z()}, {7, Z()}});
  CHECK(rost_class(1, 2) == "c_1(y^2)");
}

TEST_CASE("Pfister neighbor rings") {
  CHECK(normalize(pfister_neighbor_chow(2).module()).degrees ==
        std::map<int, DegreeInvariants>{
            {0, Z()}, {1, Z()}, {2, ZT(1, {1})}, {3, ZT(1, {1})}, {4, ZT(1, {1})}, {5, Z()}});
  CHECK(quadric_u(3, 0) == "h^7");
  CHECK(quadric_u(3, 2) == "u_2");
  // Killing u_i for i != m leaves gr(m).
  for (int n : {2, 3, 4})
    for (int m = 1; m < n; ++m) {
      const GradedRing ch = pfister_neighbor_chow(n);
      std::vector<Element> ideal;
      for (int i = 1; i < n; ++i)
        if (i != m) ideal.push_back(ch.element(quadric_u(n, i)));
      CHECK(iso_equal(prune_trivial(ch.quotient_ideal(ideal).module()), gr_m_pfister(n, m).module()).equal);
    }
}

TEST_CASE("excellent quadric parameters") {
  const GradedRing q = excellent_quadric_chow(3, 9, {3, 1});
  CHECK(normalize(q.module()).at(9) == Z());
  CHECK_THROWS_AS(excellent_quadric_chow(3, 8, {3, 1}), UsageError);
  CHECK_THROWS_AS(excellent_quadric_chow(3, 9, {3}), UsageError);
  CHECK_THROWS_AS(excellent_quadric_chow(3, 9, {1, 3}), UsageError);
  CHECK_THROWS_AS(excellent_quadric_chow(3, 9, {3, 1}, {6}), UsageError);
}

TEST_CASE("catalog build") {
  CatalogParams P;
  for (const auto& id : catalog_ids()) {
    CatalogParams q = P;
    if (id == "excellent_quadric_chow") {
      q.n = 3;
      q.d = 9;
      q.di = {3, 1};
    }
    const CatalogObject obj = catalog_build(id, q);
    CHECK(obj.ring);
    if (obj.res) {
      std::string why;
      CHECK(obj.res->well_defined(&why));
    }
  }
  CHECK_THROWS_AS(catalog_build("nonsense", P), UsageError);
  CatalogParams bad = P;
  bad.p = 4;
  CHECK_THROWS_AS(catalog_build("chow_rost", bad), UsageError);
  bad.p = 3;
  CHECK_THROWS_AS(catalog_build("pfister_neighbor_chow", bad), UsageError);
  CHECK(catalog_build("km_rost", P).km.has_value());
  CHECK(iso_equal(catalog_build("omega_image_rost", P).module(), chow_rost(2, 2).module()).equal);
  const CatalogObject prod = catalog_build("product_rost", P);
  CHECK(iso_equal(prod.module(), tensor_product(chow_rost(2, 2).module(), bar_rost(2, 2).module())).equal);
}

TEST_CASE("torsion ideal equals the kernel of restriction") {
  CatalogParams P;
  for (unsigned long p : {2ul, 3ul})
    for (int n : {2, 3}) {
      P.p = p;
      P.n = n;
      const CatalogObject obj = catalog_build("chow_rost", P);
      const TorsionIdeal t = torsion_ideal(*obj.ring, obj.res.get());
      CHECK(t.matches_kernel);
      CHECK(t.elements.size() == static_cast<std::size_t>((p - 1) * static_cast<unsigned long>(n - 1)));
      CHECK_FALSE(ideal_power_witness(*obj.ring, t.ideal_generators, 2).has_value());
    }
  P.p = 2;
  for (int n : {2, 3, 4}) {
    P.n = n;
    const CatalogObject obj = catalog_build("pfister_neighbor_chow", P);
    const TorsionIdeal t = torsion_ideal(*obj.ring, obj.res.get());
    CHECK(t.matches_kernel);
    CHECK(t.ideal_generators.size() == static_cast<std::size_t>(n - 1));
    CHECK_FALSE(ideal_power_witness(*obj.ring, t.ideal_generators, 2).has_value());
  }
}

TEST_CASE("power witness finds nonzero products") {
  const GradedRing bar = bar_rost(3, 2);
  const std::vector<Element> gens{bar.element("y")};
  const auto w = ideal_power_witness(bar, gens, 2);
  REQUIRE(w.has_value());
  CHECK(bar.to_string(w->product) == "y^2");
  CHECK_FALSE(ideal_power_witness(bar, gens, 3).has_value());
  CHECK(in_span(bar.module(), 4, {bar.element("y")}, bar.element("y").scaled(Rat(3))));
}

TEST_CASE("tensor rings keep slot names") {
  const auto a = std::make_shared<const GradedRing>(chow_rost(2, 2));
  const GradedRing t = tensor_rings({a, a});
  CHECK(t.factor_count() == 2);
  CHECK(t.has("c_1(y_1)c_0(y_2)"));
  CHECK(slot_name("u_1", 2) == "(u_1)_2");
  CHECK(slot_name("y^2", 1) == "y_1^2");
  const Element x = t.embed(1, *a, a->element("c_0(y)"));
  const Element sq = t.multiply(x, x);
  CHECK(t.is_zero(sq));  // y^2 = 0 at p = 2
  const Element c = t.multiply(t.embed(0, *a, a->element("c_1(y)")), x);
  CHECK(t.to_string(c) == "c_1(y_1)c_0(y_2)");
}
