#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rost/catalog.hpp"
#include "rost/km_module.hpp"

#include <set>

using namespace rost;

TEST_CASE("base change v -> 0 recovers the Chow ring") {
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (int n : {2, 3, 4})
      for (int m = 1; m <= n; ++m) {
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(m);
        CHECK(iso_equal(to_chow(km_rost(p, n, m)), chow_rost(p, n).module()).equal);
      }
}

TEST_CASE("geometric quotient is gr(m)") {
  for (int n : {2, 3, 4})
    for (int m = 1; m < n; ++m) {
      const KmPresentation k = km_rost(2, n, m);
      CHECK(iso_equal(gr_geometric(k), gr_m_rost(2, n, m).module()).equal);
      const GradedFPModule ch = to_chow(k);
      std::set<std::string> killed;
      for (const auto& e : v_torsion_classes(k)) {
        REQUIRE(e.coeffs.size() == 1);
        killed.insert(ch.label(e.degree, e.coeffs.begin()->first).name);
      }
      std::set<std::string> expected;
      for (int i = 1; i < n; ++i)
        if (i != m) expected.insert(rost_class(i, 1));
      CHECK(killed == expected);
    }
  for (unsigned long p : {2ul, 3ul, 5ul}) CHECK(v_torsion_classes(km_rost(p, 2, 1)).empty());
}

TEST_CASE("for m >= n nothing is v-torsion") {
  const KmPresentation k = km_rost(3, 2, 2);
  CHECK(v_torsion_classes(k).empty());
  CHECK(iso_equal(gr_geometric(k), chow_rost(3, 2).module()).equal);
}

TEST_CASE("localization") {
  for (unsigned long p : {2ul, 3ul})
    for (int n : {2, 3}) {
      const KmLocalizedInvariants inv = localize_v(km_rost(p, n, 1));
      // 1 and c_1(y^j) survive; the other c_i are v-torsion and c_0 = p c_1 / v.
      CHECK(inv.aggregate == DegreeInvariants{static_cast<int>(p), {}});
      CHECK(inv.laurent_consistent);
      CHECK(inv.period == static_cast<int>(p) - 1);
    }
  const KmLocalizedInvariants bar = localize_v(km_bar_rost(3, 2, 1));
  CHECK(bar.aggregate == DegreeInvariants{3, {}});
}

TEST_CASE("constant presentations localize to their invariants") {
  const KmLocalizedInvariants inv = localize_v(from_module(chow_rost(2, 2).module(), 1));
  CHECK(inv.aggregate == DegreeInvariants{2, {1}});
}

TEST_CASE("second display of the geometric comparison") {
  for (int n : {2, 3})
    for (int m = 1; m < n; ++m) {
      const TheoremReport rep = check_cor_3_5_second(km_rost(2, n, m), km_bar_rost(2, n, m));
      CHECK(rep.verdict == Verdict::verified);
    }
  CHECK_THROWS(check_cor_3_5_second(km_bar_rost(2, 2, 1), km_bar_rost(2, 2, 1)));
}

TEST_CASE("presentation checks and json") {
  KmPresentation k = km_rost(2, 3, 1);
  const nlohmann::json j = k;
  CHECK(j.get<KmPresentation>() == k);
  CHECK(k.period() == 1);
  CHECK(km_rost(3, 3, 2).period() == 8);
  CHECK_THROWS(k.find("c_9(y)"));
  KmPresentation bad = k;
  bad.relations.push_back({{0, ZPoly{Int(1)}}, {1, ZPoly{Int(1)}}});
  CHECK_THROWS(bad.validate());
  KmPresentation narrow = k;
  narrow.window_low = 100;
  CHECK_THROWS_AS(localize_v(narrow), std::range_error);
}

TEST_CASE("degree pieces") {
  const KmPresentation k = km_rost(2, 2, 1);
  // Degree 2: c_1(y) and v c_0(y), tied by 2 c_1 = v c_0.
  const GradedFPModule piece = degree_piece(k, 2);
  CHECK(piece_invariants(piece, 2) == DegreeInvariants{1, {}});
  const GradedFPModule low = degree_piece(k, -5);
  CHECK(piece_invariants(low, -5) == DegreeInvariants{2, {}});
}
