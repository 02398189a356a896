#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rost/catalog.hpp"
#include "rost/omega_model.hpp"

using namespace rost;

namespace {

DegreeInvariants Z(int r = 1) { return DegreeInvariants{r, {}}; }
DegreeInvariants T(std::vector<int> e) { return DegreeInvariants{0, std::move(e)}; }

}  // namespace

TEST_CASE("degree rule") {
  CHECK(DegreeRule::y_degree(2, 2) == 3);
  CHECK(DegreeRule::y_degree(3, 2) == 4);
  CHECK(DegreeRule::y_degree(2, 4) == 15);
  CHECK(DegreeRule::v_degree(2, 1) == -1);
  CHECK(DegreeRule::v_degree(3, 2) == -8);
  CHECK(DegreeRule::v_degree(5, 0) == 0);
  CHECK(DegreeRule::c_degree(2, 7, 2) == 4);
}

TEST_CASE("collapsed image of one factor is the Chow ring") {
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (int n : {2, 3, 4}) {
      const OmegaImageModel model(p, {n});
      const GradedRing collapsed = chow_collapse(model);
      CAPTURE(p);
      CAPTURE(n);
      CHECK(iso_equal(collapsed.module(), chow_rost(p, n).module()).equal);
      CHECK(image_in_I_n(model));
      CHECK(res_injective(model));
    }
}

TEST_CASE("collapsed products follow c_0(y^a) c_0(y^b) = p c_0(y^(a+b))") {
  const GradedRing r = chow_collapse(OmegaImageModel(3, {2}));
  const Element prod = r.multiply(r.element("c_0(y)"), r.element("c_0(y)"));
  CHECK(r.to_string(prod) == "3*c_0(y^2)");
  CHECK(r.is_zero(r.multiply(r.element("c_1(y)"), r.element("c_0(y)"))));
  CHECK_FALSE(structure_table_json(r).empty());
}

TEST_CASE("two factors at p = 2") {
  // 1, c_1(y_t) twice, c_0(y_t) twice, then C_1, C_2/J_2, C_0.
  const NormalForm nf = normalize(prune_trivial(chow_collapse(OmegaImageModel(2, {2, 2})).module()));
  std::map<int, DegreeInvariants> expected{{0, Z()}, {2, T({1, 1})}, {3, Z(2)}, {4, T({1})}, {5, T({1})}, {6, Z()}};
  CHECK(nf.degrees == expected);
}

TEST_CASE("two factors at p = 3 count") {
  // Unit, two single-factor copies, then C_0, C_1 and C_2/J_2 of rank 4 each.
  const NormalForm nf = normalize(prune_trivial(chow_collapse(OmegaImageModel(3, {2, 2})).module()));
  const DegreeInvariants total = nf.total();
  CHECK(total.free == 1 + 4 + 4);
  CHECK(total.torsion == std::vector<int>(12, 1));
}

TEST_CASE("serial and parallel collapse agree") {
  for (unsigned long p : {2ul, 3ul}) {
    const OmegaImageModel model(p, {2, 2});
    const GradedRing a = chow_collapse(model, ExecPolicy::serial);
    const GradedRing b = chow_collapse(model, ExecPolicy::parallel);
    CHECK(structure_table_json(a) == structure_table_json(b));
    CHECK(normalize(a.module()) == normalize(b.module()));
  }
}

TEST_CASE("v_s c_r = v_r c_s in the image") {
  for (auto [p, n] : std::vector<std::pair<unsigned long, int>>{{2, 3}, {2, 4}, {3, 2}}) {
    const OmegaImageModel model(p, {n});
    for (int r = 0; r < n; ++r)
      for (int s = 0; s < n; ++s)
        for (int j = 1; j < static_cast<int>(p); ++j) {
          CHECK(check_lemma_3_2(model, r, s, j));
          CHECK_FALSE(check_lemma_3_2(model, r, s, j, 2));
        }
  }
  CHECK_THROWS(check_lemma_3_2(OmegaImageModel(2, {2}), 0, 2, 1));
}

TEST_CASE("ambient arithmetic") {
  const OmegaImageModel model(2, {2});
  const auto& y = model.generator("c_0(y)").res;
  CHECK(model.to_string(y) == "2*y");
  CHECK(model.multiply(y, y).empty());  // y^2 = 0 at p = 2
  const auto vy = model.times_v(1, model.generator("1").res);
  CHECK(model.degree(vy.begin()->first) == -1);
  CHECK(ambient_sub(y, y).empty());
  CHECK_THROWS(model.generator("c_5(y)"));
  CHECK_THROWS(OmegaImageModel(4, {2}));
}
