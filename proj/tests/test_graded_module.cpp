#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rost/graded_module.hpp"

#include <random>
#include <set>

using namespace rost;
using oracle::brute_slots;
using oracle::cyclic;

namespace {

GradedFPModule random_module(std::mt19937& rng, unsigned long p) {
  std::uniform_int_distribution<int> gens(0, 4), rels(0, 4), coef(-6, 6);
  GradedFPModule m(p, 0, 4);
  for (int d = 0; d <= 4; ++d) {
    const int ng = gens(rng);
    for (int i = 0; i < ng; ++i) m.add_generator(d, BasisLabel{"g" + std::to_string(d) + "_" + std::to_string(i), {}, {}});
    if (ng == 0) continue;
    std::uniform_int_distribution<std::size_t> pick(0, static_cast<std::size_t>(ng - 1));
    const int nr = rels(rng);
    for (int r = 0; r < nr; ++r) {
      std::map<std::size_t, Int> col;
      for (int t = 0; t < 2; ++t) col[pick(rng)] += coef(rng);
      SparseVec sv;
      for (auto& [i, c] : col)
        if (c != 0) sv.emplace_back(i, c);
      if (!sv.empty()) m.add_relation(d, sv);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("gr_ps matches brute force on cyclic groups") {
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (int e = 1; e <= 4; ++e)
      for (int s = 1; s <= 3; ++s) {
        const FiltrationGraded fg = gr_ps(cyclic(p, 3, e), s);
        const auto expected = brute_slots(p, e, s);
        CAPTURE(p);
        CAPTURE(e);
        CAPTURE(s);
        CHECK(fg.slots.at(3) == expected);
      }
}

TEST_CASE("gr_ps of a free summand and of degree zero") {
  const FiltrationGraded fg = gr_ps(cyclic(3, 2, 0), 2);
  const auto& sl = fg.slots.at(2);
  CHECK(sl.at(1) == DegreeInvariants{0, {1}});
  CHECK(sl.at(2) == DegreeInvariants{0, {1}});
  CHECK(sl.at(3) == DegreeInvariants{1, {}});
  const FiltrationGraded zero = gr_ps(cyclic(3, 0, 0), 2);
  CHECK(zero.slots.at(0).at(0) == DegreeInvariants{1, {}});
  CHECK_THROWS(gr_ps(cyclic(3, 0, 0), 0));
}

TEST_CASE("serial and parallel normalization agree") {
  std::mt19937 rng(42);
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (int t = 0; t < 30; ++t) {
      const GradedFPModule m = random_module(rng, p);
      CHECK(normalize(m, ExecPolicy::parallel) == normalize_serial(m));
      CHECK(normalize(m, ExecPolicy::serial) == normalize_serial(m));
    }
}

TEST_CASE("block decomposition does not change invariants") {
  // Two independent blocks in one degree.
  GradedFPModule m(2, 0, 0);
  for (int i = 0; i < 4; ++i) m.add_generator(0, BasisLabel{"x" + std::to_string(i), {}, {}});
  m.add_relation(0, SparseVec{{0, Int(2)}, {1, Int(4)}});
  m.add_relation(0, SparseVec{{2, Int(8)}});
  const DegreeInvariants inv = piece_invariants(m, 0);
  CHECK(inv.free == 2);
  CHECK(inv.torsion == std::vector<int>{1, 3});
}

TEST_CASE("tensor and direct sum of cyclic modules") {
  const GradedFPModule a = cyclic(2, 1, 2), b = cyclic(2, 2, 3);
  const NormalForm t = normalize(tensor_product(a, b));
  CHECK(t.at(3) == DegreeInvariants{0, {2}});
  const NormalForm s = normalize(direct_sum(a, b));
  CHECK(s.at(1) == DegreeInvariants{0, {2}});
  CHECK(s.at(2) == DegreeInvariants{0, {3}});
  const NormalForm free = normalize(tensor_product(cyclic(3, 1, 0), cyclic(3, 1, 1)));
  CHECK(free.at(2) == DegreeInvariants{0, {1}});
}

TEST_CASE("quotient, prune and element order") {
  GradedFPModule m(3, 0, 5);
  const std::size_t x = m.add_generator(2, BasisLabel{"x", {}, {}});
  const std::size_t y = m.add_generator(2, BasisLabel{"y", {}, {}});
  m.add_relation(2, SparseVec{{x, Int(9)}});
  const Element ex{2, {{x, Rat(1)}}};
  CHECK(order_exponent(m, ex) == 2);
  CHECK_FALSE(order_exponent(m, Element{2, {{y, Rat(1)}}}).has_value());
  CHECK(is_zero(m, ex.scaled(Rat(9))));
  CHECK_FALSE(is_zero(m, ex.scaled(Rat(3))));

  const Element kill{2, {{y, Rat(1)}}};
  const GradedFPModule q = quotient(m, std::span<const Element>(&kill, 1));
  const GradedFPModule pruned = prune_trivial(q);
  CHECK(normalize(pruned) == normalize(q));
  CHECK(pruned.generator_count(2) == 1);
  CHECK(pruned.find("x").has_value());

  const Element outside{7, {{0, Rat(1)}}};
  CHECK_THROWS_AS(quotient(m, std::span<const Element>(&outside, 1)), std::out_of_range);
}

TEST_CASE("iso_equal reports the differing degree") {
  const IsoReport same = iso_equal(cyclic(2, 1, 1), cyclic(2, 1, 1));
  CHECK(same.equal);
  const IsoReport diff = iso_equal(cyclic(2, 1, 1), cyclic(2, 1, 2));
  CHECK_FALSE(diff.equal);
  CHECK(diff.differing == std::vector<int>{1});
}

TEST_CASE("normal form json round trip") {
  std::mt19937 rng(8);
  for (int t = 0; t < 10; ++t) {
    const NormalForm nf = normalize(random_module(rng, 3));
    const nlohmann::json j = nf;
    CHECK(j.get<NormalForm>() == nf);
    CHECK(nlohmann::json::parse(j.dump()).get<NormalForm>() == nf);
  }
}

TEST_CASE("graded map checks") {
  auto src = std::make_shared<GradedFPModule>(cyclic(2, 1, 1));
  auto dst = std::make_shared<GradedFPModule>(cyclic(2, 1, 0));
  GradedMap zero(src, dst);
  CHECK(zero.well_defined());
  CHECK(zero.killed_generators().size() == 1);
  GradedMap bad(src, dst);
  bad.set_image(1, 0, Element{1, {{0, Rat(1)}}});
  std::string why;
  CHECK_FALSE(bad.well_defined(&why));
  CHECK_FALSE(why.empty());
  CHECK_THROWS(bad.set_image(1, 0, Element{2, {{0, Rat(1)}}}));

  auto a = std::make_shared<GradedFPModule>(cyclic(2, 1, 0));
  auto b = std::make_shared<GradedFPModule>(cyclic(2, 1, 0));
  GradedMap times2(a, b);
  times2.set_image(1, 0, Element{1, {{0, Rat(2)}}});
  CHECK(times2.well_defined());
  CHECK(times2.injective());
  CHECK(times2.killed_generators().empty());
}

TEST_CASE("truncation keeps the window") {
  GradedFPModule m(2, 0, 6);
  for (int d = 0; d <= 6; ++d) m.add_generator(d, BasisLabel{"g" + std::to_string(d), {}, {}});
  const GradedFPModule t = truncate(m, 2, 4);
  CHECK(normalize(t).degrees.size() == 3);
  CHECK(t.in_window(3));
  CHECK_FALSE(t.in_window(5));
}
