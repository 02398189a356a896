// One line per acceptance criterion; exit status is the number of failures.
#include "oracles.hpp"
#include "rost/catalog.hpp"
#include "rost/km_module.hpp"
#include "rost/kunneth.hpp"
#include "rost/omega_model.hpp"
#include "rost/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace rost;

namespace {

// Pinned limits. All comparisons are exact.
constexpr double kTwoFactorSeconds = 10.0;
constexpr double kThreeFactorSeconds = 30.0;
constexpr int kRandomMatrices = 200;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      pass = false;
      detail << what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::map<int, DegreeInvariants> slots_of(const nlohmann::json& side) {
  std::map<int, DegreeInvariants> out;
  for (const auto& [k, v] : side.at("slots").items()) out[std::stoi(k)] = v.get<DegreeInvariants>();
  return out;
}

std::map<int, DegreeInvariants> pattern(unsigned long p, int s) {
  const auto r = static_cast<int>(ipow_ll(static_cast<long long>(p) - 1, s));
  std::map<int, DegreeInvariants> out;
  for (int k = 1; k <= s; ++k) out[k] = DegreeInvariants{0, std::vector<int>(static_cast<std::size_t>(r), 1)};
  out[s + 1] = DegreeInvariants{r, {}};
  return out;
}

std::string tag(const std::string& id, const nlohmann::json& params) { return id + " " + params.dump(); }

Outcome rost_slot_suite() {
  Outcome o;
  double worst = 0;
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    VerifyParams P;
    P.p = p;
    const auto t0 = std::chrono::steady_clock::now();
    const TheoremReport r = verify_theorem("thm-1.1", P);
    const double dt = seconds_since(t0);
    worst = std::max(worst, dt);
    o.expect(r.verdict == Verdict::verified, tag(r.id, r.params) + " not verified");
    o.expect(slots_of(r.left) == slots_of(r.right), "slot invariants differ at p=" + std::to_string(p));
    o.expect(r.left.at("normal_form") == r.right.at("normal_form"), "normal forms differ at p=" + std::to_string(p));
    o.expect(dt < kTwoFactorSeconds, "p=" + std::to_string(p) + " took " + std::to_string(dt) + " s");
    if (p == 2) {
      const NormalForm nf = r.left.at("normal_form").get<NormalForm>();
      const std::map<int, DegreeInvariants> table{{0, {1, {}}}, {2, {0, {1, 1}}}, {3, {2, {}}},
                                                  {4, {0, {1}}}, {5, {0, {1}}},    {6, {1, {}}}};
      o.expect(nf.degrees == table, "p=2 degree table differs from {0:Z,2:(Z/2)^2,3:Z^2,4:Z/2,5:Z/2,6:Z}");
    }
  }
  o.detail << (o.pass ? "" : "; ") << "p in {2,3,5}, slowest " << worst << " s";
  return o;
}

Outcome kunneth_quotient_suite() {
  Outcome o;
  for (auto [p, n1, n2, m] : std::vector<std::tuple<unsigned long, int, int, int>>{
           {2, 2, 2, 1}, {2, 3, 3, 1}, {2, 3, 3, 2}, {3, 2, 2, 1}, {5, 2, 2, 1}}) {
    VerifyParams P;
    P.p = p;
    P.n1 = n1;
    P.n2 = n2;
    P.m = m;
    const TheoremReport r = verify_theorem("lemma-4.1", P);
    o.expect(r.verdict == Verdict::verified, tag(r.id, r.params) + " not verified");
    o.expect(slots_of(r.left) == pattern(p, 2) && slots_of(r.right) == pattern(p, 2),
             tag(r.id, r.params) + " slot ranks differ from (Z/p)^((p-1)^2), (Z/p)^((p-1)^2), Z^((p-1)^2)");
  }
  o.detail << (o.pass ? "" : "; ") << "5 parameter tuples";
  return o;
}

Outcome s3_suite() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const std::string id : {"thm-6.9", "cor-7.3"}) {
    VerifyParams P;
    P.p = 2;
    P.m = 1;
    P.s = 3;
    const TheoremReport r = verify_theorem(id, P);
    o.expect(r.verdict == Verdict::verified, tag(r.id, r.params) + " not verified");
    const std::map<int, DegreeInvariants> ones{{1, {0, {1}}}, {2, {0, {1}}}, {3, {0, {1}}}, {4, {1, {}}}};
    o.expect(slots_of(r.left) == ones && slots_of(r.right) == ones, id + " slots are not 1,1,1,1");
  }
  const double dt = seconds_since(t0);
  o.expect(dt < kThreeFactorSeconds, "took " + std::to_string(dt) + " s");
  o.detail << (o.pass ? "" : "; ") << "s=3, p=2, m=1 in " << dt << " s";
  return o;
}

Outcome geometric_suite() {
  Outcome o;
  int runs = 0;
  for (int n : {2, 3, 4})
    for (int m = 1; m < n; ++m) {
      VerifyParams P;
      P.n = n;
      P.m = m;
      const TheoremReport r = verify_theorem("cor-3.5", P);
      o.expect(r.verdict == Verdict::verified, tag(r.id, r.params) + " not verified");
      o.expect(iso_equal(gr_geometric(km_rost(2, n, m)), gr_m_rost(2, n, m).module()).equal,
               "gr_geometric differs at n=" + std::to_string(n) + " m=" + std::to_string(m));
      ++runs;
    }
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    VerifyParams P;
    P.p = p;
    const TheoremReport r = verify_theorem("cor-3.6", P);
    o.expect(r.verdict == Verdict::verified, tag(r.id, r.params) + " not verified");
    o.expect(v_torsion_classes(km_rost(p, 2, 1)).empty(), "I(1) nonzero at p=" + std::to_string(p));
    ++runs;
  }
  o.detail << (o.pass ? "" : "; ") << runs << " cases";
  return o;
}

Outcome torsion_suite() {
  Outcome o;
  for (int n : {2, 3, 4}) {
    VerifyParams P;
    P.n = n;
    const TheoremReport r = verify_theorem("thm-5.5-torsion-square", P);
    o.expect(r.verdict == Verdict::verified, tag(r.id, r.params) + " not verified");
  }
  {
    VerifyParams P;
    P.n = 3;
    P.d = 9;
    P.di = {3, 1};
    const TheoremReport r = verify_theorem("thm-5.7-torsion-square", P);
    o.expect(r.verdict == Verdict::verified, tag(r.id, r.params) + " not verified");
  }
  int witnesses = 0;
  for (const std::string family : {"rost", "quadric"})
    for (int s : {2, 3}) {
      VerifyParams P;
      P.family = family;
      P.s = s;
      P.m = 1;
      const TheoremReport r = verify_theorem("cor-1.3", P);
      o.expect(r.verdict == Verdict::verified, tag(r.id, r.params) + " not verified");
      o.expect(r.left.at("nonzero") == true && r.left.at("p_torsion") == true,
               tag(r.id, r.params) + " witness is zero or not p-torsion");
      ++witnesses;
    }
  o.detail << (o.pass ? "" : "; ") << "T^2 = 0 on 4 quadrics, " << witnesses << " nonzero p-torsion witnesses";
  return o;
}

Outcome negative_control() {
  Outcome o;
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    VerifyParams P;
    P.p = p;
    const TheoremReport r = verify_theorem("remark-4.2-negative", P);
    o.expect(r.verdict == Verdict::verified, tag(r.id, r.params) + " not verified");
    o.expect(!r.witnesses.empty(), "no kernel element at p=" + std::to_string(p));
    const int yd = DegreeRule::y_degree(p, 2);
    o.expect(!star_star_check(product_image(p), p, 1, {yd, yd}).all(), "(**) holds on the product image");
    P.image = "product";
    o.expect(verify_theorem("lemma-7.2", P).verdict != Verdict::verified, "lemma-7.2 accepts the product image");
  }
  o.detail << (o.pass ? "" : "; ") << "product motive: kernel found and (**) fails for p in {2,3,5}";
  return o;
}

Outcome oracle_suite() {
  Outcome o;
  std::mt19937 rng(314159);
  int matrices = 0;
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (int t = 0; t < (kRandomMatrices + 2) / 3; ++t) {
      const PLocalMatrix m = oracle::random_matrix(rng, p, 5, 9);
      const auto ref = oracle::minor_oracle(m);
      const SnfResult snf = snf_p_local(m);
      o.expect(snf.rank == ref.rank && snf.exponents == ref.exponents, "Smith form differs from gcd of minors");
      ++matrices;
    }
  int groups = 0;
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (int e = 1; e <= 4; ++e)
      for (int s = 1; s <= 3; ++s) {
        const FiltrationGraded fg = gr_ps(oracle::cyclic(p, 1, e), s);
        o.expect(fg.slots.at(1) == oracle::brute_slots(p, e, s), "gr_ps differs on Z/p^e");
        ++groups;
      }
  o.detail << (o.pass ? "" : "; ") << matrices << " random matrices, " << groups << " cyclic filtrations";
  return o;
}

Outcome consistency_suite() {
  Outcome o;
  int cases = 0;
  for (unsigned long p : {2ul, 3ul, 5ul})
    for (int n : {2, 3, 4}) {
      const GradedFPModule ch = chow_rost(p, n).module();
      o.expect(iso_equal(chow_collapse(OmegaImageModel(p, {n})).module(), ch).equal,
               "collapse differs at p=" + std::to_string(p) + " n=" + std::to_string(n));
      for (int m = 1; m <= n; ++m)
        o.expect(iso_equal(to_chow(km_rost(p, n, m)), ch).equal, "to_chow differs at p=" + std::to_string(p));
      ++cases;
    }
  for (auto [p, n] : std::vector<std::pair<unsigned long, int>>{{2, 3}, {2, 4}, {3, 2}}) {
    VerifyParams P;
    P.p = p;
    P.n = n;
    o.expect(verify_theorem("lemma-3.2", P).verdict == Verdict::verified, "v_s c_r = v_r c_s fails");
  }
  o.detail << (o.pass ? "" : "; ") << cases << " (p, n) pairs, identity at 3 (p, n) pairs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Rost tensor slot isomorphism", rost_slot_suite},
      {"two-factor Kunneth quotient slots", kunneth_quotient_suite},
      {"three-factor slots", s3_suite},
      {"geometric gr and v-torsion", geometric_suite},
      {"torsion powers", torsion_suite},
      {"negative control", negative_control},
      {"oracle equivalence", oracle_suite},
      {"cross-construction consistency", consistency_suite},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL") << " ["
              << o.detail.str() << "]\n";
  }
  return failures;
}
