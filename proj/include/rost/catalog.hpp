#pragma once

#include "rost/graded_ring.hpp"
#include "rost/km_module.hpp"
#include "rost/omega_model.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rost {

struct CatalogParams {
  unsigned long p = 2;
  int n = 2;
  int m = 1;
  int s = 2;
  /// Quadric dimension (excellent quadrics).
  int d = 0;
  /// d_1(d) >= ... >= d_{n-1}(d) (excellent quadrics).
  std::vector<int> di;
  /// Chow degrees of c_1(d), ..., c_{n-1}(d); defaults to 2^n - 2^i.
  std::vector<int> cdeg;
};

struct CatalogObject {
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  std::shared_ptr<const GradedRing> ring;
  std::shared_ptr<const GradedRing> bar;
  std::shared_ptr<const GradedMap> res;
  std::optional<KmPresentation> km;
  std::shared_ptr<const OmegaImageModel> omega;
  std::vector<std::string> notes;

  const GradedFPModule& module() const { return ring->module(); }
};

const std::vector<std::string>& catalog_ids();

/// Builds a catalog object; throws UsageError on parameter-range violations.
CatalogObject catalog_build(const std::string& id, const CatalogParams& params);

// Direct constructors.

/// Name of c_i(y^j).
std::string rost_class(int i, int j);

/// CH*(R_n): 1, c_i(y^j) (0 <= i <= n-1, 1 <= j <= p-1), p c_i = 0 for i >= 1.
GradedRing chow_rost(unsigned long p, int n);
/// Z_(p)[y]/(y^p), deg y = (p^n - 1)/(p - 1).
GradedRing bar_rost(unsigned long p, int n);
/// CH*(R_n)/I(m), I(m) spanned by c_i(y^j) with i not in {0, m}; CH for m >= n.
GradedRing gr_m_rost(unsigned long p, int n, int m);
/// k_m*(R_n): k_m* ⊗ CH for m >= n, the amalgam p c_m = v c_0 otherwise.
KmPresentation km_rost(unsigned long p, int n, int m);
/// Free k_m*-model of K[y]/(y^p).
KmPresentation km_bar_rost(unsigned long p, int n, int m);
/// CH*(R_n) ⊗ Z_(p)[y_2]/(y_2^p).
GradedRing product_rost(unsigned long p, int n);

/// Maximal Pfister neighbor: Z_(2)[h, u_1..u_{n-1}]/(u_i u_j, 2 u_k), u_0 = h^(2^n - 1).
GradedRing pfister_neighbor_chow(int n);
/// Z_(2)[y, h]/(y^2, h^(2^n - 1) - 2y).
GradedRing pfister_neighbor_bar(int n);
/// Z_(2)[h, u_m]/(u_0^2, u_0 u_m, u_m^2, 2 u_m); the full Chow ring for m >= n.
GradedRing gr_m_pfister(int n, int m);
/// Z_(2)[h, c_1..c_{n-1}]/(h^(d+1), h^(d_i) c_i, 2 c_i, c_i c_j).
GradedRing excellent_quadric_chow(int n, int d, const std::vector<int>& di, const std::vector<int>& cdeg = {});

/// Names used for u_i in the quadric rings (u_0 is the monomial h^(2^n - 1)).
std::string quadric_u(int n, int i);

/// The restriction map of a built object (null when it has no bar object).
std::shared_ptr<const GradedMap> restriction_map(const CatalogObject& obj);

}  // namespace rost
