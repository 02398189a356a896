#include "rost/graded_module.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rost {

Element& Element::operator+=(const Element& o) {
  for (const auto& [i, c] : o.coeffs) {
    Rat& slot = coeffs[i];
    slot += c;
    if (slot == 0) coeffs.erase(i);
  }
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [i, c] : o.coeffs) {
    Rat& slot = coeffs[i];
    slot -= c;
    if (slot == 0) coeffs.erase(i);
  }
  return *this;
}

Element Element::scaled(const Rat& k) const {
  Element out{degree, {}};
  if (k == 0) return out;
  for (const auto& [i, c] : coeffs) out.coeffs[i] = c * k;
  return out;
}

GradedFPModule::GradedFPModule(unsigned long p, int low, int high) : p_(p), low_(low), high_(high) {
  if (!is_prime(p)) throw std::invalid_argument("GradedFPModule: p must be prime");
  if (low > high) throw std::invalid_argument("GradedFPModule: empty window");
}

std::size_t GradedFPModule::add_generator(int degree, BasisLabel label) {
  if (!in_window(degree)) throw std::out_of_range("generator degree outside window");
  auto& piece = pieces_[degree];
  piece.generators.push_back(std::move(label));
  return piece.generators.size() - 1;
}

void GradedFPModule::add_relation(int degree, SparseVec relation) {
  if (!in_window(degree)) throw std::out_of_range("relation degree outside window");
  auto it = pieces_.find(degree);
  const std::size_t n = it == pieces_.end() ? 0 : it->second.generators.size();
  SparseVec clean;
  for (auto& [i, c] : relation) {
    if (i >= n) throw std::out_of_range("relation references unknown generator");
    if (c != 0) clean.emplace_back(i, std::move(c));
  }
  if (clean.empty()) return;
  std::sort(clean.begin(), clean.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  it->second.relations.push_back(std::move(clean));
}

std::vector<Int> integral_column(const Element& e, std::size_t length, unsigned long p) {
  Int l = 1;
  for (const auto& [i, c] : e.coeffs) {
    if (!is_p_integral(c, p)) throw std::invalid_argument("element is not p-integral");
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Int> col(length);
  for (const auto& [i, c] : e.coeffs) {
    if (i >= length) throw std::out_of_range("element references unknown generator");
    Rat x = c * Rat(l);
    col[i] = x.get_num();
  }
  return col;
}

void GradedFPModule::add_relation(const Element& e) {
  if (!in_window(e.degree)) throw std::out_of_range("generator degree outside window");
  const std::size_t n = generator_count(e.degree);
  const std::vector<Int> col = integral_column(e, n, p_);
  SparseVec rel;
  for (std::size_t i = 0; i < n; ++i)
    if (col[i] != 0) rel.emplace_back(i, col[i]);
  add_relation(e.degree, std::move(rel));
}

const DegreePiece* GradedFPModule::piece(int degree) const {
  auto it = pieces_.find(degree);
  return it == pieces_.end() ? nullptr : &it->second;
}

std::size_t GradedFPModule::generator_count(int degree) const {
  const auto* pc = piece(degree);
  return pc ? pc->generators.size() : 0;
}

std::size_t GradedFPModule::total_generators() const {
  std::size_t n = 0;
  for (const auto& [d, pc] : pieces_) n += pc.generators.size();
  return n;
}

PLocalMatrix GradedFPModule::relation_matrix(int degree) const {
  const auto* pc = piece(degree);
  if (!pc) return PLocalMatrix(0, 0, p_);
  PLocalMatrix m(pc->generators.size(), pc->relations.size(), p_);
  for (std::size_t j = 0; j < pc->relations.size(); ++j)
    for (const auto& [i, c] : pc->relations[j]) m(i, j) = c;
  return m;
}

std::optional<std::pair<int, std::size_t>> GradedFPModule::find(const std::string& name) const {
  for (const auto& [d, pc] : pieces_)
    for (std::size_t i = 0; i < pc.generators.size(); ++i)
      if (pc.generators[i].name == name) return std::make_pair(d, i);
  return std::nullopt;
}

const BasisLabel& GradedFPModule::label(int degree, std::size_t idx) const {
  const auto* pc = piece(degree);
  if (!pc || idx >= pc->generators.size()) throw std::out_of_range("no such generator");
  return pc->generators[idx];
}

// ---------------------------------------------------------------------------

DegreeInvariants& DegreeInvariants::operator+=(const DegreeInvariants& o) {
  free += o.free;
  torsion.insert(torsion.end(), o.torsion.begin(), o.torsion.end());
  std::sort(torsion.begin(), torsion.end());
  return *this;
}

std::string DegreeInvariants::to_string(unsigned long p) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free) {
    os << "Z";
    if (free > 1) os << "^" << free;
    first = false;
  }
  std::map<int, int> counts;
  for (int e : torsion) ++counts[e];
  for (const auto& [e, k] : counts) {
    if (!first) os << " + ";
    first = false;
    os << "(Z/" << p;
    if (e > 1) os << "^" << e;
    os << ")";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

DegreeInvariants NormalForm::at(int degree) const {
  auto it = degrees.find(degree);
  return it == degrees.end() ? DegreeInvariants{} : it->second;
}

DegreeInvariants NormalForm::total() const {
  DegreeInvariants t;
  for (const auto& [d, inv] : degrees) t += inv;
  return t;
}

void to_json(nlohmann::json& j, const DegreeInvariants& d) {
  j = nlohmann::json{{"free", d.free}, {"torsion", d.torsion}};
}

void from_json(const nlohmann::json& j, DegreeInvariants& d) {
  d.free = j.value("free", 0);
  d.torsion = j.value("torsion", std::vector<int>{});
  std::sort(d.torsion.begin(), d.torsion.end());
}

void to_json(nlohmann::json& j, const NormalForm& nf) {
  nlohmann::json degs = nlohmann::json::object();
  for (const auto& [d, inv] : nf.degrees) degs[std::to_string(d)] = inv;
  j = nlohmann::json{{"p", nf.p}, {"degrees", degs}};
}

void from_json(const nlohmann::json& j, NormalForm& nf) {
  nf.p = j.at("p").get<unsigned long>();
  nf.degrees.clear();
  for (const auto& [k, v] : j.at("degrees").items()) {
    DegreeInvariants inv = v.get<DegreeInvariants>();
    if (!inv.is_zero()) nf.degrees[std::stoi(k)] = inv;
  }
}

// ---------------------------------------------------------------------------
// Block decomposition and normalization.

namespace {

struct Block {
  int degree = 0;
  std::vector<std::size_t> gens;
  std::vector<std::size_t> rels;
};

std::size_t uf_find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::vector<Block> blocks_of(int degree, const DegreePiece& pc) {
  const std::size_t n = pc.generators.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& rel : pc.relations)
    for (std::size_t k = 1; k < rel.size(); ++k) {
      const std::size_t a = uf_find(parent, rel[0].first), b = uf_find(parent, rel[k].first);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::size_t> root_to_block;
  std::vector<Block> blocks;
  for (std::size_t g = 0; g < n; ++g) {
    const std::size_t root = uf_find(parent, g);
    auto [it, fresh] = root_to_block.try_emplace(root, blocks.size());
    if (fresh) blocks.push_back(Block{degree, {}, {}});
    blocks[it->second].gens.push_back(g);
  }
  for (std::size_t r = 0; r < pc.relations.size(); ++r) {
    if (pc.relations[r].empty()) continue;
    blocks[root_to_block[uf_find(parent, pc.relations[r][0].first)]].rels.push_back(r);
  }
  return blocks;
}

PLocalMatrix block_matrix(const DegreePiece& pc, const Block& b, unsigned long p) {
  std::map<std::size_t, std::size_t> local;
  for (std::size_t k = 0; k < b.gens.size(); ++k) local[b.gens[k]] = k;
  PLocalMatrix m(b.gens.size(), b.rels.size(), p);
  for (std::size_t j = 0; j < b.rels.size(); ++j)
    for (const auto& [i, c] : pc.relations[b.rels[j]]) m(local.at(i), j) = c;
  return m;
}

DegreeInvariants block_invariants(const DegreePiece& pc, const Block& b, unsigned long p) {
  DegreeInvariants inv;
  if (b.rels.empty()) {
    inv.free = static_cast<int>(b.gens.size());
    return inv;
  }
  const std::vector<int> ex = snf_exponents(block_matrix(pc, b, p));
  inv.free = static_cast<int>(b.gens.size() - ex.size());
  for (int e : ex)
    if (e > 0) inv.torsion.push_back(e);
  return inv;
}

NormalForm assemble(const GradedFPModule& m, const std::vector<Block>& blocks, const std::vector<DegreeInvariants>& invs) {
  NormalForm nf;
  nf.p = m.prime();
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (invs[k].is_zero()) continue;
    nf.degrees[blocks[k].degree] += invs[k];
  }
  return nf;
}

std::vector<Block> all_blocks(const GradedFPModule& m) {
  std::vector<Block> blocks;
  for (const auto& [d, pc] : m.pieces()) {
    auto bs = blocks_of(d, pc);
    blocks.insert(blocks.end(), std::make_move_iterator(bs.begin()), std::make_move_iterator(bs.end()));
  }
  return blocks;
}

}  // namespace

NormalForm normalize_serial(const GradedFPModule& m) {
  const std::vector<Block> blocks = all_blocks(m);
  std::vector<DegreeInvariants> invs(blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k)
    invs[k] = block_invariants(*m.piece(blocks[k].degree), blocks[k], m.prime());
  return assemble(m, blocks, invs);
}

NormalForm normalize(const GradedFPModule& m, ExecPolicy policy) {
  if (policy == ExecPolicy::serial) return normalize_serial(m);
  const std::vector<Block> blocks = all_blocks(m);
  std::vector<DegreeInvariants> invs(blocks.size());
  const long nb = static_cast<long>(blocks.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long k = 0; k < nb; ++k)
    invs[static_cast<std::size_t>(k)] =
        block_invariants(*m.piece(blocks[static_cast<std::size_t>(k)].degree), blocks[static_cast<std::size_t>(k)], m.prime());
  return assemble(m, blocks, invs);
}

DegreeInvariants piece_invariants(const GradedFPModule& m, int degree) {
  const auto* pc = m.piece(degree);
  DegreeInvariants inv;
  if (!pc) return inv;
  for (const auto& b : blocks_of(degree, *pc)) inv += block_invariants(*pc, b, m.prime());
  return inv;
}

bool is_zero(const GradedFPModule& m, const Element& e) {
  if (e.empty() || !m.in_window(e.degree)) return true;
  const auto* pc = m.piece(e.degree);
  if (!pc) return true;
  const std::vector<Int> col = integral_column(e, pc->generators.size(), m.prime());
  for (const auto& b : blocks_of(e.degree, *pc)) {
    std::vector<Rat> rhs;
    bool touched = false;
    for (std::size_t g : b.gens) {
      rhs.emplace_back(col[g]);
      if (col[g] != 0) touched = true;
    }
    if (!touched) continue;
    if (b.rels.empty()) return false;
    if (!membership(block_matrix(*pc, b, m.prime()), std::span<const Rat>(rhs))) return false;
  }
  return true;
}

std::optional<int> order_exponent(const GradedFPModule& m, const Element& e) {
  if (is_zero(m, e)) return 0;
  const auto* pc = m.piece(e.degree);
  int bound = 0;
  for (const auto& b : blocks_of(e.degree, *pc)) {
    const auto inv = block_invariants(*pc, b, m.prime());
    if (!inv.torsion.empty()) bound = std::max(bound, inv.torsion.back());
  }
  Rat scale = 1;
  for (int k = 1; k <= bound; ++k) {
    scale *= static_cast<long>(m.prime());
    if (is_zero(m, e.scaled(scale))) return k;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

GradedFPModule direct_sum(const GradedFPModule& a, const GradedFPModule& b) {
  if (a.prime() != b.prime()) throw std::invalid_argument("direct_sum: mismatched primes");
  GradedFPModule out(a.prime(), std::min(a.low(), b.low()), std::max(a.high(), b.high()));
  for (const auto* src : {&a, &b})
    for (const auto& [d, pc] : src->pieces()) {
      const std::size_t offset = out.generator_count(d);
      for (const auto& g : pc.generators) out.add_generator(d, g);
      for (const auto& rel : pc.relations) {
        SparseVec shifted;
        for (const auto& [i, c] : rel) shifted.emplace_back(i + offset, c);
        out.add_relation(d, std::move(shifted));
      }
    }
  return out;
}

namespace {

BasisLabel combine_labels(const BasisLabel& a, const BasisLabel& b) {
  BasisLabel out;
  if (a.name == "1")
    out.name = b.name;
  else if (b.name == "1")
    out.name = a.name;
  else
    out.name = a.name + b.name;
  out.exponents = a.exponents;
  out.exponents.insert(out.exponents.end(), b.exponents.begin(), b.exponents.end());
  out.indices = a.indices;
  out.indices.insert(out.indices.end(), b.indices.begin(), b.indices.end());
  return out;
}

}  // namespace

GradedFPModule tensor_product(const GradedFPModule& a, const GradedFPModule& b, TensorIndex* index) {
  if (a.prime() != b.prime()) throw std::invalid_argument("tensor_product: mismatched primes");
  GradedFPModule out(a.prime(), a.low() + b.low(), a.high() + b.high());
  for (const auto& [da, pa] : a.pieces())
    for (const auto& [db, pb] : b.pieces()) {
      const int d = da + db;
      const std::size_t offset = out.generator_count(d);
      const std::size_t nb = pb.generators.size();
      for (std::size_t i = 0; i < pa.generators.size(); ++i)
        for (std::size_t j = 0; j < nb; ++j) {
          const std::size_t k = out.add_generator(d, combine_labels(pa.generators[i], pb.generators[j]));
          if (index) {
            index->encode[{da, i, db, j}] = {d, k};
            index->decode[{d, k}] = {da, i, db, j};
          }
        }
      for (const auto& rel : pa.relations)
        for (std::size_t j = 0; j < nb; ++j) {
          SparseVec col;
          for (const auto& [i, c] : rel) col.emplace_back(offset + i * nb + j, c);
          out.add_relation(d, std::move(col));
        }
      for (std::size_t i = 0; i < pa.generators.size(); ++i)
        for (const auto& rel : pb.relations) {
          SparseVec col;
          for (const auto& [j, c] : rel) col.emplace_back(offset + i * nb + j, c);
          out.add_relation(d, std::move(col));
        }
    }
  return out;
}

GradedFPModule quotient(const GradedFPModule& m, std::span<const Element> relations) {
  GradedFPModule out = m;
  for (const auto& e : relations) {
    if (!m.in_window(e.degree)) throw std::out_of_range("generator degree outside window");
    if (!e.empty()) out.add_relation(e);
  }
  return out;
}

GradedFPModule truncate(const GradedFPModule& m, int low, int high) {
  GradedFPModule out(m.prime(), std::max(low, m.low()), std::min(high, m.high()));
  for (const auto& [d, pc] : m.pieces()) {
    if (d < low || d > high) continue;
    for (const auto& g : pc.generators) out.add_generator(d, g);
    for (const auto& rel : pc.relations) out.add_relation(d, rel);
  }
  return out;
}

GradedFPModule prune_trivial(const GradedFPModule& m) {
  GradedFPModule out(m.prime(), m.low(), m.high());
  for (const auto& [d, pc] : m.pieces()) {
    std::vector<bool> dead(pc.generators.size(), false);
    std::vector<SparseVec> rels = pc.relations;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& rel : rels) {
        SparseVec live;
        for (auto& [i, c] : rel)
          if (!dead[i]) live.emplace_back(i, c);
        rel = std::move(live);
        if (rel.size() == 1 && valuation(rel[0].second, m.prime()) == 0) {
          dead[rel[0].first] = true;
          rel.clear();
          changed = true;
        }
      }
    }
    std::vector<std::size_t> remap(pc.generators.size(), 0);
    std::size_t next = 0;
    for (std::size_t g = 0; g < pc.generators.size(); ++g) {
      if (dead[g]) continue;
      remap[g] = next++;
      out.add_generator(d, pc.generators[g]);
    }
    for (const auto& rel : rels) {
      SparseVec col;
      for (const auto& [i, c] : rel)
        if (!dead[i]) col.emplace_back(remap[i], c);
      if (!col.empty()) out.add_relation(d, std::move(col));
    }
  }
  return out;
}

IsoReport iso_equal(const NormalForm& a, const NormalForm& b) {
  IsoReport r;
  std::ostringstream os;
  if (a.p != b.p) {
    r.equal = false;
    os << "primes differ (" << a.p << " vs " << b.p << ")";
    r.summary = os.str();
    return r;
  }
  std::vector<int> degs;
  for (const auto& [d, inv] : a.degrees) degs.push_back(d);
  for (const auto& [d, inv] : b.degrees) degs.push_back(d);
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  for (int d : degs) {
    const auto x = a.at(d), y = b.at(d);
    if (x == y) continue;
    r.equal = false;
    r.differing.push_back(d);
    os << "degree " << d << ": " << x.to_string(a.p) << " vs " << y.to_string(b.p) << "; ";
  }
  r.summary = r.equal ? "isomorphic in every degree" : os.str();
  return r;
}

IsoReport iso_equal(const GradedFPModule& a, const GradedFPModule& b) { return iso_equal(normalize(a), normalize(b)); }

std::map<int, DegreeInvariants> FiltrationGraded::aggregate() const {
  std::map<int, DegreeInvariants> out;
  for (const auto& [d, slotmap] : slots)
    for (const auto& [s, inv] : slotmap)
      if (!inv.is_zero()) out[s] += inv;
  return out;
}

FiltrationGraded gr_ps(const NormalForm& a, int s) {
  if (s < 1) throw std::invalid_argument("gr_ps: s must be positive");
  FiltrationGraded out;
  out.p = a.p;
  out.s = s;
  for (const auto& [d, inv] : a.degrees) {
    auto& slots = out.slots[d];
    if (d == 0) {
      slots[0] = inv;
      continue;
    }
    for (int k = 1; k <= s; ++k) {
      const auto at_least_k = std::count_if(inv.torsion.begin(), inv.torsion.end(), [k](int e) { return e >= k; });
      DegreeInvariants piece;
      piece.torsion.assign(static_cast<std::size_t>(inv.free + at_least_k), 1);
      if (!piece.is_zero()) slots[k] = piece;
    }
    DegreeInvariants top;
    top.free = inv.free;
    for (int e : inv.torsion)
      if (e > s) top.torsion.push_back(e - s);
    if (!top.is_zero()) slots[s + 1] = top;
  }
  return out;
}

FiltrationGraded gr_ps(const GradedFPModule& a, int s) { return gr_ps(normalize(a), s); }

nlohmann::json slots_to_json(const std::map<int, DegreeInvariants>& slots) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [s, inv] : slots) j[std::to_string(s)] = inv;
  return j;
}

// ---------------------------------------------------------------------------

GradedMap::GradedMap(std::shared_ptr<const GradedFPModule> source, std::shared_ptr<const GradedFPModule> target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_->prime() != target_->prime()) throw std::invalid_argument("GradedMap: mismatched primes");
  for (const auto& [d, pc] : source_->pieces()) images_[d].assign(pc.generators.size(), Element{d, {}});
}

void GradedMap::set_image(int degree, std::size_t generator, Element image) {
  auto it = images_.find(degree);
  if (it == images_.end() || generator >= it->second.size()) throw std::out_of_range("GradedMap: no such generator");
  if (!image.empty() && image.degree != degree) throw std::invalid_argument("GradedMap: map must preserve degree");
  image.degree = degree;
  it->second[generator] = std::move(image);
}

Element GradedMap::image(int degree, std::size_t generator) const {
  auto it = images_.find(degree);
  if (it == images_.end() || generator >= it->second.size()) throw std::out_of_range("GradedMap: no such generator");
  return it->second[generator];
}

Element GradedMap::apply(const Element& e) const {
  Element out{e.degree, {}};
  auto it = images_.find(e.degree);
  if (it == images_.end()) return out;
  for (const auto& [i, c] : e.coeffs) out += it->second.at(i).scaled(c);
  return out;
}

bool GradedMap::well_defined(std::string* why) const {
  for (const auto& [d, pc] : source_->pieces())
    for (std::size_t r = 0; r < pc.relations.size(); ++r) {
      Element rel{d, {}};
      for (const auto& [i, c] : pc.relations[r]) rel.coeffs[i] = Rat(c);
      if (!is_zero(*target_, apply(rel))) {
        if (why) {
          std::ostringstream os;
          os << "relation " << r << " in degree " << d << " does not map into the target relations";
          *why = os.str();
        }
        return false;
      }
    }
  return true;
}

std::vector<std::pair<int, std::size_t>> GradedMap::killed_generators() const {
  std::vector<std::pair<int, std::size_t>> out;
  for (const auto& [d, imgs] : images_)
    for (std::size_t i = 0; i < imgs.size(); ++i) {
      Element g{d, {{i, Rat(1)}}};
      if (!is_zero(*source_, g) && is_zero(*target_, imgs[i])) out.emplace_back(d, i);
    }
  return out;
}

std::vector<std::vector<Int>> GradedMap::kernel_lattice(int degree) const {
  const std::size_t ns = source_->generator_count(degree);
  std::vector<std::vector<Int>> out;
  if (ns == 0) return out;
  const auto* tp = target_->piece(degree);
  const std::size_t nt = tp ? tp->generators.size() : 0;
  if (nt == 0) {
    for (std::size_t i = 0; i < ns; ++i) {
      std::vector<Int> v(ns);
      v[i] = 1;
      out.push_back(std::move(v));
    }
    return out;
  }
  const std::size_t nr = tp->relations.size();
  const unsigned long p = source_->prime();
  PLocalMatrix m(nt, ns + nr, p);
  const auto& imgs = images_.at(degree);
  for (std::size_t i = 0; i < ns; ++i) {
    const auto col = integral_column(imgs[i], nt, p);
    for (std::size_t k = 0; k < nt; ++k) m(k, i) = col[k];
  }
  for (std::size_t r = 0; r < nr; ++r)
    for (const auto& [k, c] : tp->relations[r]) m(k, ns + r) = c;
  const PLocalMatrix ker = kernel_basis(m);
  // Column i was scaled by a unit L_i; undo that on the source coordinate.
  std::vector<Int> scale(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    Int l = 1;
    for (const auto& [k, c] : imgs[i].coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    scale[i] = l;
  }
  for (std::size_t col = 0; col < ker.cols(); ++col) {
    std::vector<Int> v(ns);
    bool nonzero = false;
    for (std::size_t i = 0; i < ns; ++i) {
      v[i] = ker(i, col) * scale[i];
      if (v[i] != 0) nonzero = true;
    }
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

bool GradedMap::injective() const {
  for (const auto& [d, pc] : source_->pieces())
    for (const auto& v : kernel_lattice(d)) {
      Element e{d, {}};
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) e.coeffs[i] = Rat(v[i]);
      if (!is_zero(*source_, e)) return false;
    }
  return true;
}

}  // namespace rost
