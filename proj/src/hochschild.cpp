#include "dgwork/hochschild.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace dgwork {

namespace {

bool is_identity_letter(const Category& c, std::size_t src, std::size_t tgt, std::size_t letter) {
  return src == tgt && c.identity(src) == letter;
}

int shifted(const Category& c, std::size_t src, std::size_t tgt, std::size_t letter) {
  return c.hom(src, tgt)[letter].degree - 1;
}

}  // namespace

int homological_degree(const Category& c, const HochschildWord& w) {
  const std::size_t n = w.length();
  int s = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    s += shifted(c, w.objects[(j + 1) % (n + 1)], w.objects[j], w.letters[j]);
  }
  return -(s + 1);
}

std::map<int, std::vector<HochschildWord>> enumerate_words(const Category& c, std::size_t min_length,
                                                           std::size_t max_length, int min_degree,
                                                           int max_degree) {
  const std::size_t m = c.num_objects();
  int cmin = std::numeric_limits<int>::max(), cmax = std::numeric_limits<int>::min();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t i = 0; i < c.hom(x, y).size(); ++i) {
        if (is_identity_letter(c, x, y, i)) continue;
        const int contrib = 1 - c.hom(x, y)[i].degree;
        cmin = std::min(cmin, contrib);
        cmax = std::max(cmax, contrib);
      }
    }
  }
  const bool has_tail_letters = cmin <= cmax;
  std::map<int, std::vector<HochschildWord>> out;
  for (std::size_t n = min_length; n <= max_length; ++n) {
    if (n > 0 && !has_tail_letters) break;
    HochschildWord w;
    w.objects.assign(n + 1, 0);
    w.letters.assign(n + 1, 0);
    // Fill letter j with x_j ∈ hom(O_{j+1}, O_j); partial is the degree so far.
    std::function<void(std::size_t, int)> fill = [&](std::size_t j, int partial) {
      const std::size_t tgt = w.objects[j];
      const std::size_t lo_src = j == n ? w.objects[0] : 0;
      const std::size_t hi_src = j == n ? w.objects[0] : m - 1;
      for (std::size_t src = lo_src; src <= hi_src; ++src) {
        const auto& h = c.hom(src, tgt);
        for (std::size_t i = 0; i < h.size(); ++i) {
          if (j > 0 && is_identity_letter(c, src, tgt, i)) continue;
          const int d = partial + (j == 0 ? -h[i].degree : 1 - h[i].degree);
          const int rest = static_cast<int>(n - j);
          if (rest > 0 && (d + rest * cmax < min_degree || d + rest * cmin > max_degree)) continue;
          w.letters[j] = i;
          if (j == n) {
            if (d >= min_degree && d <= max_degree) out[d].push_back(w);
          } else {
            w.objects[j + 1] = src;
            fill(j + 1, d);
          }
        }
      }
    };
    for (std::size_t o = 0; o < m; ++o) {
      w.objects[0] = o;
      fill(0, 0);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

MixedComplex::MixedComplex(CategoryPtr c, std::size_t max_length, int min_degree, int max_degree)
    : category_(std::move(c)), max_length_(max_length), min_degree_(min_degree), max_degree_(max_degree) {
  const Category& cat = *category_;
  words_ = enumerate_words(cat, 0, max_length_, min_degree_, max_degree_);
  for (int d = min_degree_; d <= max_degree_; ++d) {
    auto& idx = index_[d];
    const auto& ws = words_[d];
    for (std::size_t i = 0; i < ws.size(); ++i) idx.emplace(ws[i], i);
  }
  for (int d = min_degree_; d <= max_degree_; ++d) {
    const auto& ws = words_[d];
    const std::size_t below = covers(d - 1) ? words_[d - 1].size() : 0;
    const std::size_t above = covers(d + 1) ? words_[d + 1].size() : 0;
    SparseMatrix bm(below, ws.size());
    SparseMatrix Bm(above, ws.size());
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (below > 0) bm.set_column(i, to_vector(d - 1, raw_b(ws[i]), max_length_));
      if (above > 0 && ws[i].length() < max_length_) {
        Bm.set_column(i, to_vector(d + 1, raw_B(ws[i]), max_length_));
      }
    }
    b_.emplace(d, std::move(bm));
    B_.emplace(d, std::move(Bm));
  }
  // Relations: length-≤L parts of b on length-(L+1) words.
  const auto top = enumerate_words(cat, max_length_ + 1, max_length_ + 1, min_degree_ + 1, max_degree_ + 1);
  for (const auto& [d, ws] : top) {
    auto& rel = relations_[d - 1];
    for (const auto& w : ws) {
      auto v = to_vector(d - 1, raw_b(w), max_length_);
      if (!v.empty()) rel.push_back(std::move(v));
    }
  }
}

const std::vector<HochschildWord>& MixedComplex::words(int degree) const {
  static const std::vector<HochschildWord> none;
  auto it = words_.find(degree);
  return it == words_.end() ? none : it->second;
}

std::optional<std::size_t> MixedComplex::find(int degree, const HochschildWord& w) const {
  auto it = index_.find(degree);
  if (it == index_.end()) return std::nullopt;
  auto jt = it->second.find(w);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

std::size_t MixedComplex::total_words() const {
  std::size_t n = 0;
  for (const auto& [d, ws] : words_) n += ws.size();
  return n;
}

const SparseMatrix& MixedComplex::b(int degree) const {
  static const SparseMatrix empty;
  auto it = b_.find(degree);
  return it == b_.end() ? empty : it->second;
}

const SparseMatrix& MixedComplex::B(int degree) const {
  static const SparseMatrix empty;
  auto it = B_.find(degree);
  return it == B_.end() ? empty : it->second;
}

const std::vector<SparseVector>& MixedComplex::relations(int degree) const {
  static const std::vector<SparseVector> none;
  auto it = relations_.find(degree);
  return it == relations_.end() ? none : it->second;
}

SparseVector MixedComplex::to_vector(int degree,
                                      const std::vector<std::pair<HochschildWord, Scalar>>& terms,
                                      std::size_t max_length) const {
  std::vector<SparseVector::Entry> e;
  if (!covers(degree)) return {};
  const auto& idx = index_.at(degree);
  for (const auto& [w, c] : terms) {
    if (w.length() > max_length) continue;
    auto it = idx.find(w);
    if (it == idx.end()) throw std::logic_error("MixedComplex: word missing from enumeration");
    e.emplace_back(it->second, c);
  }
  return SparseVector::from_entries(std::move(e));
}

std::vector<std::pair<HochschildWord, Scalar>> MixedComplex::raw_b(const HochschildWord& w) const {
  const Category& c = *category_;
  const std::size_t n = w.length();
  const auto& O = w.objects;
  auto obj = [&](std::size_t j) { return O[j % (n + 1)]; };
  std::vector<std::pair<HochschildWord, Scalar>> out;
  std::vector<int> s(n + 1);
  for (std::size_t j = 0; j <= n; ++j) s[j] = shifted(c, obj(j + 1), obj(j), w.letters[j]);

  int prefix = 0;
  for (std::size_t p = 0; p <= n; ++p) {
    // Internal differential.
    for (const auto& [i, a] : c.differential(obj(p + 1), obj(p), w.letters[p]).entries()) {
      if (p > 0 && is_identity_letter(c, obj(p + 1), obj(p), i)) continue;
      HochschildWord v = w;
      v.letters[p] = i;
      out.emplace_back(std::move(v), Scalar(parity_sign(prefix)) * a);
    }
    // x_p ∘ x_{p+1}
    if (p < n) {
      const auto& prod = c.composite(obj(p + 2), obj(p + 1), obj(p), w.letters[p], w.letters[p + 1]);
      const int sign = parity_sign(prefix + s[p]);
      for (const auto& [i, a] : prod.entries()) {
        if (p > 0 && is_identity_letter(c, obj(p + 2), obj(p), i)) continue;
        HochschildWord v;
        v.objects = O;
        v.objects.erase(v.objects.begin() + static_cast<std::ptrdiff_t>(p + 1));
        v.letters = w.letters;
        v.letters.erase(v.letters.begin() + static_cast<std::ptrdiff_t>(p + 1));
        v.letters[p] = i;
        out.emplace_back(std::move(v), Scalar(sign) * a);
      }
    }
    prefix += s[p];
  }
  // Wrap: x_n moves to the front, then x_n ∘ x_0 becomes the head.
  if (n >= 1) {
    const int rest = prefix - s[n];
    const int sign = koszul_sign(s[n], rest) * parity_sign(s[n]);
    const auto& prod = c.composite(O[1], O[0], O[n], w.letters[n], w.letters[0]);
    for (const auto& [i, a] : prod.entries()) {
      HochschildWord v;
      v.objects.push_back(O[n]);
      v.objects.insert(v.objects.end(), O.begin() + 1, O.begin() + static_cast<std::ptrdiff_t>(n));
      v.letters.push_back(i);
      v.letters.insert(v.letters.end(), w.letters.begin() + 1,
                       w.letters.begin() + static_cast<std::ptrdiff_t>(n));
      out.emplace_back(std::move(v), Scalar(sign) * a);
    }
  }
  return out;
}

std::vector<std::pair<HochschildWord, Scalar>> MixedComplex::raw_B(const HochschildWord& w) const {
  const Category& c = *category_;
  const std::size_t n = w.length();
  const auto& O = w.objects;
  std::vector<std::pair<HochschildWord, Scalar>> out;
  // The old head joins the tail, so an identity head gives zero.
  if (is_identity_letter(c, O[(1) % (n + 1)], O[0], w.letters[0])) return out;
  std::vector<int> s(n + 1);
  for (std::size_t j = 0; j <= n; ++j) s[j] = shifted(c, O[(j + 1) % (n + 1)], O[j], w.letters[j]);
  for (std::size_t i = 0; i <= n; ++i) {
    int front = 0, back = 0;
    for (std::size_t q = 0; q <= n; ++q) (q >= i ? front : back) += s[q];
    HochschildWord v;
    v.objects.push_back(O[i]);
    v.letters.push_back(c.identity(O[i]));
    for (std::size_t k = 0; k <= n; ++k) {
      v.objects.push_back(O[(i + k) % (n + 1)]);
      v.letters.push_back(w.letters[(i + k) % (n + 1)]);
    }
    out.emplace_back(std::move(v), Scalar(koszul_sign(front, back)));
  }
  return out;
}

// ---------------------------------------------------------------------------

TotalComplex::TotalComplex(std::shared_ptr<const MixedComplex> mc, TotalKind kind, std::size_t n)
    : mc_(std::move(mc)), kind_(kind), n_(kind == TotalKind::Hochschild ? 1 : n) {
  if (n_ == 0) throw std::invalid_argument("TotalComplex: u-power bound must be >= 1");
}

int TotalComplex::block_degree(int m, std::size_t i) const {
  const int two_i = 2 * static_cast<int>(i);
  return kind_ == TotalKind::Cyclic ? m - two_i : m + two_i;
}

std::size_t TotalComplex::block_offset(int m, std::size_t i) const {
  std::size_t off = 0;
  for (std::size_t j = 0; j < i; ++j) off += mc_->dimension(block_degree(m, j));
  return off;
}

std::size_t TotalComplex::dimension(int m) const { return block_offset(m, n_); }

bool TotalComplex::covers(int m) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!mc_->covers(block_degree(m, i))) return false;
  }
  return true;
}

SparseMatrix TotalComplex::differential(int m) const {
  SparseMatrix d(dimension(m - 1), dimension(m));
  for (std::size_t i = 0; i < n_; ++i) {
    const int dm = block_degree(m, i);
    const auto& bm = mc_->b(dm);
    const auto& Bm = mc_->B(dm);
    const std::size_t col0 = block_offset(m, i);
    const std::size_t dim = mc_->dimension(dm);
    // Tag receiving uB: i+1 (negative cyclic), i-1 (cyclic), none otherwise.
    std::optional<std::size_t> u_tag;
    if (kind_ == TotalKind::NegativeCyclic && i + 1 < n_) u_tag = i + 1;
    if (kind_ == TotalKind::Cyclic && i > 0) u_tag = i - 1;
    for (std::size_t k = 0; k < dim; ++k) {
      SparseVector col;
      if (bm.cols() > 0 && bm.rows() > 0) col = embed(m - 1, i, bm.column(k));
      if (u_tag && Bm.rows() > 0) col.axpy(1, embed(m - 1, *u_tag, Bm.column(k)));
      d.set_column(col0 + k, std::move(col));
    }
  }
  return d;
}

std::vector<SparseVector> TotalComplex::relations(int m) const {
  std::vector<SparseVector> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (const auto& r : mc_->relations(block_degree(m, i))) out.push_back(embed(m, i, r));
  }
  return out;
}

SparseVector TotalComplex::embed(int m, std::size_t i, const SparseVector& v) const {
  const std::size_t off = block_offset(m, i);
  std::vector<SparseVector::Entry> e;
  e.reserve(v.nnz());
  for (const auto& [k, a] : v.entries()) e.emplace_back(off + k, a);
  return SparseVector::from_entries(std::move(e));
}

SparseVector TotalComplex::component(int m, std::size_t i, const SparseVector& v) const {
  const std::size_t off = block_offset(m, i);
  const std::size_t end = off + mc_->dimension(block_degree(m, i));
  std::vector<SparseVector::Entry> e;
  for (const auto& [k, a] : v.entries()) {
    if (k >= off && k < end) e.emplace_back(k - off, a);
  }
  return SparseVector::from_entries(std::move(e));
}

// ---------------------------------------------------------------------------

QuotientHomology::QuotientHomology(const TotalComplex& t, int m, bool want_representatives) {
  space_dim_ = t.dimension(m);
  d_ = t.differential(m);
  const std::size_t below = t.dimension(m - 1);
  prev_relations_ = std::make_unique<ColumnEchelon>(below);
  const auto prev_rel = t.relations(m - 1);
  std::size_t tag = 0;
  for (const auto& r : prev_rel) prev_relations_->insert(r, tag++);
  const std::size_t rel_rank = prev_relations_->rank();

  // rank of D_m modulo R_{m-1}
  ColumnEchelon joint = *prev_relations_;
  for (std::size_t j = 0; j < d_.cols(); ++j) joint.insert(d_.column(j), tag++);
  const std::size_t d_rank = joint.rank() - rel_rank;

  boundaries_ = std::make_unique<ColumnEchelon>(space_dim_);
  tag = 0;
  for (const auto& r : t.relations(m)) boundaries_->insert(r, tag++);
  const SparseMatrix d_up = t.differential(m + 1);
  for (std::size_t j = 0; j < d_up.cols(); ++j) boundaries_->insert(d_up.column(j), tag++);
  boundary_count_ = tag;

  dimension_ = space_dim_ - d_rank - boundaries_->rank();
  if (!want_representatives || dimension_ == 0) return;

  // Z = projection of ker [D_m | R_{m-1}] to the first block.
  ColumnEchelon kernel(below, true);
  std::size_t k = 0;
  std::vector<SparseVector> cycles;
  auto take = [&](const SparseVector& v, bool is_d) {
    auto r = kernel.insert(v, k++);
    if (!r.residual.empty() || !is_d) return;
    std::vector<SparseVector::Entry> e;
    for (const auto& [i, a] : r.combination.entries()) {
      if (i >= prev_rel.size()) e.emplace_back(i - prev_rel.size(), a);
    }
    if (!e.empty()) cycles.push_back(SparseVector::from_entries(std::move(e)));
  };
  for (const auto& r : prev_rel) take(r, false);
  for (std::size_t j = 0; j < d_.cols(); ++j) take(d_.column(j), true);

  with_reps_ = std::make_unique<ColumnEchelon>(space_dim_, true);
  tag = 0;
  for (const auto& r : t.relations(m)) with_reps_->insert(r, tag++);
  for (std::size_t j = 0; j < d_up.cols(); ++j) with_reps_->insert(d_up.column(j), tag++);
  for (const auto& z : cycles) {
    if (reps_.size() == dimension_) break;
    // Dependent candidates are not stored, so their tag can be reused.
    if (!with_reps_->insert(z, tag).residual.empty()) {
      reps_.push_back(z);
      ++tag;
    }
  }
  if (reps_.size() != dimension_) throw std::logic_error("QuotientHomology: representative count mismatch");
}

bool QuotientHomology::is_cycle(const SparseVector& v) const {
  return prev_relations_->contains(d_.apply(v));
}

bool QuotientHomology::is_boundary(const SparseVector& v) const { return boundaries_->contains(v); }

SparseVector QuotientHomology::coordinates(const SparseVector& cycle) const {
  if (dimension_ == 0) return {};
  if (!with_reps_) throw std::logic_error("QuotientHomology: representatives were not computed");
  auto r = with_reps_->reduce(cycle);
  if (!r.residual.empty()) throw InconsistentInput("QuotientHomology: vector is not a cycle");
  std::vector<SparseVector::Entry> e;
  for (const auto& [i, a] : r.combination.entries()) {
    if (i >= boundary_count_) e.emplace_back(i - boundary_count_, -a);
  }
  return SparseVector::from_entries(std::move(e));
}

// ---------------------------------------------------------------------------

std::size_t HomologyPresentation::dim(int n) const {
  auto it = degrees.find(n);
  return it == degrees.end() ? 0 : it->second.dimension;
}

bool HomologyPresentation::stable(int n) const {
  auto it = degrees.find(n);
  return it != degrees.end() && it->second.stable;
}

Workbench::Workbench(CategoryPtr c, ComputationParams p) : category_(std::move(c)), params_(p) {}

std::shared_ptr<const MixedComplex> Workbench::mixed(std::size_t L) {
  auto it = cache_.find(L);
  if (it != cache_.end()) return it->second;
  // Room for u-blocks at N + 2 on both sides of the window, plus δ.
  const int reach = 2 * static_cast<int>(params_.max_u_power + 2) + 3;
  auto mc = std::make_shared<const MixedComplex>(category_, L, params_.window.lo - reach,
                                                 params_.window.hi + reach);
  cache_.emplace(L, mc);
  return mc;
}

TotalComplex Workbench::total(std::size_t L, TotalKind kind, std::size_t n) {
  return TotalComplex(mixed(L), kind, n);
}

std::map<int, std::size_t> Workbench::dimensions(std::size_t L, TotalKind kind, std::size_t n) {
  const auto key = std::make_tuple(L, static_cast<int>(kind), n);
  auto it = dims_cache_.find(key);
  if (it != dims_cache_.end()) return it->second;
  const TotalComplex t = total(L, kind, n);
  std::map<int, std::size_t> out;
  for (int m = params_.window.lo; m <= params_.window.hi; ++m) {
    out[m] = QuotientHomology(t, m, false).dimension();
  }
  dims_cache_.emplace(key, out);
  return out;
}

const QuotientHomology& Workbench::homology(std::size_t L, TotalKind kind, std::size_t n, int m) {
  if (kind == TotalKind::Hochschild) n = 1;
  const auto key = std::make_tuple(L, static_cast<int>(kind), n, m);
  auto it = homology_cache_.find(key);
  if (it == homology_cache_.end()) {
    it = homology_cache_
             .emplace(key, std::make_unique<QuotientHomology>(total(L, kind, n), m, true))
             .first;
  }
  return *it->second;
}

std::optional<int> analytic_hh_frontier(const Category& c, std::size_t L) {
  if (!c.concentrated_in_degree_zero()) return std::nullopt;
  return static_cast<int>(L) - 1;
}

HomologyPresentation hh(Workbench& w, bool want_representatives) {
  const auto& p = w.params();
  HomologyPresentation out;
  out.kind = "HH";
  out.params = p;
  const std::size_t L = p.max_bar_length;
  const TotalComplex t = w.total(L, TotalKind::Hochschild, 1);
  const auto frontier = analytic_hh_frontier(w.category(), L);
  std::map<int, std::size_t> next;
  if (!frontier) next = w.dimensions(L + 1, TotalKind::Hochschild, 1);
  for (int m = p.window.lo; m <= p.window.hi; ++m) {
    QuotientHomology q(t, m, want_representatives);
    DegreeHomology d;
    d.dimension = q.dimension();
    d.representatives = q.representatives();
    d.stable = frontier ? (m <= *frontier) : (next.at(m) == d.dimension);
    out.degrees.emplace(m, std::move(d));
  }
  return out;
}

HomologyPresentation hh(const CategoryPtr& c, const ComputationParams& p) {
  Workbench w(c, p);
  return hh(w);
}

// ---------------------------------------------------------------------------

IdentityCheck check_mixed_identities(const MixedComplex& mc) {
  IdentityCheck r;
  const std::size_t L = mc.bar_length_bound();
  const Category& c = mc.category();
  for (int d = mc.min_degree(); d <= mc.max_degree(); ++d) {
    const auto& ws = mc.words(d);
    const bool down = mc.covers(d - 1) && mc.covers(d - 2);
    const bool up = mc.covers(d + 1) && mc.covers(d + 2);
    const bool mid = mc.covers(d - 1) && mc.covers(d + 1);
    for (std::size_t i = 0; i < ws.size(); ++i) {
      ++r.words_checked;
      const auto e = SparseVector::unit(i);
      if (down && !mc.b(d - 1).apply(mc.b(d).apply(e)).empty()) ++r.b_squared_failures;
      if (up && ws[i].length() + 2 <= L && !mc.B(d + 1).apply(mc.B(d).apply(e)).empty()) {
        ++r.B_squared_failures;
      }
      if (mid && ws[i].length() + 1 <= L) {
        const SparseVector lhs = mc.b(d + 1).apply(mc.B(d).apply(e)) + mc.B(d - 1).apply(mc.b(d).apply(e));
        if (!lhs.empty()) ++r.anticommutator_failures;
      }
      for (const auto& [v, a] : mc.raw_B(ws[i])) {
        (void)a;
        for (std::size_t j = 1; j <= v.length(); ++j) {
          const std::size_t n = v.length();
          if (is_identity_letter(c, v.objects[(j + 1) % (n + 1)], v.objects[j], v.letters[j])) {
            ++r.reducedness_failures;
          }
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

bool KunnethReport::ok() const {
  if (degrees.empty()) return false;
  for (const auto& d : degrees) {
    if (!d.match()) return false;
  }
  return true;
}

KunnethReport kunneth_check(const CategoryPtr& a, const CategoryPtr& b, const ComputationParams& p) {
  const auto ab = share(tensor(*a, *b));
  Workbench wa(a, p), wb(b, p), wab(ab, p);
  const auto ha = hh(wa, false), hb = hh(wb, false), hab = hh(wab, false);
  // In degree zero HH lives in degrees ≥ 0, so the convolution is a finite
  // sum over the window; otherwise only pairs inside the window are seen.
  const bool nonnegative = a->concentrated_in_degree_zero() && b->concentrated_in_degree_zero();
  KunnethReport r;
  for (int n = p.window.lo; n <= p.window.hi; ++n) {
    if (!hab.stable(n)) continue;
    bool stable = true;
    std::size_t conv = 0;
    const int from = nonnegative ? 0 : p.window.lo;
    const int to = nonnegative ? n : p.window.hi;
    for (int i = from; i <= to && stable; ++i) {
      const int j = n - i;
      if (!nonnegative && (j < p.window.lo || j > p.window.hi)) {
        stable = false;
        break;
      }
      stable = ha.stable(i) && hb.stable(j);
      conv += ha.dim(i) * hb.dim(j);
    }
    if (!stable) continue;
    r.degrees.push_back({n, conv, hab.dim(n), true});
  }
  return r;
}

// ---------------------------------------------------------------------------

GluingAdditivityReport gluing_additivity_check(const CategoryPtr& a, const CategoryPtr& b,
                                               const Bimodule& m, const ComputationParams& p) {
  const GluedCategory g = glue(a, b, m);
  const int lo = p.window.lo - 1, hi = p.window.hi + 1;
  const std::size_t L = p.max_bar_length;
  const MixedComplex mg(g.category, L, lo, hi), ma(a, L, lo, hi), mb(b, L, lo, hi);
  GluingAdditivityReport r;
  r.glued_words = mg.total_words();
  r.a_words = ma.total_words();
  r.b_words = mb.total_words();
  r.partition_exact = true;
  r.b_blocks_equal = true;
  r.B_blocks_equal = true;
  // Per degree: glued index → (side, index in factor).
  std::map<int, std::vector<std::pair<Side, std::size_t>>> placement;
  for (int d = lo; d <= hi; ++d) {
    std::vector<std::size_t> hits_a(ma.dimension(d), 0), hits_b(mb.dimension(d), 0);
    for (const auto& w : mg.words(d)) {
      const Side s = g.side[w.objects[0]];
      bool pure = true;
      for (auto o : w.objects) pure = pure && g.side[o] == s;
      if (!pure) {
        ++r.mixed_words;
        placement[d].emplace_back(s, static_cast<std::size_t>(-1));
        continue;
      }
      HochschildWord fw = w;
      for (auto& o : fw.objects) o = g.origin[o];
      const auto idx = (s == Side::A ? ma : mb).find(d, fw);
      if (!idx) {
        r.partition_exact = false;
        placement[d].emplace_back(s, static_cast<std::size_t>(-1));
        continue;
      }
      ++(s == Side::A ? hits_a : hits_b)[*idx];
      placement[d].emplace_back(s, *idx);
    }
    for (auto h : hits_a) r.partition_exact = r.partition_exact && h == 1;
    for (auto h : hits_b) r.partition_exact = r.partition_exact && h == 1;
  }
  if (!r.partition_exact || r.mixed_words > 0) {
    r.b_blocks_equal = r.B_blocks_equal = false;
    return r;
  }
  auto relabel = [&](int d, const SparseVector& v, Side side, bool& foreign) {
    std::vector<SparseVector::Entry> e;
    for (const auto& [i, c] : v.entries()) {
      const auto& [s, k] = placement[d][i];
      if (s != side) foreign = true;
      e.emplace_back(k, c);
    }
    return SparseVector::from_entries(std::move(e));
  };
  for (int d = lo; d <= hi; ++d) {
    for (std::size_t i = 0; i < mg.dimension(d); ++i) {
      const auto& [s, k] = placement[d][i];
      const MixedComplex& f = s == Side::A ? ma : mb;
      bool foreign = false;
      if (mg.covers(d - 1) && mg.b(d).rows() > 0) {
        const auto v = relabel(d - 1, mg.b(d).column(i), s, foreign);
        if (foreign || !(v == f.b(d).column(k))) r.b_blocks_equal = false;
      }
      if (mg.covers(d + 1) && mg.B(d).rows() > 0) {
        const auto v = relabel(d + 1, mg.B(d).column(i), s, foreign);
        if (foreign || !(v == f.B(d).column(k))) r.B_blocks_equal = false;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<HochschildWord, Scalar>> apply_functor_on_word(const Functor& f,
                                                                     const HochschildWord& w) {
  const Category& t = *f.target;
  const std::size_t n = w.length();
  HochschildWord img;
  img.objects.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j) img.objects[j] = f.object_map[w.objects[j]];
  img.letters.resize(n + 1);
  std::vector<std::pair<HochschildWord, Scalar>> out;
  std::function<void(std::size_t, Scalar)> expand = [&](std::size_t j, Scalar coeff) {
    if (j > n) {
      out.emplace_back(img, coeff);
      return;
    }
    const std::size_t src = w.objects[(j + 1) % (n + 1)], tgt = w.objects[j];
    const auto& col = f.on_hom(src, tgt).column(w.letters[j]);
    for (const auto& [i, a] : col.entries()) {
      if (j > 0 && is_identity_letter(t, img.objects[(j + 1) % (n + 1)], img.objects[j], i)) continue;
      img.letters[j] = i;
      expand(j + 1, coeff * a);
    }
  };
  expand(0, 1);
  return out;
}

SparseVector apply_functor_on_chains(const Functor& f, const MixedComplex& source, int degree,
                                     const SparseVector& chain, const MixedComplex& target) {
  std::vector<SparseVector::Entry> e;
  for (const auto& [i, a] : chain.entries()) {
    for (const auto& [w, c] : apply_functor_on_word(f, source.words(degree)[i])) {
      const auto idx = target.find(degree, w);
      if (!idx) throw InconsistentInput("apply_functor_on_chains: image outside target range");
      e.emplace_back(*idx, a * c);
    }
  }
  return SparseVector::from_entries(std::move(e));
}

InducedMap hh_induced_map(const Functor& f, Workbench& source, Workbench& target) {
  InducedMap out;
  const auto& p = source.params();
  const std::size_t L = p.max_bar_length;
  const bool unital = f.unital();
  if (!unital && !(source.category().concentrated_in_degree_zero() &&
                   target.category().concentrated_in_degree_zero())) {
    return out;
  }
  const auto hs = hh(source, false);
  const auto ht = hh(target, false);
  const TotalComplex ts = source.total(L, TotalKind::Hochschild, 1);
  const TotalComplex tt = target.total(L, TotalKind::Hochschild, 1);
  for (int m = p.window.lo; m <= p.window.hi; ++m) {
    if (!hs.stable(m) || !ht.stable(m)) continue;
    if (!unital && m != 0) continue;
    const QuotientHomology qs(ts, m, true), qt(tt, m, true);
    SparseMatrix mat(qt.dimension(), qs.dimension());
    for (std::size_t j = 0; j < qs.dimension(); ++j) {
      const auto img = apply_functor_on_chains(f, *source.mixed(L), m, qs.representatives()[j],
                                               *target.mixed(L));
      mat.set_column(j, qt.coordinates(img));
    }
    out.matrices.emplace(m, std::move(mat));
  }
  return out;
}

}  // namespace dgwork
