#include "voabim/state_space.hpp"

#include "voabim/errors.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace voabim {

int GradedSpace::next_id() {
  static std::atomic<int> counter{0};
  return counter++;
}

GradedSpace::GradedSpace(AlgebraKind kind, const Rational &c, int max_level)
    : kind_(kind), c_(c), max_level_(max_level),
      capacity_(graded_capacity(kind, max_level)), id_(next_id()) {
  if (max_level < 0)
    throw std::invalid_argument("GradedSpace: negative max level");
}

GradedVector GradedSpace::unit(int level, int idx) const {
  if (level < 0 || level > capacity_ || idx < 0 || idx >= dim(level))
    throw InvariantError("GradedSpace: basis index out of range");
  GradedVector v(id_);
  v.add(level, idx, Rational(1));
  return v;
}

std::string GradedSpace::vector_str(const GradedVector &v) const {
  if (v.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[k, c] : v.terms()) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c << ")" << label(k.first, k.second);
  }
  return os.str();
}

void GradedSpace::check_vector(const GradedVector &v) const {
  if (v.space_id() != -1 && v.space_id() != id_)
    throw InvariantError("GradedSpace: vector belongs to a different space");
  for (const auto &[k, c] : v.terms()) {
    (void)c;
    if (k.first < 0 || k.first > capacity_ || k.second < 0 || k.second >= dim(k.first))
      throw InvariantError("GradedSpace: vector has out-of-range coordinates");
  }
}

// ---------------------------------------------------------------------------

static std::string parts_key(const Partition &p) {
  std::string s;
  for (int x : p) {
    s += std::to_string(x);
    s += ',';
  }
  return s;
}

FreeStateSpace::FreeStateSpace(AlgebraKind kind, const Rational &c, LowestWeight lw,
                               int min_part, int max_level, std::string tail_label)
    : GradedSpace(kind, c, max_level), lw_(lw), min_part_(min_part),
      gen_name_(kind == AlgebraKind::boson ? "a" : "L"),
      tail_label_(std::move(tail_label)) {
  if (kind == AlgebraKind::boson && lw.kind == LowestWeight::highest_weight)
    throw std::invalid_argument("FreeStateSpace: boson space takes vacuum or fock data");
  if (kind == AlgebraKind::virasoro && lw.kind == LowestWeight::fock)
    throw std::invalid_argument("FreeStateSpace: virasoro space takes vacuum or hw data");
  basis_.resize(capacity_ + 1);
  index_.resize(capacity_ + 1);
  for (int l = 0; l <= capacity_; ++l) {
    basis_[l] = partitions_of(l, min_part_);
    for (size_t i = 0; i < basis_[l].size(); ++i)
      index_[l].emplace(parts_key(basis_[l][i]), (int)i);
  }
}

int FreeStateSpace::dim(int level) const {
  if (level < 0 || level > capacity_)
    return 0;
  return (int)basis_[level].size();
}

std::string FreeStateSpace::label(int level, int idx) const {
  return partition_str(basis_.at(level).at(idx), gen_name_, tail_label_);
}

const Partition &FreeStateSpace::partition(int level, int idx) const {
  return basis_.at(level).at(idx);
}

int FreeStateSpace::index_of(const Partition &p) const {
  int w = partition_weight(p);
  if (w > capacity_)
    throw WeightRangeError(w, max_level_);
  auto it = index_[w].find(parts_key(p));
  if (it == index_[w].end())
    throw InvariantError("FreeStateSpace: not a basis partition");
  return it->second;
}

GradedVector FreeStateSpace::apply_generator(int p, const GradedVector &v) const {
  check_vector(v);
  GradedVector out(id_);
  for (const auto &[k, c] : v.terms()) {
    GradedVector g = gen_on_monomial(p, k.first, k.second);
    out.add_scaled(g, c);
  }
  return out;
}

GradedVector FreeStateSpace::gen_on_monomial(int p, int level, int idx) const {
  long long key = ((long long)(p + 128) << 24) | ((long long)level << 16) | idx;
  auto it = gen_memo_.find(key);
  if (it != gen_memo_.end())
    return it->second;
  GradedVector out = gen_on_parts(p, basis_.at(level).at(idx));
  gen_memo_.emplace(key, out);
  return out;
}

GradedVector FreeStateSpace::gen_on_parts(int p, const Partition &parts) const {
  int level = partition_weight(parts);
  int target = level - p;
  if (target < 0)
    return zero(); // lowest-weight space: everything below level 0 vanishes
  if (target > capacity_)
    throw WeightRangeError(target, max_level_);

  const bool boson = kind_ == AlgebraKind::boson;

  if (parts.empty()) {
    if (p < 0) {
      // prepend, unless the mode is one that kills the lowest-weight vector
      if (!boson && lw_.kind == LowestWeight::vacuum && p == -1)
        return zero();
      Partition np{-p};
      GradedVector v(id_);
      v.add(-p, index_of(np), Rational(1));
      return v;
    }
    if (p == 0) {
      if (lw_.kind == LowestWeight::fock || lw_.kind == LowestWeight::highest_weight) {
        GradedVector v(id_);
        v.add(0, 0, lw_.value);
        return v;
      }
      return zero();
    }
    return zero();
  }

  const int top = parts[0];
  if (p < 0 && (boson || -p >= top)) {
    // negative boson modes commute, so a sorted insert lands on a basis
    // monomial; for virasoro this is only immediate when -p can lead
    Partition np;
    np.reserve(parts.size() + 1);
    bool placed = false;
    for (int part : parts) {
      if (!placed && -p >= part) {
        np.push_back(-p);
        placed = true;
      }
      np.push_back(part);
    }
    if (!placed)
      np.push_back(-p);
    GradedVector v(id_);
    v.add(target, index_of(np), Rational(1));
    return v;
  }

  // commute g_p past the leading factor g(-top)
  Partition rest(parts.begin() + 1, parts.end());
  int rl = partition_weight(rest);
  int ri = index_of(rest);
  GradedVector out(id_);

  if (boson) {
    if (p == top)
      out.add(rl, ri, Rational(p));
  } else {
    out.add_scaled(gen_on_monomial(p - top, rl, ri), Rational(p + top));
    if (p == top)
      out.add(rl, ri, c_ * Rational((long)p * p * p - p, 12));
  }

  GradedVector tail = gen_on_monomial(p, rl, ri);
  out += apply_generator(-top, tail);
  return out;
}

Rational FreeStateSpace::gram(int level, int i, int j) const {
  if (level == 0)
    return Rational(1);
  long long key = ((long long)level << 40) | ((long long)i << 20) | (long long)j;
  auto it = gram_memo_.find(key);
  if (it != gram_memo_.end())
    return it->second;
  const Partition &u = basis_.at(level).at(i);
  Partition rest(u.begin() + 1, u.end());
  int rest_idx = index_of(rest);
  int rest_level = partition_weight(rest);
  GradedVector w = gen_on_monomial(u[0], level, j);
  Rational acc(0);
  for (const auto &[k, c] : w.terms()) {
    if (k.first != rest_level)
      throw InvariantError("gram: adjoint application landed at the wrong level");
    acc += c * gram(rest_level, rest_idx, k.second);
  }
  gram_memo_.emplace(key, acc);
  return acc;
}

std::vector<std::vector<GradedVector>> gram_radical_rows(const FreeStateSpace &space,
                                                         int up_to_level) {
  std::vector<std::vector<GradedVector>> out(up_to_level + 1);
  for (int l = 0; l <= up_to_level; ++l) {
    int d = space.dim(l);
    if (d == 0)
      continue;
    // row-reduce the Gram matrix; free columns give the radical
    std::vector<std::vector<Rational>> g(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        g[i][j] = space.gram(l, i, j);
    std::vector<int> pivot_of_row;
    int row = 0;
    for (int col = 0; col < d && row < d; ++col) {
      int sel = -1;
      for (int r = row; r < d; ++r)
        if (!g[r][col].is_zero()) {
          sel = r;
          break;
        }
      if (sel < 0)
        continue;
      std::swap(g[sel], g[row]);
      Rational inv = Rational(1) / g[row][col];
      for (int j = 0; j < d; ++j)
        g[row][j] *= inv;
      for (int r = 0; r < d; ++r) {
        if (r == row || g[r][col].is_zero())
          continue;
        Rational f = g[r][col];
        for (int j = 0; j < d; ++j)
          g[r][j] -= f * g[row][j];
      }
      pivot_of_row.push_back(col);
      ++row;
    }
    std::vector<bool> is_pivot(d, false);
    for (int c : pivot_of_row)
      is_pivot[c] = true;
    for (int free = 0; free < d; ++free) {
      if (is_pivot[free])
        continue;
      GradedVector v(space.id());
      v.add(l, free, Rational(1));
      for (size_t r = 0; r < pivot_of_row.size(); ++r)
        v.add(l, pivot_of_row[r], -g[r][free]);
      out[l].push_back(v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

QuotientStateSpace::QuotientStateSpace(std::shared_ptr<const FreeStateSpace> cover,
                                       const std::vector<std::vector<GradedVector>> &rows,
                                       int max_level)
    : GradedSpace(cover->kind(), cover->central_charge(), max_level),
      cover_(std::move(cover)) {
  if (capacity_ > cover_->capacity())
    throw std::invalid_argument("QuotientStateSpace: cover is built too low");
  if ((int)rows.size() <= capacity_)
    throw std::invalid_argument("QuotientStateSpace: kernel rows missing at high levels");
  levels_.resize(capacity_ + 1);
  for (int l = 0; l <= capacity_; ++l) {
    LevelData &ld = levels_[l];
    // echelonize the kernel rows at this level (pivot = smallest cover index)
    for (const GradedVector &raw : rows[l]) {
      GradedVector r = raw;
      for (size_t i = 0; i < ld.rows.size(); ++i) {
        Rational c = r.coeff(l, ld.pivots[i]);
        if (!c.is_zero())
          r.add_scaled(ld.rows[i], -c);
      }
      if (r.is_zero())
        continue;
      int piv = r.terms().begin()->first.second;
      r.scale(Rational(1) / r.coeff(l, piv));
      for (size_t i = 0; i < ld.rows.size(); ++i) {
        Rational c = ld.rows[i].coeff(l, piv);
        if (!c.is_zero())
          ld.rows[i].add_scaled(r, -c);
      }
      ld.rows.push_back(r);
      ld.pivots.push_back(piv);
    }
    std::vector<bool> is_pivot(cover_->dim(l), false);
    for (int p : ld.pivots)
      is_pivot[p] = true;
    for (int i = 0; i < cover_->dim(l); ++i)
      if (!is_pivot[i]) {
        ld.cover_to_quot.emplace(i, (int)ld.survivors.size());
        ld.survivors.push_back(i);
      }
  }
}

int QuotientStateSpace::dim(int level) const {
  if (level < 0 || level > capacity_)
    return 0;
  return (int)levels_[level].survivors.size();
}

std::string QuotientStateSpace::label(int level, int idx) const {
  return cover_->label(level, levels_.at(level).survivors.at(idx));
}

int QuotientStateSpace::cover_index(int level, int idx) const {
  return levels_.at(level).survivors.at(idx);
}

GradedVector QuotientStateSpace::lift(const GradedVector &v) const {
  check_vector(v);
  GradedVector out(cover_->id());
  for (const auto &[k, c] : v.terms())
    out.add(k.first, cover_index(k.first, k.second), c);
  return out;
}

GradedVector QuotientStateSpace::project(const GradedVector &cover_vec) const {
  cover_->check_vector(cover_vec);
  GradedVector red = cover_vec;
  GradedVector out(id_);
  // reduce level by level against the kernel echelon, then re-index
  for (int l = red.min_level(); l != -1 && l <= red.max_level(); ++l) {
    if (l > capacity_)
      throw WeightRangeError(l, max_level_);
    const LevelData &ld = levels_[l];
    for (size_t i = 0; i < ld.rows.size(); ++i) {
      Rational c = red.coeff(l, ld.pivots[i]);
      if (!c.is_zero())
        red.add_scaled(ld.rows[i], -c);
    }
  }
  for (const auto &[k, c] : red.terms()) {
    auto it = levels_[k.first].cover_to_quot.find(k.second);
    if (it == levels_[k.first].cover_to_quot.end())
      throw InvariantError("QuotientStateSpace: reduction left a pivot coordinate");
    out.add(k.first, it->second, c);
  }
  return out;
}

const std::vector<GradedVector> &QuotientStateSpace::kernel_rows(int level) const {
  return levels_.at(level).rows;
}

GradedVector QuotientStateSpace::apply_generator(int p, const GradedVector &v) const {
  return project(cover_->apply_generator(p, lift(v)));
}

} // namespace voabim
