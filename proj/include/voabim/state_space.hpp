#ifndef VOABIM_STATE_SPACE_HPP
#define VOABIM_STATE_SPACE_HPP

#include "voabim/graded_vector.hpp"
#include "voabim/partitions.hpp"
#include "voabim/rational.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace voabim {

enum class AlgebraKind { boson, virasoro };

// levels a space must hold beyond max_level so that mode recursions never
// step outside it (virasoro recursions climb one level per acting factor)
constexpr int graded_capacity(AlgebraKind kind, int max_level) {
  return max_level + 2 + (kind == AlgebraKind::virasoro ? max_level / 2 : 0);
}

// Lowest-weight datum for a PBW state space.
struct LowestWeight {
  enum Kind { vacuum, fock, highest_weight };
  Kind kind = vacuum;
  Rational value; // fock: zero-mode eigenvalue; highest_weight: L(0) eigenvalue
  static LowestWeight make_vacuum() { return {vacuum, Rational(0)}; }
  static LowestWeight make_fock(const Rational &lambda) { return {fock, lambda}; }
  static LowestWeight make_hw(const Rational &h) { return {highest_weight, h}; }
};

// Graded vector space with an exact generator-mode action. Levels run
// 0..capacity; the declared max_level is the user-facing range, the extra
// capacity rows absorb intermediate states of mode recursions.
class GradedSpace {
public:
  virtual ~GradedSpace() = default;

  int id() const { return id_; }
  AlgebraKind kind() const { return kind_; }
  const Rational &central_charge() const { return c_; }
  int max_level() const { return max_level_; }
  int capacity() const { return capacity_; }

  virtual int dim(int level) const = 0;
  virtual std::string label(int level, int idx) const = 0;

  // action of the algebra generator mode (boson: alpha_p; virasoro: L_p)
  virtual GradedVector apply_generator(int p, const GradedVector &v) const = 0;

  GradedVector zero() const { return GradedVector(id_); }
  GradedVector unit(int level, int idx) const;
  std::string vector_str(const GradedVector &v) const;
  void check_vector(const GradedVector &v) const; // space id + index ranges

protected:
  GradedSpace(AlgebraKind kind, const Rational &c, int max_level);

  AlgebraKind kind_;
  Rational c_;
  int max_level_;
  int capacity_;
  int id_;

private:
  static int next_id();
};

// PBW monomial basis g(-p1)...g(-pk)|lw> with p1 >= ... >= pk >= min_part,
// normal ordering computed from the commutation relations
//   boson:    [a_p, a_q] = p delta_{p+q,0}
//   virasoro: [L_p, L_q] = (p-q) L_{p+q} + delta_{p+q,0} (p^3-p)/12 c.
class FreeStateSpace : public GradedSpace {
public:
  FreeStateSpace(AlgebraKind kind, const Rational &c, LowestWeight lw,
                 int min_part, int max_level, std::string tail_label);

  const LowestWeight &lowest_weight() const { return lw_; }
  int min_part() const { return min_part_; }

  int dim(int level) const override;
  std::string label(int level, int idx) const override;
  const Partition &partition(int level, int idx) const;
  // index of a valid basis partition (weakly decreasing, parts >= min_part)
  int index_of(const Partition &p) const;

  GradedVector apply_generator(int p, const GradedVector &v) const override;

  // Shapovalov pairing <x,y> of two basis states at the same level, built
  // from the adjoint g(-p) <-> g(p) and <lw,lw> = 1. Memoized.
  Rational gram(int level, int i, int j) const;

private:
  GradedVector gen_on_monomial(int p, int level, int idx) const;
  GradedVector gen_on_parts(int p, const Partition &parts) const;

  LowestWeight lw_;
  int min_part_;
  std::string gen_name_;
  std::string tail_label_;
  std::vector<std::vector<Partition>> basis_;
  std::vector<std::unordered_map<std::string, int>> index_;
  mutable std::unordered_map<long long, GradedVector> gen_memo_;
  mutable std::unordered_map<long long, Rational> gram_memo_;
};

// Per-level quotient of a FreeStateSpace by an echelonized family of rows
// (here: the radical of the Gram form). The quotient basis at each level is
// the set of cover monomials that are not pivots; vectors are reduced mod the
// row space and re-indexed.
class QuotientStateSpace : public GradedSpace {
public:
  // rows: for each level, vectors of the cover spanning the subspace to kill
  QuotientStateSpace(std::shared_ptr<const FreeStateSpace> cover,
                     const std::vector<std::vector<GradedVector>> &rows,
                     int max_level);

  const FreeStateSpace &cover() const { return *cover_; }

  int dim(int level) const override;
  std::string label(int level, int idx) const override;

  // cover monomial representing quotient basis vector (level, idx)
  int cover_index(int level, int idx) const;
  GradedVector lift(const GradedVector &v) const;
  GradedVector project(const GradedVector &cover_vec) const;
  // the killed subspace at one level, as echelon rows in the cover
  const std::vector<GradedVector> &kernel_rows(int level) const;

  GradedVector apply_generator(int p, const GradedVector &v) const override;

private:
  std::shared_ptr<const FreeStateSpace> cover_;
  // per level: reduced echelon rows of the kernel, pivot cover-index of each
  // row, and the surviving (non-pivot) cover indices in order
  struct LevelData {
    std::vector<GradedVector> rows;
    std::vector<int> pivots;
    std::vector<int> survivors;
    std::unordered_map<int, int> cover_to_quot;
  };
  std::vector<LevelData> levels_;
};

// Radical of the Gram form per level, as echelon-ready row vectors.
std::vector<std::vector<GradedVector>> gram_radical_rows(const FreeStateSpace &space,
                                                         int up_to_level);

} // namespace voabim

#endif
