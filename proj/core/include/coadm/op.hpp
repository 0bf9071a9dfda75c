#pragma once

#include "coadm/space.hpp"

#include <functional>

namespace coadm {

/// Bounded operator between truncated spaces, stored columnwise.
///
/// A truncation of an operator on the full free space may discard part of
/// each true column (rows beyond the cut) as well as whole columns (domain
/// labels beyond the cut). tail(i) bounds the norm of the discarded part of
/// column i; tail() bounds the operator norm of the whole discarded part.
/// Both default to 0: the operator is declared exactly representable, and
/// constructors of known-infinite operators must set them.
class Op {
 public:
  Op() = default;
  Op(SpacePtr domain, SpacePtr codomain, std::vector<Vec> cols);

  static Op zero(const SpacePtr& domain, const SpacePtr& codomain);
  static Op identity(const SpacePtr& v);
  static Op from_columns(const SpacePtr& domain, const SpacePtr& codomain,
                         const std::function<Vec(int)>& col);
  // tau(a (x) b) = b (x) a, an isometric isomorphism.
  static Op flip(const SpacePtr& v, const SpacePtr& w);

  const SpacePtr& domain() const { return domain_; }
  const SpacePtr& codomain() const { return codomain_; }
  const Vec& column(int i) const { return cols_[i]; }

  const Rational& tail(int i) const { return col_tails_[i]; }
  const Rational& tail() const { return tail_; }
  bool has_tail() const { return tail_ != 0; }
  Op with_tail(std::vector<Rational> col_tails, Rational global) const;
  Op with_uniform_tail(const Rational& t) const;

  Vec apply(const Vec& v) const;
  Op compose(const Op& inner) const;  // this ∘ inner
  Op operator+(const Op& o) const;
  Op operator-(const Op& o) const;
  Op scaled(const Scalar& s) const;
  static Op tensor(const Op& s, const Op& t);
  // Transpose with reciprocal weights; an isometric involution on
  // truncated operators.
  Op transpose() const;

  // max over domain labels of ||T e_i|| / weight(i).
  Rational norm() const;
  // Norm bound covering the discarded part as well: max(norm, tail).
  Rational true_norm_bound() const;

  std::string str() const;

  /// Columnwise norm ratios c_i = ||T e_i|| / weight(i), sorted descending,
  /// plus the decision whether they decay below p^-margin within the
  /// represented range. A genuine limit statement is impossible at finite
  /// rank; this is a certificate about the represented columns plus the
  /// declared tail bound.
  struct CompactnessMargin {
    std::vector<Rational> ratios_sorted;
    Rational tail;
    long threshold_exp;            // certificate threshold p^-threshold_exp
    bool compact_at_truncation;
  };
  CompactnessMargin compactness_margin(long threshold_exp = 1) const;

 private:
  SpacePtr domain_, codomain_;
  std::vector<Vec> cols_;
  std::vector<Rational> col_tails_;
  Rational tail_ = Rational(0);
};

// phi ⊗̄ id for a functional phi: V -> K, collapsing K(x)W to W:
// v (x) w |-> phi(v) w on a tensor space V(x)W.
Op contract_left(const Op& phi, const SpacePtr& vw);
// id ⊗̄ phi: v (x) w |-> phi(w) v.
Op contract_right(const Op& phi, const SpacePtr& vw);
// u ⊗̄ id for u: K -> A, with K(x)W read as W: w |-> u(1) (x) w.
Op insert_left(const Op& u, const SpacePtr& w);
// id ⊗̄ u: v |-> v (x) u(1).
Op insert_right(const Op& u, const SpacePtr& v);

}  // namespace coadm
