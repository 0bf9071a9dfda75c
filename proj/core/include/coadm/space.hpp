#pragma once

#include "coadm/scalar.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace coadm {

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// Finite-rank slice of a weighted free Banach space c_0(E,K): an ordered
/// list of basis labels with weights p^k (solid norm). The label order is
/// the canonical iteration order of every matrix representation.
class Space {
 public:
  static SpacePtr make(long prime, std::string name, std::vector<std::string> labels,
                       std::vector<long> weight_exps);
  // Unit weights.
  static SpacePtr make(long prime, std::string name, std::vector<std::string> labels);
  // The ground field K as a rank-1 space.
  static SpacePtr line(long prime);
  // Product basis with product weights; ||v (x) w|| = ||v|| ||w|| on the
  // orthogonal bases kept here.
  static SpacePtr tensor(const SpacePtr& a, const SpacePtr& b);
  // Mirrored labels, reciprocal weights.
  static SpacePtr dual(const SpacePtr& v);
  // V^n with coordinatewise norms; labels "l@i".
  static SpacePtr power(const SpacePtr& v, int n);
  static SpacePtr direct_sum(const SpacePtr& a, const SpacePtr& b);

  long prime() const { return prime_; }
  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  long weight_exp(int i) const { return weight_exps_[i]; }
  Rational weight(int i) const;
  int index_of(const std::string& label) const;  // -1 when absent

  // Same rank, prime and weights; labels may differ. Sufficient for two
  // truncations to carry the same operators.
  bool same_geometry(const Space& o) const;

  bool is_tensor() const { return left_ != nullptr; }
  const SpacePtr& tensor_left() const { return left_; }
  const SpacePtr& tensor_right() const { return right_; }
  int flat(int i, int j) const { return i * right_->rank() + j; }
  std::pair<int, int> unflat(int k) const {
    int rr = right_->rank();
    return {k / rr, k % rr};
  }

 private:
  Space() = default;

  long prime_ = 2;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<long> weight_exps_;
  SpacePtr left_, right_;  // set when built as a tensor product
};

/// Sparse vector over a Space; absent coefficient = exact zero.
class Vec {
 public:
  Vec() = default;
  explicit Vec(SpacePtr space) : space_(std::move(space)) {}
  Vec(SpacePtr space, std::vector<std::pair<int, Scalar>> coeffs);

  static Vec unit(const SpacePtr& space, int i);
  static Vec unit(const SpacePtr& space, const std::string& label);

  const SpacePtr& space() const { return space_; }
  const std::vector<std::pair<int, Scalar>>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  Scalar coeff(int i) const;  // exact zero when absent

  // max |coeff| * weight over the support (a certified upper bound when
  // approximate zeros are present); 0 for the empty vector.
  Rational norm() const;
  bool bounded_by(long n) const;  // every coefficient has |c|*w <= p^-n
  bool is_exact() const;          // all coefficients exact

  Vec operator+(const Vec& o) const;
  Vec operator-(const Vec& o) const;
  Vec operator-() const;
  Vec scaled(const Scalar& s) const;
  // v (x) w in Space::tensor(v.space, w.space)
  static Vec tensor(const Vec& a, const Vec& b, const SpacePtr& target);

  // Drop coefficients certified bounded by p^-n (cleanup after cancellation).
  Vec pruned(long n) const;

  std::string str() const;

 private:
  SpacePtr space_;
  std::vector<std::pair<int, Scalar>> coeffs_;  // sorted by index, no exact zeros
};

}  // namespace coadm
