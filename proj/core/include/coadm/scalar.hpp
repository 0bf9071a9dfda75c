#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace coadm {

// Plain-value semantics (no expression templates) keep these usable with
// std::max and friends.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrimeMismatch : Error {
  using Error::Error;
};
struct DivisionByZeroOrImprecise : Error {
  using Error::Error;
};
struct InsufficientPrecision : Error {
  using Error::Error;
};

// p-adic valuation of a nonzero integer; n is divided down by p^v.
long val_p_remove(BigInt& n, long p);
long val_p(const BigInt& n, long p);
long val_p(const Rational& q, long p);

BigInt pow_p(long p, long e);
// Inverse of u modulo p^e; u must be prime to p.
BigInt inv_mod(const BigInt& u, long p, long e);

/// Element of Q_p with tracked precision.
///
/// Three states:
///   - exact: a rational number known exactly (norms and kernels computed from
///     exact values certify "provably zero" rather than "zero at precision");
///   - tracked: p^v * u + O(p^(v+r)) with p ∤ u, 0 < u < p^r, r >= 1;
///   - approximate zero: O(p^N), value indistinguishable from 0 below p^-N.
///
/// Immutable after construction; all operations are pure.
class Scalar {
 public:
  static constexpr long default_precision = 30;

  Scalar() : prime_(2), kind_(Kind::Exact), exact_(0) {}

  static Scalar zero(long p) { return Scalar(p); }
  static Scalar approx_zero(long p, long abs_prec);
  // Exact rational value; denominator may be divisible by p (negative valuation).
  static Scalar exact(long p, Rational value);
  static Scalar exact(long p, long value) { return exact(p, Rational(value)); }
  // Value known to r significant p-adic digits.
  static Scalar tracked(long p, const Rational& value, long rel_prec = default_precision);
  static Scalar from_parts(long p, long v, const BigInt& unit, long rel_prec);
  static Scalar one(long p) { return exact(p, 1); }

  long prime() const { return prime_; }

  bool is_exact() const { return kind_ == Kind::Exact; }
  bool is_exact_zero() const { return kind_ == Kind::Exact && exact_ == 0; }
  bool is_approx_zero() const { return kind_ == Kind::ApproxZero; }
  // Value certainly nonzero (exact nonzero, or a tracked leading digit).
  bool certainly_nonzero() const;
  // Certified |x| <= p^-n.
  bool bounded_by(long n) const;

  // Valuation; nullopt for exact zero (v = +infinity). For an approximate
  // zero only the lower bound O(p^N) is known and that bound is returned.
  std::optional<long> valuation() const;
  // |x| = p^-v as an exact rational; for approximate zeros the certified
  // upper bound p^-N. Exact zero gives 0.
  Rational norm() const;
  // Absolute precision v + r; nullopt when the value is exact.
  std::optional<long> abs_precision() const;
  // Rational representative ignoring the O() tail. Exact zero gives 0.
  Rational lift() const;
  const Rational& exact_value() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  // DivisionByZeroOrImprecise unless o.certainly_nonzero().
  Scalar operator/(const Scalar& o) const;

  // val(x - y) >= n, never claiming more than the operands' precision
  // supports; InsufficientPrecision when the difference is an approximate
  // zero with bound below n.
  static bool eq_to_precision(const Scalar& x, const Scalar& y, long n);

  // Text form "p^v * u + O(p^(v+r))"; exact values drop the O-term.
  std::string str() const;

  enum class Kind { Exact, Tracked, ApproxZero };
  Kind kind() const { return kind_; }
  long tracked_val() const { return val_; }
  const BigInt& tracked_unit() const { return unit_; }
  long tracked_rel() const { return rel_; }
  long approx_bound() const { return obound_; }

 private:
  explicit Scalar(long p) : prime_(p), kind_(Kind::Exact), exact_(0) {}

  // Truncate to absolute precision a (tracked or approximate-zero result).
  Scalar truncated(long a) const;
  static void check_same_prime(const Scalar& x, const Scalar& y);

  long prime_;
  Kind kind_;
  Rational exact_;  // Kind::Exact
  long val_ = 0;    // Kind::Tracked
  BigInt unit_ = 0;
  long rel_ = 0;
  long obound_ = 0;  // Kind::ApproxZero
};

}  // namespace coadm
