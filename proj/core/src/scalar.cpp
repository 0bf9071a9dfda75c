#include "coadm/scalar.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace coadm {

namespace {

constexpr long kInfPrec = std::numeric_limits<long>::max() / 4;

}  // namespace

long val_p_remove(BigInt& n, long p) {
  if (n == 0) throw Error("val_p of zero");
  long v = 0;
  BigInt q, r;
  for (;;) {
    divide_qr(n, BigInt(p), q, r);
    if (r != 0) break;
    n = q;
    ++v;
  }
  return v;
}

long val_p(const BigInt& n, long p) {
  BigInt m = n;
  return val_p_remove(m, p);
}

long val_p(const Rational& q, long p) {
  if (q == 0) throw Error("val_p of zero");
  return val_p(numerator(q), p) - val_p(denominator(q), p);
}

BigInt pow_p(long p, long e) {
  if (e < 0) throw Error("pow_p: negative exponent");
  BigInt r = 1, b = p;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

BigInt inv_mod(const BigInt& u, long p, long e) {
  // extended Euclid against p^e
  BigInt m = pow_p(p, e);
  BigInt a = u % m;
  if (a < 0) a += m;
  BigInt r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) throw Error("inv_mod: argument not invertible");
  s0 %= m;
  if (s0 < 0) s0 += m;
  return s0;
}

Scalar Scalar::approx_zero(long p, long abs_prec) {
  Scalar s(p);
  s.kind_ = Kind::ApproxZero;
  s.obound_ = abs_prec;
  return s;
}

Scalar Scalar::exact(long p, Rational value) {
  Scalar s(p);
  s.exact_ = std::move(value);
  return s;
}

Scalar Scalar::tracked(long p, const Rational& value, long rel_prec) {
  if (rel_prec < 1) throw Error("tracked: rel_prec must be >= 1");
  if (value == 0) throw Error("tracked: use zero()/approx_zero() for zero");
  long v = val_p(value, p);
  return exact(p, value).truncated(v + rel_prec);
}

Scalar Scalar::from_parts(long p, long v, const BigInt& unit, long rel_prec) {
  if (rel_prec < 1) throw Error("from_parts: rel_prec must be >= 1");
  BigInt m = pow_p(p, rel_prec);
  BigInt u = unit % m;
  if (u < 0) u += m;
  if (u == 0 || u % p == 0) throw Error("from_parts: unit divisible by p");
  Scalar s(p);
  s.kind_ = Kind::Tracked;
  s.val_ = v;
  s.unit_ = u;
  s.rel_ = rel_prec;
  return s;
}

bool Scalar::certainly_nonzero() const {
  switch (kind_) {
    case Kind::Exact: return exact_ != 0;
    case Kind::Tracked: return true;
    case Kind::ApproxZero: return false;
  }
  return false;
}

bool Scalar::bounded_by(long n) const {
  switch (kind_) {
    case Kind::Exact: return exact_ == 0 || val_p(exact_, prime_) >= n;
    case Kind::Tracked: return val_ >= n;
    case Kind::ApproxZero: return obound_ >= n;
  }
  return false;
}

std::optional<long> Scalar::valuation() const {
  switch (kind_) {
    case Kind::Exact:
      if (exact_ == 0) return std::nullopt;
      return val_p(exact_, prime_);
    case Kind::Tracked: return val_;
    case Kind::ApproxZero: return obound_;
  }
  return std::nullopt;
}

Rational Scalar::norm() const {
  auto v = valuation();
  if (!v) return Rational(0);
  if (*v >= 0) return Rational(1, pow_p(prime_, *v));
  return Rational(pow_p(prime_, -*v));
}

std::optional<long> Scalar::abs_precision() const {
  switch (kind_) {
    case Kind::Exact: return std::nullopt;
    case Kind::Tracked: return val_ + rel_;
    case Kind::ApproxZero: return obound_;
  }
  return std::nullopt;
}

Rational Scalar::lift() const {
  switch (kind_) {
    case Kind::Exact: return exact_;
    case Kind::Tracked: {
      Rational r(unit_);
      if (val_ >= 0) return r * Rational(pow_p(prime_, val_));
      return r / Rational(pow_p(prime_, -val_));
    }
    case Kind::ApproxZero: return Rational(0);
  }
  return Rational(0);
}

const Rational& Scalar::exact_value() const {
  if (kind_ != Kind::Exact) throw Error("exact_value: value is not exact");
  return exact_;
}

Scalar Scalar::truncated(long a) const {
  switch (kind_) {
    case Kind::Exact: {
      if (exact_ == 0) return approx_zero(prime_, a);
      long v = val_p(exact_, prime_);
      if (v >= a) return approx_zero(prime_, a);
      // unit = exact / p^v as residue mod p^(a-v)
      BigInt num = numerator(exact_), den = denominator(exact_);
      bool neg = num < 0;
      if (neg) num = -num;
      long vn = (num == 0) ? 0 : val_p_remove(num, prime_);
      long vd = val_p_remove(den, prime_);
      (void)vn;
      (void)vd;
      long e = a - v;
      BigInt m = pow_p(prime_, e);
      BigInt u = (num % m) * inv_mod(den, prime_, e) % m;
      if (neg) u = (m - u) % m;
      if (u == 0) throw Error("truncated: internal unit reduction");
      return from_parts(prime_, v, u, e);
    }
    case Kind::Tracked: {
      if (val_ >= a) return approx_zero(prime_, a);
      long e = std::min(rel_, a - val_);
      BigInt u = unit_ % pow_p(prime_, e);
      return from_parts(prime_, val_, u, e);
    }
    case Kind::ApproxZero: return approx_zero(prime_, std::min(obound_, a));
  }
  return *this;
}

void Scalar::check_same_prime(const Scalar& x, const Scalar& y) {
  if (x.prime_ != y.prime_)
    throw PrimeMismatch("scalar primes differ: " + std::to_string(x.prime_) + " vs " +
                        std::to_string(y.prime_));
}

Scalar Scalar::operator-() const {
  switch (kind_) {
    case Kind::Exact: return exact(prime_, -exact_);
    case Kind::Tracked: {
      BigInt m = pow_p(prime_, rel_);
      return from_parts(prime_, val_, m - unit_, rel_);
    }
    case Kind::ApproxZero: return *this;
  }
  return *this;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_prime(*this, o);
  if (kind_ == Kind::Exact && o.kind_ == Kind::Exact)
    return exact(prime_, exact_ + o.exact_);

  long a = std::min(abs_precision().value_or(kInfPrec), o.abs_precision().value_or(kInfPrec));
  Scalar x = truncated(a), y = o.truncated(a);
  if (x.kind_ == Kind::ApproxZero && y.kind_ == Kind::ApproxZero)
    return approx_zero(prime_, a);
  if (x.kind_ == Kind::ApproxZero) return y;
  if (y.kind_ == Kind::ApproxZero) return x;

  long m = std::min(x.val_, y.val_);
  long e = a - m;  // digits available above p^m
  BigInt mod = pow_p(prime_, e);
  BigInt sum = (x.unit_ * pow_p(prime_, x.val_ - m) + y.unit_ * pow_p(prime_, y.val_ - m)) % mod;
  if (sum < 0) sum += mod;
  if (sum == 0) return approx_zero(prime_, a);
  long t = val_p_remove(sum, prime_);
  if (m + t >= a) return approx_zero(prime_, a);
  return from_parts(prime_, m + t, sum, a - m - t);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_prime(*this, o);
  if (is_exact_zero() || o.is_exact_zero()) return zero(prime_);
  if (kind_ == Kind::Exact && o.kind_ == Kind::Exact)
    return exact(prime_, exact_ * o.exact_);

  // at least one inexact operand
  long va = valuation().value_or(0), vb = o.valuation().value_or(0);
  if (kind_ == Kind::ApproxZero || o.kind_ == Kind::ApproxZero)
    return approx_zero(prime_, va + vb);

  long ra = (kind_ == Kind::Tracked) ? rel_ : kInfPrec;
  long rb = (o.kind_ == Kind::Tracked) ? o.rel_ : kInfPrec;
  long r = std::min(ra, rb);
  Scalar x = truncated(va + r), y = o.truncated(vb + r);
  BigInt u = x.unit_ * y.unit_ % pow_p(prime_, r);
  return from_parts(prime_, va + vb, u, r);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_prime(*this, o);
  if (!o.certainly_nonzero())
    throw DivisionByZeroOrImprecise("divisor indistinguishable from zero: " + o.str());
  if (kind_ == Kind::Exact && o.kind_ == Kind::Exact)
    return exact(prime_, exact_ / o.exact_);
  if (is_exact_zero()) return zero(prime_);

  long vb = *o.valuation();
  if (kind_ == Kind::ApproxZero) return approx_zero(prime_, obound_ - vb);

  long va = *valuation();
  long ra = (kind_ == Kind::Tracked) ? rel_ : kInfPrec;
  long rb = (o.kind_ == Kind::Tracked) ? o.rel_ : kInfPrec;
  long r = std::min(ra, rb);
  Scalar x = truncated(va + r), y = o.truncated(vb + r);
  BigInt u = x.unit_ * inv_mod(y.unit_, prime_, r) % pow_p(prime_, r);
  return from_parts(prime_, va - vb, u, r);
}

bool Scalar::eq_to_precision(const Scalar& x, const Scalar& y, long n) {
  check_same_prime(x, y);
  Scalar d = x - y;
  switch (d.kind_) {
    case Kind::Exact: return d.exact_ == 0 || val_p(d.exact_, x.prime_) >= n;
    case Kind::Tracked: return d.val_ >= n;
    case Kind::ApproxZero:
      if (d.obound_ >= n) return true;
      throw InsufficientPrecision("difference is O(p^" + std::to_string(d.obound_) +
                                  "), cannot compare at precision " + std::to_string(n));
  }
  return false;
}

std::string Scalar::str() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Exact:
      if (exact_ == 0) {
        os << "0";
      } else {
        long v = val_p(exact_, prime_);
        Rational u = exact_;
        if (v > 0) u /= Rational(pow_p(prime_, v));
        if (v < 0) u *= Rational(pow_p(prime_, -v));
        os << prime_ << "^" << v << " * " << u;
      }
      break;
    case Kind::Tracked:
      os << prime_ << "^" << val_ << " * " << unit_ << " + O(" << prime_ << "^" << (val_ + rel_)
         << ")";
      break;
    case Kind::ApproxZero:
      os << "O(" << prime_ << "^" << obound_ << ")";
      break;
  }
  return os.str();
}

}  // namespace coadm
