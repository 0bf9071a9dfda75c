#include "coadm/space.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace coadm {

SpacePtr Space::make(long prime, std::string name, std::vector<std::string> labels,
                     std::vector<long> weight_exps) {
  if (labels.size() != weight_exps.size())
    throw Error("Space::make: labels/weights size mismatch");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error("Space::make: duplicate label " + l);
  auto s = std::shared_ptr<Space>(new Space());
  s->prime_ = prime;
  s->name_ = std::move(name);
  s->labels_ = std::move(labels);
  s->weight_exps_ = std::move(weight_exps);
  return s;
}

SpacePtr Space::make(long prime, std::string name, std::vector<std::string> labels) {
  std::vector<long> w(labels.size(), 0);
  return make(prime, std::move(name), std::move(labels), std::move(w));
}

SpacePtr Space::line(long prime) { return make(prime, "K", {"1"}, {0}); }

SpacePtr Space::tensor(const SpacePtr& a, const SpacePtr& b) {
  if (a->prime_ != b->prime_) throw PrimeMismatch("tensor of spaces over different primes");
  auto s = std::shared_ptr<Space>(new Space());
  s->prime_ = a->prime_;
  s->name_ = "(" + a->name_ + ")*(" + b->name_ + ")";
  s->labels_.reserve(static_cast<size_t>(a->rank()) * b->rank());
  s->weight_exps_.reserve(s->labels_.capacity());
  for (int i = 0; i < a->rank(); ++i)
    for (int j = 0; j < b->rank(); ++j) {
      s->labels_.push_back("(" + a->label(i) + "," + b->label(j) + ")");
      s->weight_exps_.push_back(a->weight_exp(i) + b->weight_exp(j));
    }
  s->left_ = a;
  s->right_ = b;
  return s;
}

SpacePtr Space::dual(const SpacePtr& v) {
  auto s = std::shared_ptr<Space>(new Space());
  s->prime_ = v->prime_;
  s->name_ = v->name_ + "'";
  s->labels_.reserve(v->rank());
  s->weight_exps_.reserve(v->rank());
  for (int i = 0; i < v->rank(); ++i) {
    s->labels_.push_back(v->label(i) + "'");
    s->weight_exps_.push_back(-v->weight_exp(i));
  }
  return s;
}

SpacePtr Space::power(const SpacePtr& v, int n) {
  auto s = std::shared_ptr<Space>(new Space());
  s->prime_ = v->prime_;
  s->name_ = v->name_ + "^" + std::to_string(n);
  for (int c = 0; c < n; ++c)
    for (int i = 0; i < v->rank(); ++i) {
      s->labels_.push_back(v->label(i) + "@" + std::to_string(c));
      s->weight_exps_.push_back(v->weight_exp(i));
    }
  return s;
}

SpacePtr Space::direct_sum(const SpacePtr& a, const SpacePtr& b) {
  if (a->prime_ != b->prime_) throw PrimeMismatch("direct sum over different primes");
  auto s = std::shared_ptr<Space>(new Space());
  s->prime_ = a->prime_;
  s->name_ = a->name_ + "+" + b->name_;
  for (int i = 0; i < a->rank(); ++i) {
    s->labels_.push_back("l:" + a->label(i));
    s->weight_exps_.push_back(a->weight_exp(i));
  }
  for (int i = 0; i < b->rank(); ++i) {
    s->labels_.push_back("r:" + b->label(i));
    s->weight_exps_.push_back(b->weight_exp(i));
  }
  return s;
}

Rational Space::weight(int i) const {
  long e = weight_exps_[i];
  if (e >= 0) return Rational(pow_p(prime_, e));
  return Rational(1, pow_p(prime_, -e));
}

int Space::index_of(const std::string& label) const {
  for (int i = 0; i < rank(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

bool Space::same_geometry(const Space& o) const {
  return prime_ == o.prime_ && weight_exps_ == o.weight_exps_;
}

Vec::Vec(SpacePtr space, std::vector<std::pair<int, Scalar>> coeffs) : space_(std::move(space)) {
  std::sort(coeffs.begin(), coeffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  coeffs_.reserve(coeffs.size());
  for (auto& [i, c] : coeffs) {
    if (i < 0 || i >= space_->rank()) throw Error("Vec: index out of range");
    if (!coeffs_.empty() && coeffs_.back().first == i) throw Error("Vec: duplicate index");
    if (!c.is_exact_zero()) coeffs_.emplace_back(i, std::move(c));
  }
}

Vec Vec::unit(const SpacePtr& space, int i) {
  return Vec(space, {{i, Scalar::one(space->prime())}});
}

Vec Vec::unit(const SpacePtr& space, const std::string& label) {
  int i = space->index_of(label);
  if (i < 0) throw Error("Vec::unit: unknown label " + label);
  return unit(space, i);
}

Scalar Vec::coeff(int i) const {
  for (const auto& [j, c] : coeffs_)
    if (j == i) return c;
  return Scalar::zero(space_->prime());
}

Rational Vec::norm() const {
  Rational m(0);
  for (const auto& [i, c] : coeffs_) m = std::max(m, Rational(c.norm() * space_->weight(i)));
  return m;
}

bool Vec::bounded_by(long n) const {
  // |c| * p^w <= p^-n  <=>  val(c) >= n + w
  for (const auto& [i, c] : coeffs_)
    if (!c.bounded_by(n + space_->weight_exp(i))) return false;
  return true;
}

bool Vec::is_exact() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& p) { return p.second.is_exact(); });
}

Vec Vec::operator+(const Vec& o) const {
  if (!space_->same_geometry(*o.space_)) throw Error("Vec add: space mismatch");
  std::vector<std::pair<int, Scalar>> out;
  out.reserve(coeffs_.size() + o.coeffs_.size());
  size_t a = 0, b = 0;
  while (a < coeffs_.size() || b < o.coeffs_.size()) {
    if (b == o.coeffs_.size() || (a < coeffs_.size() && coeffs_[a].first < o.coeffs_[b].first)) {
      out.push_back(coeffs_[a++]);
    } else if (a == coeffs_.size() || o.coeffs_[b].first < coeffs_[a].first) {
      out.push_back(o.coeffs_[b++]);
    } else {
      Scalar s = coeffs_[a].second + o.coeffs_[b].second;
      if (!s.is_exact_zero()) out.emplace_back(coeffs_[a].first, std::move(s));
      ++a;
      ++b;
    }
  }
  Vec r(space_);
  r.coeffs_ = std::move(out);
  return r;
}

Vec Vec::operator-() const {
  Vec r(space_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& [i, c] : coeffs_) r.coeffs_.emplace_back(i, -c);
  return r;
}

Vec Vec::operator-(const Vec& o) const { return *this + (-o); }

Vec Vec::scaled(const Scalar& s) const {
  if (s.is_exact_zero()) return Vec(space_);
  Vec r(space_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& [i, c] : coeffs_) {
    Scalar sc = c * s;
    if (!sc.is_exact_zero()) r.coeffs_.emplace_back(i, std::move(sc));
  }
  return r;
}

Vec Vec::tensor(const Vec& a, const Vec& b, const SpacePtr& target) {
  if (!target->is_tensor()) throw Error("Vec::tensor: target is not a tensor space");
  std::vector<std::pair<int, Scalar>> out;
  out.reserve(a.coeffs_.size() * b.coeffs_.size());
  for (const auto& [i, ca] : a.coeffs_)
    for (const auto& [j, cb] : b.coeffs_) {
      Scalar s = ca * cb;
      if (!s.is_exact_zero()) out.emplace_back(target->flat(i, j), std::move(s));
    }
  return Vec(target, std::move(out));
}

Vec Vec::pruned(long n) const {
  Vec r(space_);
  for (const auto& [i, c] : coeffs_)
    if (!c.bounded_by(n + space_->weight_exp(i))) r.coeffs_.emplace_back(i, c);
  return r;
}

std::string Vec::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")*" << space_->label(i);
    first = false;
  }
  return os.str();
}

}  // namespace coadm
