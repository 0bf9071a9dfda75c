#include "coadm/op.hpp"

#include <algorithm>
#include <sstream>

namespace coadm {

Op::Op(SpacePtr domain, SpacePtr codomain, std::vector<Vec> cols)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), cols_(std::move(cols)) {
  if (static_cast<int>(cols_.size()) != domain_->rank())
    throw Error("Op: column count != domain rank");
  for (const auto& c : cols_)
    if (!c.space()->same_geometry(*codomain_)) throw Error("Op: column in wrong space");
  col_tails_.assign(cols_.size(), Rational(0));
}

Op Op::zero(const SpacePtr& domain, const SpacePtr& codomain) {
  std::vector<Vec> cols(domain->rank(), Vec(codomain));
  return Op(domain, codomain, std::move(cols));
}

Op Op::identity(const SpacePtr& v) {
  std::vector<Vec> cols;
  cols.reserve(v->rank());
  for (int i = 0; i < v->rank(); ++i) cols.push_back(Vec::unit(v, i));
  return Op(v, v, std::move(cols));
}

Op Op::from_columns(const SpacePtr& domain, const SpacePtr& codomain,
                    const std::function<Vec(int)>& col) {
  std::vector<Vec> cols;
  cols.reserve(domain->rank());
  for (int i = 0; i < domain->rank(); ++i) cols.push_back(col(i));
  return Op(domain, codomain, std::move(cols));
}

Op Op::flip(const SpacePtr& v, const SpacePtr& w) {
  auto dom = Space::tensor(v, w);
  auto cod = Space::tensor(w, v);
  return from_columns(dom, cod, [&](int k) {
    auto [i, j] = dom->unflat(k);
    return Vec::unit(cod, cod->flat(j, i));
  });
}

Op Op::with_tail(std::vector<Rational> col_tails, Rational global) const {
  if (static_cast<int>(col_tails.size()) != domain_->rank())
    throw Error("with_tail: wrong number of column tails");
  Op r = *this;
  r.col_tails_ = std::move(col_tails);
  r.tail_ = std::move(global);
  return r;
}

Op Op::with_uniform_tail(const Rational& t) const {
  Op r = *this;
  r.col_tails_.assign(cols_.size(), t);
  r.tail_ = t;
  return r;
}

Vec Op::apply(const Vec& v) const {
  if (!v.space()->same_geometry(*domain_)) throw Error("Op::apply: domain mismatch");
  Vec acc(codomain_);
  for (const auto& [i, c] : v.coeffs()) acc = acc + cols_[i].scaled(c);
  return acc;
}

Op Op::compose(const Op& inner) const {
  if (!inner.codomain_->same_geometry(*domain_)) throw Error("Op::compose: space mismatch");
  std::vector<Vec> cols;
  std::vector<Rational> tails;
  cols.reserve(inner.cols_.size());
  tails.reserve(inner.cols_.size());
  Rational outer_bound = true_norm_bound();
  for (int i = 0; i < inner.domain_->rank(); ++i) {
    cols.push_back(apply(inner.cols_[i]));
    // discarded(this∘inner) e_i = this(discarded inner e_i) + discarded(this)(inner e_i)
    Rational t = outer_bound * inner.col_tails_[i];
    for (const auto& [j, c] : inner.cols_[i].coeffs())
      t = std::max(t, Rational(c.norm() * col_tails_[j]));
    tails.push_back(std::move(t));
  }
  Op r(inner.domain_, codomain_, std::move(cols));
  r.col_tails_ = std::move(tails);
  r.tail_ = std::max(outer_bound * inner.tail_, tail_ * (inner.norm() + inner.tail_));
  return r;
}

Op Op::operator+(const Op& o) const {
  if (!domain_->same_geometry(*o.domain_) || !codomain_->same_geometry(*o.codomain_))
    throw Error("Op add: space mismatch");
  std::vector<Vec> cols;
  cols.reserve(cols_.size());
  for (size_t i = 0; i < cols_.size(); ++i) cols.push_back(cols_[i] + o.cols_[i]);
  Op r(domain_, codomain_, std::move(cols));
  for (size_t i = 0; i < cols_.size(); ++i)
    r.col_tails_[i] = std::max(col_tails_[i], o.col_tails_[i]);
  r.tail_ = std::max(tail_, o.tail_);
  return r;
}

Op Op::operator-(const Op& o) const { return *this + o.scaled(-Scalar::one(domain_->prime())); }

Op Op::scaled(const Scalar& s) const {
  std::vector<Vec> cols;
  cols.reserve(cols_.size());
  for (const auto& c : cols_) cols.push_back(c.scaled(s));
  Op r(domain_, codomain_, std::move(cols));
  Rational ns = s.norm();
  for (size_t i = 0; i < cols_.size(); ++i) r.col_tails_[i] = ns * col_tails_[i];
  r.tail_ = ns * tail_;
  return r;
}

Op Op::tensor(const Op& s, const Op& t) {
  auto dom = Space::tensor(s.domain_, t.domain_);
  auto cod = Space::tensor(s.codomain_, t.codomain_);
  std::vector<Vec> cols;
  std::vector<Rational> tails;
  cols.reserve(dom->rank());
  tails.reserve(dom->rank());
  Rational sb = s.true_norm_bound();
  for (int i = 0; i < s.domain_->rank(); ++i)
    for (int j = 0; j < t.domain_->rank(); ++j) {
      cols.push_back(Vec::tensor(s.cols_[i], t.cols_[j], cod));
      // discarded((s(x)t) e_ij) = s_i (x) disc_t_j + disc_s_i (x) t_j + disc (x) disc
      Rational tail =
          std::max(s.col_tails_[i] * std::max(t.cols_[j].norm(), t.col_tails_[j]),
                   t.col_tails_[j] * std::max(s.cols_[i].norm(), s.col_tails_[i]));
      tails.push_back(std::move(tail));
    }
  Op r(dom, cod, std::move(cols));
  r.col_tails_ = std::move(tails);
  r.tail_ = std::max(sb * t.tail_, s.tail_ * (t.norm() + t.tail_));
  return r;
}

Op Op::transpose() const {
  auto dom = Space::dual(codomain_);
  auto cod = Space::dual(domain_);
  // column j of T' collects row j of T
  std::vector<std::vector<std::pair<int, Scalar>>> rows(codomain_->rank());
  for (int i = 0; i < domain_->rank(); ++i)
    for (const auto& [j, c] : cols_[i].coeffs()) rows[j].emplace_back(i, c);
  std::vector<Vec> cols;
  cols.reserve(rows.size());
  for (auto& r : rows) cols.push_back(Vec(cod, std::move(r)));
  Op r(dom, cod, std::move(cols));
  // the transpose mixes rows and columns, so only the global bound transfers
  r.tail_ = tail_;
  r.col_tails_.assign(r.cols_.size(), tail_);
  return r;
}

Rational Op::norm() const {
  Rational m(0);
  for (int i = 0; i < domain_->rank(); ++i)
    m = std::max(m, Rational(cols_[i].norm() / domain_->weight(i)));
  return m;
}

Rational Op::true_norm_bound() const { return std::max(norm(), tail_); }

std::string Op::str() const {
  std::ostringstream os;
  os << domain_->name() << " -> " << codomain_->name();
  for (int i = 0; i < domain_->rank(); ++i)
    os << "\n  " << domain_->label(i) << " |-> " << cols_[i].str();
  return os.str();
}

Op contract_left(const Op& phi, const SpacePtr& vw) {
  if (!vw->is_tensor()) throw Error("contract_left: not a tensor space");
  const auto& w = vw->tensor_right();
  Op r = Op::from_columns(vw, w, [&](int k) {
    auto [i, j] = vw->unflat(k);
    return Vec::unit(w, j).scaled(phi.column(i).coeff(0));
  });
  std::vector<Rational> tails;
  tails.reserve(vw->rank());
  for (int k = 0; k < vw->rank(); ++k) {
    auto [i, j] = vw->unflat(k);
    tails.push_back(phi.tail(i) * w->weight(j));
  }
  return r.with_tail(std::move(tails), phi.tail());
}

Op contract_right(const Op& phi, const SpacePtr& vw) {
  if (!vw->is_tensor()) throw Error("contract_right: not a tensor space");
  const auto& v = vw->tensor_left();
  Op r = Op::from_columns(vw, v, [&](int k) {
    auto [i, j] = vw->unflat(k);
    return Vec::unit(v, i).scaled(phi.column(j).coeff(0));
  });
  std::vector<Rational> tails;
  tails.reserve(vw->rank());
  for (int k = 0; k < vw->rank(); ++k) {
    auto [i, j] = vw->unflat(k);
    tails.push_back(phi.tail(j) * v->weight(i));
  }
  return r.with_tail(std::move(tails), phi.tail());
}

Op insert_left(const Op& u, const SpacePtr& w) {
  auto cod = Space::tensor(u.codomain(), w);
  const Vec one = u.column(0);
  return Op::from_columns(w, cod,
                          [&](int j) { return Vec::tensor(one, Vec::unit(w, j), cod); });
}

Op insert_right(const Op& u, const SpacePtr& v) {
  auto cod = Space::tensor(v, u.codomain());
  const Vec one = u.column(0);
  return Op::from_columns(v, cod,
                          [&](int i) { return Vec::tensor(Vec::unit(v, i), one, cod); });
}

Op::CompactnessMargin Op::compactness_margin(long threshold_exp) const {
  CompactnessMargin m;
  m.threshold_exp = threshold_exp;
  m.tail = tail_;
  for (int i = 0; i < domain_->rank(); ++i)
    m.ratios_sorted.push_back(cols_[i].norm() / domain_->weight(i));
  std::sort(m.ratios_sorted.rbegin(), m.ratios_sorted.rend());
  Rational threshold = threshold_exp >= 0
                           ? Rational(1, pow_p(domain_->prime(), threshold_exp))
                           : Rational(pow_p(domain_->prime(), -threshold_exp));
  m.compact_at_truncation =
      !m.ratios_sorted.empty() && m.ratios_sorted.back() <= threshold && m.tail <= threshold;
  return m;
}

}  // namespace coadm
