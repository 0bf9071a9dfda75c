#include "coadm/models.hpp"

namespace coadm {

std::vector<BigInt> mahler_expand(const std::vector<BigInt>& values) {
  std::vector<BigInt> diff = values, out;
  out.reserve(values.size());
  while (!diff.empty()) {
    out.push_back(diff.front());
    for (size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }
  return out;
}

BigInt binomial_int(const BigInt& x, int k) {
  BigInt num = 1;
  for (int i = 0; i < k; ++i) num *= (x - i);
  BigInt den = 1;
  for (int i = 2; i <= k; ++i) den *= i;
  return num / den;  // exact: product of k consecutive integers
}

Coalgebra mahler_coalgebra(long p, int rank, std::vector<long> weight_exps) {
  if (weight_exps.empty()) weight_exps.assign(rank, 0);
  std::vector<std::string> labels;
  for (int i = 0; i < rank; ++i) labels.push_back("e" + std::to_string(i));
  auto space = Space::make(p, "Mahler" + std::to_string(rank), labels, weight_exps);
  auto sq = Space::tensor(space, space);

  Op comult = Op::from_columns(space, sq, [&](int n) {
    std::vector<std::pair<int, Scalar>> cs;
    for (int i = 0; i <= n; ++i) cs.emplace_back(sq->flat(i, n - i), Scalar::one(p));
    return Vec(sq, std::move(cs));
  });
  auto line = Space::line(p);
  Op counit = Op::from_columns(space, line, [&](int n) {
    return n == 0 ? Vec::unit(line, 0) : Vec(line);
  });
  return Coalgebra{space, comult, counit, "mahler(" + std::to_string(rank) + ")"};
}

HopfAlgebra mahler_hopf(long p, int rank, std::vector<long> weight_exps) {
  Coalgebra c = mahler_coalgebra(p, rank, std::move(weight_exps));
  auto space = c.space;
  auto sq = c.square();

  std::vector<Rational> tails;
  Op mult = Op::from_columns(sq, space, [&](int k) {
    auto [i, j] = sq->unflat(k);
    std::vector<BigInt> table;
    table.reserve(rank);
    for (int x = 0; x < rank; ++x)
      table.push_back(binomial_int(x, i) * binomial_int(x, j));
    auto coeffs = mahler_expand(table);
    std::vector<std::pair<int, Scalar>> cs;
    for (int t = 0; t < rank; ++t)
      if (coeffs[t] != 0) cs.emplace_back(t, Scalar::exact(p, Rational(coeffs[t])));
    return Vec(space, std::move(cs));
  });
  for (int k = 0; k < sq->rank(); ++k) {
    auto [i, j] = sq->unflat(k);
    // binomial products have degree i+j; coefficients above the cut are
    // integers, norm <= 1
    tails.push_back(i + j >= rank ? Rational(1) : Rational(0));
  }
  mult = mult.with_tail(std::move(tails), Rational(1));

  auto line = Space::line(p);
  Op unit = Op::from_columns(line, space, [&](int) { return Vec::unit(space, 0); });

  Op antipode = Op::from_columns(space, space, [&](int n) {
    // (Sf)(x) = f(-x); binomial(-x,n) has degree n, exact at the cut
    std::vector<BigInt> table;
    table.reserve(rank);
    for (int x = 0; x < rank; ++x) table.push_back(binomial_int(BigInt(-x), n));
    auto coeffs = mahler_expand(table);
    std::vector<std::pair<int, Scalar>> cs;
    for (int t = 0; t < rank; ++t)
      if (coeffs[t] != 0) cs.emplace_back(t, Scalar::exact(p, Rational(coeffs[t])));
    return Vec(space, std::move(cs));
  });

  return HopfAlgebra{space,   c.comult, c.counit, mult, unit, antipode,
                     c.name};
}

Coalgebra matrix_coalgebra(long p, int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) labels.push_back("e" + std::to_string(i) + std::to_string(j));
  auto space = Space::make(p, "Mc" + std::to_string(n), labels);
  auto sq = Space::tensor(space, space);
  auto idx = [n](int i, int j) { return i * n + j; };

  Op comult = Op::from_columns(space, sq, [&](int c) {
    int i = c / n, j = c % n;
    std::vector<std::pair<int, Scalar>> cs;
    for (int k = 0; k < n; ++k)
      cs.emplace_back(sq->flat(idx(i, k), idx(k, j)), Scalar::one(p));
    return Vec(sq, std::move(cs));
  });
  auto line = Space::line(p);
  Op counit = Op::from_columns(space, line, [&](int c) {
    return (c / n == c % n) ? Vec::unit(line, 0) : Vec(line);
  });
  return Coalgebra{space, comult, counit, "matrix_coalgebra(" + std::to_string(n) + ")"};
}

HopfAlgebra group_algebra_cyclic(long p, int m) {
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back("g" + std::to_string(i));
  auto space = Space::make(p, "KZ" + std::to_string(m), labels);
  auto sq = Space::tensor(space, space);
  auto line = Space::line(p);

  Op comult = Op::from_columns(space, sq,
                               [&](int i) { return Vec::unit(sq, sq->flat(i, i)); });
  Op counit = Op::from_columns(space, line, [&](int) { return Vec::unit(line, 0); });
  Op mult = Op::from_columns(sq, space, [&](int k) {
    auto [i, j] = sq->unflat(k);
    return Vec::unit(space, (i + j) % m);
  });
  Op unit = Op::from_columns(line, space, [&](int) { return Vec::unit(space, 0); });
  Op antipode =
      Op::from_columns(space, space, [&](int i) { return Vec::unit(space, (m - i) % m); });
  return HopfAlgebra{space, comult, counit, mult, unit, antipode,
                     "group_algebra(Z/" + std::to_string(m) + ")"};
}

Coalgebra coalgebra_direct_sum(const Coalgebra& a, const Coalgebra& b) {
  auto space = Space::direct_sum(a.space, b.space);
  auto sq = Space::tensor(space, space);
  const int ra = a.space->rank();
  auto line = Space::line(a.prime());

  auto lift_tensor = [&](const Vec& t, int offset_l, int offset_r, const SpacePtr& small_sq) {
    std::vector<std::pair<int, Scalar>> cs;
    for (const auto& [ij, c] : t.coeffs()) {
      auto [i, j] = small_sq->unflat(ij);
      cs.emplace_back(sq->flat(i + offset_l, j + offset_r), c);
    }
    return Vec(sq, std::move(cs));
  };

  Op comult = Op::from_columns(space, sq, [&](int k) {
    if (k < ra) return lift_tensor(a.comult.column(k), 0, 0, a.square());
    return lift_tensor(b.comult.column(k - ra), ra, ra, b.square());
  });
  Op counit = Op::from_columns(space, line, [&](int k) {
    Vec v = (k < ra) ? a.counit.column(k) : b.counit.column(k - ra);
    return Vec(line, v.coeffs());
  });
  return Coalgebra{space, comult, counit, a.name + "+" + b.name};
}

Coalgebra grouplike_line(long p, const std::string& label) {
  auto space = Space::make(p, "K" + label, {label});
  auto sq = Space::tensor(space, space);
  auto line = Space::line(p);
  Op comult = Op::from_columns(space, sq, [&](int) { return Vec::unit(sq, 0); });
  Op counit = Op::from_columns(space, line, [&](int) { return Vec::unit(line, 0); });
  return Coalgebra{space, comult, counit, "grouplike"};
}

}  // namespace coadm
