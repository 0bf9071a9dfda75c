#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coadm/solve.hpp"
#include "oracles.hpp"

#include <random>

using namespace coadm;

namespace {

const long P = 5;

SpacePtr unit_space(int n, const std::string& name = "V") {
  std::vector<std::string> ls;
  for (int i = 0; i < n; ++i) ls.push_back("x" + std::to_string(i));
  return Space::make(P, name, ls);
}

Op op_from_ints(const SpacePtr& dom, const SpacePtr& cod,
                const std::vector<std::vector<long>>& rows) {
  return Op::from_columns(dom, cod, [&](int j) {
    std::vector<std::pair<int, Scalar>> cs;
    for (int i = 0; i < cod->rank(); ++i)
      if (rows[i][j] != 0) cs.emplace_back(i, Scalar::exact(P, rows[i][j]));
    return Vec(cod, std::move(cs));
  });
}

}  // namespace

TEST_CASE("vector norms") {
  auto v3 = unit_space(3);
  Vec v(v3, {{0, Scalar::exact(P, 5)}, {1, Scalar::exact(P, 1)}, {2, Scalar::exact(P, 25)}});
  CHECK(v.norm() == Rational(1));
  CHECK(Vec(v3).norm() == 0);

  auto w = Space::make(P, "W", {"e0", "e1", "e2"}, {0, -1, -2});
  CHECK(Vec::unit(w, 2).norm() == Rational(1, 25));
}

TEST_CASE("operator norms") {
  auto v3 = unit_space(3);
  CHECK(Op::identity(v3).norm() == Rational(1));
  Op diag = op_from_ints(v3, v3, {{1, 0, 0}, {0, 5, 0}, {0, 0, 25}});
  CHECK(diag.norm() == Rational(1));
  auto k = Space::line(P);
  Op inv5 = Op::from_columns(k, k, [&](int) {
    return Vec::unit(k, 0).scaled(Scalar::exact(P, Rational(1, 5)));
  });
  CHECK(inv5.norm() == Rational(5));
}

TEST_CASE("tensor spaces multiply ranks and weights") {
  auto a = Space::make(P, "A", {"a0", "a1"}, {0, -1});
  auto b = Space::make(P, "B", {"b0", "b1"}, {0, -1});
  auto t = Space::tensor(a, b);
  CHECK(t->rank() == 4);
  std::vector<long> exps;
  for (int i = 0; i < 4; ++i) exps.push_back(t->weight_exp(i));
  CHECK(exps == std::vector<long>{0, -1, -1, -2});

  auto v = unit_space(2);
  auto vk = Space::tensor(v, Space::line(P));
  CHECK(vk->rank() == v->rank());
  for (int i = 0; i < v->rank(); ++i) CHECK(vk->weight_exp(i) == v->weight_exp(i));
}

TEST_CASE("elementary tensor norm is multiplicative") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> val(-200, 200);
  auto a = Space::make(P, "A", {"a0", "a1", "a2"}, {0, -1, 1});
  auto t = Space::tensor(a, a);
  for (int it = 0; it < 100; ++it) {
    std::vector<std::pair<int, Scalar>> vc, wc;
    for (int i = 0; i < 3; ++i) {
      long x = val(rng), y = val(rng);
      if (x) vc.emplace_back(i, Scalar::exact(P, x));
      if (y) wc.emplace_back(i, Scalar::exact(P, y));
    }
    Vec v(a, vc), w(a, wc);
    CHECK(Vec::tensor(v, w, t).norm() == v.norm() * w.norm());
  }
}

TEST_CASE("tensor of operators and flip") {
  auto v2 = unit_space(2);
  Op id = Op::identity(v2);
  Op idid = Op::tensor(id, id);
  CHECK((idid - Op::identity(Space::tensor(v2, v2))).norm() == 0);

  Op fl = Op::flip(v2, v2);
  Op flfl = fl.compose(fl);
  CHECK((flfl - Op::identity(Space::tensor(v2, v2))).norm() == 0);
}

TEST_CASE("rank-one tensor operator equals the dense outer product oracle") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> val(-9, 9);
  auto v2 = unit_space(2, "V");
  auto w2 = unit_space(2, "W");
  for (int it = 0; it < 50; ++it) {
    std::vector<std::vector<long>> sm(2, std::vector<long>(2)), tm(2, std::vector<long>(2));
    for (auto& r : sm)
      for (auto& x : r) x = val(rng);
    for (auto& r : tm)
      for (auto& x : r) x = val(rng);
    Op s = op_from_ints(v2, v2, sm), t = op_from_ints(w2, w2, tm);
    Op st = Op::tensor(s, t);
    // dense oracle: (s⊗t)[(i,k),(j,l)] = s[i][j] * t[k][l]
    auto dom = st.domain();
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l) {
        const Vec& col = st.column(dom->flat(j, l));
        for (int i = 0; i < 2; ++i)
          for (int k = 0; k < 2; ++k) {
            Rational want(sm[i][j] * tm[k][l]);
            CHECK(col.coeff(st.codomain()->flat(i, k)).lift() == want);
          }
      }
  }
}

TEST_CASE("dual spaces and transposes") {
  auto w = Space::make(P, "W", {"e0", "e1"}, {0, -1});
  auto dw = Space::dual(w);
  CHECK(dw->weight_exp(0) == 0);
  CHECK(dw->weight_exp(1) == 1);

  auto v2 = unit_space(2);
  Op n = op_from_ints(v2, v2, {{0, 1}, {0, 0}});
  Op nt = n.transpose();
  CHECK(nt.column(0).coeff(1).lift() == Rational(1));
  CHECK(nt.column(1).empty());
  // isometric involution
  CHECK(nt.norm() == n.norm());
  Op ntt = nt.transpose();
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i)
      CHECK(ntt.column(j).coeff(i).lift() == n.column(j).coeff(i).lift());
}

TEST_CASE("kernel: worked examples") {
  auto v2 = unit_space(2);

  Op ones = op_from_ints(v2, v2, {{1, 1}, {1, 1}});
  auto k1 = kernel(ones, 20);
  REQUIRE(k1.size() == 1);
  CHECK(k1[0].coeff(0).lift() == Rational(1));
  CHECK(k1[0].coeff(1).lift() == Rational(-1));

  Op m2 = op_from_ints(v2, v2, {{5, 1}, {0, 0}});
  auto k2 = kernel(m2, 20);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].coeff(0).lift() == Rational(1));
  CHECK(k2[0].coeff(1).lift() == Rational(-5));

  Op inv = op_from_ints(v2, v2, {{1, 2}, {3, 4}});
  CHECK(kernel(inv, 20).empty());
}

TEST_CASE("kernel matches the exact rational oracle on random matrices (seeded)") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<long> val(-30, 30);
  for (int it = 0; it < 60; ++it) {
    int r = dim(rng), c = dim(rng);
    oracle::Mat om(r, std::vector<Rational>(c));
    std::vector<std::vector<long>> ints(r, std::vector<long>(c));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        ints[i][j] = val(rng);
        om[i][j] = ints[i][j];
      }
    auto dom = unit_space(c, "D");
    auto cod = unit_space(r, "C");
    Op T = op_from_ints(dom, cod, ints);

    auto got = kernel(T, 20);
    auto want = oracle::kernel(om, P);
    REQUIRE(got.size() == want.size());
    for (size_t k = 0; k < got.size(); ++k)
      for (int j = 0; j < c; ++j) {
        Scalar g = got[k].coeff(j);
        Rational w = want[k][j];
        if (w == 0) {
          CHECK(g.bounded_by(20));
        } else {
          long shift = std::min<long>(0, oracle::vp(w, P));
          // compare residues of g and w mod p^20 (after clearing p-denominators)
          CHECK(Scalar::eq_to_precision(g, Scalar::exact(P, w), 20 + shift));
        }
      }
  }
}

TEST_CASE("||Tv|| <= ||T|| ||v|| (seeded)") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long> val(-100, 100);
  auto v4 = unit_space(4);
  for (int it = 0; it < 60; ++it) {
    std::vector<std::vector<long>> m(4, std::vector<long>(4));
    for (auto& row : m)
      for (auto& x : row) x = val(rng);
    Op T = op_from_ints(v4, v4, m);
    std::vector<std::pair<int, Scalar>> vc;
    for (int i = 0; i < 4; ++i) {
      long x = val(rng);
      if (x) vc.emplace_back(i, Scalar::exact(P, x));
    }
    Vec v(v4, vc);
    CHECK(T.apply(v).norm() <= T.norm() * v.norm());
  }
}

TEST_CASE("precision exhaustion surfaces") {
  auto v1 = unit_space(1);
  Op T = Op::from_columns(v1, v1, [&](int) {
    return Vec::unit(v1, 0).scaled(Scalar::approx_zero(P, 10));
  });
  CHECK_THROWS_AS(kernel(T, 20), PrecisionExhausted);
}

TEST_CASE("compactness margin") {
  auto w = Space::make(P, "W", {"e0", "e1", "e2", "e3"}, {0, 0, 0, 0});
  // diagonal with norm ratios (1/p)^k, i.e. entries p^k
  Op dec = Op::from_columns(w, w, [&](int i) {
    return Vec::unit(w, i).scaled(Scalar::exact(P, Rational(pow_p(P, i))));
  });
  auto m1 = dec.compactness_margin();
  CHECK(m1.compact_at_truncation);
  CHECK(m1.ratios_sorted.front() == Rational(1));
  CHECK(m1.ratios_sorted.back() == Rational(1, 125));

  auto m2 = Op::identity(w).compactness_margin();
  CHECK(!m2.compact_at_truncation);

  // norm ratios 1,1,1,1/p,1/p^2,...: reach the threshold within range
  auto w6 = Space::make(P, "W6", {"a", "b", "c", "d", "e", "f"}, std::vector<long>(6, 0));
  Op mix = Op::from_columns(w6, w6, [&](int i) {
    long e = std::max(0, i - 2);
    return Vec::unit(w6, i).scaled(Scalar::exact(P, Rational(pow_p(P, e))));
  });
  CHECK(mix.compactness_margin().compact_at_truncation);
}

TEST_CASE("quotient by span") {
  auto v3 = unit_space(3);
  Vec g(v3, {{0, Scalar::one(P)}, {1, Scalar::exact(P, -1)}});
  Quotient q = quotient_by_span(v3, {g}, 20, "Q");
  CHECK(q.space->rank() == 2);
  // projection ∘ section = id
  Op ps = q.projection.compose(q.section) - Op::identity(q.space);
  CHECK(ps.norm() == 0);
  // the generator dies
  CHECK(q.projection.apply(g).bounded_by(20));
}

TEST_CASE("op_solve finds intertwiners") {
  // maps T with T∘N = N∘T for the nilpotent shift N: span{I, N}
  auto v2 = unit_space(2);
  Op n = op_from_ints(v2, v2, {{0, 1}, {0, 0}});
  auto sols = op_solve(v2, v2, [&](const Op& t) { return t.compose(n) - n.compose(t); }, 20);
  CHECK(sols.size() == 2);
}
