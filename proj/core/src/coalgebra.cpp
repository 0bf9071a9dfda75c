#include "coadm/coalgebra.hpp"

#include <algorithm>

namespace coadm {

CoalgebraReport check_coalgebra(const Coalgebra& c, long tol_exp) {
  const Op& cm = c.comult;
  const auto csq = cm.codomain();

  // (Δ⊗id)∘Δ and (id⊗Δ)∘Δ land in different bracketings of C^⊗3 with the
  // same flat geometry.
  Op left = Op::tensor(cm, Op::identity(c.space)).compose(cm);
  Op right = Op::tensor(Op::identity(c.space), cm).compose(cm);
  Op coassoc = left - right;

  Op cl = contract_left(c.counit, csq).compose(cm) - Op::identity(c.space);
  Op cr = contract_right(c.counit, csq).compose(cm) - Op::identity(c.space);

  CoalgebraReport r;
  r.coassoc = defect_report("coassociativity", coassoc, tol_exp);
  r.counit_left = defect_report("counit-left", cl, tol_exp);
  r.counit_right = defect_report("counit-right", cr, tol_exp);
  r.pass = r.coassoc.pass() && r.counit_left.pass() && r.counit_right.pass();
  return r;
}

AlgebraReport check_algebra(const BanachAlgebra& a, long tol_exp) {
  const Op id = Op::identity(a.space);
  // m∘(m⊗id) and m∘(id⊗m) from (A⊗A)⊗A resp. A⊗(A⊗A); flat geometry agrees.
  Op assoc = a.mult.compose(Op::tensor(a.mult, id)) - a.mult.compose(Op::tensor(id, a.mult));
  Op ul = a.mult.compose(insert_left(a.unit, a.space)) - id;
  Op ur = a.mult.compose(insert_right(a.unit, a.space)) - id;

  AlgebraReport r;
  r.assoc = defect_report("associativity", assoc, tol_exp);
  r.unit_left = defect_report("unit-left", ul, tol_exp);
  r.unit_right = defect_report("unit-right", ur, tol_exp);
  r.pass = r.assoc.pass() && r.unit_left.pass() && r.unit_right.pass();
  return r;
}

const DefectReport& HopfReport::by_law(const std::string& law) const {
  for (const auto& c : checks)
    if (c.law == law) return c;
  throw Error("HopfReport: no check named " + law);
}

HopfReport check_hopf(const HopfAlgebra& h, long tol_exp) {
  HopfReport r;
  const Op id = Op::identity(h.space);
  const long p = h.prime();

  AlgebraReport alg = check_algebra(h.algebra(), tol_exp);
  CoalgebraReport coa = check_coalgebra(h.coalgebra(), tol_exp);
  r.checks.push_back(alg.assoc);
  r.checks.push_back(alg.unit_left);
  r.checks.push_back(alg.unit_right);
  r.checks.push_back(coa.coassoc);
  r.checks.push_back(coa.counit_left);
  r.checks.push_back(coa.counit_right);

  // Δ∘m = (m⊗m)∘(id⊗τ⊗id)∘(Δ⊗Δ)
  {
    Op dd = Op::tensor(h.comult, h.comult);
    Op mid_flip = Op::tensor(Op::tensor(id, Op::flip(h.space, h.space)), id);
    Op rhs = Op::tensor(h.mult, h.mult).compose(mid_flip).compose(dd);
    Op lhs = h.comult.compose(h.mult);
    r.checks.push_back(defect_report("bialgebra-compatibility", lhs - rhs, tol_exp));
  }
  // ε∘m = ε ⊗̄ ε, i.e. (x⊗y) |-> ε(x)ε(y)
  {
    auto aa = h.mult.domain();
    Op eps_eps = h.counit.compose(contract_left(h.counit, aa));
    r.checks.push_back(
        defect_report("counit-multiplicative", h.counit.compose(h.mult) - eps_eps, tol_exp));
  }
  // Δ∘u = u⊗u and ε∘u = id_K
  {
    Op lhs = h.comult.compose(h.unit);
    Op rhs = insert_left(h.unit, h.space).compose(h.unit);
    r.checks.push_back(defect_report("unit-grouplike", lhs - rhs, tol_exp));
    Op eu = h.counit.compose(h.unit) - Op::identity(Space::line(p));
    r.checks.push_back(defect_report("counit-of-unit", eu, tol_exp));
  }
  // S ⋆ id = u∘ε = id ⋆ S
  {
    Op u_eps = h.unit.compose(h.counit);
    Op s_id = h.mult.compose(Op::tensor(h.antipode, id)).compose(h.comult);
    Op id_s = h.mult.compose(Op::tensor(id, h.antipode)).compose(h.comult);
    r.checks.push_back(defect_report("antipode-left", s_id - u_eps, tol_exp));
    r.checks.push_back(defect_report("antipode-right", id_s - u_eps, tol_exp));
  }

  r.pass = std::all_of(r.checks.begin(), r.checks.end(),
                       [](const DefectReport& d) { return d.pass(); });
  return r;
}

Vec convolve(const Coalgebra& c, const Vec& alpha, const Vec& beta) {
  auto dual = Space::dual(c.space);
  if (!alpha.space()->same_geometry(*dual) || !beta.space()->same_geometry(*dual))
    throw Error("convolve: functionals must live in the dual of the underlying space");
  std::vector<std::pair<int, Scalar>> cs;
  for (int k = 0; k < c.space->rank(); ++k) {
    // (alpha ⊗ beta)(Δ e_k)
    Scalar acc = Scalar::zero(c.prime());
    for (const auto& [ij, s] : c.comult.column(k).coeffs()) {
      auto [i, j] = c.square()->unflat(ij);
      acc = acc + s * alpha.coeff(i) * beta.coeff(j);
    }
    if (!acc.is_exact_zero()) cs.emplace_back(k, acc);
  }
  return Vec(dual, std::move(cs));
}

Vec convolution_unit(const Coalgebra& c) {
  auto dual = Space::dual(c.space);
  std::vector<std::pair<int, Scalar>> cs;
  for (int i = 0; i < c.space->rank(); ++i) {
    Scalar v = c.counit.column(i).coeff(0);
    if (!v.is_exact_zero()) cs.emplace_back(i, v);
  }
  return Vec(dual, std::move(cs));
}

BanachAlgebra dual_algebra(const Coalgebra& c) {
  // (C ⊗ C)' = C' ⊗ C' at truncation; ⋆ is the transpose of Δ.
  Op mult = c.comult.transpose();
  auto dual = Space::dual(c.space);
  auto dsq = Space::tensor(dual, dual);
  // relabel the transpose domain (C⊗C)' as C'⊗C'
  Op m2 = Op::from_columns(dsq, dual, [&](int k) {
    Vec col = mult.column(k);
    return Vec(dual, col.coeffs());
  });
  m2 = m2.with_tail(
      [&] {
        std::vector<Rational> t;
        for (int k = 0; k < dsq->rank(); ++k) t.push_back(mult.tail(k));
        return t;
      }(),
      mult.tail());
  Op unit = Op::from_columns(Space::line(c.prime()), dual,
                             [&](int) { return convolution_unit(c); });
  return BanachAlgebra{dual, m2, unit, c.name + "'"};
}

Coalgebra dual_coalgebra(const BanachAlgebra& a) {
  auto dual = Space::dual(a.space);
  auto dsq = Space::tensor(dual, dual);
  Op cm = a.mult.transpose();  // A' -> (A⊗A)', read as A'⊗A'
  Op cm2 = Op::from_columns(dual, dsq, [&](int k) {
    return Vec(dsq, cm.column(k).coeffs());
  });
  cm2 = cm2.with_tail(
      [&] {
        std::vector<Rational> t;
        for (int k = 0; k < dual->rank(); ++k) t.push_back(cm.tail(k));
        return t;
      }(),
      cm.tail());
  auto line = Space::line(a.prime());
  Op counit = Op::from_columns(dual, line, [&](int k) {
    // ε(f) = f(1): on the dual basis this picks the k-th unit coordinate
    return Vec::unit(line, 0).scaled(a.unit.column(0).coeff(k));
  });
  return Coalgebra{dual, cm2, counit, a.name + "^o"};
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
  Coalgebra dc = dual_coalgebra(h.algebra());
  BanachAlgebra da = dual_algebra(h.coalgebra());
  Op s = h.antipode.transpose();
  Op s2 = Op::from_columns(dc.space, dc.space, [&](int k) {
    return Vec(dc.space, s.column(k).coeffs());
  });
  return HopfAlgebra{dc.space, dc.comult, dc.counit, da.mult, da.unit, s2, h.name + "'"};
}

CoidealQuotient quotient_by_coideal(const Coalgebra& c, const std::vector<Vec>& gens,
                                    long precision, long tol_exp) {
  Echelon eg = echelonize(c.space, gens, precision);

  // ε(I) = 0
  for (int k = 0; k < eg.rank(); ++k) {
    Vec ev = c.counit.apply(eg.rows[k]);
    if (!ev.bounded_by(precision))
      throw NotACoideal("counit does not vanish on generator " + eg.rows[k].str() +
                        " (value " + ev.str() + ")");
  }

  // Δ(I) ⊆ I⊗C + C⊗I, decided by reduction in C⊗C
  const auto csq = c.square();
  std::vector<Vec> span;
  for (int k = 0; k < eg.rank(); ++k)
    for (int i = 0; i < c.space->rank(); ++i) {
      span.push_back(Vec::tensor(eg.rows[k], Vec::unit(c.space, i), csq));
      span.push_back(Vec::tensor(Vec::unit(c.space, i), eg.rows[k], csq));
    }
  Echelon esub = echelonize(csq, span, precision);
  for (int k = 0; k < eg.rank(); ++k) {
    Vec d = c.comult.apply(eg.rows[k]);
    Vec res = reduce(d, esub);
    if (!res.bounded_by(precision))
      throw NotACoideal("comultiplication leaves I⊗C + C⊗I on generator " + eg.rows[k].str() +
                        " (residual " + res.str() + ", norm " + rational_str(res.norm()) + ")");
  }

  Quotient q = quotient_by_span(c.space, gens, precision, c.name + "/I");
  Op pp = Op::tensor(q.projection, q.projection);
  Op cm_q = pp.compose(c.comult).compose(q.section);
  Op eps_q = c.counit.compose(q.section);
  Coalgebra quot{q.space, cm_q, eps_q, c.name + "/I"};

  // π is a coalgebra map: Δ_Q∘π = (π⊗π)∘Δ_C
  Op defect = cm_q.compose(q.projection) - pp.compose(c.comult);
  CoidealQuotient out;
  out.quotient = std::move(quot);
  out.projection = q.projection;
  out.projection_morphism = defect_report("quotient-projection-morphism", defect, tol_exp);
  return out;
}

std::vector<Vec> subcoalgebra_generated(const Coalgebra& c, const std::vector<Vec>& seed,
                                        long precision) {
  Echelon e = echelonize(c.space, seed, precision);
  for (;;) {
    std::vector<Vec> next = e.rows;
    const int before = e.rank();
    for (const auto& u : e.rows) {
      Vec d = c.comult.apply(u);
      // components against the dual basis on each tensor factor
      std::vector<Vec> left_parts(c.space->rank(), Vec(c.space));
      std::vector<Vec> right_parts(c.space->rank(), Vec(c.space));
      for (const auto& [ij, s] : d.coeffs()) {
        auto [i, j] = c.square()->unflat(ij);
        left_parts[j] = left_parts[j] + Vec::unit(c.space, i).scaled(s);
        right_parts[i] = right_parts[i] + Vec::unit(c.space, j).scaled(s);
      }
      for (auto& v : left_parts)
        if (!v.empty()) next.push_back(std::move(v));
      for (auto& v : right_parts)
        if (!v.empty()) next.push_back(std::move(v));
    }
    e = echelonize(c.space, next, precision);
    if (e.rank() == before) return e.rows;
  }
}

DualMembership dual_coalgebra_membership(const BanachAlgebra& a, const Vec& f, long precision) {
  const long p = a.prime();
  const int n = a.space->rank();
  // matrix M[x][y] = f(xy)
  std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::zero(p)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Scalar acc = Scalar::zero(p);
      const Vec& prod = a.mult.column(a.mult.domain()->flat(x, y));
      for (const auto& [k, c] : prod.coeffs()) acc = acc + c * f.coeff(k);
      m[x][y] = acc;
    }

  // rank factorization by elimination: every pivot contributes one (f_i, g_i)
  auto dual = Space::dual(a.space);
  DualMembership out;
  out.factor_norm = Rational(0);
  std::vector<std::vector<Scalar>> work = m;
  for (;;) {
    int pi = -1, pj = -1;
    long best = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Scalar& s = work[i][j];
        if (!s.certainly_nonzero()) continue;
        long v = *s.valuation();
        if (pi < 0 || v < best) {
          pi = i;
          pj = j;
          best = v;
        }
      }
    if (pi < 0) break;
    // rank-1 update: row pi (as g) times column pj (as f) / pivot
    Scalar pivot = work[pi][pj];
    std::vector<std::pair<int, Scalar>> fc, gc;
    for (int i = 0; i < n; ++i)
      if (work[i][pj].certainly_nonzero()) fc.emplace_back(i, work[i][pj] / pivot);
    for (int j = 0; j < n; ++j)
      if (work[pi][j].certainly_nonzero()) gc.emplace_back(j, work[pi][j]);
    Vec fv(dual, fc), gv(dual, gc);
    out.factor_norm = std::max(out.factor_norm, Rational(fv.norm() * gv.norm()));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) work[i][j] = work[i][j] - fv.coeff(i) * gv.coeff(j);
    out.factors.emplace_back(std::move(fv), std::move(gv));
  }

  // residual of the reconstruction
  Rational res(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar acc = m[i][j];
      for (const auto& [fv, gv] : out.factors) acc = acc - fv.coeff(i) * gv.coeff(j);
      res = std::max(res, acc.norm());
    }
  out.residual = res;
  (void)precision;
  return out;
}

MorphismReport check_coalgebra_morphism(const Coalgebra& c, const Coalgebra& b, const Op& phi,
                                        long tol_exp) {
  Op square = b.comult.compose(phi) - Op::tensor(phi, phi).compose(c.comult);
  Op triangle = b.counit.compose(phi) - c.counit;
  MorphismReport r;
  r.comult_square = defect_report("coalgebra-morphism-comult", square, tol_exp);
  r.counit_triangle = defect_report("coalgebra-morphism-counit", triangle, tol_exp);
  r.pass = r.comult_square.pass() && r.counit_triangle.pass();
  return r;
}

MorphismReport check_algebra_morphism(const BanachAlgebra& a, const BanachAlgebra& b,
                                      const Op& psi, long tol_exp) {
  Op square = psi.compose(a.mult) - b.mult.compose(Op::tensor(psi, psi));
  Op triangle = psi.compose(a.unit) - b.unit;
  MorphismReport r;
  r.comult_square = defect_report("algebra-morphism-mult", square, tol_exp);
  r.counit_triangle = defect_report("algebra-morphism-unit", triangle, tol_exp);
  r.pass = r.comult_square.pass() && r.counit_triangle.pass();
  return r;
}

}  // namespace coadm
