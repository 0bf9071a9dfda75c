#include "coadm/comodule.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace coadm {

namespace {

// Coaction codomains may be bracketed as V(x)(C(x)C) or ((V(x)C))(x)C
// depending on how they were composed; flat indices agree, the stored
// factor split does not. Interpret (v,c) pairs by stride arithmetic on the
// trailing coalgebra factor.
std::pair<int, int> split_last(int ij, int c_rank) { return {ij / c_rank, ij % c_rank}; }

// exponent e with q = p^e; norms of basis vectors are always powers of p
long p_exponent(const Rational& q, long p) {
  if (q <= 0) throw Error("p_exponent: not a positive rational");
  BigInt num = numerator(q), den = denominator(q);
  long e = 0;
  while (num % p == 0) {
    num /= p;
    ++e;
  }
  while (den % p == 0) {
    den /= p;
    --e;
  }
  if (num != 1 || den != 1) throw Error("p_exponent: not a power of p");
  return e;
}

// the coaction codomain may be bracketed; rebuild it on a flat (V,C) or
// (C,V) tensor space before structural contractions
Op flat_coaction(const Comodule& m) {
  auto flat = m.side == Side::Right ? Space::tensor(m.space, m.over->space)
                                    : Space::tensor(m.over->space, m.space);
  Op r = Op::from_columns(m.space, flat,
                          [&](int i) { return Vec(flat, m.coaction.column(i).coeffs()); });
  std::vector<Rational> tails;
  for (int i = 0; i < m.space->rank(); ++i) tails.push_back(m.coaction.tail(i));
  return r.with_tail(std::move(tails), m.coaction.tail());
}

Op coaction_counit_defect(const Comodule& m) {
  Op rho = flat_coaction(m);
  if (m.side == Side::Right)
    return contract_right(m.over->counit, rho.codomain()).compose(rho) - Op::identity(m.space);
  return contract_left(m.over->counit, rho.codomain()).compose(rho) - Op::identity(m.space);
}

Op coaction_coassoc_defect(const Comodule& m) {
  const Op rho = flat_coaction(m);
  const Op id_v = Op::identity(m.space);
  const Op id_c = Op::identity(m.over->space);
  if (m.side == Side::Right)
    return Op::tensor(rho, id_c).compose(rho) - Op::tensor(id_v, m.over->comult).compose(rho);
  return Op::tensor(id_c, rho).compose(rho) - Op::tensor(m.over->comult, id_v).compose(rho);
}

}  // namespace

ComoduleReport check_comodule(const Comodule& m, long tol_exp) {
  ComoduleReport r;
  r.counit = defect_report("comodule-counit", coaction_counit_defect(m), tol_exp);
  r.coassoc = defect_report("comodule-coassociativity", coaction_coassoc_defect(m), tol_exp);
  r.pass = r.counit.pass() && r.coassoc.pass();
  return r;
}

Comodule regular_comodule(const CoalgebraPtr& c, Side side) {
  if (side == Side::Right) return {c->space, c, c->comult, side, "regular(" + c->name + ")"};
  // Δ read as a left coaction C -> C⊗C
  return {c->space, c, c->comult, Side::Left, "regular_left(" + c->name + ")"};
}

Comodule row_comodule(const CoalgebraPtr& mc, int n) {
  const long p = mc->prime();
  std::vector<std::string> ls;
  for (int i = 1; i <= n; ++i) ls.push_back("f" + std::to_string(i));
  auto v = Space::make(p, "Row" + std::to_string(n), ls);
  auto vc = Space::tensor(v, mc->space);
  Op rho = Op::from_columns(v, vc, [&](int i) {
    std::vector<std::pair<int, Scalar>> cs;
    for (int k = 0; k < n; ++k) cs.emplace_back(vc->flat(k, k * n + i), Scalar::one(p));
    return Vec(vc, std::move(cs));
  });
  return {v, mc, rho, Side::Right, "row(" + mc->name + ")"};
}

Comodule column_comodule(const CoalgebraPtr& mc, int n) {
  const long p = mc->prime();
  std::vector<std::string> ls;
  for (int i = 1; i <= n; ++i) ls.push_back("f" + std::to_string(i));
  auto v = Space::make(p, "Col" + std::to_string(n), ls);
  auto cv = Space::tensor(mc->space, v);
  Op rho = Op::from_columns(v, cv, [&](int i) {
    std::vector<std::pair<int, Scalar>> cs;
    for (int k = 0; k < n; ++k) cs.emplace_back(cv->flat(i * n + k, k), Scalar::one(p));
    return Vec(cv, std::move(cs));
  });
  return {v, mc, rho, Side::Left, "column(" + mc->name + ")"};
}

Comodule cofree_comodule(const SpacePtr& v, const CoalgebraPtr& c) {
  auto vc = Space::tensor(v, c->space);
  Op rho = Op::tensor(Op::identity(v), c->comult);
  return {vc, c, rho, Side::Right, "cofree(" + v->name() + "," + c->name + ")"};
}

Comodule trivial_comodule(const SpacePtr& v, const CoalgebraPtr& c, const Vec& grouplike) {
  auto vc = Space::tensor(v, c->space);
  Op rho = Op::from_columns(v, vc, [&](int i) {
    return Vec::tensor(Vec::unit(v, i), grouplike, vc);
  });
  return {v, c, rho, Side::Right, "trivial(" + v->name() + "," + c->name + ")"};
}

Comodule comodule_direct_sum(const Comodule& a, const Comodule& b) {
  if (a.over != b.over || a.side != b.side)
    throw Error("comodule_direct_sum: mismatched structure");
  if (a.side != Side::Right) throw Error("comodule_direct_sum: right comodules only");
  auto s = Space::direct_sum(a.space, b.space);
  auto sc = Space::tensor(s, a.over->space);
  const int ra = a.space->rank();
  const int crank = a.over->space->rank();
  Op rho = Op::from_columns(s, sc, [&](int k) {
    const bool lo = k < ra;
    const Vec& col = lo ? a.coaction.column(k) : b.coaction.column(k - ra);
    std::vector<std::pair<int, Scalar>> cs;
    for (const auto& [ij, c] : col.coeffs()) {
      auto [i, j] = split_last(ij, crank);
      cs.emplace_back(sc->flat(lo ? i : i + ra, j), c);
    }
    return Vec(sc, std::move(cs));
  });
  return {s, a.over, rho, Side::Right, a.name + "+" + b.name};
}

Comodule comodule_power(const Comodule& m, int k) {
  if (m.side != Side::Right) throw Error("comodule_power: right comodules only");
  auto s = Space::power(m.space, k);
  auto sc = Space::tensor(s, m.over->space);
  const int rm = m.space->rank();
  const int crank = m.over->space->rank();
  Op rho = Op::from_columns(s, sc, [&](int col) {
    const int copy = col / rm, i = col % rm;
    std::vector<std::pair<int, Scalar>> cs;
    for (const auto& [vj, c] : m.coaction.column(i).coeffs()) {
      auto [v, j] = split_last(vj, crank);
      cs.emplace_back(sc->flat(copy * rm + v, j), c);
    }
    return Vec(sc, std::move(cs));
  });
  return {s, m.over, rho, Side::Right, m.name + "^" + std::to_string(k)};
}

Op comodule_morphism_defect(const Comodule& m, const Comodule& n, const Op& f) {
  return comodule_morphism_defect_over(m, n, f, Op::identity(m.over->space));
}

Op comodule_morphism_defect_over(const Comodule& m, const Comodule& n, const Op& f,
                                 const Op& phi) {
  if (m.side != Side::Right || n.side != Side::Right)
    throw Error("comodule morphism defect: right comodules only");
  return n.coaction.compose(f) - Op::tensor(f, phi).compose(m.coaction);
}

DefectReport check_comodule_morphism(const Comodule& m, const Comodule& n, const Op& f,
                                     long tol_exp) {
  return defect_report("comodule-morphism", comodule_morphism_defect(m, n, f), tol_exp);
}

std::vector<Op> comodule_hom(const Comodule& m, const Comodule& n, long precision) {
  return op_solve(m.space, n.space,
                  [&](const Op& t) { return comodule_morphism_defect(m, n, t); }, precision);
}

Vec dual_action(const Comodule& m, const Vec& vdual, const Vec& cdual) {
  if (m.side != Side::Right) throw Error("dual_action: right comodules only");
  auto md = Space::dual(m.space);
  std::vector<std::pair<int, Scalar>> cs;
  const int crank = m.over->space->rank();
  for (int a = 0; a < m.space->rank(); ++a) {
    Scalar acc = Scalar::zero(m.prime());
    for (const auto& [ij, s] : m.coaction.column(a).coeffs()) {
      auto [i, j] = split_last(ij, crank);
      acc = acc + s * vdual.coeff(i) * cdual.coeff(j);
    }
    if (!acc.is_exact_zero()) cs.emplace_back(a, acc);
  }
  return Vec(md, std::move(cs));
}

Vec induced_action(const Comodule& m, const Vec& lambda, const Vec& v) {
  if (m.side != Side::Right) throw Error("induced_action: right comodules only");
  Vec w = m.coaction.apply(v);
  std::vector<std::pair<int, Scalar>> cs;
  std::vector<Scalar> acc(m.space->rank(), Scalar::zero(m.prime()));
  const int crank = m.over->space->rank();
  for (const auto& [ij, s] : w.coeffs()) {
    auto [i, j] = split_last(ij, crank);
    acc[i] = acc[i] + s * lambda.coeff(j);
  }
  for (int i = 0; i < m.space->rank(); ++i)
    if (!acc[i].is_exact_zero()) cs.emplace_back(i, acc[i]);
  return Vec(m.space, std::move(cs));
}

Rationality rationality(const CoalgebraPtr& c, const SpacePtr& v,
                        const std::vector<Op>& dual_basis_action, long tol_exp) {
  if (static_cast<int>(dual_basis_action.size()) != c->space->rank())
    throw Error("rationality: one action operator per dual basis vector required");
  auto vc = Space::tensor(v, c->space);
  Op rho = Op::from_columns(v, vc, [&](int a) {
    Vec out(vc);
    for (int cc = 0; cc < c->space->rank(); ++cc) {
      const Vec img = dual_basis_action[cc].column(a);
      for (const auto& [i, s] : img.coeffs())
        out = out + Vec(vc, {{vc->flat(i, cc), s}});
    }
    return out;
  });

  Rationality out;
  Comodule cand{v, c, rho, Side::Right, "reconstructed"};
  out.counit_axiom = defect_report("comodule-counit", coaction_counit_defect(cand), tol_exp);
  out.coassoc_axiom =
      defect_report("comodule-coassociativity", coaction_coassoc_defect(cand), tol_exp);
  out.is_rational_at_truncation = out.counit_axiom.pass() && out.coassoc_axiom.pass();
  if (out.is_rational_at_truncation) {
    out.comodule = std::move(cand);
    return out;
  }

  // hunt a failing pair: (e_b' ⋆ e_c')·x vs e_b'·(e_c'·x), or ε·x vs x
  auto dual = Space::dual(c->space);
  Vec eps = convolution_unit(*c);
  for (int a = 0; a < v->rank(); ++a) {
    Vec x = Vec::unit(v, a);
    Vec ex(v);
    for (int cc = 0; cc < c->space->rank(); ++cc)
      ex = ex + dual_basis_action[cc].column(a).scaled(eps.coeff(cc));
    if (!(ex - x).bounded_by(tol_exp)) {
      out.counterexample = "counit functional acting on " + v->label(a) + " gives " + ex.str();
      return out;
    }
  }
  for (int b = 0; b < c->space->rank() && out.counterexample.empty(); ++b)
    for (int cc = 0; cc < c->space->rank() && out.counterexample.empty(); ++cc) {
      Vec conv = convolve(*c, Vec::unit(dual, b), Vec::unit(dual, cc));
      for (int a = 0; a < v->rank(); ++a) {
        Vec lhs(v);
        for (int k = 0; k < c->space->rank(); ++k)
          lhs = lhs + dual_basis_action[k].column(a).scaled(conv.coeff(k));
        Vec rhs = dual_basis_action[b].apply(dual_basis_action[cc].column(a));
        if (!(lhs - rhs).bounded_by(tol_exp)) {
          out.counterexample = "(" + dual->label(b) + " ⋆ " + dual->label(cc) + ") on " +
                               v->label(a) + ": " + lhs.str() + " vs " + rhs.str();
          break;
        }
      }
    }
  if (out.counterexample.empty()) out.counterexample = "module axioms hold only out of tolerance";
  return out;
}

std::vector<Vec> cotensor(const Comodule& m_right, const Comodule& n_left, long precision) {
  if (m_right.side != Side::Right || n_left.side != Side::Left)
    throw Error("cotensor: expects a right and a left comodule");
  if (m_right.over->space != n_left.over->space &&
      !m_right.over->space->same_geometry(*n_left.over->space))
    throw Error("cotensor: comodules over different coalgebras");
  Op lhs = Op::tensor(m_right.coaction, Op::identity(n_left.space));
  Op rhs = Op::tensor(Op::identity(m_right.space), n_left.coaction);
  return kernel(lhs - rhs, precision);
}

SubComodule sub_comodule(const Comodule& ambient, const std::vector<Vec>& basis, long precision,
                         long tol_exp, const std::string& name) {
  if (ambient.side != Side::Right) throw Error("sub_comodule: right comodules only");
  const long p = ambient.prime();
  Echelon e = echelonize(ambient.space, basis, precision);
  const int r = e.rank();
  const auto& cspace = ambient.over->space;

  std::vector<std::string> labels;
  std::vector<long> wexp;
  for (int i = 0; i < r; ++i) {
    labels.push_back("u" + std::to_string(i));
    wexp.push_back(p_exponent(e.rows[i].norm(), p));
  }
  auto u = Space::make(p, name, labels, wexp);
  auto uc = Space::tensor(u, cspace);

  Op embed = Op::from_columns(u, ambient.space, [&](int i) { return e.rows[i]; });

  std::vector<Vec> cols;
  std::vector<Rational> tails;
  std::vector<std::pair<std::string, Vec>> residuals;
  const auto flat_cod = Space::tensor(ambient.space, cspace);
  const int crank = cspace->rank();
  for (int i = 0; i < r; ++i) {
    Vec w0 = ambient.coaction.apply(e.rows[i]);
    Vec w(flat_cod, w0.coeffs());
    // coefficients read off at the pivot rows: basis vectors are echelonized
    // with leading coefficient one, so k_j ⊗ e_b has an exact unit
    // coefficient at (pivot_j, b) and zeros there for every other j'
    std::vector<std::pair<int, Scalar>> cs;
    Vec recon(flat_cod);
    for (int j = 0; j < r; ++j)
      for (int b = 0; b < crank; ++b) {
        Scalar x = w.coeff(e.pivots[j] * crank + b);
        if (x.is_exact_zero()) continue;
        cs.emplace_back(uc->flat(j, b), x);
        recon = recon + Vec::tensor(e.rows[j], Vec::unit(cspace, b), flat_cod).scaled(x);
      }
    cols.push_back(Vec(uc, std::move(cs)));
    residuals.emplace_back(u->label(i), w - recon);

    Rational t(0);
    for (const auto& [k, c] : e.rows[i].coeffs())
      t = std::max(t, Rational(c.norm() * ambient.coaction.tail(k)));
    tails.push_back(t);
  }
  Op rho = Op(u, uc, std::move(cols)).with_tail(std::move(tails), ambient.coaction.tail());

  SubComodule out;
  out.comodule = Comodule{u, ambient.over, std::move(rho), Side::Right, name};
  out.embed = std::move(embed);
  out.basis = e.rows;
  out.stability = defect_report_vec("subcomodule-stability", ambient.space, residuals, tol_exp,
                                    ambient.coaction.tail());
  return out;
}

Comodule along_left(const CoalgebraPtr& c, const CoalgebraPtr& b, const Op& phi, long tol_exp) {
  auto mr = check_coalgebra_morphism(*c, *b, phi, tol_exp);
  if (!mr.pass)
    throw NotACoalgebraMorphism("map " + c->name + " -> " + b->name +
                                " violates the coalgebra morphism laws (residual " +
                                rational_str(std::max(mr.comult_square.residual,
                                                      mr.counit_triangle.residual)) +
                                ")");
  auto bc = Space::tensor(b->space, c->space);
  Op rho = Op::tensor(phi, Op::identity(c->space)).compose(c->comult);
  Op rho2 = Op::from_columns(c->space, bc, [&](int i) { return Vec(bc, rho.column(i).coeffs()); });
  rho2 = rho2.with_tail(
      [&] {
        std::vector<Rational> t;
        for (int i = 0; i < c->space->rank(); ++i) t.push_back(rho.tail(i));
        return t;
      }(),
      rho.tail());
  return Comodule{c->space, b, rho2, Side::Left, "phi-" + c->name};
}

SubComodule induce(const Comodule& m, const CoalgebraPtr& c, const Op& phi, long precision,
                   long tol_exp) {
  Comodule phic = along_left(c, m.over, phi, tol_exp);
  std::vector<Vec> basis = cotensor(m, phic, precision);
  Comodule ambient = cofree_comodule(m.space, c);
  return sub_comodule(ambient, basis, precision, tol_exp,
                      m.name + "^(" + c->name + ")");
}

Comodule restrict_comodule(const Comodule& n, const CoalgebraPtr& b, const Op& phi,
                           long tol_exp) {
  // phi checked by the caller when it matters; restriction itself only
  // composes on the coaction
  (void)tol_exp;
  auto nb = Space::tensor(n.space, b->space);
  Op rho = Op::tensor(Op::identity(n.space), phi).compose(n.coaction);
  Op rho2 = Op::from_columns(n.space, nb, [&](int i) { return Vec(nb, rho.column(i).coeffs()); });
  rho2 = rho2.with_tail(
      [&] {
        std::vector<Rational> t;
        for (int i = 0; i < n.space->rank(); ++i) t.push_back(rho.tail(i));
        return t;
      }(),
      rho.tail());
  return Comodule{n.space, b, rho2, Side::Right, n.name + "_phi"};
}

Op counit_projection(const Comodule& m, const SubComodule& induced) {
  auto ambient = Space::tensor(m.space, induced.comodule.over->space);
  return contract_right(induced.comodule.over->counit, ambient).compose(induced.embed);
}

std::vector<Vec> maximal_subcomodule_over_image(const Comodule& m, const Op& phi,
                                                long precision) {
  if (m.side != Side::Right) throw Error("maximal_subcomodule_over_image: right only");
  const auto& bspace = m.over->space;
  Echelon img = echelonize(bspace, [&] {
    std::vector<Vec> cols;
    for (int i = 0; i < phi.domain()->rank(); ++i) cols.push_back(phi.column(i));
    return cols;
  }(), precision);

  std::vector<Vec> w;
  for (int i = 0; i < m.space->rank(); ++i) w.push_back(Vec::unit(m.space, i));
  const auto mb = Space::tensor(m.space, bspace);
  for (;;) {
    Echelon ew = echelonize(m.space, w, precision);
    // span{w_i ⊗ f_j} for f_j a basis of the image of phi
    std::vector<Vec> span;
    for (const auto& wi : ew.rows)
      for (const auto& fj : img.rows) span.push_back(Vec::tensor(wi, fj, mb));
    Quotient q = quotient_by_span(mb, span, precision, "Q");
    auto us = Space::make(m.prime(), "W", [&] {
      std::vector<std::string> ls;
      for (int i = 0; i < ew.rank(); ++i) ls.push_back("w" + std::to_string(i));
      return ls;
    }());
    Op g = Op::from_columns(us, q.space, [&](int i) {
      return q.projection.apply(Vec(mb, m.coaction.apply(ew.rows[i]).coeffs()));
    });
    std::vector<Vec> null = kernel(g, precision);
    if (static_cast<int>(null.size()) == ew.rank()) return ew.rows;
    std::vector<Vec> next;
    for (const auto& nv : null) {
      Vec acc(m.space);
      for (const auto& [i, c] : nv.coeffs()) acc = acc + ew.rows[i].scaled(c);
      next.push_back(std::move(acc));
    }
    w = std::move(next);
    if (w.empty()) return {};
  }
}

namespace {

// coefficients of v against an echelonized basis (leading coefficient one),
// plus the residual
std::pair<std::vector<Scalar>, Vec> coords_against(const Vec& v, const Echelon& e) {
  std::vector<Scalar> xs;
  Vec res = v;
  for (int j = 0; j < e.rank(); ++j) {
    Scalar x = res.coeff(e.pivots[j]);
    xs.push_back(x);
    if (!x.is_exact_zero()) res = res - e.rows[j].scaled(x);
  }
  return {std::move(xs), std::move(res)};
}

struct FrobeniusCore {
  Op to_induced;
  Op to_restricted;
  DefectReport image_in_cotensor;
};

// psi: N -> M lifted to psibar = (psi⊗id_C)∘ρ_N expressed on the cotensor
// basis of M^phi
FrobeniusCore frobenius_lift(const Comodule& n, const Comodule& m, const SubComodule& ind,
                             const Op& psi, long tol_exp) {
  auto mc = Space::tensor(m.space, ind.comodule.over->space);
  Op psibar = Op::tensor(psi, Op::identity(ind.comodule.over->space)).compose(n.coaction);
  Echelon e;
  e.rows = ind.basis;
  for (const auto& row : ind.basis)  // leading index of each echelon row
    e.pivots.push_back(row.coeffs().front().first);

  std::vector<Vec> cols;
  std::vector<std::pair<std::string, Vec>> residuals;
  for (int a = 0; a < n.space->rank(); ++a) {
    Vec img(mc, psibar.column(a).coeffs());
    auto [xs, res] = coords_against(img, e);
    std::vector<std::pair<int, Scalar>> cs;
    for (int j = 0; j < e.rank(); ++j)
      if (!xs[j].is_exact_zero()) cs.emplace_back(j, xs[j]);
    cols.push_back(Vec(ind.comodule.space, std::move(cs)));
    residuals.emplace_back(n.space->label(a), std::move(res));
  }
  FrobeniusCore out;
  out.to_induced = Op(n.space, ind.comodule.space, std::move(cols));
  out.image_in_cotensor =
      defect_report_vec("frobenius-image-in-cotensor", mc, residuals, tol_exp);
  out.to_restricted = counit_projection(m, ind).compose(out.to_induced);
  return out;
}

}  // namespace

FrobeniusReport frobenius_from_restricted(const Comodule& n, const Comodule& m,
                                          const CoalgebraPtr& c, const Op& phi, const Op& psi,
                                          long precision, long tol_exp) {
  FrobeniusReport r;
  r.induced = induce(m, c, phi, precision, tol_exp);
  Comodule n_phi = restrict_comodule(n, m.over, phi, tol_exp);
  r.input_morphism = defect_report("frobenius-input-morphism",
                                   comodule_morphism_defect(n_phi, m, psi), tol_exp);
  if (!r.input_morphism.pass())
    throw NotAComoduleMorphism("frobenius: input is not a comodule morphism: " +
                               r.input_morphism.witness);

  FrobeniusCore core = frobenius_lift(n, m, r.induced, psi, tol_exp);
  r.to_induced = core.to_induced;
  r.to_restricted = core.to_restricted;
  r.image_in_cotensor = core.image_in_cotensor;
  r.output_morphism = defect_report(
      "frobenius-output-morphism",
      comodule_morphism_defect(n, r.induced.comodule, r.to_induced), tol_exp);
  r.roundtrip =
      defect_report("frobenius-roundtrip", r.to_restricted - psi, tol_exp);
  r.pass = r.image_in_cotensor.pass() && r.output_morphism.pass() && r.roundtrip.pass();
  return r;
}

FrobeniusReport frobenius_from_induced(const Comodule& n, const Comodule& m,
                                       const CoalgebraPtr& c, const Op& phi, const Op& phihat,
                                       long precision, long tol_exp) {
  FrobeniusReport r;
  r.induced = induce(m, c, phi, precision, tol_exp);
  r.input_morphism = defect_report(
      "frobenius-input-morphism",
      comodule_morphism_defect(n, r.induced.comodule, phihat), tol_exp);
  if (!r.input_morphism.pass())
    throw NotAComoduleMorphism("frobenius: input is not a comodule morphism: " +
                               r.input_morphism.witness);

  Op psi = counit_projection(m, r.induced).compose(phihat);
  Comodule n_phi = restrict_comodule(n, m.over, phi, tol_exp);
  r.output_morphism = defect_report("frobenius-output-morphism",
                                    comodule_morphism_defect(n_phi, m, psi), tol_exp);
  FrobeniusCore core = frobenius_lift(n, m, r.induced, psi, tol_exp);
  r.to_induced = core.to_induced;
  r.to_restricted = psi;
  r.image_in_cotensor = core.image_in_cotensor;
  r.roundtrip = defect_report("frobenius-roundtrip", core.to_induced - phihat, tol_exp);
  r.pass = r.image_in_cotensor.pass() && r.output_morphism.pass() && r.roundtrip.pass();
  return r;
}

Comodule comodule_tensor(const HopfAlgebra& h, const Comodule& m, const Comodule& n) {
  if (m.side != Side::Right || n.side != Side::Right)
    throw Error("comodule_tensor: right comodules only");
  auto mn = Space::tensor(m.space, n.space);
  const Op id_m = Op::identity(m.space);
  const Op id_n = Op::identity(n.space);
  const Op id_h = Op::identity(h.space);
  // (id⊗id⊗m_H)∘(id⊗τ⊗id)∘(ρ_M⊗ρ_N)
  Op rr = Op::tensor(m.coaction, n.coaction);
  Op mid = Op::tensor(Op::tensor(id_m, Op::flip(h.space, n.space)), id_h);
  Op mult = Op::tensor(Op::tensor(id_m, id_n), h.mult);
  Op rho = mult.compose(mid).compose(rr);
  auto mnh = Space::tensor(mn, h.space);
  Op rho2 = Op::from_columns(mn, mnh, [&](int i) { return Vec(mnh, rho.column(i).coeffs()); });
  rho2 = rho2.with_tail(
      [&] {
        std::vector<Rational> t;
        for (int i = 0; i < mn->rank(); ++i) t.push_back(rho.tail(i));
        return t;
      }(),
      rho.tail());
  auto hptr = std::make_shared<Coalgebra>(h.coalgebra());
  return Comodule{mn, hptr, rho2, Side::Right, m.name + "(x)" + n.name};
}

TensorIdentityReport tensor_identity(const HopfAlgebra& h, const HopfAlgebra& b,
                                     const Comodule& v, const Comodule& w, const Op& pi,
                                     long precision, long tol_exp) {
  TensorIdentityReport r;
  const Op id_v = Op::identity(v.space);
  const Op id_w = Op::identity(w.space);
  const Op id_h = Op::identity(h.space);
  auto hc = std::make_shared<Coalgebra>(h.coalgebra());
  auto bc = std::make_shared<Coalgebra>(b.coalgebra());

  // lhs: V ⊗ (W □_B phi-H) inside the tensor comodule V ⊗ (W⊗H)
  SubComodule wpi = induce(w, hc, pi, precision, tol_exp);
  Comodule ambient_lhs = comodule_tensor(h, v, cofree_comodule(w.space, hc));
  std::vector<Vec> lhs_basis;
  for (int i = 0; i < v.space->rank(); ++i)
    for (const auto& k : wpi.basis)
      lhs_basis.push_back(Vec::tensor(Vec::unit(v.space, i), k, ambient_lhs.space));
  r.lhs = sub_comodule(ambient_lhs, lhs_basis, precision, tol_exp, "V(x)(W-box-H)");

  // rhs: (V_pi ⊗ W) □_B phi-H inside (V⊗W) ⊗ H with coaction id⊗Δ
  Comodule v_pi = restrict_comodule(v, bc, pi, tol_exp);
  Comodule vw = comodule_tensor(b, v_pi, w);
  Comodule phil = along_left(hc, bc, pi, tol_exp);
  std::vector<Vec> rhs_basis = cotensor(vw, phil, precision);
  Comodule ambient_rhs = cofree_comodule(vw.space, hc);
  r.rhs = sub_comodule(ambient_rhs, rhs_basis, precision, tol_exp, "(V-pi(x)W)-box-H");

  // forward: v⊗w⊗h |-> v_(0)⊗w⊗v_(1)h, backward inserts the antipode
  auto make_map = [&](bool with_antipode) {
    Op rv = with_antipode ? Op::tensor(id_v, h.antipode).compose(v.coaction) : v.coaction;
    Op step1 = Op::tensor(Op::tensor(rv, id_w), id_h);
    Op step2 = Op::tensor(Op::tensor(id_v, Op::flip(h.space, w.space)), id_h);
    Op step3 = Op::tensor(Op::tensor(id_v, id_w), h.mult);
    return step3.compose(step2).compose(step1);
  };
  Op fwd = make_map(false);
  Op bwd = make_map(true);

  Echelon e_lhs = echelonize(ambient_lhs.space, r.lhs.basis, precision);
  Echelon e_rhs = echelonize(ambient_rhs.space, r.rhs.basis, precision);

  // land + roundtrip, columnwise over the subspace bases
  std::vector<std::pair<std::string, Vec>> fwd_res, bwd_res, round_lhs, round_rhs;
  std::vector<Vec> fwd_cols;
  for (int i = 0; i < e_lhs.rank(); ++i) {
    Vec img(ambient_rhs.space, fwd.apply(e_lhs.rows[i]).coeffs());
    auto [xs, res] = coords_against(img, e_rhs);
    fwd_res.emplace_back("k" + std::to_string(i), res);
    std::vector<std::pair<int, Scalar>> cs;
    for (int j = 0; j < e_rhs.rank(); ++j)
      if (!xs[j].is_exact_zero()) cs.emplace_back(j, xs[j]);
    fwd_cols.push_back(Vec(r.rhs.comodule.space, std::move(cs)));

    Vec back(ambient_lhs.space, bwd.apply(Vec(ambient_lhs.space, img.coeffs())).coeffs());
    round_lhs.emplace_back("k" + std::to_string(i), back - e_lhs.rows[i]);
  }
  for (int i = 0; i < e_rhs.rank(); ++i) {
    Vec img(ambient_lhs.space, bwd.apply(e_rhs.rows[i]).coeffs());
    auto [xs, res] = coords_against(img, e_lhs);
    bwd_res.emplace_back("k" + std::to_string(i), res);
    Vec fwd_back(ambient_rhs.space, fwd.apply(Vec(ambient_rhs.space, img.coeffs())).coeffs());
    round_rhs.emplace_back("k" + std::to_string(i), fwd_back - e_rhs.rows[i]);
  }
  Rational t = std::max(fwd.tail(), bwd.tail());
  r.forward_lands =
      defect_report_vec("tensor-identity-forward-lands", ambient_rhs.space, fwd_res, tol_exp, t);
  r.backward_lands =
      defect_report_vec("tensor-identity-backward-lands", ambient_lhs.space, bwd_res, tol_exp, t);
  r.roundtrip_lhs =
      defect_report_vec("tensor-identity-roundtrip-lhs", ambient_lhs.space, round_lhs, tol_exp, t);
  r.roundtrip_rhs =
      defect_report_vec("tensor-identity-roundtrip-rhs", ambient_rhs.space, round_rhs, tol_exp, t);

  // the forward map in abstract coordinates is a comodule morphism
  Op fwd_abs(r.lhs.comodule.space, r.rhs.comodule.space, std::move(fwd_cols));
  r.forward_morphism = defect_report(
      "tensor-identity-forward-morphism",
      comodule_morphism_defect(r.lhs.comodule, r.rhs.comodule, fwd_abs), tol_exp);

  r.pass = r.forward_lands.pass() && r.backward_lands.pass() && r.roundtrip_lhs.pass() &&
           r.roundtrip_rhs.pass() && r.forward_morphism.pass();
  return r;
}

SimplicityCertificate simplicity_certificate(const Comodule& m, std::uint64_t seed,
                                             long precision) {
  if (m.side != Side::Right) throw Error("simplicity_certificate: right comodules only");
  SimplicityCertificate out;
  auto dual = Space::dual(m.over->space);

  auto cyclic = [&](const Vec& x) {
    std::vector<Vec> gens;
    for (int c = 0; c < m.over->space->rank(); ++c)
      gens.push_back(induced_action(m, Vec::unit(dual, c), x));
    return echelonize(m.space, gens, precision);
  };

  std::vector<Vec> candidates;
  for (int i = 0; i < m.space->rank(); ++i) candidates.push_back(Vec::unit(m.space, i));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> val(-20, 20);
  for (int it = 0; it < 8; ++it) {
    std::vector<std::pair<int, Scalar>> cs;
    for (int i = 0; i < m.space->rank(); ++i) {
      long x = val(rng);
      if (x) cs.emplace_back(i, Scalar::exact(m.prime(), x));
    }
    if (!cs.empty()) candidates.push_back(Vec(m.space, cs));
  }

  out.samples = static_cast<int>(candidates.size());
  for (const auto& x : candidates) {
    if (x.empty()) continue;
    Echelon w = cyclic(x);
    if (w.rank() > 0 && w.rank() < m.space->rank()) {
      out.proper_subcomodule_found = true;
      out.witness = w.rows;
      out.generator = x;
      return out;
    }
  }
  return out;
}

}  // namespace coadm
