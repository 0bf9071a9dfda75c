#include "coadm/admissible.hpp"

#include <algorithm>

namespace coadm {

namespace {

std::pair<int, int> split_last(int ij, int rank_last) {
  return {ij / rank_last, ij % rank_last};
}

// relabel a vector into a same-geometry space
Vec relabel(const Vec& v, const SpacePtr& target) { return Vec(target, v.coeffs()); }

Op relabel(const Op& t, const SpacePtr& dom, const SpacePtr& cod) {
  Op r = Op::from_columns(dom, cod, [&](int i) { return Vec(cod, t.column(i).coeffs()); });
  std::vector<Rational> tails;
  for (int i = 0; i < dom->rank(); ++i) tails.push_back(t.tail(i));
  return r.with_tail(std::move(tails), t.tail());
}

// C_n as a left comodule over the window top C_N via the composite
// transition: ρ = (phi_{n->N} ⊗ id)∘Δ_n.
Comodule level_as_left_top_comodule(const CtSystem& s, int n) {
  const auto& cn = *s.levels[n];
  const auto& top = *s.levels.back();
  Op lift = s.transition(n, s.depth() - 1);
  auto bc = Space::tensor(top.space, cn.space);
  Op rho = Op::tensor(lift, Op::identity(cn.space)).compose(cn.comult);
  return Comodule{cn.space, std::make_shared<Coalgebra>(top), relabel(rho, cn.space, bc),
                  Side::Left, cn.name + "-as-left"};
}

}  // namespace

ModuleReport check_module(const RightModule& m, long tol_exp) {
  ModuleReport r;
  const Op id_m = Op::identity(m.space);
  const Op id_a = Op::identity(m.over->space);
  // (m·a)·b vs m·(ab): both M⊗A⊗A -> M
  Op lhs = m.action.compose(Op::tensor(m.action, id_a));
  Op rhs = m.action.compose(Op::tensor(id_m, m.over->mult));
  r.assoc = defect_report("module-associativity", lhs - rhs, tol_exp);
  r.unit = defect_report("module-unit",
                         m.action.compose(insert_right(m.over->unit, m.space)) - id_m, tol_exp);
  r.pass = r.assoc.pass() && r.unit.pass();
  return r;
}

RightModule regular_module(const std::shared_ptr<const BanachAlgebra>& a) {
  return RightModule{a->space, a, a->mult, "regular(" + a->name + ")"};
}

RightModule module_power(const RightModule& m, int k) {
  auto s = Space::power(m.space, k);
  auto sa = Space::tensor(s, m.over->space);
  const int rm = m.space->rank();
  const int ra = m.over->space->rank();
  Op act = Op::from_columns(sa, s, [&](int col) {
    auto [xi, a] = split_last(col, ra);
    const int copy = xi / rm, x = xi % rm;
    const Vec img = m.action.column(m.action.domain()->flat(x, a));
    std::vector<std::pair<int, Scalar>> cs;
    for (const auto& [i, c] : img.coeffs()) cs.emplace_back(copy * rm + i, c);
    return Vec(s, std::move(cs));
  });
  return RightModule{s, m.over, act, m.name + "^" + std::to_string(k)};
}

Op module_morphism_defect_over(const RightModule& m, const RightModule& n, const Op& f,
                               const Op& psi) {
  // f∘act_M − act_N∘(f⊗psi): M⊗A_M -> N
  return f.compose(m.action) - n.action.compose(Op::tensor(f, psi));
}

Op module_morphism_defect(const RightModule& m, const RightModule& n, const Op& f) {
  return module_morphism_defect_over(m, n, f, Op::identity(m.over->space));
}

std::vector<Op> module_hom(const RightModule& m, const RightModule& n, long precision) {
  return op_solve(m.space, n.space,
                  [&](const Op& t) { return module_morphism_defect(m, n, t); }, precision);
}

AdmissibleStructure AdmissibleStructure::window(int d) const {
  AdmissibleStructure w;
  w.system = system.window(d);
  w.comodule_levels.assign(comodule_levels.begin(), comodule_levels.begin() + d);
  w.comodule_transitions.assign(comodule_transitions.begin(),
                                comodule_transitions.begin() + (d - 1));
  w.cogeneration.assign(cogeneration.begin(), cogeneration.begin() + d);
  w.k.assign(k.begin(), k.begin() + d);
  w.name = name + "[1.." + std::to_string(d) + "]";
  return w;
}

CoadmissibleStructure CoadmissibleStructure::window(int d) const {
  CoadmissibleStructure w;
  w.system = system.window(d);
  w.module_levels.assign(module_levels.begin(), module_levels.begin() + d);
  w.module_transitions.assign(module_transitions.begin(),
                              module_transitions.begin() + (d - 1));
  w.generation.assign(generation.begin(), generation.begin() + d);
  w.k.assign(k.begin(), k.begin() + d);
  w.name = name + "[1.." + std::to_string(d) + "]";
  return w;
}

AdmissibleReport check_admissible(const AdmissibleStructure& s, long precision, long tol_exp,
                                  std::uint64_t seed) {
  AdmissibleReport r;
  r.system_report = check_ct(s.system, precision, tol_exp);
  r.pass = r.system_report.pass;

  const Comodule& top = s.comodule_levels.back();
  for (int n = 0; n < s.depth(); ++n) {
    LevelReport lv;
    const Comodule& vn = s.comodule_levels[n];
    lv.axioms = check_comodule(vn, tol_exp);
    lv.level_dim = vn.space->rank();

    if (n + 1 < s.depth()) {
      const Op& t = s.comodule_transitions[n];
      lv.transition_morphism = defect_report(
          "comodule-transition-morphism",
          comodule_morphism_defect_over(vn, s.comodule_levels[n + 1], t, s.system.transitions[n]),
          tol_exp);
      try {
        lv.transition_injective = kernel(t, precision).empty();
      } catch (const PrecisionExhausted&) {
        lv.transition_injective = false;
      }
      lv.transition_compact = t.compactness_margin().compact_at_truncation;
    } else {
      lv.transition_morphism.law = "comodule-transition-morphism";
      lv.transition_morphism.status = CheckStatus::Ok;
    }

    // V box_C C_n inside the window: V is represented by its top level
    Comodule cn_left = level_as_left_top_comodule(s.system, n);
    std::vector<Vec> box = cotensor(top, cn_left, precision);
    lv.cotensor_dim = static_cast<int>(box.size());
    lv.dims_match = lv.cotensor_dim == lv.level_dim;

    if (lv.dims_match) {
      Comodule ambient = cofree_comodule(top.space, s.system.levels[n]);
      SubComodule w = sub_comodule(ambient, box, precision, tol_exp,
                                   "V-box-" + s.system.levels[n]->name);
      auto homs = comodule_hom(vn, w.comodule, precision);
      auto iso = find_invertible(homs, precision, seed);
      lv.iso_found = iso.has_value();
      if (iso) lv.iso = *iso;
      if (!lv.iso_found)
        lv.note = "no comodule isomorphism onto the cotensor found (hom space dim " +
                  std::to_string(homs.size()) + ")";
    } else {
      lv.note = "cotensor dimension " + std::to_string(lv.cotensor_dim) +
                " != level dimension " + std::to_string(lv.level_dim);
    }

    // cogeneration witness: injective comodule morphism into C_n^{k_n}
    Comodule target = comodule_power(regular_comodule(s.system.levels[n]), s.k[n]);
    lv.witness_morphism = defect_report(
        "cogeneration-witness-morphism",
        comodule_morphism_defect(vn, target, s.cogeneration[n]), tol_exp);
    try {
      lv.witness_injective = kernel(s.cogeneration[n], precision).empty();
    } catch (const PrecisionExhausted&) {
      lv.witness_injective = false;
    }

    lv.pass = lv.axioms.pass && lv.transition_morphism.pass() && lv.transition_injective &&
              lv.transition_compact && lv.dims_match && lv.iso_found &&
              lv.witness_morphism.pass() && lv.witness_injective;
    r.pass = r.pass && lv.pass;
    r.levels.push_back(std::move(lv));
  }
  return r;
}

CoadmissibleReport check_coadmissible(const CoadmissibleStructure& s, long precision,
                                      long tol_exp, std::uint64_t seed) {
  CoadmissibleReport r;
  r.system_report = check_nf(s.system, tol_exp);
  r.pass = r.system_report.pass;

  const RightModule& top = s.module_levels.back();
  const BanachAlgebra& atop = s.system.levels.back();
  for (int n = 0; n < s.depth(); ++n) {
    CoLevelReport lv;
    const RightModule& mn = s.module_levels[n];
    const BanachAlgebra& an = s.system.levels[n];
    lv.axioms = check_module(mn, tol_exp);
    lv.level_dim = mn.space->rank();

    if (n + 1 < s.depth()) {
      lv.transition_morphism = defect_report(
          "module-transition-morphism",
          module_morphism_defect_over(s.module_levels[n + 1], mn, s.module_transitions[n],
                                      s.system.transitions[n]),
          tol_exp);
    } else {
      lv.transition_morphism.law = "module-transition-morphism";
      lv.transition_morphism.status = CheckStatus::Ok;
    }

    // M ⊗_A A_n at the window: quotient of M_top ⊗ A_n by the closure of
    // {(m·a)⊗x − m⊗(π(a)·x)}, π the composite A_top -> A_n
    Op proj_alg = Op::identity(atop.space);
    for (int j = s.depth() - 2; j >= n; --j) proj_alg = s.system.transitions[j].compose(proj_alg);

    auto ma = Space::tensor(top.space, an.space);
    std::vector<Vec> rel;
    for (int m = 0; m < top.space->rank(); ++m)
      for (int a = 0; a < atop.space->rank(); ++a) {
        Vec md = top.action.column(top.action.domain()->flat(m, a));
        for (int x = 0; x < an.space->rank(); ++x) {
          // (m·a)⊗x
          Vec left(ma);
          for (const auto& [i, c] : md.coeffs())
            left = left + Vec(ma, {{ma->flat(i, x), c}});
          // m⊗(π(a)·x)
          Vec pax(an.space);
          for (const auto& [pa, c] : proj_alg.column(a).coeffs())
            pax = pax + an.mult.column(an.mult.domain()->flat(pa, x)).scaled(c);
          Vec right(ma);
          for (const auto& [i, c] : pax.coeffs())
            right = right + Vec(ma, {{ma->flat(m, i), c}});
          Vec gen = left - right;
          if (!gen.empty()) rel.push_back(std::move(gen));
        }
      }
    Quotient q = quotient_by_span(ma, rel, precision, "M-ten-" + an.name);
    lv.quotient_dim = q.space->rank();
    lv.dims_match = lv.quotient_dim == lv.level_dim;

    if (lv.dims_match) {
      // right A_n-action on the quotient: [m⊗x]·y = m⊗(x·y)
      auto qa = Space::tensor(q.space, an.space);
      Op act = Op::from_columns(qa, q.space, [&](int col) {
        auto [qi, y] = split_last(col, an.space->rank());
        Vec amb = q.section.column(qi);
        Vec out(q.space);
        for (const auto& [mx, c] : amb.coeffs()) {
          auto [m, x] = split_last(mx, an.space->rank());
          Vec xy = an.mult.column(an.mult.domain()->flat(x, y));
          for (const auto& [i, cc] : xy.coeffs())
            out = out + q.projection.apply(Vec(ma, {{ma->flat(m, i), c * cc}}));
        }
        return out;
      });
      RightModule qm{q.space, std::make_shared<BanachAlgebra>(an), act, "quotient"};
      auto homs = module_hom(qm, mn, precision);
      auto iso = find_invertible(homs, precision, seed);
      lv.iso_found = iso.has_value();
      if (iso) lv.iso = *iso;
      if (!lv.iso_found)
        lv.note = "no module isomorphism onto the level found (hom space dim " +
                  std::to_string(homs.size()) + ")";
    } else {
      lv.note = "quotient dimension " + std::to_string(lv.quotient_dim) +
                " != level dimension " + std::to_string(lv.level_dim);
    }

    // generation witness: surjective module morphism A_n^{k_n} -> M_n
    RightModule source = module_power(regular_module(std::make_shared<BanachAlgebra>(an)), s.k[n]);
    lv.witness_morphism = defect_report(
        "generation-witness-morphism",
        module_morphism_defect(source, mn, s.generation[n]), tol_exp);
    std::vector<Vec> img;
    for (int i = 0; i < source.space->rank(); ++i) img.push_back(s.generation[n].column(i));
    lv.witness_surjective = rank_of(mn.space, img, precision) == mn.space->rank();

    lv.pass = lv.axioms.pass && lv.transition_morphism.pass() && lv.dims_match && lv.iso_found &&
              lv.witness_morphism.pass() && lv.witness_surjective;
    r.pass = r.pass && lv.pass;
    r.levels.push_back(std::move(lv));
  }
  return r;
}

CoadmissibleStructure dualize_admissible(const AdmissibleStructure& s, long precision,
                                         long tol_exp) {
  auto src = check_admissible(s, precision, tol_exp);
  if (!src.pass)
    throw SourceCheckFailed("admissible structure " + s.name + " fails its own check");

  CoadmissibleStructure d;
  d.system = dualize_ct(s.system);
  d.name = s.name + "'";
  d.k = s.k;
  for (int n = 0; n < s.depth(); ++n) {
    const Comodule& vn = s.comodule_levels[n];
    auto aptr = std::make_shared<BanachAlgebra>(d.system.levels[n]);
    auto mspace = Space::dual(vn.space);
    // action = transpose of the coaction, (V⊗C)' read as V'⊗C' = M⊗A
    Op act = relabel(vn.coaction.transpose(), Space::tensor(mspace, aptr->space), mspace);
    d.module_levels.push_back(RightModule{mspace, aptr, act, vn.name + "'"});
  }
  for (int n = 0; n + 1 < s.depth(); ++n) {
    Op t = s.comodule_transitions[n].transpose();
    d.module_transitions.push_back(
        relabel(t, d.module_levels[n + 1].space, d.module_levels[n].space));
  }
  for (int n = 0; n < s.depth(); ++n) {
    Op g = s.cogeneration[n].transpose();  // (C^k)' -> V'
    auto source = Space::power(d.system.levels[n].space, s.k[n]);
    d.generation.push_back(relabel(g, source, d.module_levels[n].space));
  }
  return d;
}

AdmissibleStructure dualize_coadmissible(const CoadmissibleStructure& s, long precision,
                                         long tol_exp) {
  auto src = check_coadmissible(s, precision, tol_exp);
  if (!src.pass)
    throw SourceCheckFailed("coadmissible structure " + s.name + " fails its own check");

  AdmissibleStructure d;
  d.system = dualize_nf(s.system);
  d.name = s.name + "^o";
  d.k = s.k;
  for (int n = 0; n < s.depth(); ++n) {
    const RightModule& mn = s.module_levels[n];
    auto cptr = d.system.levels[n];
    auto vspace = Space::dual(mn.space);
    Op rho = relabel(mn.action.transpose(), vspace, Space::tensor(vspace, cptr->space));
    d.comodule_levels.push_back(Comodule{vspace, cptr, rho, Side::Right, mn.name + "'"});
  }
  for (int n = 0; n + 1 < s.depth(); ++n) {
    Op t = s.module_transitions[n].transpose();  // M_n' -> M_{n+1}'
    d.comodule_transitions.push_back(
        relabel(t, d.comodule_levels[n].space, d.comodule_levels[n + 1].space));
  }
  for (int n = 0; n < s.depth(); ++n) {
    Op g = s.generation[n].transpose();  // M' -> (A^k)'
    auto target = Space::power(d.system.levels[n]->space, s.k[n]);
    d.cogeneration.push_back(relabel(g, d.comodule_levels[n].space, target));
  }
  return d;
}

namespace {

void push_defect(StructureComparison& r, std::string law, const Op& diff, long tol_exp) {
  r.defects.push_back(defect_report(std::move(law), diff, tol_exp));
}

}  // namespace

StructureComparison compare_admissible(const AdmissibleStructure& a,
                                       const AdmissibleStructure& b, long tol_exp) {
  StructureComparison r;
  if (a.depth() != b.depth()) {
    DefectReport d;
    d.law = "structure-comparison";
    d.status = CheckStatus::Fail;
    d.witness = "depth mismatch";
    r.defects.push_back(std::move(d));
    return r;
  }
  for (int n = 0; n < a.depth(); ++n) {
    const auto& va = a.comodule_levels[n];
    const auto& vb = b.comodule_levels[n];
    push_defect(r, "level-" + std::to_string(n + 1) + "-coaction",
                va.coaction - relabel(vb.coaction, va.coaction.domain(), va.coaction.codomain()),
                tol_exp);
    push_defect(r, "level-" + std::to_string(n + 1) + "-witness",
                a.cogeneration[n] -
                    relabel(b.cogeneration[n], a.cogeneration[n].domain(),
                            a.cogeneration[n].codomain()),
                tol_exp);
    if (n + 1 < a.depth())
      push_defect(r, "transition-" + std::to_string(n + 1),
                  a.comodule_transitions[n] -
                      relabel(b.comodule_transitions[n], a.comodule_transitions[n].domain(),
                              a.comodule_transitions[n].codomain()),
                  tol_exp);
  }
  r.pass = std::all_of(r.defects.begin(), r.defects.end(),
                       [](const DefectReport& d) { return d.pass(); });
  return r;
}

StructureComparison compare_coadmissible(const CoadmissibleStructure& a,
                                         const CoadmissibleStructure& b, long tol_exp) {
  StructureComparison r;
  if (a.depth() != b.depth()) {
    DefectReport d;
    d.law = "structure-comparison";
    d.status = CheckStatus::Fail;
    d.witness = "depth mismatch";
    r.defects.push_back(std::move(d));
    return r;
  }
  for (int n = 0; n < a.depth(); ++n) {
    const auto& ma = a.module_levels[n];
    const auto& mb = b.module_levels[n];
    push_defect(r, "level-" + std::to_string(n + 1) + "-action",
                ma.action - relabel(mb.action, ma.action.domain(), ma.action.codomain()),
                tol_exp);
    push_defect(r, "level-" + std::to_string(n + 1) + "-witness",
                a.generation[n] - relabel(b.generation[n], a.generation[n].domain(),
                                          a.generation[n].codomain()),
                tol_exp);
    if (n + 1 < a.depth())
      push_defect(r, "transition-" + std::to_string(n + 1),
                  a.module_transitions[n] -
                      relabel(b.module_transitions[n], a.module_transitions[n].domain(),
                              a.module_transitions[n].codomain()),
                  tol_exp);
  }
  r.pass = std::all_of(r.defects.begin(), r.defects.end(),
                       [](const DefectReport& d) { return d.pass(); });
  return r;
}

InductionReport induction_preserves_admissibility(const CtSystem& a_system,
                                                  const CtSystem& b_system,
                                                  const std::vector<Op>& phi,
                                                  const AdmissibleStructure& w, long precision,
                                                  long tol_exp) {
  InductionReport rep;
  AdmissibleStructure& ind = rep.induced;
  ind.system = a_system;
  ind.name = w.name + "^phi";

  std::vector<SubComodule> levels;
  for (int n = 0; n < a_system.depth(); ++n) {
    // morphism check happens inside along_left/induce
    SubComodule sc = induce(w.comodule_levels[n], a_system.levels[n], phi[n], precision, tol_exp);
    levels.push_back(std::move(sc));
  }

  // transitions: restrict t_n ⊗ phi-transition to the cotensor bases
  for (int n = 0; n + 1 < a_system.depth(); ++n) {
    const auto& from = levels[n];
    const auto& to = levels[n + 1];
    Op big = Op::tensor(w.comodule_transitions[n], a_system.transitions[n]);
    Echelon eto;
    eto.rows = to.basis;
    for (const auto& row : to.basis) eto.pivots.push_back(row.coeffs().front().first);
    std::vector<Vec> cols;
    for (int i = 0; i < from.comodule.space->rank(); ++i) {
      Vec img = relabel(big.apply(from.basis[i]), to.basis.front().space());
      Vec res = img;
      std::vector<std::pair<int, Scalar>> cs;
      for (int j = 0; j < eto.rank(); ++j) {
        Scalar x = res.coeff(eto.pivots[j]);
        if (x.is_exact_zero()) continue;
        cs.emplace_back(j, x);
        res = res - eto.rows[j].scaled(x);
      }
      cols.push_back(Vec(to.comodule.space, std::move(cs)));
    }
    ind.comodule_transitions.push_back(Op(from.comodule.space, to.comodule.space, std::move(cols)));
  }

  // cogeneration: W^phi ⊆ W⊗A --emb_W⊗id--> B^k⊗A --(ε_B ⊗̄ id)^k--> A^k
  for (int n = 0; n < a_system.depth(); ++n) {
    const auto& an = a_system.levels[n];
    const auto& bn = b_system.levels[n];
    const int kw = w.k[n];
    const int ra = an->space->rank();
    const int rb = bn->space->rank();
    auto ak = Space::power(an->space, kw);
    Op wit = Op::from_columns(levels[n].comodule.space, ak, [&](int i) {
      // embed the basis vector, push W through the cogeneration witness,
      // contract each B coordinate with ε_B
      Vec amb = levels[n].basis[i];  // in W ⊗ A
      Vec out(ak);
      for (const auto& [wa, c] : amb.coeffs()) {
        auto [wi, ai] = split_last(wa, ra);
        for (const auto& [bk, cc] : w.cogeneration[n].column(wi).coeffs()) {
          const int copy = bk / rb, bi = bk % rb;
          Scalar e = bn->counit.column(bi).coeff(0);
          if (e.is_exact_zero()) continue;
          out = out + Vec(ak, {{copy * ra + ai, c * cc * e}});
        }
      }
      return out;
    });
    ind.cogeneration.push_back(std::move(wit));
    ind.k.push_back(kw);
    ind.comodule_levels.push_back(levels[n].comodule);
  }

  rep.check = check_admissible(ind, precision, tol_exp);

  // identification chain: W^phi box_A A_n (from the check) vs W box_B phi-A_n
  const Comodule& wtop = w.comodule_levels.back();
  for (int n = 0; n < a_system.depth(); ++n) {
    // A_n as a left comodule over the window top B_N along the composite
    // B-lift of phi_n
    const auto& an = *a_system.levels[n];
    const auto& btop = *b_system.levels.back();
    Op into_btop = Op::identity(b_system.levels[n]->space);
    for (int j = n; j + 1 < b_system.depth(); ++j) into_btop = b_system.transitions[j].compose(into_btop);
    Op lift = into_btop.compose(phi[n]);
    auto bc = Space::tensor(btop.space, an.space);
    Op rho = relabel(Op::tensor(lift, Op::identity(an.space)).compose(an.comult), an.space, bc);
    Comodule an_left{an.space, std::make_shared<Coalgebra>(btop), rho, Side::Left, "phi-A"};
    std::vector<Vec> rhs = cotensor(wtop, an_left, precision);

    const int lhs_dim = rep.check.levels[n].cotensor_dim;
    DefectReport d;
    d.law = "induction-identification-level-" + std::to_string(n + 1);
    d.residual = Rational(0);
    d.tail = Rational(0);
    if (static_cast<int>(rhs.size()) != lhs_dim) {
      d.status = CheckStatus::Fail;
      d.witness = "W box (phi-A_n) has dimension " + std::to_string(rhs.size()) +
                  ", W^phi box A_n has dimension " + std::to_string(lhs_dim);
    } else {
      d.status = CheckStatus::Ok;
      d.exact_zero = true;
    }
    rep.chain.push_back(std::move(d));
  }

  rep.pass = rep.check.pass && std::all_of(rep.chain.begin(), rep.chain.end(),
                                           [](const DefectReport& d) { return d.pass(); });
  return rep;
}

AdmissibleStructure regular_admissible(const CtSystem& s) {
  AdmissibleStructure a;
  a.system = s;
  a.name = "regular_admissible(" + s.name + ")";
  for (int n = 0; n < s.depth(); ++n) {
    a.comodule_levels.push_back(regular_comodule(s.levels[n]));
    a.cogeneration.push_back(Op::identity(s.levels[n]->space));
    a.k.push_back(1);
  }
  for (int n = 0; n + 1 < s.depth(); ++n) a.comodule_transitions.push_back(s.transitions[n]);
  return a;
}

AdmissibleStructure power_admissible(const CtSystem& s, int k) {
  AdmissibleStructure a;
  a.system = s;
  a.name = "power_admissible(" + s.name + "," + std::to_string(k) + ")";
  for (int n = 0; n < s.depth(); ++n) {
    Comodule level = comodule_power(regular_comodule(s.levels[n]), k);
    a.cogeneration.push_back(Op::identity(level.space));
    a.comodule_levels.push_back(std::move(level));
    a.k.push_back(k);
  }
  for (int n = 0; n + 1 < s.depth(); ++n) {
    const auto& from = a.comodule_levels[n].space;
    const auto& to = a.comodule_levels[n + 1].space;
    const int rm = s.levels[n]->space->rank();
    const Op& t = s.transitions[n];
    a.comodule_transitions.push_back(Op::from_columns(from, to, [&](int col) {
      const int copy = col / rm, i = col % rm;
      std::vector<std::pair<int, Scalar>> cs;
      for (const auto& [j, c] : t.column(i).coeffs())
        cs.emplace_back(copy * s.levels[n + 1]->space->rank() + j, c);
      return Vec(to, std::move(cs));
    }));
  }
  return a;
}

AdmissibleStructure enlarged_admissible(const CtSystem& s, int level, int grouplike_index) {
  AdmissibleStructure a = regular_admissible(s);
  a.name = "enlarged_admissible(" + s.name + ",level=" + std::to_string(level) + ")";
  const int n = level - 1;
  if (n < 0 || n >= s.depth()) throw Error("enlarged_admissible: level out of range");
  const auto& cn = s.levels[n];
  const long p = cn->prime();

  // V_n ⊕ K·extra, the extra line coacting through a grouplike of C_n
  Comodule extra = trivial_comodule(Space::make(p, "X", {"extra"}), cn,
                                    Vec::unit(cn->space, grouplike_index));
  Comodule enlarged = comodule_direct_sum(a.comodule_levels[n], extra);
  a.comodule_levels[n] = enlarged;

  const int rn = cn->space->rank();
  // transitions: into the level extend by zero on the extra line; out of the
  // level precompose with the inclusion
  if (n + 1 < s.depth()) {
    const Op& t = s.transitions[n];
    a.comodule_transitions[n] =
        Op::from_columns(enlarged.space, a.comodule_levels[n + 1].space, [&](int i) {
          return i < rn ? t.column(i) : Vec(a.comodule_levels[n + 1].space);
        });
  }
  if (n > 0) {
    const Op& t = s.transitions[n - 1];
    a.comodule_transitions[n - 1] =
        Op::from_columns(a.comodule_levels[n - 1].space, enlarged.space, [&](int i) {
          std::vector<std::pair<int, Scalar>> cs;
          for (const auto& [j, c] : t.column(i).coeffs()) cs.emplace_back(j, c);
          return Vec(enlarged.space, std::move(cs));
        });
  }
  // witness into C_n^2: identity on V_n, grouplike inclusion on the extra line
  auto target = Space::power(cn->space, 2);
  a.cogeneration[n] = Op::from_columns(enlarged.space, target, [&](int i) {
    if (i < rn) return Vec::unit(target, i);
    return Vec::unit(target, rn + grouplike_index);
  });
  a.k[n] = 2;
  return a;
}

}  // namespace coadm
