#pragma once

#include "coadm/comodule.hpp"
#include "coadm/models.hpp"

namespace coadm {

struct NotAnInterleaving : Error {
  using Error::Error;
};

/// Compact inductive system of Banach coalgebras: a finite window of levels
/// C_1..C_N with transitions phi_n: C_n -> C_{n+1}. No limit object is ever
/// materialized; every statement about the limit is a statement about the
/// window plus transition certificates.
struct CtSystem {
  std::vector<CoalgebraPtr> levels;
  std::vector<Op> transitions;  // transitions[n]: levels[n] -> levels[n+1]
  std::string name;

  int depth() const { return static_cast<int>(levels.size()); }
  // composite transition C_from -> C_to (identity when from == to)
  Op transition(int from, int to) const;
  CtSystem window(int depth) const;  // first `depth` levels
};

/// Projective system of Banach algebras, the dual shape.
struct NfSystem {
  std::vector<BanachAlgebra> levels;
  std::vector<Op> transitions;  // transitions[n]: levels[n+1] -> levels[n]
  std::string name;

  int depth() const { return static_cast<int>(levels.size()); }
  NfSystem window(int depth) const;
};

struct TransitionReport {
  MorphismReport morphism;
  bool injective = false;
  Op::CompactnessMargin margin;
  bool pass = false;
};

struct CtReport {
  std::vector<CoalgebraReport> levels;
  std::vector<TransitionReport> transitions;
  bool pass = false;
};
// Per-level coalgebra axioms; per-transition morphism + injectivity +
// compactness certificates.
CtReport check_ct(const CtSystem& s, long precision, long tol_exp, long margin_exp = 1);

struct NfReport {
  std::vector<AlgebraReport> levels;
  std::vector<TransitionReport> transitions;  // injective flag unused here
  bool pass = false;
};
NfReport check_nf(const NfSystem& s, long tol_exp, long margin_exp = 1);

// Levels dualized to convolution algebras, transitions transposed and
// reversed. At finite rank the whole dual carries the structure.
NfSystem dualize_ct(const CtSystem& s);
CtSystem dualize_nf(const NfSystem& s);

/// Level-wise comparison of two systems of equal depth sharing the same
/// space geometry (e.g. a system against its double dual): comultiplication,
/// counit and transition defects per level.
struct SystemComparison {
  std::vector<DefectReport> defects;
  bool pass = false;
};
SystemComparison compare_ct(const CtSystem& a, const CtSystem& b, long tol_exp);

/// Candidate equivalence data between two CT structures: monotone reindexing
/// maps sigma, tau and coalgebra morphisms u_n: S_n -> T_sigma(n),
/// v_n: T_n -> S_tau(n). Existence is a theorem; verification only here.
struct Interleaving {
  std::vector<int> sigma;
  std::vector<int> tau;
  std::vector<Op> u;
  std::vector<Op> v;
};
struct InterleavingReport {
  std::vector<MorphismReport> u_morphisms;
  std::vector<MorphismReport> v_morphisms;
  std::vector<DefectReport> squares;
  bool pass = false;
};
// Throws NotAnInterleaving naming the first failing square.
InterleavingReport ct_equivalence(const CtSystem& s, const CtSystem& t, const Interleaving& il,
                                  long tol_exp);

// Level-wise tensor product (levels C_n (x) D_n, transitions phi_n (x) psi_n).
CtSystem ct_tensor(const CtSystem& a, const CtSystem& b);

// ---- catalog -----------------------------------------------------------

/// Binomial-basis model with level weights p^(-k*a_n) and identity
/// transitions on coefficients. Ratios p^(-k(a_{n+1}-a_n)) decay in k, so
/// the transitions are compact certificates when a is strictly increasing.
CtSystem mahler_ct(long p, int rank, std::vector<long> a);
CtSystem mahler_ct(long p, int rank, int depth);  // a = 1..depth
// All levels equal with identity transitions; the standard negative
// control: transitions are not compact.
CtSystem constant_ct(const Coalgebra& c, int depth);

}  // namespace coadm
