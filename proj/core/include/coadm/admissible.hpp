#pragma once

#include "coadm/limits.hpp"

namespace coadm {

struct SourceCheckFailed : Error {
  using Error::Error;
};

/// Right Banach module over a Banach algebra at truncation.
struct RightModule {
  SpacePtr space;
  std::shared_ptr<const BanachAlgebra> over;
  Op action;  // M(x)A -> M
  std::string name;

  long prime() const { return space->prime(); }
};

struct ModuleReport {
  DefectReport assoc;  // (m·a)·b = m·(ab)
  DefectReport unit;   // m·1 = m
  bool pass = false;
};
ModuleReport check_module(const RightModule& m, long tol_exp);

RightModule regular_module(const std::shared_ptr<const BanachAlgebra>& a);
RightModule module_power(const RightModule& m, int k);

// f(m·a) = f(m)·psi(a) for f: M -> N over psi: A_M -> A_N.
Op module_morphism_defect_over(const RightModule& m, const RightModule& n, const Op& f,
                               const Op& psi);
Op module_morphism_defect(const RightModule& m, const RightModule& n, const Op& f);
std::vector<Op> module_hom(const RightModule& m, const RightModule& n, long precision);

/// Window presentation of an admissible comodule: levels V_n over C_n with
/// transitions over the phi_n, plus cogeneration witnesses V_n -> C_n^{k_n}.
/// "V" itself is never materialized; the top level stands in for it.
struct AdmissibleStructure {
  CtSystem system;
  std::vector<Comodule> comodule_levels;
  std::vector<Op> comodule_transitions;  // V_n -> V_{n+1}
  std::vector<Op> cogeneration;          // V_n -> C_n^{k_n}
  std::vector<int> k;
  std::string name;

  int depth() const { return static_cast<int>(comodule_levels.size()); }
  AdmissibleStructure window(int depth) const;
};

struct CoadmissibleStructure {
  NfSystem system;
  std::vector<RightModule> module_levels;
  std::vector<Op> module_transitions;  // M_{n+1} -> M_n
  std::vector<Op> generation;          // A_n^{k_n} -> M_n
  std::vector<int> k;
  std::string name;

  int depth() const { return static_cast<int>(module_levels.size()); }
  CoadmissibleStructure window(int depth) const;
};

/// One level of an admissibility verdict. The level identification is a
/// topological isomorphism of comodules, so an isomorphism is exhibited,
/// never just a dimension count.
struct LevelReport {
  ComoduleReport axioms;
  DefectReport transition_morphism;  // into the next level, over phi_n
  bool transition_injective = true;
  bool transition_compact = true;
  int cotensor_dim = 0;
  int level_dim = 0;
  bool dims_match = false;
  bool iso_found = false;
  Op iso;  // V_n -> (V_top box C_n), abstract coordinates, when found
  DefectReport witness_morphism;
  bool witness_injective = false;
  bool pass = false;
  std::string note;
};

struct AdmissibleReport {
  CtReport system_report;
  std::vector<LevelReport> levels;
  bool pass = false;
};
AdmissibleReport check_admissible(const AdmissibleStructure& s, long precision, long tol_exp,
                                  std::uint64_t seed = 1);

struct CoLevelReport {
  ModuleReport axioms;
  DefectReport transition_morphism;
  int quotient_dim = 0;
  int level_dim = 0;
  bool dims_match = false;
  bool iso_found = false;
  Op iso;  // quotient -> M_n when found
  DefectReport witness_morphism;
  bool witness_surjective = false;
  bool pass = false;
  std::string note;
};

struct CoadmissibleReport {
  NfReport system_report;
  std::vector<CoLevelReport> levels;
  bool pass = false;
};
CoadmissibleReport check_coadmissible(const CoadmissibleStructure& s, long precision,
                                      long tol_exp, std::uint64_t seed = 1);

// Levels, transitions and witnesses dualized; throws SourceCheckFailed when
// the source fails its own check first.
CoadmissibleStructure dualize_admissible(const AdmissibleStructure& s, long precision,
                                         long tol_exp);
AdmissibleStructure dualize_coadmissible(const CoadmissibleStructure& s, long precision,
                                         long tol_exp);

/// Level-wise comparison (coactions/actions, transitions, witnesses) of two
/// structures sharing space geometry, e.g. a structure and its double dual.
struct StructureComparison {
  std::vector<DefectReport> defects;
  bool pass = false;
};
StructureComparison compare_admissible(const AdmissibleStructure& a,
                                       const AdmissibleStructure& b, long tol_exp);
StructureComparison compare_coadmissible(const CoadmissibleStructure& a,
                                         const CoadmissibleStructure& b, long tol_exp);

/// Induction along a level-wise morphism of CT systems phi_n: A_n -> B_n.
/// The induced structure W^phi over the A-system is built by cotensor level
/// by level, checked, and the identification chain residuals reported.
struct InductionReport {
  AdmissibleStructure induced;
  AdmissibleReport check;
  std::vector<DefectReport> chain;  // W^phi box A_n vs W box (phi-A_n) per level
  bool pass = false;
};
InductionReport induction_preserves_admissibility(const CtSystem& a_system,
                                                  const CtSystem& b_system,
                                                  const std::vector<Op>& phi,
                                                  const AdmissibleStructure& w, long precision,
                                                  long tol_exp);

// ---- catalog -----------------------------------------------------------

AdmissibleStructure regular_admissible(const CtSystem& s);
AdmissibleStructure power_admissible(const CtSystem& s, int k);
// Enlarges one level by a grouplike line that the cotensor cannot see; the
// check must fail with a dimension mismatch at that level. grouplike_index
// names a grouplike basis vector of the level coalgebra.
AdmissibleStructure enlarged_admissible(const CtSystem& s, int level, int grouplike_index = 0);

}  // namespace coadm
