#pragma once

#include "coadm/coalgebra.hpp"

#include <cstdint>

namespace coadm {

struct NotACoalgebraMorphism : Error {
  using Error::Error;
};
struct NotAComoduleMorphism : Error {
  using Error::Error;
};

enum class Side { Right, Left };

/// Banach comodule at truncation: a space with coaction into V(x)C (right)
/// or C(x)V (left) over a named coalgebra.
struct Comodule {
  SpacePtr space;
  CoalgebraPtr over;
  Op coaction;
  Side side = Side::Right;
  std::string name;

  long prime() const { return space->prime(); }
};

struct ComoduleReport {
  DefectReport counit;   // (id ⊗̄ ε)∘ρ = id
  DefectReport coassoc;  // (ρ⊗id)∘ρ = (id⊗Δ)∘ρ
  bool pass = false;
};
ComoduleReport check_comodule(const Comodule& m, long tol_exp);

// ---- catalog ----------------------------------------------------------

Comodule regular_comodule(const CoalgebraPtr& c, Side side = Side::Right);
// Row comodule over M^c_n: ρ f_i = Σ_k f_k ⊗ e_ki.
Comodule row_comodule(const CoalgebraPtr& mc, int n);
// Column comodule over M^c_n, a left comodule: ρ f_i = Σ_k e_ik ⊗ f_k.
Comodule column_comodule(const CoalgebraPtr& mc, int n);
// V(x)C with coaction id⊗Δ.
Comodule cofree_comodule(const SpacePtr& v, const CoalgebraPtr& c);
// ρ(v) = v ⊗ g for a grouplike g (Δg = g⊗g, ε(g) = 1).
Comodule trivial_comodule(const SpacePtr& v, const CoalgebraPtr& c, const Vec& grouplike);
Comodule comodule_direct_sum(const Comodule& a, const Comodule& b);
// M^k with coordinatewise coaction (the C^n of cogeneration witnesses).
Comodule comodule_power(const Comodule& m, int k);

// ---- morphisms --------------------------------------------------------

// (f⊗id)∘ρ_M − ρ_N∘f for right comodules over the same coalgebra.
Op comodule_morphism_defect(const Comodule& m, const Comodule& n, const Op& f);
// f over a coalgebra morphism phi: ρ_N∘f − (f⊗phi)∘ρ_M.
Op comodule_morphism_defect_over(const Comodule& m, const Comodule& n, const Op& f,
                                 const Op& phi);
DefectReport check_comodule_morphism(const Comodule& m, const Comodule& n, const Op& f,
                                     long tol_exp);
// Basis of the space of comodule morphisms M -> N, via the kernel of
// T |-> (T⊗id)∘ρ_M − ρ_N∘T on the matrix space.
std::vector<Op> comodule_hom(const Comodule& m, const Comodule& n, long precision);

// ---- module actions on and from comodules -----------------------------

// Dual action v'·c' = (v' ⊗̄ c')∘ρ, a right C'-module on V'.
Vec dual_action(const Comodule& m, const Vec& vdual, const Vec& cdual);
// Induced action λ·v = (id ⊗̄ λ)∘ρ(v), a left C'-module on V.
Vec induced_action(const Comodule& m, const Vec& lambda, const Vec& v);

/// Reconstruction of a coaction from a module action of C' given by
/// structure constants on the dual basis: ρ(v) = Σ_c (e_c'·v) ⊗ e_c. At
/// finite truncation the reconstruction always lands in V(x)C; the verdict
/// is whether it satisfies the comodule axioms.
struct Rationality {
  bool is_rational_at_truncation = false;
  Comodule comodule;  // valid when rational
  DefectReport counit_axiom;
  DefectReport coassoc_axiom;
  std::string counterexample;  // failing (functional, vector) pair
};
Rationality rationality(const CoalgebraPtr& c, const SpacePtr& v,
                        const std::vector<Op>& dual_basis_action, long tol_exp);

// ---- cotensor, induction, restriction ---------------------------------

// M □_C N = Ker(ρ_M⊗id_N − id_M⊗ρ_N) inside M(x)N; echelonized basis.
std::vector<Vec> cotensor(const Comodule& m_right, const Comodule& n_left, long precision);

/// Comodule presented on a subspace basis of an ambient comodule; the
/// abstract space carries one label per basis vector, weighted by the
/// basis vector norms.
struct SubComodule {
  Comodule comodule;       // abstract coordinates
  Op embed;                // abstract space -> ambient space
  std::vector<Vec> basis;  // echelonized ambient basis (embed columns)
  DefectReport stability;  // coaction keeps the subspace: residual report
};
// Ambient right comodule restricted to the span of basis.
SubComodule sub_comodule(const Comodule& ambient, const std::vector<Vec>& basis, long precision,
                         long tol_exp, const std::string& name);

// C as a left B-comodule along phi: C -> B (ρ = (phi⊗id)∘Δ), still a right
// C-comodule via Δ. Checks phi first; throws NotACoalgebraMorphism.
Comodule along_left(const CoalgebraPtr& c, const CoalgebraPtr& b, const Op& phi, long tol_exp);

// Induced comodule M^phi = M □_B (phi-C) over C, presented on the cotensor
// basis with its right C-coaction id⊗Δ.
SubComodule induce(const Comodule& m, const CoalgebraPtr& c, const Op& phi, long precision,
                   long tol_exp);
// Restriction along phi: coaction (id⊗phi)∘ρ.
Comodule restrict_comodule(const Comodule& n, const CoalgebraPtr& b, const Op& phi,
                           long tol_exp);

// id_M ⊗̄ ε_C on M □_B (phi-C) -> M, a B-comodule morphism (M^phi)_phi -> M.
Op counit_projection(const Comodule& m, const SubComodule& induced);

/// The maximal subspace of M that is a comodule over the image of phi,
/// computed by shrinking {v : ρ(v) ∈ W ⊗ phi(C)} to a fixed point.
std::vector<Vec> maximal_subcomodule_over_image(const Comodule& m, const Op& phi,
                                                long precision);

// ---- Frobenius reciprocity --------------------------------------------

/// Hom_C(N, M^phi) ≅ Hom_B(N_phi, M): ψ̂ |-> (id⊗̄ε)∘ψ̂ and
/// ψ |-> (ψ⊗id)∘ρ_N. Verifies that images are comodule morphisms and that
/// the roundtrip is the identity at precision.
struct FrobeniusReport {
  SubComodule induced;        // M^phi
  Op to_induced;              // N -> M^phi (abstract coordinates)
  Op to_restricted;           // N -> M
  DefectReport input_morphism;
  DefectReport image_in_cotensor;  // (ψ⊗id)∘ρ_N lands in M □_B phi-C
  DefectReport output_morphism;
  DefectReport roundtrip;
  bool pass = false;
};
// input: a B-comodule morphism psi: N_phi -> M.
FrobeniusReport frobenius_from_restricted(const Comodule& n, const Comodule& m,
                                          const CoalgebraPtr& c, const Op& phi, const Op& psi,
                                          long precision, long tol_exp);
// input: a C-comodule morphism into M^phi, in abstract coordinates of
// induce(m, c, phi, ...).
FrobeniusReport frobenius_from_induced(const Comodule& n, const Comodule& m,
                                       const CoalgebraPtr& c, const Op& phi, const Op& phihat,
                                       long precision, long tol_exp);

// ---- tensor identities -------------------------------------------------

// Tensor product of right comodules over a Hopf algebra:
// ρ = (id⊗id⊗m)∘(id⊗τ⊗id)∘(ρ_M⊗ρ_N).
Comodule comodule_tensor(const HopfAlgebra& h, const Comodule& m, const Comodule& n);

/// V ⊗ (W □_B phi-H) ≅ (V_phi ⊗ W) □_B phi-H via
/// v⊗w⊗h |-> v_(0)⊗w⊗v_(1)h, inverse with the antipode:
/// v⊗w⊗h |-> v_(0)⊗w⊗S(v_(1))h. Both directions verified to land in the
/// right subspaces, to invert each other, and to be comodule morphisms.
struct TensorIdentityReport {
  SubComodule lhs;  // V ⊗ (W □ phi-H) inside V⊗W⊗H
  SubComodule rhs;  // (V_phi ⊗ W) □ phi-H inside V⊗W⊗H
  DefectReport forward_lands;
  DefectReport backward_lands;
  DefectReport roundtrip_lhs;
  DefectReport roundtrip_rhs;
  DefectReport forward_morphism;
  bool pass = false;
};
TensorIdentityReport tensor_identity(const HopfAlgebra& h, const HopfAlgebra& b,
                                     const Comodule& v, const Comodule& w, const Op& pi,
                                     long precision, long tol_exp);

// ---- simplicity --------------------------------------------------------

/// Disproof is definitive: a proper nonzero cyclic subcomodule is returned
/// as witness. Absence of a witness among basis vectors and seeded samples
/// is evidence only, never proof, over an infinite field.
struct SimplicityCertificate {
  bool proper_subcomodule_found = false;
  std::vector<Vec> witness;  // echelon basis of the proper subcomodule
  Vec generator;             // the vector whose cyclic closure is proper
  int samples = 0;
};
SimplicityCertificate simplicity_certificate(const Comodule& m, std::uint64_t seed,
                                             long precision);

}  // namespace coadm
