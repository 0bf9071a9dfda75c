#pragma once

#include "coadm/report.hpp"
#include "coadm/solve.hpp"

#include <memory>

namespace coadm {

struct NotACoideal : Error {
  using Error::Error;
};

/// Banach coalgebra at truncation: a space with comultiplication
/// C -> C(x)C and counit C -> K. Tail flags live on the operators.
struct Coalgebra {
  SpacePtr space;
  Op comult;  // C -> C(x)C
  Op counit;  // C -> K
  std::string name;

  long prime() const { return space->prime(); }
  const SpacePtr& square() const { return comult.codomain(); }
};
using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

/// Banach algebra at truncation: multiplication A(x)A -> A and unit K -> A.
struct BanachAlgebra {
  SpacePtr space;
  Op mult;  // A(x)A -> A
  Op unit;  // K -> A
  std::string name;

  long prime() const { return space->prime(); }
};

struct HopfAlgebra {
  SpacePtr space;
  Op comult;
  Op counit;
  Op mult;
  Op unit;
  Op antipode;
  std::string name;

  long prime() const { return space->prime(); }
  Coalgebra coalgebra() const { return {space, comult, counit, name}; }
  BanachAlgebra algebra() const { return {space, mult, unit, name}; }
};

struct CoalgebraReport {
  DefectReport coassoc;
  DefectReport counit_left;   // (eps ⊗̄ id)∘Δ = id
  DefectReport counit_right;  // (id ⊗̄ eps)∘Δ = id
  bool pass = false;
};
CoalgebraReport check_coalgebra(const Coalgebra& c, long tol_exp);

struct AlgebraReport {
  DefectReport assoc;
  DefectReport unit_left;
  DefectReport unit_right;
  bool pass = false;
};
AlgebraReport check_algebra(const BanachAlgebra& a, long tol_exp);

struct HopfReport {
  std::vector<DefectReport> checks;
  bool pass = false;
  const DefectReport& by_law(const std::string& law) const;
};
// Algebra + coalgebra axioms, bialgebra compatibility, and the antipode
// convolution identity S ⋆ id = id ⋆ S = u∘eps. Checks composing through a
// truncated multiplication report against the declared tail bounds.
HopfReport check_hopf(const HopfAlgebra& h, long tol_exp);

// Convolution alpha ⋆ beta = (alpha ⊗̄ beta)∘Δ of functionals in C'.
Vec convolve(const Coalgebra& c, const Vec& alpha, const Vec& beta);
// The counit as the unit ε' of the convolution algebra, a vector in C'.
Vec convolution_unit(const Coalgebra& c);

// The dual Banach algebra (C', ⋆, ε'): mult is the transpose of Δ under
// the identification (C(x)C)' = C'(x)C' at truncation.
BanachAlgebra dual_algebra(const Coalgebra& c);
// Transpose of an algebra: at finite rank the whole dual carries the dual
// coalgebra structure (m', u').
Coalgebra dual_coalgebra(const BanachAlgebra& a);
HopfAlgebra dual_hopf(const HopfAlgebra& h);

// Verifies Δ(I) ⊆ I(x)C + C(x)I and ε(I) = 0 at precision, then forms the
// quotient on the echelon-complement basis. Throws NotACoideal with the
// violating generator.
struct CoidealQuotient {
  Coalgebra quotient;
  Op projection;
  DefectReport projection_morphism;  // Δ_Q∘π = (π⊗π)∘Δ_C
};
CoidealQuotient quotient_by_coideal(const Coalgebra& c, const std::vector<Vec>& gens,
                                    long precision, long tol_exp);

// Smallest truncation-subspace U ⊇ S with Δ(U) ⊆ U(x)U, computed by adding
// tensor-factor components of Δ(u) until stable.
std::vector<Vec> subcoalgebra_generated(const Coalgebra& c, const std::vector<Vec>& seed,
                                        long precision);

/// Finite decomposition f(xy) = Σ f_i(x) g_i(y) certifying membership of f
/// in A'(x)A' at truncation; always exists at finite rank, the content is
/// the decomposition length, its norm and the reconstruction residual.
struct DualMembership {
  std::vector<std::pair<Vec, Vec>> factors;  // (f_i, g_i), vectors in A'
  Rational factor_norm;                      // max ||f_i|| ||g_i||
  Rational residual;                         // reconstruction defect norm
  int length() const { return static_cast<int>(factors.size()); }
};
DualMembership dual_coalgebra_membership(const BanachAlgebra& a, const Vec& f, long precision);

// Morphism defect of phi: C -> B: Δ_B∘phi − (phi⊗phi)∘Δ_C and ε_B∘phi − ε_C.
struct MorphismReport {
  DefectReport comult_square;
  DefectReport counit_triangle;
  bool pass = false;
};
MorphismReport check_coalgebra_morphism(const Coalgebra& c, const Coalgebra& b, const Op& phi,
                                        long tol_exp);
MorphismReport check_algebra_morphism(const BanachAlgebra& a, const BanachAlgebra& b,
                                      const Op& psi, long tol_exp);

}  // namespace coadm
