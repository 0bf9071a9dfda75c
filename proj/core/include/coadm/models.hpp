#pragma once

#include "coadm/coalgebra.hpp"

namespace coadm {

// Forward finite differences: coefficients a_k = (Δ^k f)(0), so that
// f(x) = Σ a_k * binomial(x,k) for x = 0..values.size()-1. The oracle
// behind the binomial-basis model of continuous functions on Z_p.
std::vector<BigInt> mahler_expand(const std::vector<BigInt>& values);

// binomial(x, k) for integer x (possibly negative), exact.
BigInt binomial_int(const BigInt& x, int k);

/// Coalgebra on the binomial basis e_0..e_{rank-1}:
/// Δ e_n = Σ_{i+j=n} e_i ⊗ e_j, ε(e_n) = δ_{n,0}. Δ lowers degree, so the
/// truncation is exact (no tails). Optional per-index weight exponents.
Coalgebra mahler_coalgebra(long p, int rank, std::vector<long> weight_exps = {});

/// Full Hopf structure on the rank-cut binomial basis. Multiplication and
/// antipode are built solely from the finite-difference expansion of the
/// pointwise products binomial(x,i)*binomial(x,j) and of binomial(-x,n);
/// product columns with i+j >= rank are truncated and carry tail bound 1.
HopfAlgebra mahler_hopf(long p, int rank, std::vector<long> weight_exps = {});

/// M^c_n: basis e_ij, Δ e_ij = Σ_k e_ik ⊗ e_kj, ε(e_ij) = δ_ij.
Coalgebra matrix_coalgebra(long p, int n);

/// Group algebra K[Z/m] with grouplike basis: Δ g = g ⊗ g, ε(g) = 1,
/// g_i g_j = g_{i+j mod m}, S g_i = g_{-i mod m}. Everything exact.
HopfAlgebra group_algebra_cyclic(long p, int m);

// Block direct sum: Δ = Δ_a ⊕ Δ_b, ε = ε_a ⊕ ε_b.
Coalgebra coalgebra_direct_sum(const Coalgebra& a, const Coalgebra& b);

// Rank-1 grouplike coalgebra K·g (the counit sends g to 1).
Coalgebra grouplike_line(long p, const std::string& label = "g");

}  // namespace coadm
