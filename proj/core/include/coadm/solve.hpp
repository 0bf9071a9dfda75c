#pragma once

#include "coadm/op.hpp"

#include <cstdint>
#include <optional>

namespace coadm {

struct PrecisionExhausted : Error {
  using Error::Error;
};

/// Reduced echelon basis of a subspace: rows have pairwise distinct pivot
/// (leading) indices, pivot coefficient exactly 1, pivot columns eliminated
/// from every other row, rows ordered by pivot index. Two truncation
/// subspaces are equal iff their echelon bases agree coefficientwise at the
/// working precision.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<int> pivots;  // pivot index of each row

  int rank() const { return static_cast<int>(rows.size()); }
  bool contains(int pivot_index) const;
};

// Pivot rule everywhere: entry of minimal valuation (maximal norm), ties
// broken by smallest row index then smallest column index. Entries whose
// value cannot be told from zero at `precision` raise PrecisionExhausted.
Echelon echelonize(const SpacePtr& space, std::vector<Vec> vs, long precision);

// Residual of v after eliminating against the echelon rows.
Vec reduce(const Vec& v, const Echelon& e);
bool member(const Vec& v, const Echelon& e, long precision);

// Basis of {v : T v ≡ 0 at precision}, echelonized, leading coefficient of
// each vector exactly 1.
std::vector<Vec> kernel(const Op& T, long precision);

int rank_of(const SpacePtr& space, const std::vector<Vec>& vs, long precision);
bool subspace_equal(const SpacePtr& space, const std::vector<Vec>& a, const std::vector<Vec>& b,
                    long precision);

/// Quotient of a space by the span of the given vectors, presented on the
/// complement of the pivot labels. projection ∘ section = id.
struct Quotient {
  SpacePtr space;
  Op projection;  // ambient -> quotient
  Op section;     // quotient -> ambient, complement labels as representatives
  Echelon subspace;
};
Quotient quotient_by_span(const SpacePtr& ambient, const std::vector<Vec>& span, long precision,
                          const std::string& name);

// Basis of {T : M -> N | defect(T) ≡ 0 at precision} for a defect linear in
// T. Used for comodule morphism spaces.
std::vector<Op> op_solve(const SpacePtr& m, const SpacePtr& n,
                         const std::function<Op(const Op&)>& defect, long precision);

// Invertible element of a span of maps, searched over the basis elements
// and seeded random combinations. Exhibits an isomorphism when the span is
// a morphism space; nullopt when none is found.
std::optional<Op> find_invertible(const std::vector<Op>& span, long precision,
                                  std::uint64_t seed);

// Columns of T stacked into one vector (column-major).
Vec flatten(const Op& T);

}  // namespace coadm
