#include "coadm/solve.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace coadm {

namespace {

enum class ZClass { Zero, NonZero };

ZClass classify(const Scalar& s, long precision) {
  if (s.certainly_nonzero()) return ZClass::NonZero;
  if (s.is_exact_zero()) return ZClass::Zero;
  if (s.approx_bound() >= precision) return ZClass::Zero;
  throw PrecisionExhausted("entry " + s.str() + " undecidable at precision " +
                           std::to_string(precision));
}

struct Pivot {
  int row, col;
};

// Sparse working matrix: rows as sorted (col, value) lists. Exact zeros are
// never stored; approximate zeros stay, carrying their uncertainty through
// later row operations.
struct Mat {
  int rows = 0, cols = 0;
  long p = 2;
  std::vector<std::vector<std::pair<int, Scalar>>> row;

  Mat(int r, int c, long prime) : rows(r), cols(c), p(prime), row(r) {}

  void set(int i, int j, Scalar v) {
    if (!v.is_exact_zero()) row[i].emplace_back(j, std::move(v));
  }
  void finish_row(int i) {
    std::sort(row[i].begin(), row[i].end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  const Scalar* find(int i, int j) const {
    auto it = std::lower_bound(row[i].begin(), row[i].end(), j,
                               [](const auto& e, int c) { return e.first < c; });
    return (it != row[i].end() && it->first == j) ? &it->second : nullptr;
  }
  void erase(int i, int j) {
    auto it = std::lower_bound(row[i].begin(), row[i].end(), j,
                               [](const auto& e, int c) { return e.first < c; });
    if (it != row[i].end() && it->first == j) row[i].erase(it);
  }
  // row_i -= f * row_k (sparse merge); the pivot column is cancelled exactly
  void axpy(int i, const Scalar& f, int k, int pivot_col) {
    std::vector<std::pair<int, Scalar>> out;
    out.reserve(row[i].size() + row[k].size());
    size_t a = 0, b = 0;
    while (a < row[i].size() || b < row[k].size()) {
      if (b == row[k].size() ||
          (a < row[i].size() && row[i][a].first < row[k][b].first)) {
        out.push_back(row[i][a++]);
      } else if (a == row[i].size() || row[k][b].first < row[i][a].first) {
        Scalar v = -(f * row[k][b].second);
        if (!v.is_exact_zero()) out.emplace_back(row[k][b].first, std::move(v));
        ++b;
      } else {
        Scalar v = row[i][a].second - f * row[k][b].second;
        if (!v.is_exact_zero()) out.emplace_back(row[i][a].first, std::move(v));
        ++a;
        ++b;
      }
    }
    row[i] = std::move(out);
    erase(i, pivot_col);  // f was chosen as exactly that entry
  }
};

// MinValuation: entry of minimal valuation (maximal norm) over the active
// submatrix, ties by smallest row then column; the precision-friendly rule
// for solving. Leftmost: smallest active column first, minimal valuation
// within it; yields the unique reduced echelon presentation of a row space
// (leading labels ascending, leading coefficient 1).
enum class PivotRule { MinValuation, Leftmost };

// Full reduced echelon form in place; returns pivots in selection order.
std::vector<Pivot> rref(Mat& m, long precision, PivotRule rule) {
  std::vector<bool> row_done(m.rows, false), col_done(m.cols, false);
  std::vector<Pivot> pivots;
  for (;;) {
    int pi = -1, pj = -1;
    long pval = 0;
    for (int i = 0; i < m.rows; ++i) {
      if (row_done[i]) continue;
      for (const auto& [j, s] : m.row[i]) {
        if (col_done[j]) continue;
        if (classify(s, precision) == ZClass::Zero) continue;
        long v = *s.valuation();
        bool better;
        if (pi < 0) {
          better = true;
        } else if (rule == PivotRule::MinValuation) {
          better = v < pval;  // ties resolved by scan order (row, then col)
        } else {
          better = j < pj || (j == pj && v < pval);
        }
        if (better) {
          pi = i;
          pj = j;
          pval = v;
        }
        if (rule == PivotRule::Leftmost && j >= pj && pi >= 0) break;
      }
    }
    if (pi < 0) break;

    const Scalar pivot = *m.find(pi, pj);
    Scalar inv = Scalar::one(m.p) / pivot;
    for (auto& [j, s] : m.row[pi]) s = s * inv;
    m.erase(pi, pj);
    m.set(pi, pj, Scalar::one(m.p));
    m.finish_row(pi);

    for (int i = 0; i < m.rows; ++i) {
      if (i == pi) continue;
      const Scalar* f = m.find(i, pj);
      if (!f) continue;
      if (!f->certainly_nonzero() && f->approx_bound() >= precision) continue;
      m.axpy(i, *f, pi, pj);
    }
    row_done[pi] = true;
    col_done[pj] = true;
    pivots.push_back({pi, pj});
  }
  return pivots;
}

Vec row_to_vec(const Mat& m, int i, const SpacePtr& space, long precision) {
  std::vector<std::pair<int, Scalar>> cs;
  for (const auto& [j, s] : m.row[i])
    if (classify(s, precision) == ZClass::NonZero) cs.emplace_back(j, s);
  return Vec(space, std::move(cs));
}

}  // namespace

bool Echelon::contains(int pivot_index) const {
  return std::find(pivots.begin(), pivots.end(), pivot_index) != pivots.end();
}

Echelon echelonize(const SpacePtr& space, std::vector<Vec> vs, long precision) {
  Mat m(static_cast<int>(vs.size()), space->rank(), space->prime());
  for (size_t i = 0; i < vs.size(); ++i) {
    for (const auto& [j, c] : vs[i].coeffs()) m.set(static_cast<int>(i), j, c);
    m.finish_row(static_cast<int>(i));
  }
  auto pivots = rref(m, precision, PivotRule::Leftmost);
  std::sort(pivots.begin(), pivots.end(),
            [](const Pivot& a, const Pivot& b) { return a.col < b.col; });
  Echelon e;
  for (const auto& pv : pivots) {
    e.rows.push_back(row_to_vec(m, pv.row, space, precision));
    e.pivots.push_back(pv.col);
  }
  return e;
}

Vec reduce(const Vec& v, const Echelon& e) {
  Vec r = v;
  for (size_t k = 0; k < e.rows.size(); ++k) {
    Scalar c = r.coeff(e.pivots[k]);
    if (c.is_exact_zero()) continue;
    r = r - e.rows[k].scaled(c);
  }
  return r;
}

bool member(const Vec& v, const Echelon& e, long precision) {
  return reduce(v, e).bounded_by(precision);
}

std::vector<Vec> kernel(const Op& T, long precision) {
  const auto& dom = T.domain();
  Mat m(T.codomain()->rank(), dom->rank(), dom->prime());
  for (int j = 0; j < dom->rank(); ++j)
    for (const auto& [i, c] : T.column(j).coeffs()) m.row[i].emplace_back(j, c);
  for (int i = 0; i < m.rows; ++i) m.finish_row(i);
  auto pivots = rref(m, precision, PivotRule::MinValuation);

  std::vector<bool> is_pivot_col(dom->rank(), false);
  for (const auto& pv : pivots) is_pivot_col[pv.col] = true;

  std::vector<Vec> basis;
  for (int f = 0; f < dom->rank(); ++f) {
    if (is_pivot_col[f]) continue;
    std::vector<std::pair<int, Scalar>> cs;
    cs.emplace_back(f, Scalar::one(dom->prime()));
    for (const auto& pv : pivots) {
      const Scalar* s = m.find(pv.row, f);
      if (s && classify(*s, precision) == ZClass::NonZero) cs.emplace_back(pv.col, -*s);
    }
    basis.emplace_back(dom, std::move(cs));
  }
  // canonical presentation: leading labels ascending, leading coefficient 1
  return echelonize(dom, std::move(basis), precision).rows;
}

int rank_of(const SpacePtr& space, const std::vector<Vec>& vs, long precision) {
  return echelonize(space, vs, precision).rank();
}

bool subspace_equal(const SpacePtr& space, const std::vector<Vec>& a, const std::vector<Vec>& b,
                    long precision) {
  Echelon ea = echelonize(space, a, precision);
  Echelon eb = echelonize(space, b, precision);
  if (ea.pivots != eb.pivots) return false;
  for (int k = 0; k < ea.rank(); ++k) {
    const Vec d = ea.rows[k] - eb.rows[k];
    if (!d.bounded_by(precision)) return false;
  }
  return true;
}

Quotient quotient_by_span(const SpacePtr& ambient, const std::vector<Vec>& span, long precision,
                          const std::string& name) {
  Echelon e = echelonize(ambient, span, precision);
  std::vector<bool> is_pivot(ambient->rank(), false);
  for (int pv : e.pivots) is_pivot[pv] = true;

  std::vector<std::string> labels;
  std::vector<long> wexp;
  std::vector<int> comp;  // ambient index of each quotient label
  for (int i = 0; i < ambient->rank(); ++i) {
    if (is_pivot[i]) continue;
    labels.push_back(ambient->label(i));
    wexp.push_back(ambient->weight_exp(i));
    comp.push_back(i);
  }
  auto q = Space::make(ambient->prime(), name, labels, wexp);

  std::vector<int> ambient_to_q(ambient->rank(), -1);
  for (size_t k = 0; k < comp.size(); ++k) ambient_to_q[comp[k]] = static_cast<int>(k);

  Op section = Op::from_columns(q, ambient, [&](int k) { return Vec::unit(ambient, comp[k]); });
  Op projection = Op::from_columns(ambient, q, [&](int i) {
    if (!is_pivot[i]) return Vec::unit(q, ambient_to_q[i]);
    // pivot label: e_i ≡ -sum of its echelon row over complement labels
    int row = -1;
    for (int k = 0; k < e.rank(); ++k)
      if (e.pivots[k] == i) row = k;
    std::vector<std::pair<int, Scalar>> cs;
    for (const auto& [j, c] : e.rows[row].coeffs()) {
      if (j == i) continue;
      cs.emplace_back(ambient_to_q[j], -c);
    }
    return Vec(q, std::move(cs));
  });

  return Quotient{q, std::move(projection), std::move(section), std::move(e)};
}

Vec flatten(const Op& T) {
  auto flat = Space::make(T.domain()->prime(),
                          "flat(" + T.domain()->name() + "->" + T.codomain()->name() + ")",
                          [&] {
                            std::vector<std::string> ls;
                            for (int j = 0; j < T.domain()->rank(); ++j)
                              for (int i = 0; i < T.codomain()->rank(); ++i)
                                ls.push_back(T.domain()->label(j) + "->" + T.codomain()->label(i));
                            return ls;
                          }());
  std::vector<std::pair<int, Scalar>> cs;
  int cod = T.codomain()->rank();
  for (int j = 0; j < T.domain()->rank(); ++j)
    for (const auto& [i, c] : T.column(j).coeffs()) cs.emplace_back(j * cod + i, c);
  return Vec(flat, std::move(cs));
}

std::vector<Op> op_solve(const SpacePtr& m, const SpacePtr& n,
                         const std::function<Op(const Op&)>& defect, long precision) {
  const long p = m->prime();
  const int um = m->rank(), un = n->rank();
  std::vector<std::string> unknowns;
  for (int a = 0; a < um; ++a)
    for (int b = 0; b < un; ++b) unknowns.push_back(m->label(a) + "->" + n->label(b));
  auto hom = Space::make(p, "Hom(" + m->name() + "," + n->name() + ")", unknowns);

  std::vector<Vec> defect_cols;
  SpacePtr defect_flat;
  for (int a = 0; a < um; ++a)
    for (int b = 0; b < un; ++b) {
      Op unit = Op::from_columns(m, n, [&](int j) {
        return j == a ? Vec::unit(n, b) : Vec(n);
      });
      Vec d = flatten(defect(unit));
      defect_flat = d.space();
      defect_cols.push_back(std::move(d));
    }

  Op big = Op::from_columns(hom, defect_flat, [&](int k) { return defect_cols[k]; });
  std::vector<Vec> null = kernel(big, precision);

  std::vector<Op> out;
  out.reserve(null.size());
  for (const auto& v : null) {
    std::vector<Vec> cols(um, Vec(n));
    std::vector<std::vector<std::pair<int, Scalar>>> cc(um);
    for (const auto& [k, c] : v.coeffs()) cc[k / un].emplace_back(k % un, c);
    for (int a = 0; a < um; ++a) cols[a] = Vec(n, std::move(cc[a]));
    out.emplace_back(m, n, std::move(cols));
  }
  return out;
}

std::optional<Op> find_invertible(const std::vector<Op>& span, long precision,
                                  std::uint64_t seed) {
  if (span.empty()) return std::nullopt;
  const long p = span.front().domain()->prime();
  auto invertible = [&](const Op& t) {
    if (t.domain()->rank() != t.codomain()->rank()) return false;
    try {
      return kernel(t, precision).empty();
    } catch (const PrecisionExhausted&) {
      return false;
    }
  };
  for (const auto& h : span)
    if (invertible(h)) return h;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> val(-9, 9);
  for (int it = 0; it < 40; ++it) {
    Op acc = Op::zero(span.front().domain(), span.front().codomain());
    for (const auto& h : span) acc = acc + h.scaled(Scalar::exact(p, val(rng)));
    if (invertible(acc)) return acc;
  }
  return std::nullopt;
}

}  // namespace coadm
