#pragma once

#include "coadm/op.hpp"

#include <json.hpp>

namespace coadm {

/// Ok: defect certified within tolerance, tail within tolerance too.
/// TailDominated: the computed part is fine but the declared truncation
/// tail exceeds the tolerance, so the verdict holds only up to the tail.
/// Fail: defect exceeds tolerance plus tail, a genuine violation.
enum class CheckStatus { Ok, TailDominated, Fail };

std::string to_string(CheckStatus s);

struct ColumnDefect {
  std::string label;
  Rational residual;
  Rational tail;
  bool exact_zero = false;
  CheckStatus status = CheckStatus::Ok;
};

/// Residual norms of one checked identity. Residuals are carried as exact
/// rationals, never booleans alone: a truncation-dominated miss must stay
/// distinguishable from a genuine axiom violation.
struct DefectReport {
  std::string law;  // name of the identity, or "plumbing"
  Rational residual;
  Rational tail;
  bool exact_zero = false;
  CheckStatus status = CheckStatus::Ok;
  std::vector<ColumnDefect> columns;
  std::string witness;  // set when status == Fail

  bool pass() const { return status != CheckStatus::Fail; }
};

// residual <= p^-tol_exp + tail passes; the tail decides Ok vs TailDominated.
DefectReport defect_report(std::string law, const Op& defect, long tol_exp);
// For a defect map already known only on selected vectors.
DefectReport defect_report_vec(std::string law, const SpacePtr& space,
                               const std::vector<std::pair<std::string, Vec>>& defects,
                               long tol_exp, const Rational& tail = Rational(0));

Rational tol_value(long p, long tol_exp);

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const SpacePtr& s);
nlohmann::json to_json(const Vec& v);
nlohmann::json to_json(const Op& t);
nlohmann::json to_json(const DefectReport& r, bool with_columns = false);
std::string rational_str(const Rational& q);
std::string weight_str(long p, long exp);

}  // namespace coadm
