#include "coadm/report.hpp"

#include <sstream>

namespace coadm {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Ok: return "ok";
    case CheckStatus::TailDominated: return "tail-dominated";
    case CheckStatus::Fail: return "fail";
  }
  return "?";
}

Rational tol_value(long p, long tol_exp) {
  if (tol_exp >= 0) return Rational(1, pow_p(p, tol_exp));
  return Rational(pow_p(p, -tol_exp));
}

namespace {

CheckStatus judge(const Rational& residual, const Rational& tail, const Rational& tol) {
  if (residual <= tol && tail <= tol) return CheckStatus::Ok;
  if (residual <= tol + tail) return CheckStatus::TailDominated;
  return CheckStatus::Fail;
}

}  // namespace

DefectReport defect_report(std::string law, const Op& defect, long tol_exp) {
  const long p = defect.domain()->prime();
  const Rational tol = tol_value(p, tol_exp);
  DefectReport r;
  r.law = std::move(law);
  r.residual = Rational(0);
  r.tail = defect.tail();
  r.exact_zero = true;
  for (int i = 0; i < defect.domain()->rank(); ++i) {
    ColumnDefect c;
    c.label = defect.domain()->label(i);
    c.residual = defect.column(i).norm() / defect.domain()->weight(i);
    c.tail = defect.tail(i) / defect.domain()->weight(i);
    c.exact_zero = defect.column(i).empty();
    c.status = judge(c.residual, c.tail, tol);
    r.residual = std::max(r.residual, c.residual);
    r.tail = std::max(r.tail, c.tail);
    r.exact_zero = r.exact_zero && c.exact_zero;
    if (c.status == CheckStatus::Fail && r.witness.empty())
      r.witness = "column " + c.label + " defect " + defect.column(i).str();
    r.columns.push_back(std::move(c));
  }
  r.status = judge(r.residual, r.tail, tol);
  if (r.status != CheckStatus::Fail) r.witness.clear();
  return r;
}

DefectReport defect_report_vec(std::string law, const SpacePtr& space,
                               const std::vector<std::pair<std::string, Vec>>& defects,
                               long tol_exp, const Rational& tail) {
  const Rational tol = tol_value(space->prime(), tol_exp);
  DefectReport r;
  r.law = std::move(law);
  r.residual = Rational(0);
  r.tail = tail;
  r.exact_zero = true;
  for (const auto& [label, d] : defects) {
    ColumnDefect c;
    c.label = label;
    c.residual = d.norm();
    c.tail = tail;
    c.exact_zero = d.empty();
    c.status = judge(c.residual, c.tail, tol);
    r.residual = std::max(r.residual, c.residual);
    r.exact_zero = r.exact_zero && c.exact_zero;
    if (c.status == CheckStatus::Fail && r.witness.empty())
      r.witness = label + ": defect " + d.str();
    r.columns.push_back(std::move(c));
  }
  r.status = judge(r.residual, r.tail, tol);
  if (r.status != CheckStatus::Fail) r.witness.clear();
  return r;
}

std::string rational_str(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string weight_str(long p, long exp) {
  return std::to_string(p) + "^" + std::to_string(exp);
}

nlohmann::json to_json(const Scalar& s) {
  nlohmann::json j;
  j["p"] = std::to_string(s.prime());
  switch (s.kind()) {
    case Scalar::Kind::Exact:
      if (s.exact_value() == 0) {
        j["zero"] = true;
      } else {
        long v = val_p(s.exact_value(), s.prime());
        Rational u = s.exact_value();
        if (v > 0) u /= Rational(pow_p(s.prime(), v));
        if (v < 0) u *= Rational(pow_p(s.prime(), -v));
        j["v"] = std::to_string(v);
        j["u"] = rational_str(u);
        j["exact"] = true;
      }
      break;
    case Scalar::Kind::Tracked: {
      std::ostringstream us;
      us << s.tracked_unit();
      j["v"] = std::to_string(s.tracked_val());
      j["u"] = us.str();
      j["r"] = std::to_string(s.tracked_rel());
      break;
    }
    case Scalar::Kind::ApproxZero:
      j["O"] = std::to_string(s.approx_bound());
      break;
  }
  return j;
}

nlohmann::json to_json(const SpacePtr& s) {
  nlohmann::json j;
  j["name"] = s->name();
  j["labels"] = s->labels();
  std::vector<std::string> ws;
  for (int i = 0; i < s->rank(); ++i) ws.push_back(weight_str(s->prime(), s->weight_exp(i)));
  j["weights"] = ws;
  return j;
}

nlohmann::json to_json(const Vec& v) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [i, c] : v.coeffs()) coeffs[v.space()->label(i)] = to_json(c);
  nlohmann::json j;
  j["space"] = v.space()->name();
  j["coeffs"] = coeffs;
  return j;
}

nlohmann::json to_json(const Op& t) {
  nlohmann::json cols = nlohmann::json::object();
  for (int i = 0; i < t.domain()->rank(); ++i)
    cols[t.domain()->label(i)] = to_json(t.column(i));
  nlohmann::json j;
  j["domain"] = t.domain()->name();
  j["codomain"] = t.codomain()->name();
  j["columns"] = cols;
  j["tail"] = rational_str(t.tail());
  return j;
}

nlohmann::json to_json(const DefectReport& r, bool with_columns) {
  nlohmann::json j;
  j["law"] = r.law;
  j["residual"] = rational_str(r.residual);
  j["tail"] = rational_str(r.tail);
  j["exact_zero"] = r.exact_zero;
  j["status"] = to_string(r.status);
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (with_columns) {
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& c : r.columns) {
      nlohmann::json cj;
      cj["label"] = c.label;
      cj["residual"] = rational_str(c.residual);
      cj["tail"] = rational_str(c.tail);
      cj["status"] = to_string(c.status);
      cols.push_back(cj);
    }
    j["columns"] = cols;
  }
  return j;
}

}  // namespace coadm
