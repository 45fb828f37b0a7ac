#include "gamma4/report.hpp"

#include <json.hpp>

#include "gamma4/bounds.hpp"
#include "gamma4/error.hpp"
#include "gamma4/heegaard.hpp"
#include "gamma4/pinch.hpp"
#include "gamma4/torus.hpp"

namespace gamma4 {

BoundReport report(Int p, Int q) {
  if (p < 1 || q < 1) {
    throw Error(Errc::OutOfRange, "report expects p, q >= 1, got (" + std::to_string(p) + "," +
                                      std::to_string(q) + ")");
  }
  if (gcd(p, q) != 1) {
    throw Error(Errc::NotCoprime,
                "(" + std::to_string(p) + "," + std::to_string(q) + ") is not a coprime pair");
  }
  const TorusKnotClass right = canonicalize(p, q, Hand::Right);
  const TorusKnotClass left = mirror(right);

  BoundReport r;
  r.p = right.p;
  r.q = right.q;
  r.sigma_right = signature(right);
  r.sigma_left = signature(left);
  r.t0 = t0(right.p, right.q);
  r.d_minus1_right = d_pm1(right).d_minus1;
  r.d_minus1_left = d_pm1(left).d_minus1;
  r.gamma4_lower = gamma4_lower(right);
  r.gamma4_upper = gamma4_upper(right);
  r.exact = r.gamma4_lower == r.gamma4_upper;
  if ((r.p * r.q) % 2 == 0) r.gamma3_upper = gamma3_upper(right);

  const PinchSequence seq = pinch_sequence(right, PinchMode::Gamma4);
  r.pinch_trace.emplace_back(seq.start.p, seq.start.q);
  for (const PinchStep& step : seq.steps) r.pinch_trace.emplace_back(step.to.p, step.to.q);

  ensure(r.sigma_left == -r.sigma_right, "report: mirror signatures disagree");
  ensure(r.gamma4_lower <= r.gamma4_upper, "report: lower bound exceeds pinch surface");
  return r;
}

std::vector<BoundReport> family_table(Int k_max) {
  if (k_max < 2) throw Error(Errc::OutOfRange, "family table needs kmax >= 2");
  std::vector<BoundReport> rows;
  rows.reserve(static_cast<std::size_t>(k_max - 1));
  for (Int k = 2; k <= k_max; ++k) rows.push_back(report(2 * k, 2 * k - 1));
  return rows;
}

std::vector<BoundReport> scan(Int max_p) {
  if (max_p < 3) throw Error(Errc::OutOfRange, "scan needs max >= 3");
  std::vector<BoundReport> rows;
  for (Int p = 3; p <= max_p; ++p)
    for (Int q = 2; q < p; ++q)
      if (gcd(p, q) == 1) rows.push_back(report(p, q));
  return rows;
}

std::size_t count_exact(const std::vector<BoundReport>& rows) noexcept {
  std::size_t n = 0;
  for (const BoundReport& r : rows) n += r.exact ? 1 : 0;
  return n;
}

namespace {

nlohmann::ordered_json to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["p"] = r.p;
  j["q"] = r.q;
  j["sigma_right"] = r.sigma_right;
  j["sigma_left"] = r.sigma_left;
  j["t0"] = r.t0;
  j["d_minus1_right"] = r.d_minus1_right;
  j["d_minus1_left"] = r.d_minus1_left;
  j["gamma4_lower"] = r.gamma4_lower;
  j["gamma4_upper"] = r.gamma4_upper;
  j["exact"] = r.exact;
  j["gamma3_upper"] = r.gamma3_upper ? nlohmann::ordered_json(*r.gamma3_upper) : nullptr;
  auto trace = nlohmann::ordered_json::array();
  for (const auto& [a, b] : r.pinch_trace) trace.push_back({a, b});
  j["pinch_trace"] = std::move(trace);
  return j;
}

}  // namespace

std::string emit_json(const BoundReport& r) { return to_json(r).dump(2) + "\n"; }

std::string emit_json(const std::vector<BoundReport>& rows) {
  auto arr = nlohmann::ordered_json::array();
  for (const BoundReport& r : rows) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string csv_row(const BoundReport& r) {
  std::string line;
  for (Int v : {r.p, r.q, r.sigma_right, r.sigma_left, r.t0, r.d_minus1_right, r.d_minus1_left,
                r.gamma4_lower, r.gamma4_upper}) {
    line += std::to_string(v);
    line += ',';
  }
  line += r.exact ? "true" : "false";
  line += ',';
  if (r.gamma3_upper) line += std::to_string(*r.gamma3_upper);
  return line;
}

std::string emit_csv(const std::vector<BoundReport>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const BoundReport& r : rows) {
    out += csv_row(r);
    out += '\n';
  }
  return out;
}

}  // namespace gamma4
