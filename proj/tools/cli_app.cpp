#include "cli_app.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gamma4/gamma4.hpp"

namespace gamma4::cli {

namespace {

TorusKnotClass knot_from(Int p, Int q, bool mirrored) {
  if (p < 1 || q < 1) {
    throw Error(Errc::OutOfRange, "expected positive integers p q, got " + std::to_string(p) +
                                      " " + std::to_string(q));
  }
  if (gcd(p, q) != 1) {
    throw Error(Errc::NotCoprime,
                "(" + std::to_string(p) + "," + std::to_string(q) + ") is not a coprime pair");
  }
  return standard_form(p, q, mirrored ? Hand::Left : Hand::Right).knot;
}

std::string pair_str(Int a, Int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

void print_report(std::ostream& out, const BoundReport& r, bool mirrored) {
  const TorusKnotClass right = canonicalize(r.p, r.q, Hand::Right);
  const TorusKnotClass shown = mirrored ? mirror(right) : right;
  const TorusKnotClass other = mirror(shown);
  out << "knot            " << to_string(shown);
  if (other != shown) out << "  (mirror " << to_string(other) << ")";
  out << '\n';
  out << "signature       right " << r.sigma_right << "  left " << r.sigma_left << '\n';
  out << "t0              " << r.t0 << '\n';
  out << "d(S^3_-1)       right " << r.d_minus1_right << "  left " << r.d_minus1_left << '\n';
  out << "gamma4          " << r.gamma4_lower << " <= gamma4 <= " << r.gamma4_upper
      << (r.exact ? "  exact" : "") << '\n';
  out << "gamma3 upper    " << (r.gamma3_upper ? std::to_string(*r.gamma3_upper) : "-") << '\n';
  out << "pinch trace     ";
  for (std::size_t i = 0; i < r.pinch_trace.size(); ++i) {
    if (i) out << " -> ";
    out << pair_str(r.pinch_trace[i].first, r.pinch_trace[i].second);
  }
  out << '\n';
}

void print_table(std::ostream& out, const std::vector<BoundReport>& rows) {
  out << std::setw(6) << "p" << std::setw(6) << "q" << std::setw(9) << "sigma_R" << std::setw(9)
      << "sigma_L" << std::setw(8) << "t0" << std::setw(8) << "d-1_R" << std::setw(8) << "d-1_L"
      << std::setw(7) << "lower" << std::setw(7) << "upper" << std::setw(7) << "exact"
      << std::setw(8) << "gamma3" << '\n';
  for (const BoundReport& r : rows) {
    out << std::setw(6) << r.p << std::setw(6) << r.q << std::setw(9) << r.sigma_right
        << std::setw(9) << r.sigma_left << std::setw(8) << r.t0 << std::setw(8)
        << r.d_minus1_right << std::setw(8) << r.d_minus1_left << std::setw(7) << r.gamma4_lower
        << std::setw(7) << r.gamma4_upper << std::setw(7) << (r.exact ? "yes" : "no")
        << std::setw(8) << (r.gamma3_upper ? std::to_string(*r.gamma3_upper) : "-") << '\n';
  }
}

struct Options {
  Int p = 0;
  Int q = 0;
  bool json = false;
  bool csv = false;
  bool mirror = false;
  bool gamma3 = false;
  std::string family;
  Int kmax = 0;
  Int max = 0;
  Int from = 0;
  Int to = 0;
  Int g = 0;
  Int m = 0;
  Int d = 0;
};

void add_knot_args(CLI::App* cmd, Options& o) {
  cmd->add_option("p", o.p, "first torus coordinate")->required();
  cmd->add_option("q", o.q, "second torus coordinate")->required();
}

int cmd_report(const Options& o, std::ostream& out) {
  const TorusKnotClass k = knot_from(o.p, o.q, o.mirror);
  const BoundReport r = report(k.p, k.q);
  if (o.json) {
    out << emit_json(r);
  } else {
    print_report(out, r, o.mirror);
  }
  return kOk;
}

int cmd_table(const Options& o, std::ostream& out) {
  if (o.family != "2k") throw Error(Errc::OutOfRange, "unknown family '" + o.family + "'");
  const std::vector<BoundReport> rows = family_table(o.kmax);
  if (o.csv) {
    out << emit_csv(rows);
  } else if (o.json) {
    out << emit_json(rows);
  } else {
    print_table(out, rows);
  }
  return kOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const std::vector<BoundReport> rows = scan(o.max);
  const std::size_t exact = count_exact(rows);
  if (o.csv) {
    out << emit_csv(rows);
    out << "# exact " << exact << " of " << rows.size() << '\n';
  } else {
    print_table(out, rows);
    out << "exact " << exact << " of " << rows.size() << " knots\n";
  }
  return kOk;
}

int cmd_pinch(const Options& o, std::ostream& out) {
  const TorusKnotClass k = knot_from(o.p, o.q, o.mirror);
  const PinchMode mode = o.gamma3 ? PinchMode::Gamma3 : PinchMode::Gamma4;
  const PinchSequence seq = pinch_sequence(k, mode);
  for (const PinchStep& step : seq.steps) out << to_string(step) << '\n';
  if (o.gamma3) {
    out << "b1 = " << gamma3_upper(k) << " (surface in S^3)\n";
  } else {
    out << "b1 = " << gamma4_upper(k) << " (surface in B^4)\n";
  }
  return kOk;
}

int cmd_signature(const Options& o, std::ostream& out, std::ostream& err) {
  const TorusKnotClass k = knot_from(o.p, o.q, false);
  const Int rec = sigma_rec(k.p, k.q);
  const Int lattice = sigma_lattice(k.p, k.q);
  out << "sigma_rec" << pair_str(k.p, k.q) << " = " << rec << '\n';
  out << "sigma_lattice" << pair_str(k.p, k.q) << " = " << lattice << '\n';
  out << "signature " << to_string(k) << " = " << signature(k) << ", "
      << to_string(mirror(k)) << " = " << signature(mirror(k)) << '\n';
  if (rec != lattice) {
    err << "error: signature engines disagree on " << pair_str(k.p, k.q) << '\n';
    return kInternalFailure;
  }
  return kOk;
}

int cmd_alexander(const Options& o, std::ostream& out) {
  const TorusKnotClass k = knot_from(o.p, o.q, false);
  const LaurentPoly delta = alexander(k.p, k.q);
  out << "Delta = " << to_string(delta) << '\n';
  out << "t0 = " << torsion_coefficient(delta) << '\n';
  return kOk;
}

int cmd_dinv(const Options& o, std::ostream& out) {
  const TorusKnotClass k = knot_from(o.p, o.q, false);
  for (const TorusKnotClass& kk : {k, mirror(k)}) {
    const PlusMinusOneD d = d_pm1(kk);
    out << std::left << std::setw(12) << to_string(kk) << std::right
        << "d(S^3_-1) = " << d.d_minus1 << "  d(S^3_+1) = " << d.d_plus1 << '\n';
    if (kk == mirror(kk)) break;
  }
  return kOk;
}

int cmd_profile(const Options& o, std::ostream& out) {
  const TorusKnotClass k = knot_from(o.p, o.q, o.mirror);
  const FramedProfile profile = framed_profile(k, o.from, o.to);
  if (o.csv) {
    out << "n,sig_bound,d_bound,combined\n";
    for (const FramedRow& row : profile.rows)
      out << row.n << ',' << row.sig_bound << ',' << row.d_bound << ',' << row.combined << '\n';
    return kOk;
  }
  out << "knot " << to_string(k) << "  sigma " << signature(k) << "  d(S^3_-1) "
      << d_pm1(k).d_minus1 << '\n';
  out << std::setw(8) << "n" << std::setw(11) << "sig_bound" << std::setw(9) << "d_bound"
      << std::setw(10) << "combined" << '\n';
  for (const FramedRow& row : profile.rows) {
    out << std::setw(8) << row.n << std::setw(11) << row.sig_bound << std::setw(9) << row.d_bound
        << std::setw(10) << row.combined << '\n';
  }
  return kOk;
}

int cmd_audit(const Options& o, std::ostream& out) {
  const AuditRecord a = obstruction_audit(o.g, o.m, o.d);
  out << "g             " << a.g << "  (b1(F) = " << 2 * a.g + 1 << ")\n";
  out << "m             " << a.m << '\n';
  out << "n             " << a.n << "  (e(F) = " << a.n - 1 << ")\n";
  out << "d             " << a.d << '\n';
  out << "sign          " << (a.sign > 0 ? "+" : "-") << '\n';
  out << "a             " << a.a << '\n';
  out << "PD(c1)        (" << a.sign << ",2," << 2 * a.a << ")\n";
  out << "Q(c1)         " << a.q_c1 << '\n';
  out << "<c1,[S]>      " << a.pairing << '\n';
  out << "c1^2 direct   " << to_string(a.c1sq_direct) << '\n';
  out << "c1^2 reduced  " << to_string(a.c1sq_reduced) << '\n';
  out << "d_b           " << to_string(a.d_b) << '\n';
  out << "inequality    " << to_string(a.prop_lhs) << " <= " << to_string(a.prop_rhs) << '\n';
  out << "e/2 <= 2d+b1  " << to_string(a.eq2_lhs) << " <= " << to_string(a.eq2_rhs) << "  "
      << (a.consistent ? "consistent" : "violated") << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds on the nonorientable four-ball genus of torus knots", "gamma4"};
  app.require_subcommand(1);
  Options o;

  auto* report_cmd = app.add_subcommand("report", "bound certificate for T(p,q)");
  add_knot_args(report_cmd, o);
  report_cmd->add_flag("--json", o.json, "emit JSON");
  report_cmd->add_flag("--mirror", o.mirror, "label the knot as its mirror");

  auto* table_cmd = app.add_subcommand("table", "certificates for a knot family");
  table_cmd->add_option("--family", o.family, "family name (2k for T(2k,2k-1))")->required();
  table_cmd->add_option("--kmax", o.kmax, "largest k")->required();
  auto* table_csv = table_cmd->add_flag("--csv", o.csv, "emit CSV");
  table_cmd->add_flag("--json", o.json, "emit JSON")->excludes(table_csv);

  auto* scan_cmd = app.add_subcommand("scan", "certificates for all coprime 2 <= q < p <= max");
  scan_cmd->add_option("--max", o.max, "largest p")->required();
  scan_cmd->add_flag("--csv", o.csv, "emit CSV");

  auto* pinch_cmd = app.add_subcommand("pinch", "pinch-move trace");
  add_knot_args(pinch_cmd, o);
  pinch_cmd->add_flag("--gamma3", o.gamma3, "continue to a surface in S^3 (p*q even)");
  pinch_cmd->add_flag("--mirror", o.mirror, "start from the mirror");

  auto* sig_cmd = app.add_subcommand("signature", "signature by recursion and lattice count");
  add_knot_args(sig_cmd, o);

  auto* alex_cmd = app.add_subcommand("alexander", "Alexander polynomial and t0");
  add_knot_args(alex_cmd, o);

  auto* dinv_cmd = app.add_subcommand("dinv", "d-invariants of +-1 surgery, both chiralities");
  add_knot_args(dinv_cmd, o);

  auto* profile_cmd = app.add_subcommand("profile", "framed lower bounds over a range of n");
  add_knot_args(profile_cmd, o);
  profile_cmd->add_option("--from", o.from, "first n")->required();
  profile_cmd->add_option("--to", o.to, "last n")->required();
  profile_cmd->add_flag("--csv", o.csv, "emit CSV");
  profile_cmd->add_flag("--mirror", o.mirror, "use the mirror");

  auto* audit_cmd = app.add_subcommand("audit", "replay the closed-surface inequality chain");
  audit_cmd->add_option("--g", o.g, "genus of the closed surface")->required();
  audit_cmd->add_option("--m", o.m, "class (1,2,m)")->required();
  audit_cmd->add_option("--d", o.d, "d(S^3_-1(K))")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << msg << '\n';
    return kInvalidInput;
  }

  // Buffer so a failure midway never leaves partial output on stdout.
  std::ostringstream buf;
  try {
    int rc = kOk;
    if (*report_cmd) rc = cmd_report(o, buf);
    else if (*table_cmd) rc = cmd_table(o, buf);
    else if (*scan_cmd) rc = cmd_scan(o, buf);
    else if (*pinch_cmd) rc = cmd_pinch(o, buf);
    else if (*sig_cmd) rc = cmd_signature(o, buf, err);
    else if (*alex_cmd) rc = cmd_alexander(o, buf);
    else if (*dinv_cmd) rc = cmd_dinv(o, buf);
    else if (*profile_cmd) rc = cmd_profile(o, buf);
    else if (*audit_cmd) rc = cmd_audit(o, buf);
    out << buf.str();
    return rc;
  } catch (const Error& e) {
    err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    return is_input_error(e.code()) ? kInvalidInput : kInternalFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternalFailure;
  }
}

}  // namespace gamma4::cli
