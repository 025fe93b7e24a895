// Copyright 2026 The pgrade Authors
// SPDX-License-Identifier: Apache-2.0

#include "pgrade_cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "pgrade/errors.hpp"
#include "pgrade/groupfn.hpp"
#include "pgrade/io.hpp"
#include "pgrade/ortho.hpp"

namespace pgrade::cli {

namespace {

/// Bad command-line value or unresolved name; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string file;
  std::optional<double> tol;
  double rank_tol = 1e-10;
  std::string csv;
};

std::string sci(double x, int digits = 15) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits, x);
  return buf;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string complex_text(Complex c) {
  return sci(c.real()) + (std::signbit(c.imag()) ? "-" : "+") + sci(std::abs(c.imag())) + "i";
}

double resolve_tol(const Common& c, const std::string& env_tol) {
  if (c.tol) return *c.tol;
  if (env_tol.empty()) return OrthoOptions{}.tol;
  try {
    std::size_t used = 0;
    const double v = std::stod(env_tol, &used);
    if (used != env_tol.size() || !(v > 0.0)) throw std::invalid_argument("range");
    return v;
  } catch (const std::exception&) {
    throw UsageError("GRADE_TOL must be a positive number, got '" + env_tol + "'");
  }
}

OrthoOptions ortho_options(const Common& c, const std::string& env_tol) {
  OrthoOptions o;
  o.tol = resolve_tol(c, env_tol);
  o.density.rank_tol = c.rank_tol;
  return o;
}

MixedState lookup_state(const StateFile& f, const std::string& name) {
  if (!f.states.count(name) && !f.mixtures.count(name)) {
    throw UsageError("no state or mixture named '" + name + "' in the file");
  }
  return f.mixed(name);
}

GroupProduct lookup_group(const StateFile& f, const std::string& name) {
  if (f.groups.count(name)) return f.group(name);
  if (f.states.count(name)) return GroupProduct({f.state(name)});
  throw UsageError("no group or state named '" + name + "' in the file");
}

std::ofstream open_csv(const std::string& path) {
  std::ofstream csv(path);
  if (!csv) throw UsageError("cannot write CSV file '" + path + "'");
  return csv;
}

// Fixes the global phase so the largest coefficient is real and positive.
StateVector canonical_phase(const StateVector& v) {
  Complex top{};
  for (const auto& [occ, c] : v.terms()) {
    if (std::abs(c) > std::abs(top) + 1e-12) top = c;
  }
  if (top == Complex{}) return v;
  StateVector out = v;
  out *= std::conj(top) / std::abs(top);
  return out;
}

void cmd_grade(const Common& c, const std::string& s1, const std::string& s2,
               const std::string& env_tol, std::ostream& out) {
  const StateFile f = read_state_file(c.file);
  const auto a = lookup_state(f, s1);
  const auto b = lookup_state(f, s2);
  const auto opts = ortho_options(c, env_tol);
  const auto report = grade(a, b, opts);

  out << "states " << s1 << " (n = " << a.particles() << ") and " << s2
      << " (n = " << b.particles() << "), tol = " << sci(opts.tol, 3) << "\n";
  out << "p  orthogonal  max_overlap\n";
  for (int p = 1; p <= report.max_p(); ++p) {
    const auto k = static_cast<std::size_t>(p - 1);
    char line[96];
    std::snprintf(line, sizeof line, "%-2d %-11s %s\n", p, report.orthogonal[k] ? "yes" : "no",
                  sci(report.max_overlap[k], 6).c_str());
    out << line;
  }
  out << "grade = " << (report.grade ? std::to_string(*report.grade) : "none") << "\n";

  if (!c.csv.empty()) {
    auto csv = open_csv(c.csv);
    csv << "p,orthogonal,max_overlap\n";
    for (int p = 1; p <= report.max_p(); ++p) {
      const auto k = static_cast<std::size_t>(p - 1);
      csv << p << "," << (report.orthogonal[k] ? 1 : 0) << "," << sci(report.max_overlap[k]) << "\n";
    }
  }
}

void cmd_araki(const Common& c, const std::string& s1, const std::string& s2, int p,
               const std::string& env_tol, std::ostream& out) {
  const StateFile f = read_state_file(c.file);
  const auto a = lookup_state(f, s1);
  const auto b = lookup_state(f, s2);
  const auto opts = ortho_options(c, env_tol);
  const int top = std::min(a.particles(), b.particles());
  if (p < 1 || p > top) {
    throw UsageError("--p must lie in [1, " + std::to_string(top) + "]");
  }
  const auto i1 = internal_space(a, p, opts.density);
  const auto i2 = internal_space(b, p, opts.density);
  const auto spectrum = araki_angles(i1, i2, opts);
  const auto parts = araki_decomposition(i1, i2, opts);

  out << "p = " << p << ", dim I1 = " << spectrum.dim1 << ", dim I2 = " << spectrum.dim2
      << ", dim E = " << spectrum.dim_e << "\n";
  out << "p-orthogonal: " << (max_cross_overlap(i1, i2) < opts.tol ? "yes" : "no") << "\n";
  out << "theta_deg    theta_rad          mult  dim_I1  dim_I2\n";
  for (const auto& part : parts) {
    char line[128];
    std::snprintf(line, sizeof line, "%-12s %-18s %-5d %-7d %d\n",
                  fixed(part.theta * 180.0 / std::numbers::pi, 6).c_str(),
                  fixed(part.theta, 15).c_str(), part.block.dimension(),
                  part.first_part.dimension(), part.second_part.dimension());
    out << line;
  }
  out << "principal angles (deg):";
  for (double t : spectrum.principal) out << " " << fixed(t * 180.0 / std::numbers::pi, 6);
  out << "\n";

  if (!c.csv.empty()) {
    auto csv = open_csv(c.csv);
    csv << "theta_rad,theta_deg,multiplicity,dim_first,dim_second\n";
    for (const auto& part : parts) {
      csv << fixed(part.theta, 15) << "," << fixed(part.theta * 180.0 / std::numbers::pi, 6) << ","
          << part.block.dimension() << "," << part.first_part.dimension() << ","
          << part.second_part.dimension() << "\n";
    }
  }
}

struct MatelemArgs {
  std::string bra, ket, op_file;
  std::optional<int> q;
  bool verify = false;
  bool report_terms = false;
  int threads = 1;
};

void cmd_matelem(const Common& c, const MatelemArgs& m, const std::string& env_tol,
                 std::ostream& out) {
  const StateFile f = read_state_file(c.file);
  const auto bra = lookup_group(f, m.bra);
  const auto ket = lookup_group(f, m.ket);
  std::optional<QOperator> op;
  if (!m.op_file.empty()) op = read_operator_file(m.op_file);
  if (m.threads < 1) throw UsageError("--threads must be >= 1");
  if (m.verify && !m.q) throw UsageError("--verify needs --q");

  EvalOptions opts;
  opts.threads = m.threads;
  opts.verify = m.verify;
  opts.ortho = ortho_options(c, env_tol);
  opts.ortho.density.rank_tol = c.rank_tol;

  const auto start = std::chrono::steady_clock::now();
  Evaluation e;
  if (op) {
    e = m.q ? matelem_pruned(bra, *op, ket, *m.q, opts) : matelem(bra, *op, ket, opts);
  } else {
    e = m.q ? overlap_group_pruned(bra, ket, *m.q, opts) : overlap_group(bra, ket, opts);
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const int n = ket.particles();
  const int n1 = ket.factor(0).particles();
  out << (op ? "matrix element" : "overlap") << " <" << m.bra << "|" << (op ? "H|" : "") << m.ket
      << ">, r = " << ket.size() << ", n = " << n << ", n1 = " << n1;
  if (m.q) out << ", q = " << *m.q;
  out << "\n";
  out << "value = " << complex_text(e.value) << "\n";
  out << "plans enumerated = " << e.stats.plans << "\n";
  if (op) out << "operator plans = " << e.stats.operator_plans << "\n";
  std::optional<TermCount> counts;
  if (m.report_terms) {
    counts = term_count(n, n1, m.q.value_or(n1));
    out << "term_count total = " << counts->total;
    if (m.q) out << ", pruned = " << counts->pruned;
    out << "\n";
  }
  out << "wall-clock seconds = " << sci(seconds, 3) << "\n";

  if (!c.csv.empty()) {
    auto csv = open_csv(c.csv);
    csv << "value_re,value_im,plans,operator_plans,term_total,term_pruned,seconds\n";
    csv << sci(e.value.real(), 16) << "," << sci(e.value.imag(), 16) << "," << e.stats.plans << ","
        << e.stats.operator_plans << "," << (counts ? std::to_string(counts->total) : "") << ","
        << (counts && m.q ? std::to_string(counts->pruned) : "") << "," << sci(seconds, 3) << "\n";
  }
}

void cmd_internal(const Common& c, const std::string& name, int p, std::ostream& out) {
  const StateFile f = read_state_file(c.file);
  const auto s = lookup_state(f, name);
  if (p < 1 || p > s.particles()) {
    throw UsageError("--p must lie in [1, " + std::to_string(s.particles()) + "]");
  }
  DensityOptions d;
  d.rank_tol = c.rank_tol;
  const auto space = internal_space(s, p, d);
  out << "internal space I^" << p << " of " << name << ": dimension " << space.dimension() << "\n";
  std::ofstream csv;
  if (!c.csv.empty()) {
    csv = open_csv(c.csv);
    csv << "vector,occupation,re,im\n";
  }
  int k = 0;
  for (const auto& raw : space.basis()) {
    const auto v = canonical_phase(raw);
    ++k;
    out << "vector " << k << "\n";
    for (const auto& [occ, coef] : v.terms()) {
      out << "  " << complex_text(coef) << " " << occ.to_string() << "\n";
      if (csv.is_open()) {
        csv << k << "," << occ.to_string() << "," << sci(coef.real(), 16) << ","
            << sci(coef.imag(), 16) << "\n";
      }
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& env_tol) {
  CLI::App app{"Graded p-orthogonality, Araki angles and group-function matrix elements"};
  app.name("pgrade");
  app.require_subcommand(1);

  Common common;
  const auto add_common = [&](CLI::App* sub, bool with_tol) {
    sub->add_option("file", common.file, "State file")->required()->check(CLI::ExistingFile);
    if (with_tol) {
      sub->add_option("--tol", common.tol,
                      "Largest internal-space overlap still counted as orthogonal "
                      "(default 1e-8, or GRADE_TOL)")
          ->check(CLI::PositiveNumber);
    }
    sub->add_option("--rank-tol", common.rank_tol,
                    "Relative eigenvalue cutoff defining the internal space")
        ->check(CLI::PositiveNumber);
    sub->add_option("--csv", common.csv, "Also write the table as CSV to this path");
  };

  std::string s1, s2;
  int p = 0;

  auto* grade_cmd = app.add_subcommand("grade", "Per-p orthogonality verdicts and the grade");
  add_common(grade_cmd, true);
  grade_cmd->add_option("state1", s1)->required();
  grade_cmd->add_option("state2", s2)->required();

  auto* araki_cmd = app.add_subcommand("araki", "Araki angles between p-internal spaces");
  add_common(araki_cmd, true);
  araki_cmd->add_option("state1", s1)->required();
  araki_cmd->add_option("state2", s2)->required();
  araki_cmd->add_option("--p", p, "Sector")->required();

  MatelemArgs m;
  auto* matelem_cmd =
      app.add_subcommand("matelem", "Overlap or operator matrix element of group functions");
  add_common(matelem_cmd, true);
  matelem_cmd->add_option("bra", m.bra, "Bra group (or single state)")->required();
  matelem_cmd->add_option("ket", m.ket, "Ket group (or single state)")->required();
  matelem_cmd->add_option("--operator", m.op_file, "Operator file; omit for the overlap")
      ->check(CLI::ExistingFile);
  matelem_cmd->add_option("--q", m.q,
                          "Declared orthogonality grade between the active bra group and the "
                          "ket spectators; enables pruning");
  matelem_cmd->add_flag("--verify", m.verify, "Check the declared grade before pruning");
  matelem_cmd->add_flag("--report-terms", m.report_terms, "Print the expected term counts");
  matelem_cmd->add_option("--threads", m.threads, "Worker threads for plan enumeration");

  auto* internal_cmd = app.add_subcommand("internal", "Basis of a p-internal space");
  add_common(internal_cmd, false);
  internal_cmd->add_option("state", s1)->required();
  internal_cmd->add_option("--p", p, "Sector")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (grade_cmd->parsed()) {
      cmd_grade(common, s1, s2, env_tol, out);
    } else if (araki_cmd->parsed()) {
      cmd_araki(common, s1, s2, p, env_tol, out);
    } else if (matelem_cmd->parsed()) {
      cmd_matelem(common, m, env_tol, out);
    } else {
      cmd_internal(common, s1, p, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << common.file << ": " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceCeilingError& e) {
    err << "error: " << e.what() << "\n";
    return kCeiling;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << "\n";
    return kVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kOk;
}

}  // namespace pgrade::cli
