// Copyright 2026 The clusterqis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "clusterqis/errors.h"
#include "clusterqis/qis.h"
#include "clusterqis/rng.h"
#include "clusterqis/security.h"
#include "clusterqis/teleport.h"

namespace clusterqis::cli {

namespace {

constexpr double kInputNormTol = 1e-9;
constexpr double kRecoveredFidelity = 1.0 - 1e-9;

template <typename... Args>
std::string fmt(const char* format, Args... args) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_real(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) {
    throw ConfigError("not a finite number: '" + std::string(s) + "'");
  }
  return v;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  f << text;
  if (!f) throw ConfigError("failed writing '" + path + "'");
}

std::string join_outcomes(const std::vector<PovmOutcome>& outcomes) {
  std::string s;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (i) s += ',';
    s += povm_name(outcomes[i]);
  }
  return s;
}

// Cluster used for the Monte Carlo column: beta and gamma from the grid,
// alpha = eta share what is left.
ClusterParams fig1_cluster(double beta, double gamma) {
  const double rest = std::sqrt((1.0 - beta * beta - gamma * gamma) / 2.0);
  ClusterParams p{rest, beta, gamma, rest};
  // Push the rounding residue onto alpha so validate() sees an exact sum.
  p.alpha = std::sqrt(std::max(0.0, 1.0 - beta * beta - gamma * gamma - rest * rest));
  return p;
}

double monte_carlo_success(const SweepConfig& c, double beta, int n, std::uint64_t seed) {
  TrialPlan plan;
  plan.max_trials = n;
  plan.rho = c.rho;
  plan.cluster = fig1_cluster(beta, c.gamma);
  try {
    plan.validate();
  } catch (const ConfigError&) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  const int samples = c.samples;
  std::vector<char> hit(static_cast<std::size_t>(samples), 0);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < samples; i = next++) {
      InMemoryTransport transport;
      const TeleportResult r =
          run_teleport_with_retries(c.input, plan, derive_seed(seed, static_cast<std::uint64_t>(i)), transport);
      hit[static_cast<std::size_t>(i)] = r.success ? 1 : 0;
    }
  };
  const int threads = std::max(1, std::min(c.parallel, samples));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  long successes = 0;
  for (char h : hit) successes += h;
  return static_cast<double>(successes) / samples;
}

std::string csv_double(double v) { return std::isnan(v) ? "nan" : fmt("%.17g", v); }

}  // namespace

std::vector<double> parse_reals(std::string_view csv) {
  if (trim(csv).empty()) throw ConfigError("expected a comma-separated list of numbers");
  std::vector<double> out;
  for (std::string_view part : split(csv, ',')) out.push_back(parse_real(part));
  return out;
}

std::vector<int> parse_ints(std::string_view csv) {
  if (trim(csv).empty()) throw ConfigError("expected a comma-separated list of integers");
  std::vector<int> out;
  for (std::string_view part : split(csv, ',')) {
    int v = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || end != part.data() + part.size()) {
      throw ConfigError("not an integer: '" + std::string(part) + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::vector<Complex> parse_amplitudes(std::string_view csv, std::size_t count, bool renormalize) {
  const std::vector<double> v = parse_reals(csv);
  std::vector<Complex> amps;
  if (v.size() == 2 * count) {
    for (std::size_t i = 0; i < count; ++i) amps.emplace_back(v[2 * i], v[2 * i + 1]);
  } else if (v.size() == count) {
    for (double x : v) amps.emplace_back(x, 0.0);
  } else {
    throw ConfigError("expected " + std::to_string(2 * count) + " values (re,im pairs) or " +
                      std::to_string(count) + " real amplitudes, got " + std::to_string(v.size()));
  }
  double norm2 = 0.0;
  for (const Complex& a : amps) norm2 += std::norm(a);
  if (norm2 == 0.0) throw ConfigError("input amplitudes are all zero");
  if (std::abs(norm2 - 1.0) > kInputNormTol) {
    if (!renormalize) {
      throw ConfigError("input amplitudes are not normalized: sum of squares = " + fmt("%.12g", norm2) +
                        " (pass --renormalize to rescale)");
    }
  }
  // Always rescale so downstream checks at 1e-12 see a unit vector.
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& a : amps) a *= scale;
  return amps;
}

SingleInput parse_single_input(std::string_view csv, bool renormalize) {
  const auto a = parse_amplitudes(csv, 2, renormalize);
  SingleInput in{a[0], a[1]};
  in.validate();
  return in;
}

TwoInput parse_two_input(std::string_view csv, bool renormalize) {
  const auto a = parse_amplitudes(csv, 4, renormalize);
  TwoInput in;
  std::copy(a.begin(), a.end(), in.amps.begin());
  in.validate();
  return in;
}

ClusterParams parse_cluster(std::string_view csv) {
  const std::vector<double> v = parse_reals(csv);
  if (v.size() != 4) throw ConfigError("--cluster takes four values alpha,beta,gamma,eta");
  ClusterParams p{v[0], v[1], v[2], v[3]};
  p.validate();
  return p;
}

std::vector<double> parse_range(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw ConfigError("range must look like lo:hi:step");
  const double lo = parse_real(parts[0]);
  const double hi = parse_real(parts[1]);
  const double step = parse_real(parts[2]);
  if (step <= 0.0) throw ConfigError("range step must be positive");
  if (hi < lo) throw ConfigError("range upper end is below the lower end");
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  if (count > 100000) throw ConfigError("range has too many points");
  std::vector<double> out;
  for (long i = 0; i < count; ++i) {
    // Snap to a 1e-12 grid so 0.1 + 14 * 0.05 prints as 0.8.
    out.push_back(std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  return out;
}

void SweepConfig::validate() const {
  if (!(gamma > 0.0 && gamma < 1.0)) throw ConfigError("gamma must lie in (0, 1)");
  if (!(rho > 0.0) || !std::isfinite(rho)) throw ConfigError("rho must be positive");
  if (betas.empty()) throw ConfigError("no beta values");
  if (trials.empty()) throw ConfigError("no N values");
  for (double b : betas) {
    if (!(b > 0.0)) throw ConfigError("beta must be positive");
    if (b * b + gamma * gamma >= 1.0) {
      throw ConfigError("beta = " + fmt("%.6g", b) + " is infeasible: beta^2 + gamma^2 must stay below 1 (beta < " +
                        fmt("%.6g", std::sqrt(1.0 - gamma * gamma)) + ")");
    }
  }
  for (int n : trials) {
    if (n < 2) throw ConfigError("N values must be at least 2");
  }
  if (samples < 0) throw ConfigError("--samples must be non-negative");
  if (parallel < 1) throw ConfigError("--parallel must be at least 1");
  input.validate();
}

std::string sweep_fig1_csv(const SweepConfig& c) {
  c.validate();
  std::vector<int> ns = c.trials;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::vector<double> betas = c.betas;
  std::sort(betas.begin(), betas.end());

  std::ostringstream out;
  out << "beta,N,p_eq6,p_closed_form,p_montecarlo\n";
  std::uint64_t point = 0;
  for (int n : ns) {
    for (double beta : betas) {
      const double eq6 = psuc_formula(n, beta, c.gamma, c.rho);
      const double closed = psuc_closed_form(n, beta, c.gamma, c.rho);
      const double mc = c.samples == 0 ? std::numeric_limits<double>::quiet_NaN()
                                       : monte_carlo_success(c, beta, n, derive_seed(c.seed, point));
      ++point;
      out << csv_double(beta) << ',' << n << ',' << csv_double(eq6) << ',' << csv_double(closed) << ','
          << csv_double(mc) << '\n';
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Subcommands

namespace {

struct TeleportFlags {
  std::string cluster = "0.5,0.5,0.5,0.5";
  std::string input = "1,0,0,0";
  bool renormalize = false;
  double rho = 1.5;
  int n = 1;
  std::uint64_t seed = 0;
  std::string transcript;
};

int cmd_teleport(const TeleportFlags& f, std::ostream& out) {
  TrialPlan plan;
  plan.cluster = parse_cluster(f.cluster);
  plan.rho = f.rho;
  plan.max_trials = f.n;
  const SingleInput input = parse_single_input(f.input, f.renormalize);
  plan.validate();

  InMemoryTransport transport;
  const TeleportResult r = run_teleport_with_retries(input, plan, f.seed, transport);
  out << "protocol teleport\n"
      << "seed " << f.seed << '\n'
      << "success " << (r.success ? 1 : 0) << '\n'
      << "trials_used " << r.trials_used << '\n'
      << "channels_allocated " << r.channels_allocated << '\n'
      << "fidelity " << fmt("%.12f", r.fidelity) << '\n'
      << "povm_outcomes " << join_outcomes(r.povm_outcomes) << '\n'
      << "# trial,alice,bob,povm,success\n";
  for (std::size_t i = 0; i < r.trials.size(); ++i) {
    const TrialRecord& t = r.trials[i];
    out << (i + 1) << ',' << bell_name(t.alice) << ',' << bell_name(t.bob) << ',' << povm_name(t.povm) << ','
        << (t.success ? 1 : 0) << '\n';
  }
  if (!f.transcript.empty()) write_file(f.transcript, serialize_transcript(r.transcript));
  return r.success ? kExitOk : kExitProtocolFailure;
}

struct SweepFlags {
  double gamma = 0.5;
  double rho = 1.5;
  std::string beta = "0.1:0.8:0.05";
  std::string n = "2,5,10";
  int samples = 2000;
  std::uint64_t seed = 0;
  int parallel = 1;
  std::string input = "0.6,0,0.8,0";
  std::string output;
};

int cmd_sweep(const SweepFlags& f, std::ostream& out) {
  SweepConfig c;
  c.gamma = f.gamma;
  c.rho = f.rho;
  c.betas = parse_range(f.beta);
  c.trials = parse_ints(f.n);
  c.samples = f.samples;
  c.seed = f.seed;
  c.parallel = f.parallel;
  c.input = parse_single_input(f.input, false);
  const std::string csv = sweep_fig1_csv(c);
  if (f.output.empty()) {
    out << csv;
  } else {
    write_file(f.output, csv);
  }
  return kExitOk;
}

struct QisFlags {
  std::string input = "0.5,0.5,0.5,0.5";
  bool renormalize = false;
  std::uint64_t seed = 0;
  std::string corrections = "synthesized";
  std::string transcript;
};

int cmd_qis(const QisFlags& f, std::ostream& out) {
  const TwoInput input = parse_two_input(f.input, f.renormalize);
  const CorrectionSource source = correction_source_from_name(f.corrections);
  InMemoryTransport transport;
  const QisResult r = run_qis(input, f.seed, transport, source);
  const bool ok = r.correction.has_value() && r.fidelity >= kRecoveredFidelity;
  out << "protocol qis\n"
      << "seed " << f.seed << '\n'
      << "corrections " << correction_source_name(source) << '\n'
      << "key " << r.key.to_string() << '\n'
      << "correction " << (r.correction ? r.correction->to_string() : std::string("none")) << '\n'
      << "fidelity " << fmt("%.12f", r.fidelity) << '\n'
      << "success " << (ok ? 1 : 0) << '\n';
  if (!f.transcript.empty()) write_file(f.transcript, serialize_transcript(r.transcript));
  return ok ? kExitOk : kExitProtocolFailure;
}

int cmd_verify_table1(const std::string& output, std::ostream& out) {
  const Table1Report report = verify_table1();
  const std::string text = report.to_text();
  if (output.empty()) {
    out << text;
  } else {
    write_file(output, text);
    out << "# rows=" << report.rows.size() << " mismatch=" << report.mismatches << '\n';
  }
  return report.all_pass() ? kExitOk : kExitVerifyMismatch;
}

struct EveFlags {
  std::string protocol = "teleport";
  std::string attachment = "tensor";
  std::string bob_label = "2";
  std::string input;
  std::string cluster = "0.5,0.5,0.5,0.5";
  bool renormalize = false;
  std::uint64_t seed = 0;
};

int cmd_eve(const EveFlags& f, std::ostream& out) {
  AttackConfig attack;
  attack.protocol = protocol_from_name(f.protocol);
  attack.attachment = attachment_from_name(f.attachment);
  attack.bob_label = f.bob_label;
  attack.validate();
  LeakageReport report;
  if (attack.protocol == Protocol::kTeleport) {
    const SingleInput input = parse_single_input(f.input.empty() ? "0.6,0,0.8,0" : f.input, f.renormalize);
    report = run_teleport_with_eve(input, parse_cluster(f.cluster), f.seed, attack);
  } else {
    const TwoInput input = parse_two_input(f.input.empty() ? "0.5,0.5,0.5,0.5" : f.input, f.renormalize);
    report = run_qis_with_eve(input, f.seed, attack);
  }
  out << report.to_text();
  if (report.eve_unaltered()) {
    out << "max trace distance <= 1e-12, mutual information <= 1e-9 bits\n";
  } else {
    out << "max trace distance " << fmt("%.3e", report.max_trace_distance) << ", mutual information "
        << fmt("%.3e", report.max_mutual_information) << " bits\n";
  }
  return kExitOk;
}

struct BobFlags {
  std::string input = "0.5,0.5,0.5,0.5";
  bool renormalize = false;
  std::uint64_t seed = 0;
  int rounds = 1000;
};

int cmd_dishonest_bob(const BobFlags& f, std::ostream& out) {
  if (f.rounds < 1) throw ConfigError("--rounds must be at least 1");
  const TwoInput input = parse_two_input(f.input, f.renormalize);
  out << dishonest_bob_substitution(input, f.seed, f.rounds).to_text();
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster-state teleportation and information splitting simulator", "clusterqis"};
  app.require_subcommand(1);

  TeleportFlags tf;
  auto* teleport = app.add_subcommand("teleport", "Probabilistic teleportation with up to N channel attempts");
  teleport->add_option("--cluster", tf.cluster, "alpha,beta,gamma,eta");
  teleport->add_option("--input", tf.input, "a0,b0 as re,im pairs (or two reals)");
  teleport->add_flag("--renormalize", tf.renormalize, "Rescale the input instead of rejecting it");
  teleport->add_option("--rho", tf.rho, "POVM scale");
  teleport->add_option("--n", tf.n, "Maximum number of attempts");
  teleport->add_option("--seed", tf.seed);
  teleport->add_option("--transcript", tf.transcript, "Write the classical transcript here");

  SweepFlags sf;
  auto* sweep = app.add_subcommand("sweep-fig1", "Success probability versus beta as CSV");
  sweep->add_option("--gamma", sf.gamma);
  sweep->add_option("--rho", sf.rho);
  sweep->add_option("--beta", sf.beta, "lo:hi:step");
  sweep->add_option("--n", sf.n, "Comma-separated attempt counts");
  sweep->add_option("--samples", sf.samples, "Monte Carlo runs per point (0 to skip)");
  sweep->add_option("--seed", sf.seed);
  sweep->add_option("--parallel", sf.parallel, "Worker threads for the Monte Carlo runs");
  sweep->add_option("--input", sf.input, "Input used by the Monte Carlo runs");
  sweep->add_option("--output", sf.output, "Write the CSV here instead of stdout");

  QisFlags qf;
  auto* qis = app.add_subcommand("qis", "Split a two-qubit state between Bob and Chika");
  qis->add_option("--input", qf.input, "Four amplitudes as re,im pairs (or four reals)");
  qis->add_flag("--renormalize", qf.renormalize);
  qis->add_option("--seed", qf.seed);
  qis->add_option("--corrections", qf.corrections, "table or synthesized");
  qis->add_option("--transcript", qf.transcript);

  std::string table_output;
  auto* verify = app.add_subcommand("verify-table1", "Check all 64 published corrections");
  verify->add_option("--output", table_output);

  EveFlags ef;
  auto* eve = app.add_subcommand("eve", "Leakage report for an eavesdropper qubit");
  eve->add_option("--protocol", ef.protocol, "teleport or qis");
  eve->add_option("--attachment", ef.attachment, "tensor or cnot");
  eve->add_option("--bob-label", ef.bob_label, "Bob qubit E is placed next to");
  eve->add_option("--input", ef.input);
  eve->add_option("--cluster", ef.cluster, "Teleport only");
  eve->add_flag("--renormalize", ef.renormalize);
  eve->add_option("--seed", ef.seed);

  BobFlags bf;
  auto* bob = app.add_subcommand("dishonest-bob", "Bob substitutes Chika's qubits");
  bob->add_option("--input", bf.input);
  bob->add_flag("--renormalize", bf.renormalize);
  bob->add_option("--seed", bf.seed);
  bob->add_option("--rounds", bf.rounds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitConfigError;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitConfigError;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfigError;
  }

  try {
    if (*teleport) return cmd_teleport(tf, out);
    if (*sweep) return cmd_sweep(sf, out);
    if (*qis) return cmd_qis(qf, out);
    if (*verify) return cmd_verify_table1(table_output, out);
    if (*eve) return cmd_eve(ef, out);
    if (*bob) return cmd_dishonest_bob(bf, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const ProtocolError& e) {
    err << "protocol failure: " << e.what() << '\n';
    return kExitProtocolFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitProtocolFailure;
  }
  return kExitConfigError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("clusterqis");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace clusterqis::cli
