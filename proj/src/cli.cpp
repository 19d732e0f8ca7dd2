#include "hyperq/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hyperq/containment.hpp"
#include "hyperq/error.hpp"
#include "hyperq/generators.hpp"
#include "hyperq/hypergraph.hpp"
#include "hyperq/report.hpp"
#include "hyperq/tensor.hpp"
#include "hyperq/turan.hpp"

namespace hyperq {

namespace {

struct RunConfig {
  std::string input_path;
  std::string output_path;
  double tol = 1e-10;
  std::size_t max_iter = 100000;
  std::uint64_t seed = 0;
  std::string format = "text";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

OutputFormat format_of(const RunConfig& cfg) {
  auto f = parse_format(cfg.format);
  if (!f) throw UsageError("unknown format '" + cfg.format + "'");
  return *f;
}

SpectralOptions spectral_options(const RunConfig& cfg) {
  SpectralOptions opts;
  opts.tol = cfg.tol;
  opts.max_iter = cfg.max_iter;
  return opts;
}

// Input problems (missing file, malformed content) are I/O failures.
Hypergraph load_input(const std::string& path) {
  try {
    return read_file(path);
  } catch (const Error& e) {
    throw Error(ErrorKind::Io, path + ": " + e.what());
  }
}

// Writes `text` to --out when given, otherwise to `out`.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output_path);
  if (!file) throw Error(ErrorKind::Io, "cannot write " + cfg.output_path);
  file << text;
  if (!file) throw Error(ErrorKind::Io, "write failed for " + cfg.output_path);
}

std::size_t to_size(const std::string& token, const std::string& what) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &pos);
  } catch (const std::exception&) {
    throw UsageError("bad " + what + " '" + token + "'");
  }
  if (pos != token.size() || token.front() == '-') throw UsageError("bad " + what + " '" + token + "'");
  return static_cast<std::size_t>(value);
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const std::size_t n = to_size(text, "range");
    return {n, n};
  }
  const std::size_t lo = to_size(text.substr(0, colon), "range start");
  const std::size_t hi = to_size(text.substr(colon + 1), "range end");
  if (lo > hi) throw UsageError("empty range '" + text + "'");
  return {lo, hi};
}

// ---------------------------------------------------------------- gen

int cmd_gen(const RunConfig& cfg, const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  if (args.empty()) throw UsageError("gen needs a construction");
  const std::string& kind = args[0];
  auto expect = [&](std::size_t count) {
    if (args.size() != count + 1) {
      throw UsageError("gen " + kind + " takes " + std::to_string(count) + " argument(s)");
    }
  };
  Hypergraph h(3, 0);
  if (kind == "fano") {
    expect(0);
    h = build_fano();
  } else if (kind == "bn") {
    expect(1);
    h = build_bn(to_size(args[1], "n")).first;
  } else if (kind == "two-part") {
    expect(2);
    h = build_two_part_complete(to_size(args[1], "a"), to_size(args[2], "b")).first;
  } else if (kind == "complete") {
    expect(2);
    h = build_complete(to_size(args[1], "n"), static_cast<int>(to_size(args[2], "r")));
  } else if (kind == "expansion") {
    expect(2);
    const Hypergraph base = load_input(args[1]);
    if (base.r() != 2) throw UsageError("expansion base must be a 2-graph");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < base.num_edges(); ++i) pairs.emplace_back(base.edge(i)[0], base.edge(i)[1]);
    h = build_expansion(pairs, base.n(), static_cast<int>(to_size(args[2], "r")));
  } else {
    throw UsageError("unknown construction '" + kind + "'");
  }
  emit(cfg, out, serialize(h));
  std::ostream& summary = cfg.output_path.empty() ? err : out;
  summary << "r=" << h.r() << " n=" << h.n() << " m=" << h.num_edges() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- spectral

int cmd_spectral(const RunConfig& cfg, const std::string& op_name, std::optional<double> shift,
                 bool with_vector, std::ostream& out) {
  const auto op = parse_operator(op_name);
  if (!op) throw UsageError("unknown operator '" + op_name + "'");
  const OutputFormat format = format_of(cfg);
  const Hypergraph h = load_input(cfg.input_path);
  SpectralOptions opts = spectral_options(cfg);
  opts.shift = shift;
  const SpectralResult res = spectral_radius(h, *op, opts);

  std::ostringstream text;
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["operator"] = std::string(to_string(*op));
    j["n"] = h.n();
    j["m"] = h.num_edges();
    j["rho"] = res.rho;
    j["lower"] = res.lower;
    j["upper"] = res.upper;
    j["iterations"] = res.iterations;
    j["residual"] = res.residual;
    j["converged"] = res.converged;
    if (with_vector) j["eigenvector"] = std::vector<double>(res.eigenvector.values().begin(), res.eigenvector.values().end());
    text << j.dump(2) << '\n';
  } else if (format == OutputFormat::Csv) {
    text << "operator,n,m,rho,lower,upper,iterations,residual,converged\n"
         << to_string(*op) << ',' << h.n() << ',' << h.num_edges() << ',' << format_number(res.rho)
         << ',' << format_number(res.lower) << ',' << format_number(res.upper) << ','
         << res.iterations << ',' << format_number(res.residual) << ','
         << (res.converged ? "true" : "false") << '\n';
    if (with_vector) {
      text << "vertex,weight\n";
      for (std::size_t i = 0; i < res.eigenvector.size(); ++i) {
        text << i << ',' << format_number(res.eigenvector[i]) << '\n';
      }
    }
  } else {
    text << "operator    " << to_string(*op) << '\n'
         << "vertices    " << h.n() << '\n'
         << "edges       " << h.num_edges() << '\n'
         << "rho         " << format_number(res.rho) << '\n'
         << "lower       " << format_number(res.lower) << '\n'
         << "upper       " << format_number(res.upper) << '\n'
         << "iterations  " << res.iterations << '\n'
         << "residual    " << format_number(res.residual) << '\n'
         << "converged   " << (res.converged ? "yes" : "no") << '\n';
    if (with_vector) {
      text << "eigenvector";
      for (double v : res.eigenvector.values()) text << ' ' << format_number(v);
      text << '\n';
    }
  }
  emit(cfg, out, text.str());
  return res.converged ? kExitOk : kExitNoConvergence;
}

// ---------------------------------------------------------------- check

int cmd_check(const RunConfig& cfg, const std::string& kind, std::ostream& out) {
  const OutputFormat format = format_of(cfg);
  const Hypergraph h = load_input(cfg.input_path);
  bool positive = false;  // fano-free / colorable
  std::string verdict;
  nlohmann::ordered_json witness;
  std::string witness_text;

  if (kind == "fano") {
    if (h.r() != 3) throw UsageError("fano check needs a 3-uniform hypergraph");
    const auto emb = contains_subgraph(h, build_fano());
    positive = !emb.has_value();
    verdict = positive ? "fano-free" : "contains";
    if (emb) {
      witness = emb->map;
      for (std::size_t p = 0; p < emb->map.size(); ++p) {
        witness_text += (p ? " " : "") + std::to_string(p) + "->" + std::to_string(emb->map[p]);
      }
    }
  } else if (kind == "two-color") {
    const auto coloring = two_coloring(h);
    positive = coloring.has_value();
    verdict = positive ? "2-colorable" : "not 2-colorable";
    if (coloring) {
      witness = std::vector<int>(coloring->assignment.begin(), coloring->assignment.end());
      for (auto label : coloring->assignment) witness_text += std::to_string(label);
    }
  } else {
    throw UsageError("unknown check '" + kind + "'");
  }

  std::ostringstream text;
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["check"] = kind;
    j["verdict"] = verdict;
    j["witness"] = witness;
    text << j.dump(2) << '\n';
  } else if (format == OutputFormat::Csv) {
    text << "check,verdict,witness\n" << kind << ',' << verdict << ",\"" << witness_text << "\"\n";
  } else {
    text << verdict << '\n';
    if (!witness_text.empty()) {
      text << (kind == "fano" ? "embedding " : "coloring ") << witness_text << '\n';
    }
  }
  emit(cfg, out, text.str());
  return positive ? kExitOk : kExitNegative;
}

// ---------------------------------------------------------------- verify

std::uint64_t seed_for(std::uint64_t seed, std::size_t n) {
  return seed ^ (0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(n) + 1));
}

struct VerifyArgs {
  std::string what;
  std::string range;
  double sigma = 0.05;
  double pi = 0.75;
  std::size_t samples = 20;
  double slack = 1e-6;
};

std::vector<Record> verify_bounds(const RunConfig& cfg, std::size_t lo, std::size_t hi) {
  std::vector<Record> records;
  for (std::size_t n = lo; n <= hi; ++n) {
    const QBounds b = bn_q_bounds(n);
    const SpectralResult res =
        spectral_radius(build_bn(n).first, TensorOperator::SignlessLaplacian, spectral_options(cfg));
    Record rec;
    rec.op = "bounds";
    rec.n = n;
    rec.inputs["lower"] = b.lower;
    rec.inputs["upper"] = b.upper;
    rec.inputs["converged"] = res.converged;
    rec.value = res.rho;
    rec.bound = b.upper;
    rec.pass = res.converged && res.rho >= b.lower - 1e-9 * b.lower && res.rho <= b.upper + 1e-6;
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<Record> verify_splits(std::size_t lo, std::size_t hi) {
  std::vector<Record> records;
  for (std::size_t n = lo; n <= hi; ++n) {
    const SplitScan scan = scan_splits(n);
    bool below = true;
    for (const auto& p : scan.profiles) below = below && p.q_value <= split_upper_bound(n, p.a) + 1e-6;
    Record rec;
    rec.op = "splits";
    rec.n = n;
    rec.inputs["best_a"] = scan.best_a;
    rec.inputs["best_b"] = n - scan.best_a;
    rec.inputs["balanced"] = scan.balanced;
    rec.value = scan.profiles[scan.best_a - 1].q_value;
    rec.bound = split_upper_bound(n, scan.best_a);
    rec.pass = scan.balanced && below;
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<Record> verify_criterion(const VerifyArgs& va, std::size_t lo, std::size_t hi) {
  CriterionParams params;
  params.pi = va.pi;
  params.r = 3;
  params.sigma = va.sigma;
  params.n_first = lo;
  params.n_last = hi;
  const auto ex = fano_ex_function();
  const auto c1 = check_condition1(params, ex);
  const auto c2 = check_condition2(params, fano_q_function(), ex);
  std::vector<Record> records;
  for (std::size_t k = 0; k < c1.size(); ++k) {
    for (const auto* row : {&c1[k], &c2[k]}) {
      Record rec;
      rec.op = row == &c1[k] ? "condition1" : "condition2";
      rec.n = row->n;
      rec.inputs["pi"] = params.pi;
      rec.inputs["r"] = params.r;
      rec.inputs["sigma"] = params.sigma;
      rec.value = row->slack;
      rec.bound = row->bound;
      rec.pass = row->pass;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::vector<Record> verify_deletion(const RunConfig& cfg, const VerifyArgs& va, std::size_t lo,
                                    std::size_t hi) {
  std::vector<Record> records;
  const SpectralOptions opts = spectral_options(cfg);
  for (std::size_t n = lo; n <= hi; ++n) {
    const DeletionCheck bn = check_deletion_lemma(build_bn(n).first, va.slack, opts);
    Record rec;
    rec.op = "deletion.bn";
    rec.n = n;
    rec.inputs["w"] = bn.w;
    rec.inputs["x_w"] = bn.x_w;
    rec.inputs["q"] = bn.q;
    rec.value = bn.lhs;
    rec.bound = bn.rhs;
    rec.pass = bn.pass;
    records.push_back(std::move(rec));

    std::mt19937_64 rng(seed_for(cfg.seed, n));
    std::uniform_real_distribution<double> density(0.05, 0.6);
    double worst = std::numeric_limits<double>::infinity();
    std::size_t failures = 0;
    for (std::size_t s = 0; s < va.samples; ++s) {
      Hypergraph g = random_connected_3graph(n, density(rng), rng);
      const DeletionCheck c = check_deletion_lemma(g, va.slack, opts);
      worst = std::min(worst, c.lhs - c.rhs);
      failures += c.pass ? 0 : 1;
    }
    Record random;
    random.op = "deletion.random";
    random.n = n;
    random.inputs["samples"] = va.samples;
    random.inputs["failures"] = failures;
    random.value = va.samples ? worst : 0.0;
    random.bound = -va.slack;
    random.pass = failures == 0;
    records.push_back(std::move(random));
  }
  return records;
}

std::vector<Record> verify_extremal(const RunConfig& cfg, const VerifyArgs& va, std::size_t lo,
                                    std::size_t hi) {
  std::vector<Record> records;
  for (std::size_t n = lo; n <= hi; ++n) {
    const ExtremalityReport rep =
        verify_extremality(n, va.samples, seed_for(cfg.seed, n), spectral_options(cfg));
    Record rec;
    rec.op = "extremal";
    rec.n = n;
    rec.inputs["samples"] = va.samples;
    rec.inputs["competitors"] = rep.competitors.size();
    rec.inputs["min_margin"] = rep.min_margin;
    rec.inputs["equality_gap"] = rep.equality_gap;
    rec.value = rep.max_competitor_q;
    rec.bound = rep.q_bn;
    rec.pass = rep.pass;
    records.push_back(std::move(rec));
  }
  return records;
}

int cmd_verify(const RunConfig& cfg, const VerifyArgs& va, std::ostream& out) {
  const OutputFormat format = format_of(cfg);
  const auto [lo, hi] = parse_range(va.range);
  const std::size_t min_n = va.what == "extremal" ? 7 : 4;
  if (lo < min_n) {
    throw UsageError("verify " + va.what + " needs n >= " + std::to_string(min_n));
  }
  std::vector<Record> records;
  if (va.what == "bounds") {
    records = verify_bounds(cfg, lo, hi);
  } else if (va.what == "splits") {
    records = verify_splits(lo, hi);
  } else if (va.what == "criterion") {
    records = verify_criterion(va, lo, hi);
  } else if (va.what == "deletion") {
    records = verify_deletion(cfg, va, lo, hi);
  } else if (va.what == "extremal") {
    records = verify_extremal(cfg, va, lo, hi);
  } else {
    throw UsageError("unknown verification '" + va.what + "'");
  }
  std::ostringstream text;
  write_records(text, records, format);
  emit(cfg, out, text.str());
  const bool all_pass = std::all_of(records.begin(), records.end(), [](const Record& r) { return r.pass; });
  return all_pass ? kExitOk : kExitVerifyFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--tol", cfg.tol, "Convergence tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-iter", cfg.max_iter, "Power-iteration budget")->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  sub->add_option("--seed", cfg.seed, "Random seed");
  sub->add_option("--format", cfg.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", cfg.output_path, "Write output to this file");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral toolkit for uniform hypergraphs", "hyperq"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::vector<std::string> gen_args;
  auto* gen = app.add_subcommand("gen", "Write a hypergraph: fano | bn N | two-part A B | complete N R | expansion FILE R");
  gen->add_option("construction", gen_args, "Construction and its arguments")->required();
  add_common(gen, cfg);

  std::string op_name = "q";
  std::optional<double> shift;
  bool with_vector = false;
  auto* spectral = app.add_subcommand("spectral", "Spectral radius of a hypergraph file");
  spectral->add_option("input", cfg.input_path, "Hypergraph file")->required();
  spectral->add_option("--operator", op_name, "q (signless Laplacian) | a (adjacency)");
  spectral->add_option("--shift", shift, "Diagonal shift")->check(CLI::NonNegativeNumber);
  spectral->add_flag("--eigenvector", with_vector, "Print the eigenvector");
  add_common(spectral, cfg);

  std::string check_kind;
  auto* check = app.add_subcommand("check", "fano | two-color");
  check->add_option("kind", check_kind, "fano | two-color")->required();
  check->add_option("input", cfg.input_path, "Hypergraph file")->required();
  add_common(check, cfg);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "bounds | splits | criterion | deletion | extremal");
  verify->add_option("what", va.what, "Verification to run")->required();
  verify->add_option("--range", va.range, "n or lo:hi")->required();
  verify->add_option("--sigma", va.sigma, "Criterion tolerance sigma")->check(CLI::PositiveNumber);
  verify->add_option("--pi", va.pi, "Turán density used by the criterion");
  verify->add_option("--samples", va.samples, "Random instances per n");
  verify->add_option("--slack", va.slack, "Numerical slack for the deletion inequality");
  add_common(verify, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(cfg, gen_args, out, err);
    if (spectral->parsed()) return cmd_spectral(cfg, op_name, shift, with_vector, out);
    if (check->parsed()) return cmd_check(cfg, check_kind, out);
    return cmd_verify(cfg, va, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::Io ? kExitIo : kExitUsage;
  }
}

}  // namespace hyperq
