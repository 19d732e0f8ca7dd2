#include "hyperq/turan.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hyperq/containment.hpp"
#include "hyperq/error.hpp"
#include "hyperq/generators.hpp"
#include "hyperq/golden.hpp"

namespace hyperq {

std::int64_t fano_turan_number(std::int64_t n) {
  if (n < 0) return 0;
  return binomial(n, 3) - binomial(n / 2, 3) - binomial((n + 1) / 2, 3);
}

QBounds bn_q_bounds(std::size_t n) {
  if (n < 4) throw Error(ErrorKind::ArgumentRange, "q(B_n) bounds need n >= 4");
  const auto nn = static_cast<double>(n);
  const double base = 0.75 * nn * nn - 1.5 * nn;
  if (n % 2 == 0) return {base, base};
  return {base - 0.75 + 1.5 / nn, base - 0.25};
}

double split_upper_bound(std::size_t n, std::size_t a) {
  const auto nn = static_cast<double>(n);
  const double offset = static_cast<double>(a) - nn / 2.0;
  return 0.75 * nn * nn - 1.5 * nn - offset * offset;
}

double two_block_objective(std::size_t a, std::size_t b, double u, double v) {
  const auto first = static_cast<double>(b) * static_cast<double>(binomial(a, 2));
  const auto second = static_cast<double>(a) * static_cast<double>(binomial(b, 2));
  const double cu = std::cbrt(u);
  const double cv = std::cbrt(v);
  return first * (2.0 * u + v + 3.0 * cu * cu * cv) + second * (2.0 * v + u + 3.0 * cu * cv * cv);
}

SplitProfile two_block_q(std::size_t a, std::size_t b) {
  if (a < 1 || b < 1 || a + b < 3) {
    throw Error(ErrorKind::ArgumentRange, "two-block split needs a, b >= 1 and a + b >= 3");
  }
  constexpr double kEdge = 1e-12;
  constexpr std::size_t kBudget = 200;
  const auto ad = static_cast<double>(a);
  const auto bd = static_cast<double>(b);
  auto along_constraint = [&](double u) {
    return two_block_objective(a, b, u, std::max(0.0, (1.0 - ad * u) / bd));
  };
  const GoldenResult best = golden_section_maximize(along_constraint, kEdge, 1.0 / ad - kEdge, kBudget);
  if (!best.converged) {
    throw Error(ErrorKind::NoConvergence, "golden-section budget exhausted for split (" +
                                              std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  SplitProfile p;
  p.n = a + b;
  p.a = a;
  p.b = b;
  p.u = best.argmax;
  p.v = (1.0 - ad * p.u) / bd;
  p.x = std::cbrt(p.u);
  p.y = std::cbrt(p.v);
  p.q_value = best.value;
  return p;
}

SplitScan scan_splits(std::size_t n) {
  if (n < 4) throw Error(ErrorKind::ArgumentRange, "split scan needs n >= 4");
  SplitScan scan;
  const std::size_t preferred = (n + 1) / 2;
  auto distance = [preferred](std::size_t a) { return a > preferred ? a - preferred : preferred - a; };
  double best_q = -1.0;
  for (std::size_t a = 1; a < n; ++a) {
    SplitProfile p = two_block_q(a, n - a);
    const bool tie = std::abs(p.q_value - best_q) <= 1e-12 * std::max(1.0, best_q);
    if ((!tie && p.q_value > best_q) || (tie && distance(a) < distance(scan.best_a))) {
      best_q = p.q_value;
      scan.best_a = a;
    }
    scan.profiles.push_back(p);
  }
  const auto twice = 2 * scan.best_a;
  scan.balanced = (twice > n ? twice - n : n - twice) <= 1;
  return scan;
}

namespace {

void validate(const CriterionParams& params) {
  if (!(params.pi > 0.5 && params.pi < 1.0)) {
    throw Error(ErrorKind::ArgumentRange, "Turán density must lie in (1/2, 1)");
  }
  if (!(params.sigma > 0.0)) throw Error(ErrorKind::ArgumentRange, "sigma must be positive");
  if (params.r < 2) throw Error(ErrorKind::ArgumentRange, "uniformity must be at least 2");
  if (params.n_first < 2 || params.n_first > params.n_last) {
    throw Error(ErrorKind::ArgumentRange, "n range must satisfy 2 <= first <= last");
  }
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<ConditionRow> check_condition1(const CriterionParams& params, const ExFunction& ex) {
  validate(params);
  std::vector<ConditionRow> rows;
  const double coefficient = params.pi / factorial(params.r - 1);
  for (std::size_t n = params.n_first; n <= params.n_last; ++n) {
    const double scale = std::pow(static_cast<double>(n), params.r - 1);
    ConditionRow row;
    row.n = n;
    row.slack = std::abs(static_cast<double>(ex(n) - ex(n - 1)) - coefficient * scale);
    row.bound = params.sigma * scale;
    row.pass = row.slack <= row.bound;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ConditionRow> check_condition2(const CriterionParams& params, const QFunction& q,
                                           const ExFunction& ex) {
  validate(params);
  std::vector<ConditionRow> rows;
  for (std::size_t n = params.n_first; n <= params.n_last; ++n) {
    const auto nn = static_cast<double>(n);
    ConditionRow row;
    row.n = n;
    row.slack = std::abs(q(n) - 2.0 * params.r * static_cast<double>(ex(n)) / nn);
    row.bound = params.sigma * std::pow(nn, params.r - 2);
    row.pass = row.slack <= row.bound;
    rows.push_back(row);
  }
  return rows;
}

ExFunction fano_ex_function() {
  return [](std::size_t n) { return fano_turan_number(static_cast<std::int64_t>(n)); };
}

QFunction fano_q_function() {
  return [](std::size_t n) {
    const SplitScan scan = scan_splits(n);
    return scan.profiles[scan.best_a - 1].q_value;
  };
}

DeletionCheck check_deletion_lemma(const Hypergraph& h, double tol, const SpectralOptions& options) {
  if (h.r() < 3) throw Error(ErrorKind::ArgumentRange, "deletion inequality needs r >= 3");
  if (h.num_edges() < 2) throw Error(ErrorKind::TooSmall, "deletion inequality needs >= 2 edges");
  if (!is_connected(h)) throw Error(ErrorKind::Disconnected, "deletion inequality needs a connected hypergraph");

  const SpectralResult full = spectral_radius(h, TensorOperator::SignlessLaplacian, options);
  const auto& x = full.eigenvector;
  const double smallest = *std::min_element(x.values().begin(), x.values().end());
  Vertex w = 0;
  while (x[w] > smallest + 1e-12) ++w;

  const int r = h.r();
  const auto n = static_cast<double>(h.n());
  const double xr = std::pow(x[w], r);
  double r_minus_2_factorial = 1.0;
  for (int i = 2; i <= r - 2; ++i) r_minus_2_factorial *= i;

  DeletionCheck check;
  check.w = w;
  check.q = full.rho;
  check.x_w = x[w];
  check.rhs = (1.0 - r * xr) / (1.0 - xr) * full.rho -
              std::pow(n, r - 2) / r_minus_2_factorial * (1.0 - (n - 1.0) * xr) / (1.0 - xr);
  check.lhs = spectral_radius(h.without_vertex(w), TensorOperator::SignlessLaplacian, options).rho;
  check.pass = check.lhs >= check.rhs - tol;
  return check;
}

ExtremalityReport verify_extremality(std::size_t n, std::size_t samples, std::uint64_t rng_seed,
                                     const SpectralOptions& options) {
  if (n < 7) throw Error(ErrorKind::ArgumentRange, "extremality scan needs n >= 7");
  if (samples < 1) throw Error(ErrorKind::ArgumentRange, "extremality scan needs samples >= 1");
  constexpr double kStrict = 1e-8;
  constexpr double kEquality = 1e-9;

  std::mt19937_64 rng(rng_seed);
  const Hypergraph bn = build_bn(n).first;
  const auto q_of = [&options](const Hypergraph& g) {
    return spectral_radius(g, TensorOperator::SignlessLaplacian, options).rho;
  };

  ExtremalityReport report;
  report.n = n;
  report.q_bn = q_of(bn);
  report.equality_gap = std::abs(q_of(permuted(bn, rng)) - report.q_bn);

  auto add = [&](std::string kind, const Hypergraph& g) {
    Competitor c;
    c.kind = std::move(kind);
    c.edges = g.num_edges();
    c.q = q_of(g);
    c.margin = report.q_bn - c.q;
    c.fano_free = is_fano_free(g);
    report.competitors.push_back(std::move(c));
  };

  for (std::size_t a = 1; a < n; ++a) {
    const std::size_t b = n - a;
    if ((a > b ? a - b : b - a) <= 1) continue;  // balanced splits are B_n itself
    add("split " + std::to_string(a) + "+" + std::to_string(b), build_two_part_complete(a, b).first);
  }

  const auto extremal_edges = static_cast<std::size_t>(fano_turan_number(static_cast<std::int64_t>(n)));
  std::uniform_real_distribution<double> density(0.5, 1.0);
  for (std::size_t s = 0; s < samples; ++s) {
    if (s % 2 == 0) {
      auto edges = bn.edge_list();
      std::shuffle(edges.begin(), edges.end(), rng);
      std::uniform_int_distribution<std::size_t> drop(1, std::max<std::size_t>(1, edges.size() / 8));
      const std::size_t k = drop(rng);
      edges.resize(edges.size() - k);
      add("B_n minus " + std::to_string(k) + " edges", Hypergraph(3, n, edges));
    } else {
      Hypergraph g = random_two_colorable(n, density(rng), rng);
      if (g.num_edges() == extremal_edges) {
        // complete balanced split, i.e. a copy of B_n
        std::uniform_int_distribution<std::size_t> pick(0, g.num_edges() - 1);
        g = g.without_edge(pick(rng));
      }
      add("random 2-colorable", g);
    }
  }

  report.max_competitor_q = report.competitors.front().q;
  report.min_margin = report.competitors.front().margin;
  bool ok = report.equality_gap <= kEquality;
  for (const auto& c : report.competitors) {
    report.max_competitor_q = std::max(report.max_competitor_q, c.q);
    report.min_margin = std::min(report.min_margin, c.margin);
    ok = ok && c.fano_free && c.margin > kStrict;
  }
  report.pass = ok;
  return report;
}

}  // namespace hyperq
