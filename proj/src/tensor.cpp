#include "hyperq/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "hyperq/error.hpp"
#include "hyperq/golden.hpp"

namespace hyperq {

namespace {

double ipow(double base, int exponent) {
  double result = 1.0;
  for (int k = 0; k < exponent; ++k) result *= base;
  return result;
}

void require_size(const Hypergraph& h, const WeightVector& x) {
  if (x.size() != h.n()) {
    throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(x.size()) +
                                                  " for " + std::to_string(h.n()) + " vertices");
  }
}

}  // namespace

std::string_view to_string(TensorOperator op) {
  return op == TensorOperator::Adjacency ? "adjacency" : "signless_laplacian";
}

std::optional<TensorOperator> parse_operator(std::string_view name) {
  if (name == "adjacency" || name == "a" || name == "A") return TensorOperator::Adjacency;
  if (name == "signless_laplacian" || name == "signless" || name == "q" || name == "Q") {
    return TensorOperator::SignlessLaplacian;
  }
  return std::nullopt;
}

double default_shift(TensorOperator op) { return op == TensorOperator::Adjacency ? 1.0 : 0.0; }

double WeightVector::r_norm(int r) const {
  double sum = 0.0;
  for (double v : values_) sum += ipow(std::abs(v), r);
  return std::pow(sum, 1.0 / r);
}

WeightVector WeightVector::normalized(int r) const {
  const double norm = r_norm(r);
  if (norm == 0.0) return *this;
  WeightVector out(*this);
  for (double& v : out.values_) v /= norm;
  return out;
}

WeightVector WeightVector::uniform_unit(std::size_t n, int r) {
  if (n == 0) return {};
  return WeightVector(n, std::pow(static_cast<double>(n), -1.0 / r));
}

WeightVector apply_adjacency(const Hypergraph& h, const WeightVector& x) {
  require_size(h, x);
  const auto r = static_cast<std::size_t>(h.r());
  WeightVector out(h.n(), 0.0);
  std::vector<double> prefix(r + 1);
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    auto e = h.edge(i);
    prefix[0] = 1.0;
    for (std::size_t k = 0; k < r; ++k) prefix[k + 1] = prefix[k] * x[e[k]];
    double suffix = 1.0;
    for (std::size_t k = r; k-- > 0;) {
      out[e[k]] += prefix[k] * suffix;
      suffix *= x[e[k]];
    }
  }
  return out;
}

WeightVector apply_signless_laplacian(const Hypergraph& h, const WeightVector& x) {
  WeightVector out = apply_adjacency(h, x);
  for (Vertex v = 0; v < h.n(); ++v) {
    out[v] += static_cast<double>(h.degree(v)) * ipow(x[v], h.r() - 1);
  }
  return out;
}

WeightVector apply_operator(const Hypergraph& h, TensorOperator op, const WeightVector& x) {
  return op == TensorOperator::Adjacency ? apply_adjacency(h, x) : apply_signless_laplacian(h, x);
}

double rayleigh_q(const Hypergraph& h, const WeightVector& x) {
  require_size(h, x);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0)) throw Error(ErrorKind::NegativeEntry, "entry " + std::to_string(i));
  }
  const double norm = x.r_norm(h.r());
  if (std::abs(norm - 1.0) > 1e-9) {
    throw Error(ErrorKind::NotNormalized, "r-norm is " + std::to_string(norm));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    double powers = 0.0;
    double product = 1.0;
    for (Vertex v : h.edge(i)) {
      powers += ipow(x[v], h.r());
      product *= x[v];
    }
    total += powers + h.r() * product;
  }
  return total;
}

double eigen_residual(const Hypergraph& h, double rho, const WeightVector& x, TensorOperator op) {
  const WeightVector tx = apply_operator(h, op, x);
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    worst = std::max(worst, std::abs(tx[i] - rho * ipow(x[i], h.r() - 1)));
  }
  return worst;
}

namespace {

struct ComponentRun {
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  WeightVector x;
  std::size_t iterations = 0;
  bool converged = false;
};

ComponentRun power_iterate(const Hypergraph& h, TensorOperator op, double shift,
                           const SpectralOptions& options, std::size_t component) {
  const int r = h.r();
  const double root = 1.0 / (r - 1);
  ComponentRun run;
  WeightVector x = WeightVector::uniform_unit(h.n(), r);
  double best_lower = -std::numeric_limits<double>::infinity();
  double best_upper = std::numeric_limits<double>::infinity();

  for (std::size_t it = 1; it <= options.max_iter; ++it) {
    WeightVector y = apply_operator(h, op, x);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double quotient = 0.0;
    for (std::size_t i = 0; i < h.n(); ++i) {
      const double xp = ipow(x[i], r - 1);
      quotient += x[i] * y[i];
      y[i] += shift * xp;
      const double ratio = y[i] / xp;
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    const double lower = lo - shift;
    const double upper = hi - shift;
    best_lower = std::max(best_lower, lower);
    best_upper = std::min(best_upper, upper);
    if (best_lower > best_upper) std::swap(best_lower, best_upper);  // rounding at convergence
    if (options.observer) options.observer({component, it, lower, upper});

    run.iterations = it;
    run.lower = best_lower;
    run.upper = best_upper;
    run.rho = std::clamp(quotient, best_lower, best_upper);
    run.x = x;
    if (upper - lower <= options.tol * std::max(upper, 1.0)) {
      run.converged = true;
      break;
    }
    for (std::size_t i = 0; i < h.n(); ++i) y[i] = std::pow(y[i], root);
    x = y.normalized(r);
  }
  return run;
}

}  // namespace

SpectralResult spectral_radius(const Hypergraph& h, TensorOperator op,
                               const SpectralOptions& options) {
  if (!(options.tol > 0.0)) throw Error(ErrorKind::ArgumentRange, "tol must be positive");
  if (options.max_iter < 1) throw Error(ErrorKind::ArgumentRange, "max_iter must be >= 1");
  const double shift = options.shift.value_or(default_shift(op));
  if (!(shift >= 0.0)) throw Error(ErrorKind::ArgumentRange, "shift must be nonnegative");

  SpectralResult result;
  result.converged = true;
  bool have_winner = false;
  std::vector<Vertex> winner_vertices;
  WeightVector winner_x;

  const auto comps = components(h);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comps[c].size() < static_cast<std::size_t>(h.r())) continue;  // no edge fits
    const Hypergraph sub = h.induced(comps[c]);
    ComponentRun run = power_iterate(sub, op, shift, options, c);
    result.converged = result.converged && run.converged;
    result.iterations = std::max(result.iterations, run.iterations);
    if (!have_winner) {
      result.lower = run.lower;
      result.upper = run.upper;
    } else {
      result.lower = std::max(result.lower, run.lower);
      result.upper = std::max(result.upper, run.upper);
    }
    if (!have_winner || run.rho > result.rho) {
      result.rho = run.rho;
      winner_vertices = comps[c];
      winner_x = run.x;
      have_winner = true;
    }
  }

  if (!have_winner) {
    result.eigenvector = WeightVector::uniform_unit(h.n(), h.r());
    return result;
  }
  result.rho = std::clamp(result.rho, result.lower, result.upper);
  result.eigenvector = WeightVector(h.n(), 0.0);
  for (std::size_t k = 0; k < winner_vertices.size(); ++k) {
    result.eigenvector[winner_vertices[k]] = winner_x[k];
  }
  result.residual = eigen_residual(h, result.rho, result.eigenvector, op);
  return result;
}

namespace {

// Unnormalized signless Rayleigh form.
double rayleigh_form(const Hypergraph& h, std::span<const double> x) {
  double total = 0.0;
  for (std::size_t i = 0; i < h.num_edges(); ++i) {
    double powers = 0.0;
    double product = 1.0;
    for (Vertex v : h.edge(i)) {
      powers += std::pow(x[v], h.r());
      product *= x[v];
    }
    total += powers + h.r() * product;
  }
  return total;
}

double power_sum(std::span<const double> x, int r) {
  double total = 0.0;
  for (double v : x) total += std::pow(v, r);
  return total;
}

}  // namespace

std::pair<double, WeightVector> rayleigh_maximize_bruteforce(const Hypergraph& h,
                                                             std::size_t restarts,
                                                             std::size_t steps,
                                                             std::uint64_t rng_seed) {
  if (restarts < 1 || steps < 1) {
    throw Error(ErrorKind::ArgumentRange, "restarts and steps must be >= 1");
  }
  const std::size_t n = h.n();
  const int r = h.r();
  if (n == 0) return {0.0, WeightVector{}};

  constexpr std::size_t kGrid = 64;
  constexpr std::size_t kRefine = 80;

  std::mt19937_64 rng(rng_seed);
  std::uniform_real_distribution<double> start_dist(0.1, 1.0);

  double best_value = -1.0;
  std::vector<double> best_x;

  for (std::size_t restart = 0; restart < restarts; ++restart) {
    std::vector<double> x(n, 1.0);
    if (restart > 0) {
      for (double& v : x) v = start_dist(rng);
    }
    double scale = std::pow(power_sum(x, r), 1.0 / r);
    for (double& v : x) v /= scale;
    double value = rayleigh_form(h, x);

    for (std::size_t sweep = 0; sweep < steps; ++sweep) {
      const double before = value;
      for (Vertex i = 0; i < n; ++i) {
        // Objective along coordinate i, with w the share of the r-norm mass
        // carried by x_i:  g(w) = (1 - w) (P + B s) / C + d w,
        // s = (C w / (1 - w))^(1/r).
        const double saved = x[i];
        x[i] = 0.0;
        const double rest = rayleigh_form(h, x);
        const double mass = power_sum(x, r);
        double coupling = 0.0;
        for (std::uint32_t id : h.incident(i)) {
          double product = 1.0;
          for (Vertex v : h.edge(id)) {
            if (v != i) product *= x[v];
          }
          coupling += r * product;
        }
        x[i] = saved;
        if (mass <= 0.0) continue;
        const auto deg = static_cast<double>(h.degree(i));
        auto coord = [&](double w) { return std::pow(mass * w / (1.0 - w), 1.0 / r); };
        auto g = [&](double w) {
          return (1.0 - w) * (rest + coupling * coord(w)) / mass + deg * w;
        };

        const double w_max = 1.0 - 1e-9;
        std::size_t best_j = 0;
        double best_g = -1.0;
        for (std::size_t j = 0; j <= kGrid; ++j) {
          const double gw = g(w_max * static_cast<double>(j) / kGrid);
          if (gw > best_g) {
            best_g = gw;
            best_j = j;
          }
        }
        const double lo = w_max * static_cast<double>(best_j == 0 ? 0 : best_j - 1) / kGrid;
        const double hi = w_max * static_cast<double>(std::min(best_j + 1, kGrid)) / kGrid;
        const GoldenResult refined = golden_section_maximize(g, lo, hi, kRefine);
        double w_best = w_max * static_cast<double>(best_j) / kGrid;
        double candidate = best_g;
        if (refined.value > best_g) {
          w_best = refined.argmax;
          candidate = refined.value;
        }

        if (candidate > value) {
          x[i] = coord(w_best);
          scale = std::pow(power_sum(x, r), 1.0 / r);
          for (double& v : x) v /= scale;
          value = rayleigh_form(h, x);
        }
      }
      if (value - before <= 1e-15 * std::max(1.0, value)) break;
    }
    if (value > best_value) {
      best_value = value;
      best_x = x;
    }
  }
  return {best_value, WeightVector(std::move(best_x))};
}

}  // namespace hyperq
