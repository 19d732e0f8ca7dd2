#pragma once

// Implicit products with the adjacency tensor A(H) and the signless Laplacian
// Q(H) = D(H) + A(H), and their spectral radii.
//
// Neither tensor is ever materialized. For an r-graph,
//   (A x)_i = sum over edges e containing i of prod_{v in e, v != i} x_v
//   (Q x)_i = d(i) x_i^(r-1) + (A x)_i
// The (r-1)! orderings of each edge cancel the 1/(r-1)! entry weight.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperq/hypergraph.hpp"

namespace hyperq {

enum class TensorOperator { Adjacency, SignlessLaplacian };

std::string_view to_string(TensorOperator op);
/// Accepts "adjacency"/"a"/"A" and "signless_laplacian"/"signless"/"q"/"Q".
std::optional<TensorOperator> parse_operator(std::string_view name);

/// Per-vertex real weights.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<double> values) : values_(std::move(values)) {}
  WeightVector(std::size_t n, double fill) : values_(n, fill) {}

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  std::vector<double>& mutable_values() noexcept { return values_; }

  /// (sum |x_i|^r)^(1/r)
  double r_norm(int r) const;

  /// Copy scaled to unit r-norm. A zero vector is returned unchanged.
  WeightVector normalized(int r) const;

  /// Uniform positive vector with unit r-norm.
  static WeightVector uniform_unit(std::size_t n, int r);

 private:
  std::vector<double> values_;
};

struct SpectralResult {
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  WeightVector eigenvector;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
};

/// One Collatz-Wielandt bracket, reported after every power step.
struct BracketSample {
  std::size_t component = 0;
  std::size_t iteration = 0;
  double lower = 0.0;
  double upper = 0.0;
};

struct SpectralOptions {
  double tol = 1e-10;
  std::size_t max_iter = 100000;
  /// Diagonal shift; defaults to 1 for the adjacency operator and 0 for the
  /// signless Laplacian.
  std::optional<double> shift;
  std::function<void(const BracketSample&)> observer;
};

double default_shift(TensorOperator op);

WeightVector apply_adjacency(const Hypergraph& h, const WeightVector& x);
WeightVector apply_signless_laplacian(const Hypergraph& h, const WeightVector& x);
WeightVector apply_operator(const Hypergraph& h, TensorOperator op, const WeightVector& x);

/// sum_e ( sum_{v in e} x_v^r + r prod_{v in e} x_v ) for a nonnegative
/// unit vector. Throws NotNormalized (|‖x‖_r - 1| > 1e-9) or NegativeEntry.
double rayleigh_q(const Hypergraph& h, const WeightVector& x);

/// max_i |T(x)_i - rho x_i^(r-1)|
double eigen_residual(const Hypergraph& h, double rho, const WeightVector& x, TensorOperator op);

/// Bracketed power iteration run independently on each connected component;
/// the component with the largest radius wins (lowest index on ties).
/// Non-convergence is reported through `converged`, not thrown.
SpectralResult spectral_radius(const Hypergraph& h, TensorOperator op,
                               const SpectralOptions& options = {});

/// Multi-start coordinate ascent of the signless Rayleigh quotient over the
/// nonnegative unit r-sphere. Shares no code with the power iteration and is
/// used to cross-check it.
std::pair<double, WeightVector> rayleigh_maximize_bruteforce(const Hypergraph& h,
                                                             std::size_t restarts,
                                                             std::size_t steps,
                                                             std::uint64_t rng_seed);

}  // namespace hyperq
