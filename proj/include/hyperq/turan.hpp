#pragma once

// Numeric checks around the signless-Laplacian spectral Turán problem for the
// Fano plane: the Turán formula, bounds on q(B_n), the two-block reduction
// for complete 2-colorable 3-graphs, the two density conditions of the
// degree-stability criterion and the vertex-deletion inequality.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hyperq/hypergraph.hpp"
#include "hyperq/tensor.hpp"

namespace hyperq {

/// C(n,3) - C(floor(n/2),3) - C(ceil(n/2),3). This is ex_3(n, Fano) only for
/// n beyond an unspecified threshold; the formula itself is evaluated for
/// every n >= 0.
std::int64_t fano_turan_number(std::int64_t n);

struct QBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Interval known to contain q(B_n), n >= 4:
///   even n: lower = upper = 3n^2/4 - 3n/2
///   odd n:  [3n^2/4 - 3n/2 - 3/4 + 3/(2n),  3n^2/4 - 3n/2 - 1/4]
QBounds bn_q_bounds(std::size_t n);

/// 3n^2/4 - 3n/2 - (a - n/2)^2, the ceiling on q of any complete 2-colorable
/// 3-graph with parts (a, n - a).
double split_upper_bound(std::size_t n, std::size_t a);

/// Optimum of the block-constant Rayleigh quotient for the complete
/// 2-colorable 3-graph with parts (a, b). Block weights are x (first part)
/// and y (second part); u = x^3, v = y^3 with a u + b v = 1.
struct SplitProfile {
  std::size_t n = 0;
  std::size_t a = 0;
  std::size_t b = 0;
  double u = 0.0;
  double v = 0.0;
  double x = 0.0;
  double y = 0.0;
  double q_value = 0.0;
};

/// b C(a,2) (2u + v + 3 u^(2/3) v^(1/3)) + a C(b,2) (2v + u + 3 u^(1/3) v^(2/3))
double two_block_objective(std::size_t a, std::size_t b, double u, double v);

/// Maximizes two_block_objective along a u + b v = 1 by golden-section
/// search (the restriction is concave). Throws ArgumentRange or
/// NoConvergence.
SplitProfile two_block_q(std::size_t a, std::size_t b);

struct SplitScan {
  std::vector<SplitProfile> profiles;  // a = 1 .. n-1
  std::size_t best_a = 0;
  bool balanced = false;  // |best_a - n/2| <= 1/2
};

/// Ties (relative 1e-12) go to the split closest to ceil(n/2).
SplitScan scan_splits(std::size_t n);

struct CriterionParams {
  double pi = 0.75;
  int r = 3;
  double sigma = 0.05;
  std::size_t n_first = 2;
  std::size_t n_last = 2;
};

struct ConditionRow {
  std::size_t n = 0;
  double slack = 0.0;
  double bound = 0.0;
  bool pass = false;
};

using ExFunction = std::function<std::int64_t(std::size_t)>;
using QFunction = std::function<double(std::size_t)>;

/// |ex(n) - ex(n-1) - pi/(r-1)! n^(r-1)| <= sigma n^(r-1)
std::vector<ConditionRow> check_condition1(const CriterionParams& params, const ExFunction& ex);

/// |q(n) - 2r ex(n)/n| <= sigma n^(r-2)
std::vector<ConditionRow> check_condition2(const CriterionParams& params, const QFunction& q,
                                           const ExFunction& ex);

/// Fano instantiation: ex(n) = fano_turan_number(n).
ExFunction fano_ex_function();
/// Fano instantiation: q(n) = best split of scan_splits(n).
QFunction fano_q_function();

struct DeletionCheck {
  double lhs = 0.0;  // q(H - w)
  double rhs = 0.0;  // lower bound predicted from q(H) and x_w
  bool pass = false;
  Vertex w = 0;
  double q = 0.0;
  double x_w = 0.0;
};

/// Deletes the vertex of minimum Perron weight (lowest index on ties) and
/// checks
///   q(H - w) >= (1 - r x_w^r)/(1 - x_w^r) q(H)
///               - n^(r-2)/(r-2)! (1 - (n-1) x_w^r)/(1 - x_w^r).
/// Requires a connected r-graph, r >= 3, with at least two edges.
DeletionCheck check_deletion_lemma(const Hypergraph& h, double tol,
                                   const SpectralOptions& options = {});

struct Competitor {
  std::string kind;
  std::size_t edges = 0;
  double q = 0.0;
  double margin = 0.0;  // q(B_n) - q
  bool fano_free = false;
};

struct ExtremalityReport {
  std::size_t n = 0;
  double q_bn = 0.0;
  double equality_gap = 0.0;  // |q(relabeled B_n) - q(B_n)|
  std::vector<Competitor> competitors;
  double max_competitor_q = 0.0;
  double min_margin = 0.0;
  bool pass = false;
};

/// Compares q(B_n) with q of every unbalanced complete split and `samples`
/// random Fano-free competitors (edge deletions from B_n and random
/// 2-colorable 3-graphs). Every competitor must sit below q(B_n) by more than
/// 1e-8, and a relabeled copy of B_n must match within 1e-9.
ExtremalityReport verify_extremality(std::size_t n, std::size_t samples, std::uint64_t rng_seed,
                                     const SpectralOptions& options = {});

}  // namespace hyperq
