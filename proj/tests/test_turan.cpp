#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperq/containment.hpp"
#include "hyperq/error.hpp"
#include "hyperq/generators.hpp"
#include "hyperq/turan.hpp"

using namespace hyperq;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Io;
}

double q_of(const Hypergraph& h) {
  return spectral_radius(h, TensorOperator::SignlessLaplacian).rho;
}

}  // namespace

TEST_CASE("fano Turán formula") {
  CHECK(fano_turan_number(8) == 48);
  CHECK(fano_turan_number(9) == 70);
  CHECK(fano_turan_number(3) == 1);
  CHECK(fano_turan_number(0) == 0);
  CHECK(fano_turan_number(100) == 161700 - 2 * 19600);
  for (std::int64_t n = 3; n <= 40; ++n) {
    CHECK(fano_turan_number(n) == static_cast<std::int64_t>(build_bn(static_cast<std::size_t>(n)).first.num_edges()));
  }
}

TEST_CASE("q(B_n) bounds") {
  auto b = bn_q_bounds(8);
  CHECK(b.lower == doctest::Approx(36.0));
  CHECK(b.upper == doctest::Approx(36.0));
  b = bn_q_bounds(9);
  CHECK(b.lower == doctest::Approx(46.0 + 2.0 / 3.0));
  CHECK(b.upper == doctest::Approx(47.0));
  b = bn_q_bounds(4);
  CHECK(b.lower == doctest::Approx(6.0));
  CHECK(b.upper == doctest::Approx(6.0));
  CHECK(kind_of([] { bn_q_bounds(3); }) == ErrorKind::ArgumentRange);
}

TEST_CASE("q(B_n) lies inside its bounds") {
  for (std::size_t n = 4; n <= 60; ++n) {
    const QBounds b = bn_q_bounds(n);
    const double q = q_of(build_bn(n).first);
    CHECK(q >= b.lower - 1e-9 * b.lower);
    CHECK(q <= b.upper + 1e-6);
  }
}

TEST_CASE("two-block optimum") {
  auto p = two_block_q(2, 2);
  CHECK(p.q_value == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(p.u == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(p.v == doctest::Approx(0.25).epsilon(1e-6));

  p = two_block_q(4, 4);
  CHECK(p.q_value == doctest::Approx(36.0).epsilon(1e-12));
  CHECK(p.u == doctest::Approx(0.125).epsilon(1e-6));
  CHECK(p.x == doctest::Approx(0.5).epsilon(1e-6));

  // Frozen from an independent bounded scalar optimizer (x-tolerance 1e-14)
  // applied to the same block objective.
  p = two_block_q(5, 4);
  CHECK(p.q_value == doctest::Approx(46.8810638802715).epsilon(1e-12));
  CHECK(p.q_value >= bn_q_bounds(9).lower);
  CHECK(p.q_value <= bn_q_bounds(9).upper);

  p = two_block_q(1, 2);
  CHECK(p.q_value == doctest::Approx(2.0).epsilon(1e-12));

  CHECK(kind_of([] { two_block_q(0, 5); }) == ErrorKind::ArgumentRange);
  CHECK(kind_of([] { two_block_q(1, 1); }) == ErrorKind::ArgumentRange);
}

TEST_CASE("two-block profile invariants") {
  for (std::size_t n = 4; n <= 60; ++n) {
    for (std::size_t a = 1; a < n; ++a) {
      const SplitProfile p = two_block_q(a, n - a);
      CHECK(p.a * p.u + p.b * p.v == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(p.u > 0.0);
      CHECK(p.v > 0.0);
      CHECK(p.q_value <= split_upper_bound(n, a) + 1e-6);
      CHECK(p.q_value == doctest::Approx(two_block_q(n - a, a).q_value).epsilon(1e-9));
    }
  }
}

TEST_CASE("two-block reduction matches tensor power iteration") {
  for (std::size_t n = 4; n <= 16; ++n) {
    for (std::size_t a = 1; a < n; ++a) {
      const double reduced = two_block_q(a, n - a).q_value;
      const double direct = q_of(build_two_part_complete(a, n - a).first);
      CHECK(reduced == doctest::Approx(direct).epsilon(1e-6));
    }
  }
}

TEST_CASE("split scan") {
  auto scan = scan_splits(8);
  CHECK(scan.best_a == 4);
  CHECK(scan.balanced);
  CHECK(scan.profiles.size() == 7);

  scan = scan_splits(9);
  CHECK((scan.best_a == 4 || scan.best_a == 5));
  CHECK(scan.profiles[3].q_value == doctest::Approx(scan.profiles[4].q_value).epsilon(1e-12));
  CHECK(scan.balanced);

  scan = scan_splits(4);
  CHECK(scan.best_a == 2);
  CHECK(scan.profiles[0].q_value < scan.profiles[1].q_value);
  CHECK(scan.profiles[2].q_value < scan.profiles[1].q_value);

  CHECK(kind_of([] { scan_splits(3); }) == ErrorKind::ArgumentRange);
}

TEST_CASE("criterion condition (1)") {
  CriterionParams params;
  params.pi = 0.75;
  params.r = 3;
  params.sigma = 0.01;
  params.n_first = 100;
  params.n_last = 101;
  auto rows = check_condition1(params, fano_ex_function());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 100);
  CHECK(rows[0].slack == doctest::Approx(75.0));
  CHECK(rows[0].bound == doctest::Approx(100.0));
  CHECK(rows[0].pass);
  CHECK(rows[1].pass);

  params.sigma = 1e-9;
  params.n_last = 100;
  rows = check_condition1(params, fano_ex_function());
  CHECK_FALSE(rows[0].pass);

  params.pi = 0.5;
  CHECK(kind_of([&] { check_condition1(params, fano_ex_function()); }) == ErrorKind::ArgumentRange);
  params.pi = 0.75;
  params.n_first = 1;
  CHECK(kind_of([&] { check_condition1(params, fano_ex_function()); }) == ErrorKind::ArgumentRange);
  params.n_first = 10;
  params.n_last = 9;
  CHECK(kind_of([&] { check_condition1(params, fano_ex_function()); }) == ErrorKind::ArgumentRange);
  params.n_last = 10;
  params.sigma = 0.0;
  CHECK(kind_of([&] { check_condition1(params, fano_ex_function()); }) == ErrorKind::ArgumentRange);
}

TEST_CASE("criterion condition (1) accepts other density functions") {
  // synthetic graph family with ex(n) = floor(n^2/3)
  CriterionParams params;
  params.pi = 2.0 / 3.0;
  params.r = 2;
  params.sigma = 0.01;
  params.n_first = 10;
  params.n_last = 20;
  const ExFunction ex = [](std::size_t n) { return static_cast<std::int64_t>(n * n / 3); };
  for (const auto& row : check_condition1(params, ex)) CHECK(row.slack <= 2.0);
}

TEST_CASE("criterion condition (2)") {
  CriterionParams params;
  params.sigma = 0.05;
  params.n_first = 50;
  params.n_last = 51;
  auto rows = check_condition2(params, fano_q_function(), fano_ex_function());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].slack <= 1e-6);
  CHECK(rows[0].pass);
  CHECK(rows[1].slack <= 0.75 + 1e-6);
  CHECK(rows[1].pass);

  params.sigma = 1e-9;
  params.n_first = 51;
  rows = check_condition2(params, fano_q_function(), fano_ex_function());
  CHECK_FALSE(rows[0].pass);
}

TEST_CASE("fano q function agrees with direct power iteration") {
  const auto q = fano_q_function();
  for (std::size_t n = 4; n <= 14; ++n) {
    CHECK(q(n) == doctest::Approx(q_of(build_bn(n).first)).epsilon(1e-8));
  }
}

TEST_CASE("vertex deletion inequality") {
  const DeletionCheck k5 = check_deletion_lemma(build_complete(5, 3), 1e-6);
  CHECK(k5.w == 0);
  CHECK(k5.q == doctest::Approx(12.0));
  CHECK(k5.lhs == doctest::Approx(6.0));
  CHECK(k5.rhs == doctest::Approx(4.75));
  CHECK(k5.pass);

  CHECK(check_deletion_lemma(build_bn(8).first, 1e-6).pass);

  std::mt19937_64 rng(50);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 6 + static_cast<std::size_t>(trial % 7);
    const Hypergraph g = random_connected_3graph(n, 0.05 + 0.01 * (trial % 30), rng);
    const DeletionCheck c = check_deletion_lemma(g, 1e-6);
    CHECK(c.pass);
  }

  CHECK(kind_of([] { check_deletion_lemma(Hypergraph(3, 6, {{0, 1, 2}, {3, 4, 5}}), 1e-6); }) ==
        ErrorKind::Disconnected);
  CHECK(kind_of([] { check_deletion_lemma(Hypergraph(3, 3, {{0, 1, 2}}), 1e-6); }) ==
        ErrorKind::TooSmall);
  CHECK(kind_of([] { check_deletion_lemma(build_complete(4, 2), 1e-6); }) ==
        ErrorKind::ArgumentRange);
}

TEST_CASE("removing any edge of B_n lowers q") {
  for (std::size_t n = 7; n <= 12; ++n) {
    const Hypergraph bn = build_bn(n).first;
    const double q = q_of(bn);
    for (std::size_t i = 0; i < bn.num_edges(); ++i) {
      CHECK(q_of(bn.without_edge(i)) < q - 1e-8);
    }
  }
}

TEST_CASE("extremality scan") {
  const ExtremalityReport rep = verify_extremality(8, 12, 3);
  CHECK(rep.q_bn == doctest::Approx(36.0));
  CHECK(rep.equality_gap <= 1e-9);
  CHECK(rep.pass);
  CHECK(rep.min_margin > 1e-6);
  CHECK(rep.max_competitor_q < rep.q_bn);
  // unbalanced splits a in {1, 2, 3, 5, 6, 7}, plus the samples
  CHECK(rep.competitors.size() == 6 + 12);
  for (const auto& c : rep.competitors) CHECK(c.fano_free);

  const ExtremalityReport nine = verify_extremality(9, 4, 3);
  bool saw_63 = false;
  for (const auto& c : nine.competitors) {
    if (c.kind == "split 6+3") {
      saw_63 = true;
      CHECK(c.q < nine.q_bn);
    }
  }
  CHECK(saw_63);

  CHECK(kind_of([] { verify_extremality(6, 5, 1); }) == ErrorKind::ArgumentRange);
  CHECK(kind_of([] { verify_extremality(8, 0, 1); }) == ErrorKind::ArgumentRange);
}
