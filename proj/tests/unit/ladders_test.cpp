#include <doctest.h>

#include <cmath>
#include <sstream>

#include "zlab/errors.hpp"
#include "zlab/ladders.hpp"
#include "zlab/moments.hpp"

using namespace zlab;

TEST_CASE("reverse_iterate ordering and domain") {
  for (double T : {100.0, 150.0, 500.0, 2000.0}) {
    CAPTURE(T);
    CHECK(reverse_iterate(Height(T)) > T);
  }
  CHECK_THROWS_AS(reverse_iterate(Height(99.0)), DomainError);
}

TEST_CASE("defining equation at T = 10^3") {
  const double T = 1e3;
  const LadderStep s = reverse_step(Height(T));
  CHECK(s.residual <= default_precision().abs_tol * T);
  const double independent = second_moment_critical(Height(T), Height(s.iterate)).value;
  CHECK(std::abs(independent - (1 - kEulerGamma) * T) <= 1e-6 * T);
}

TEST_CASE("step at T = 10^4 against a finer-grid solve") {
  const double T = 1e4;
  const double U = reverse_iterate(Height(T));
  PrecisionConfig fine;
  fine.quad_step_cap = 0.01;
  const double U_fine = reverse_iterate(Height(T), fine);
  CHECK(std::abs(U - U_fine) <= 1e-6);
  const double lead = (1 - kEulerGamma) * T / std::log(T);
  CHECK((U - T) / lead >= 0.8);
  CHECK((U - T) / lead <= 1.2);
}

TEST_CASE("the ladder map is monotone") {
  const double pairs[][2] = {{200.0, 200.5}, {1000.0, 1010.0}, {3000.0, 3000.01}};
  for (const auto& p : pairs) {
    CHECK(reverse_iterate(Height(p[0])) < reverse_iterate(Height(p[1])));
  }
}

TEST_CASE("ladder_chain") {
  CHECK_THROWS_AS(ladder_chain(Height(1e3), 0), DomainError);
  CHECK_THROWS_AS(ladder_chain(Height(1e3), 21), DomainError);
  CHECK_THROWS_AS(ladder_chain(Height(50.0), 2), DomainError);

  const LadderChain one = ladder_chain(Height(1e3), 1);
  REQUIRE(one.iterates.size() == 1);
  CHECK(one.iterates[0] == reverse_iterate(Height(1e3)));
  CHECK(one.euler_c == kEulerGamma);

  const LadderChain c = ladder_chain(Height(1e4), 5);
  double prev = c.base;
  for (double t : c.iterates) {
    CHECK(t > prev);
    prev = t;
  }
  for (std::size_t r = 0; r < c.residuals.size(); ++r) {
    const double base = r == 0 ? c.base : c.iterates[r - 1];
    CHECK(c.residuals[r] <= default_precision().abs_tol * base);
  }
  CHECK(c.iterates.back() / c.base <= 1.3);

  SUBCASE("telescoping") {
    double total = 0.0;
    double p = c.base;
    for (double t : c.iterates) {
      total += t - p;
      p = t;
    }
    CHECK(total == c.iterates.back() - c.base);
  }
  SUBCASE("slice integrals partition the whole integral") {
    double sum = 0.0;
    for (double v : c.slice_integrals) sum += v;
    const double whole = second_moment_critical(Height(c.base), Height(c.iterates.back())).value;
    CHECK(sum == doctest::Approx(whole).epsilon(1e-9));
  }
}

TEST_CASE("partition report at T = 10^4, k = 4") {
  const LadderChain c = ladder_chain(Height(1e4), 4);
  const PartitionReport rep = partition_report(c);
  REQUIRE(rep.gap_ratios.size() == 3);
  REQUIRE(rep.integral_ratios.size() == 3);
  REQUIRE(rep.gap_prediction_ratios.size() == 4);
  for (double g : rep.gap_ratios) {
    CHECK(g >= 0.9);
    CHECK(g <= 1.1);
  }
  for (std::size_t r = 0; r < rep.integral_ratios.size(); ++r) {
    const double lower = r == 0 ? c.base : c.iterates[r - 1];
    CHECK(rep.integral_ratios[r] == doctest::Approx(c.iterates[r] / lower).epsilon(1e-12));
  }
  for (double p : rep.gap_prediction_ratios) {
    CHECK(std::isfinite(p));
    CHECK(p > 0.0);
  }
  CHECK_THROWS_AS(partition_report(ladder_chain(Height(1e3), 1)), DomainError);
}

TEST_CASE("gap prediction and closeness at T = 10^5") {
  const LadderChain c = ladder_chain(Height(1e5), 5);
  const PartitionReport rep = partition_report(c);
  for (double p : rep.gap_prediction_ratios) {
    CHECK(p >= 0.8);
    CHECK(p <= 1.2);
  }
  const LadderChain lo = ladder_chain(Height(1e4), 5);
  CHECK(c.iterates.back() / c.base < lo.iterates.back() / lo.base);
}

TEST_CASE("ladder CSV") {
  const LadderChain c = ladder_chain(Height(200.0), 2);
  std::ostringstream os;
  write_ladder_csv(os, c);
  const std::string s = os.str();
  CHECK(s.rfind("r,T_r,gap,slice_integral,residual\n0,200,0,0,0\n1,", 0) == 0);
}
