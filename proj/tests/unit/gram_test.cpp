#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "oracle/oracle_values.hpp"
#include "zlab/errors.hpp"
#include "zlab/gram.hpp"

using namespace zlab;
namespace orc = zlab::oracle;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("gram points match the oracle") {
  for (const auto& row : orc::kGram) {
    const auto nu = static_cast<std::int64_t>(row[0]);
    if (nu < 1) continue;
    CAPTURE(nu);
    const GramPoint g = gram_point(nu);
    CHECK(g.nu == nu);
    CHECK(std::abs(g.t - row[1]) <= 1e-9);
    CHECK(g.residual <= 1e-10);
  }
  CHECK(gram_point(1).t == doctest::Approx(23.170283).epsilon(1e-7));
  CHECK(gram_point(2).t == doctest::Approx(27.670182).epsilon(1e-7));
}

TEST_CASE("gram point residual at nu = 10^4") {
  const GramPoint g = gram_point(10000);
  CHECK(std::abs(static_cast<double>(theta_extended(g.t) - kPi * 10000.0L)) <= 1e-10);
}

TEST_CASE("gram index must be positive") {
  CHECK_THROWS_AS(gram_point(0), DomainError);
  CHECK_THROWS_AS(gram_point(-3), DomainError);
}

TEST_CASE("gram points are strictly increasing") {
  double prev = 0.0;
  for (std::int64_t nu = 1; nu <= 3000; ++nu) {
    const double t = gram_point(nu).t;
    REQUIRE(t > prev);
    prev = t;
  }
}

TEST_CASE("gram_range") {
  SUBCASE("empty below the first point") {
    CHECK(gram_range(Height(7.0), Height(17.0)).count() == 0);
    CHECK(gram_range(Height(7.0), Height(23.0)).count() == 0);
  }
  SUBCASE("count on [1000, 2000)") {
    const GramRange r = gram_range(Height(1000.0), Height(2000.0));
    const auto expect = static_cast<std::size_t>(std::floor(theta(Height(2000.0)) / kPi) -
                                                 std::ceil(theta(Height(1000.0)) / kPi) + 1);
    CHECK(r.count() == expect);
    CHECK(r.count() == static_cast<std::size_t>(orc::kGramSumTerms1000));
    CHECK(r.points.front().nu == static_cast<std::int64_t>(orc::kGramSumFirstNu1000));
    for (std::size_t i = 1; i < r.count(); ++i) {
      CHECK(r.points[i].nu == r.points[i - 1].nu + 1);
      CHECK(r.points[i].t >= 1000.0);
      CHECK(r.points[i].t < 2000.0);
    }
  }
  SUBCASE("partition of abutting ranges") {
    const GramRange ab = gram_range(Height(300.0), Height(gram_point(200).t));
    const GramRange bc = gram_range(Height(gram_point(200).t), Height(700.0));
    const GramRange ac = gram_range(Height(300.0), Height(700.0));
    REQUIRE(ab.count() + bc.count() == ac.count());
    for (std::size_t i = 0; i < ab.count(); ++i) CHECK(ab.points[i].t == ac.points[i].t);
    for (std::size_t i = 0; i < bc.count(); ++i) CHECK(bc.points[i].t == ac.points[ab.count() + i].t);
    CHECK(bc.points.front().nu == 200);
  }
  SUBCASE("bad ranges") {
    CHECK_THROWS_AS(gram_range(Height(5.0), Height(100.0)), DomainError);
    CHECK_THROWS_AS(gram_range(Height(100.0), Height(100.0)), DomainError);
  }
}

TEST_CASE("gram_count_estimate") {
  CHECK(gram_count_estimate(Height(1e4)) == doctest::Approx(14658.72).epsilon(0.01 / 14658.72));
  const double t = 2 * kPi * std::numbers::e;
  CHECK(gram_count_estimate(Height(t)) == doctest::Approx(std::numbers::e * (1 + std::log(2 * kPi))));
  CHECK_THROWS_AS(gram_count_estimate(Height(2.0)), DomainError);
}

TEST_CASE("enumeration against the asymptotic count") {
  // The estimate omits the -T/2pi (ln 2pi + 1) correction, so the ratio tends
  // to 1 slowly from below.
  const double r3 = gram_range(Height(100.0), Height(1e3)).count() / gram_count_estimate(Height(1e3));
  const double r4 = gram_range(Height(100.0), Height(1e4)).count() / gram_count_estimate(Height(1e4));
  CHECK(r4 > r3);
  CHECK(r4 > 0.6);
  CHECK(r4 < 1.0);
}

TEST_CASE("mean gap in [T, 2T] at T = 10^4") {
  const GramRange r = gram_range(Height(1e4), Height(2e4));
  const double mean = (r.points.back().t - r.points.front().t) / static_cast<double>(r.count() - 1);
  const double mid = 1.5e4;
  CHECK(mean == doctest::Approx(2 * kPi / std::log(mid / (2 * kPi))).epsilon(0.1));
}

TEST_CASE("gram CSV export") {
  const GramRange r = gram_range(Height(23.0), Height(40.0));
  std::ostringstream os;
  write_gram_csv(os, r);
  const std::string s = os.str();
  CHECK(s.rfind("nu,t,residual\n1,23.1702827012463,", 0) == 0);
  std::size_t lines = 0;
  for (char c : s) lines += c == '\n';
  CHECK(lines == r.count() + 1);
}
