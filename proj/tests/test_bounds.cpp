#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "antisym/bounds.hpp"

using namespace antisym;
using namespace antisym::bounds;

TEST_CASE("antisym_dim: binomials and range checks") {
  CHECK(antisym_dim(4, 2) == 6);
  CHECK(antisym_dim(7, 3) == 35);
  CHECK(antisym_dim(5, 0) == 1);
  CHECK(antisym_dim(9, 0) == 1);
  CHECK_THROWS_AS(antisym_dim(3, 4), InputError);
  CHECK_THROWS_AS(antisym_dim(3, -1), InputError);
}

TEST_CASE("cmi_extension: closed values") {
  CHECK(cmi_extension(4, 3) == doctest::Approx(std::log2(9.0 / 4.0)).epsilon(1e-12));
  CHECK(cmi_extension(4, 3) == doctest::Approx(1.169925).epsilon(1e-6));
  CHECK(cmi_extension(5, 3) == 1.0);  // 3/2 * 4/3 = 2 exactly
  CHECK(cmi_extension(5, 2) == doctest::Approx(std::log2(2.0 * 5 / 4)).epsilon(1e-12));
  CHECK_THROWS_AS(cmi_extension(4, 1), InputError);
  CHECK_THROWS_AS(cmi_extension(4, 5), InputError);
}

TEST_CASE("esq_upper: spot values and minimizers") {
  const auto e2 = esq_upper(2);
  CHECK(e2.value_bits == 1.0);
  CHECK(e2.optimal_k == 2);

  const auto e4 = esq_upper(4);
  CHECK(e4.value_bits == doctest::Approx(0.584963).epsilon(1e-6));
  CHECK(e4.optimal_k == 3);

  const auto e5 = esq_upper(5);
  CHECK(e5.value_bits == 0.5);
  CHECK(e5.optimal_k == 3);

  CHECK_THROWS_AS(esq_upper(1), InputError);
}

TEST_CASE("kd_upper equals the squashed bound and obeys the large-d envelope") {
  CHECK(kd_upper(4) == esq_upper(4).value_bits);
  CHECK(kd_upper(5) == 0.5);
  const double big = kd_upper(1000000);
  CHECK(big <= asymptotic_esq_bound(1000000));
  CHECK(big > 0);
}

TEST_CASE("constant bounds") {
  CHECK(ec_lower() == doctest::Approx(0.415037).epsilon(1e-6));
  CHECK(ec_lower() <= 1.0);  // formation value is one bit for every d
  CHECK(ec_lower_ratio() == Rational(4, 3));

  CHECK(er_sep_lower() == ec_lower() / 2);
  CHECK(er_sep_lower() == doctest::Approx(0.2075).epsilon(1e-3));
  CHECK(er_sep_lower() < log_negativity(2));

  CHECK(log_negativity(2) == 1.0);
  CHECK(log_negativity(4) == doctest::Approx(0.585).epsilon(1e-3));
  CHECK(log_negativity(10) == doctest::Approx(std::log2(1.2)).epsilon(1e-12));
}

TEST_CASE("monotonicity and consistency across d") {
  double prev = esq_upper(2).value_bits;
  for (int d = 3; d <= 100; ++d) {
    const double cur = esq_upper(d).value_bits;
    CHECK(cur <= prev);
    prev = cur;
  }
  for (int d = 2; d <= 100; ++d) {
    CHECK(1.0 / d <= kd_upper(d));
    CHECK(esq_upper(d).value_bits <= asymptotic_esq_bound(d));
    if (d % 2 == 0) CHECK(esq_upper(d).value_bits == log_negativity(d));
  }
  for (int d = 2; d <= 30; ++d)
    for (int k = 2; k <= d; ++k) CHECK(cmi_extension(d, k) > 0);
}

TEST_CASE("bound_report aggregates consistently") {
  const auto r = bound_report(6);
  CHECK(r.d == 6);
  CHECK(r.kd_upper == r.esq_upper);
  CHECK(r.esq_upper == doctest::Approx(std::log2(8.0 / 6.0)).epsilon(1e-12));
  CHECK(r.optimal_k == 4);
  CHECK(r.er_sep_lower == r.ec_lower / 2);
}
