#include <numeric>

#include "doctest.h"
#include "hilbscroll/components.hpp"
#include "hilbscroll/gonal.hpp"
#include "test_helpers.hpp"

using namespace hilbscroll;
using hilbscroll::test::error_code;

namespace {

// Reduced fraction, used to evaluate the very-ampleness bound literally:
// l <= 2g/(t(t-1)) - 1/t - 1.
struct Frac {
  Int num;
  Int den;
  Frac(Int n, Int d) : num(n), den(d) {
    const Int k = std::gcd(num, den);
    num /= k;
    den /= k;
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }
  friend Frac operator-(Frac a, Frac b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend bool operator<=(Frac a, Frac b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator==(Frac a, Frac b) { return a.num == b.num && a.den == b.den; }
};

Frac kk_bound(Int g, Int t) { return Frac(2 * g, t * (t - 1)) - Frac(1, t) - Frac(1, 1); }

// smallest a >= 3 with (a-2)(t-1) < g <= (a-1)(t-1), by search
Int search_a(Int g, Int t) {
  for (Int a = 3; a <= g + 3; ++a) {
    if ((a - 2) * (t - 1) < g && g <= (a - 1) * (t - 1)) return a;
  }
  return -1;
}

}  // namespace

TEST_SUITE("gonal") {
  TEST_CASE("ballico_a") {
    CHECK(ballico_a(19, 3) == 11);
    CHECK(ballico_a(19, 3) == (19 + 1) / 2 + 1);
    CHECK(ballico_a(8, 3) == 5);
    CHECK(ballico_a(6, 4) == 3);
    CHECK(error_code([] { ballico_a(3, 4); }) == "no-valid-a");
    CHECK(error_code([] { ballico_a(10, 2); }) == "gonality-too-small");
    for (Int t = 3; t <= 15; ++t) {
      for (Int g = t; g <= 120; ++g) CHECK(ballico_a(g, t) == search_a(g, t));
    }
  }

  TEST_CASE("special_residual_series") {
    const SeriesSpec s = special_residual_series(19, 3, 4);
    CHECK(s.m == 24);
    CHECK(s.i == 5);
    CHECK(s.h == 10);
    CHECK(s.h + 1 == 19 - 4 * 2);
    CHECK(s.h + 1 == s.m - s.g + 1 + s.i);
    const SeriesSpec s2 = special_residual_series(8, 3, 1);
    CHECK(s2 == SeriesSpec{8, 11, 5, 2});
    CHECK(error_code([] { special_residual_series(8, 3, 4); }) == "r-out-of-range");
    CHECK(error_code([] { special_residual_series(8, 3, 0); }) == "r-out-of-range");
  }

  TEST_CASE("kk_very_ample") {
    CHECK(kk_very_ample(19, 3, 5));
    CHECK(kk_equality(19, 3, 5));
    CHECK_FALSE(kk_very_ample(19, 3, 6));
    CHECK(kk_very_ample(8, 3, 1));
    CHECK_FALSE(kk_equality(8, 3, 1));
    for (Int g = 3; g <= 60; ++g) {
      for (Int t = 3; t <= 9; ++t) {
        for (Int l = 1; l <= 12; ++l) {
          CHECK(kk_very_ample(g, t, l) == (Frac(l, 1) <= kk_bound(g, t)));
          CHECK(kk_equality(g, t, l) == (Frac(l, 1) == kk_bound(g, t)));
        }
      }
    }
  }

  TEST_CASE("gonal_locus_dimension") {
    CHECK(gonal_locus_dimension(19, 3) == 39);
    CHECK(gonal_locus_dimension(8, 3) == 17);
    CHECK(error_code([] { gonal_locus_dimension(6, 4); }) == "not-proper-gonal-locus");
    for (Int g = 5; g <= 100; ++g) {
      for (Int t = 3; t < gonality_general(g); ++t) CHECK(gonal_locus_dimension(g, t) < 3 * g - 3);
    }
  }

  TEST_CASE("make_gonal validation order") {
    CHECK(error_code([] { make_gonal(19, 2, 5, 110); }) == "gonality-out-of-range");
    CHECK(error_code([] { make_gonal(19, 11, 5, 110); }) == "gonality-out-of-range");
    CHECK(error_code([] { make_gonal(19, 3, 11, 110); }) == "l-out-of-range");
    CHECK(error_code([] { make_gonal(19, 3, 1, 110); }) == "l-out-of-range");
    CHECK(error_code([] { make_gonal(19, 3, 6, 110); }) == "not-very-ample");
    CHECK(error_code([] { make_gonal(19, 3, 5, 108); }) == "degree-too-small");
    const GonalParams gp = make_gonal(19, 3, 5, 110);
    CHECK(gp.a == 11);
    CHECK(gp.m == 24);
    CHECK(gp.R() == 78);
  }

  TEST_CASE("dimension formulas on the worked example") {
    const GonalParams gp = make_gonal(19, 3, 5, 110);
    CHECK(z_component_dimension(gp) == 6253);
    const HmlDimension h = h_component_dimension_at_gonal_m(gp);
    CHECK(h.value == 6232);
    CHECK_FALSE(h.component_exists);
    CHECK(error_code([&] { h_component_dimension_checked(gp); }) ==
          "no-general-moduli-component");
    CHECK(z_vs_h_difference(gp) == 21);
    CHECK(z_vs_h_difference(gp) == z_component_dimension(gp) - h.value);
  }

  TEST_CASE("further dimension values") {
    CHECK(z_component_dimension(make_gonal(19, 3, 2, 110)) == 5806);
    CHECK(z_vs_h_difference(make_gonal(19, 3, 2, 110)) == 0);
    const GonalParams gp = make_gonal(20, 3, 5, 115);
    CHECK(h_component_dimension_checked(gp) == 6715);
    CHECK(h_component_dimension_checked(gp) ==
          component_dimension_formula(make_scroll(115, 20, 5), gp.m));
    CHECK(z_vs_h_difference(gp) == 24);
    CHECK(z_component_dimension(gp) - 6715 == 24);
  }

  TEST_CASE("rem19608_family") {
    const GonalParams five = rem19608_family(5);
    CHECK(five == GonalParams{19, 3, 5, 109, 11, 24});
    const GonalParams six = rem19608_family(6);
    CHECK(six.g == 22);
    CHECK(six.d == 127);
    CHECK(six.a == 12);
    CHECK(error_code([] { rem19608_family(4); }) == "l-out-of-range");
    for (Int l = 5; l <= 40; ++l) {
      const GonalParams gp = rem19608_family(l);
      CHECK(kk_equality(gp.g, 3, l));
      CHECK(gp.g < 4 * l);
      CHECK(l <= gp.a - 1);
      CHECK_FALSE(general_section_degrees(gp.g, l).has_value());
    }
  }

  TEST_CASE("gonal_components enumerates valid t") {
    CHECK(gonal_components(43, 8, 2).empty());
    const auto zs = gonal_components(61, 11, 2);
    REQUIRE(zs.size() == 1);
    CHECK(zs[0].t == 3);
    CHECK(gonal_components(60, 11, 2).empty());
    // larger genus admits several gonalities
    const auto many = gonal_components(6 * 40 - 5, 40, 2);
    REQUIRE(many.size() >= 2);
    for (std::size_t i = 1; i < many.size(); ++i) CHECK(many[i - 1].t < many[i].t);
  }
}
