#include "doctest.h"
#include "hilbscroll/scroll.hpp"
#include "test_helpers.hpp"

using namespace hilbscroll;
using hilbscroll::test::error_code;

TEST_SUITE("scroll") {
  TEST_CASE("make_scroll computes the ambient dimension") {
    CHECK(make_scroll(10, 3, 1).R == 6);
    CHECK(make_scroll(29, 8, 2).R == 16);
  }

  TEST_CASE("make_scroll reports the first violated inequality") {
    CHECK(error_code([] { make_scroll(6, 3, 3); }) == "speciality-out-of-range");
    CHECK(error_code([] { make_scroll(10, 2, 1); }) == "genus-too-small");
    // genus is checked before speciality
    CHECK(error_code([] { make_scroll(10, 2, 5); }) == "genus-too-small");
    CHECK(error_code([] { make_scroll(10, 5, 0); }) == "speciality-out-of-range");
    CHECK(error_code([] { make_scroll(11, 5, 2); }) == "degree-too-small");
    // speciality is checked before degree
    CHECK(error_code([] { make_scroll(3, 5, 7); }) == "speciality-out-of-range");
    // d >= 2g+2 already forces R >= 3 + h1 - 1 >= 3
    CHECK(error_code([] { make_scroll(8, 3, 1); }) == "");
  }

  TEST_CASE("cone_speciality_bound") {
    CHECK(cone_speciality_bound(5, false) == 5);
    CHECK(cone_speciality_bound(3, false) == 3);
    CHECK(error_code([] { cone_speciality_bound(4, true); }) == "strongly-special-unsupported");
  }

  TEST_CASE("min_degree_threshold") {
    CHECK(min_degree_threshold(3, 1) == 10);
    CHECK(min_degree_threshold(8, 2) == 29);
    CHECK(min_degree_threshold(8, 1) == 28);
    CHECK(min_degree_threshold(12, 3) == 38);  // 84/2 - 6 + 2
  }

  TEST_CASE("section_data") {
    SUBCASE("g=3 plane quartic section") {
      const auto s = section_data(make_scroll(10, 3, 1), 4);
      CHECK(s.h == 2);
      CHECK(s.gamma_sq == -2);
      CHECK(s.degN == 6);
      CHECK(s.t_ext == Int{0});
      CHECK(s.basepoints_residual == 0);
    }
    SUBCASE("h1 = 2") {
      const auto s = section_data(make_scroll(29, 8, 2), 9);
      CHECK(s.h == 3);
      CHECK(s.gamma_sq == -11);
      CHECK(s.degN == 20);
      CHECK(s.t_ext == Int{0});
    }
    SUBCASE("boundary with zero self-intersection") {
      CHECK(error_code([] { section_data(make_scroll(28, 8, 1), 14); }) ==
            "nonnegative-self-intersection");
    }
    SUBCASE("general N gives a positive Ext rank below 2g-1") {
      // d - 2m = 2 < g - 1 = 3
      const auto s = section_data(make_scroll(14, 4, 1), 6);
      CHECK(s.t_ext == Int{1});
      const auto special = section_data(make_scroll(14, 4, 1), 6, /*general_N=*/false);
      CHECK_FALSE(special.t_ext.has_value());
    }
    SUBCASE("range errors") {
      CHECK(error_code([] { section_data(make_scroll(30, 8, 2), 10); }) == "m-out-of-range");
      CHECK(error_code([] { section_data(make_scroll(28, 8, 2), 9); }) ==
            "degree-below-threshold");
      CHECK(error_code([] { section_data(make_scroll(110, 19, 5), 24); }) == "m-out-of-range");
      CHECK(error_code([] {
              section_data(make_scroll(110, 19, 5), 14, true, Moduli::Special);
            }) == "not-a-section");
      CHECK(error_code([] {
              section_data(make_scroll(110, 19, 5), 30, true, Moduli::Special);
            }) == "m-out-of-range");
    }
  }

  TEST_CASE("stability_class") {
    CHECK(stability_class(make_scroll(110, 19, 5), 24, Moduli::Special) ==
          BundleClass::UnstableDecomposable);
    CHECK(stability_class(make_scroll(29, 8, 2), 9) == BundleClass::UnstableDecomposable);
    CHECK(stability_class(make_scroll(10, 3, 1), 4) == BundleClass::UnstableDecomposable);
    // Ext^1(L, N) of rank one for general N, d < 6g - 5
    CHECK(stability_class(make_scroll(14, 4, 1), 6) == BundleClass::Unstable);
    CHECK(std::string(to_string(BundleClass::Unstable)) == "Unstable");
  }

  TEST_CASE("normal_bundle_cohomology") {
    CHECK(normal_bundle_cohomology(make_scroll(10, 3, 1), 4) == CohomologyTriple{56, 0, 0, 56});
    CHECK(normal_bundle_cohomology(make_scroll(29, 8, 2), 9) ==
          CohomologyTriple{312, 8, 0, 304});
    CHECK(normal_bundle_cohomology(make_scroll(10, 3, 1), 4, 1) ==
          CohomologyTriple{57, 1, 0, 56});
    // h1 = 1, m < 2g-2 needs the base points of |K - L| to be counted
    const auto p = make_scroll(40, 9, 1);
    CHECK(error_code([&] { normal_bundle_cohomology(p, 14); }) == "negative-h1");
    CHECK(normal_bundle_cohomology(p, 14, 2).h1n == 0);
    CHECK(error_code([&] { normal_bundle_cohomology(p, 16, -1); }) == "negative-basepoints");
  }

  TEST_CASE("h0_explicit") {
    CHECK(h0_explicit(make_scroll(10, 3, 1), 4) == 56);
    CHECK(h0_explicit(make_scroll(29, 8, 2), 9) == 312);
    CHECK(h0_explicit(make_scroll(29, 8, 2), 9) ==
          normal_bundle_cohomology(make_scroll(29, 8, 2), 9).h0);
  }

  TEST_CASE("aut_dimension") {
    CHECK(aut_dimension(make_scroll(110, 19, 5), 24, true, Moduli::Special) == 45);
    CHECK(aut_dimension(make_scroll(29, 8, 2), 9, true) == 5);
    CHECK(aut_dimension(make_scroll(10, 3, 1), 4, true) == 1);
    CHECK(aut_dimension(make_scroll(10, 3, 1), 4, false) == 0);
  }

  TEST_CASE("general line bundle cohomology") {
    // Riemann-Roch for every degree, and non-speciality from 2g-1 on
    for (Int g = 2; g <= 30; ++g) {
      for (Int e = -5; e <= 4 * g; ++e) {
        const Int h0 = general_bundle_h0(g, e);
        const Int h1 = general_bundle_h1(g, e);
        CHECK(h0 >= 0);
        CHECK(h1 >= 0);
        CHECK(h0 - h1 == e - g + 1);
        if (e >= 2 * g - 1) CHECK(h1 == 0);
        if (e < 0) CHECK(h0 == 0);
      }
    }
  }
}
