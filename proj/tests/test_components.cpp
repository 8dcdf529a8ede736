#include <set>

#include "doctest.h"
#include "hilbscroll/components.hpp"
#include "test_helpers.hpp"

using namespace hilbscroll;
using hilbscroll::test::error_code;

namespace {

std::multiset<std::string> note_kinds(const ClassificationReport& r) {
  std::multiset<std::string> out;
  for (const auto& n : r.notes) out.insert(n.kind);
  return out;
}

}  // namespace

TEST_SUITE("components") {
  TEST_CASE("admissible_m_range") {
    CHECK(admissible_m_range(3, 1) == std::vector<Int>{4});
    CHECK(admissible_m_range(8, 2) == std::vector<Int>{9});
    CHECK(admissible_m_range(9, 1) == std::vector<Int>{11, 12, 13, 14, 15, 16});
    CHECK(admissible_m_range(12, 3) == std::vector<Int>{12});
    CHECK(admissible_m_range(20, 3) == std::vector<Int>{20, 21, 22});
    CHECK(error_code([] { admissible_m_range(6, 2); }) == "BN1-violated");
    CHECK(error_code([] { admissible_m_range(19, 5); }) == "BN1-violated");
  }

  TEST_CASE("component_dimension") {
    CHECK(component_dimension(make_scroll(10, 3, 1), 4) == 56);
    CHECK(component_dimension(make_scroll(29, 8, 2), 9) == 312);
    // gonal section degree on g=19, h1=5: only the closed form is defined
    CHECK(component_dimension_formula(make_scroll(110, 19, 5), 24) == 6232);
    CHECK(error_code([] { component_dimension(make_scroll(110, 19, 5), 24); }) ==
          "m-out-of-range");
    CHECK(error_code([] { component_dimension(make_scroll(27, 8, 1), 14); }) ==
          "degree-below-threshold");
  }

  TEST_CASE("component_dimension_h1_1") {
    CHECK(component_dimension_h1_1(10, 3) == 56);
    CHECK(component_dimension_h1_1(28, 8) == 259);  // 49 + 15^2 - 15
    CHECK(error_code([] { component_dimension_h1_1(9, 3); }) == "degree-below-threshold");
    for (Int g = 3; g <= 30; ++g) {
      const Int t = min_degree_threshold(g, 1);
      for (Int d = t; d <= t + 10; ++d) {
        CHECK(component_dimension_h1_1(d, g) == component_dimension(make_scroll(d, g, 1), 2 * g - 2));
      }
    }
  }

  TEST_CASE("sublocus_codim_h1_1") {
    CHECK(sublocus_codim_h1_1(8, 12) == 2);
    CHECK(sublocus_codim_h1_1(5, 7) == 1);
    CHECK(error_code([] { sublocus_codim_h1_1(3, 4); }) == "m-not-below-canonical");
  }

  TEST_CASE("singular_point_predicate") {
    CHECK(singular_point_predicate(5, 1, 6));
    CHECK_FALSE(singular_point_predicate(3, 1, 4));
    CHECK(singular_point_predicate(12, 2, 9));
    // degenerate residual degree
    CHECK_FALSE(singular_point_predicate(8, 1, 14));
  }

  TEST_CASE("singular_by_smaller_section") {
    CHECK(singular_by_smaller_section(9, 1, 16, 14));
    CHECK_FALSE(singular_by_smaller_section(9, 1, 16, 16));
    CHECK_FALSE(singular_by_smaller_section(8, 2, 9, 9));
  }

  TEST_CASE("classify: g=3 quartic case") {
    const auto r = classify(make_scroll(10, 3, 1));
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].dim == 56);
    CHECK(r.components[0].kind == ComponentKind::GeneralModuli);
    CHECK(r.components[0].generically_smooth == true);
    CHECK_FALSE(r.reducible);
    CHECK(r.equidimensional);
    CHECK(r.complete);
  }

  TEST_CASE("classify: h1 = 1 reports smaller m as subloci") {
    const auto r = classify(make_scroll(40, 9, 1));
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].m == 16);
    std::vector<Int> codims;
    for (const auto& n : r.notes) {
      if (n.kind == "sublocus") {
        CHECK(n.component == std::size_t{0});
        codims.push_back(std::stoll(n.text.substr(n.text.rfind(' ') + 1)));
      }
    }
    CHECK(codims == std::vector<Int>{5, 4, 3, 2, 1});
    const auto kinds = note_kinds(r);
    CHECK(kinds.count("containment") == 1);
    CHECK(kinds.count("connectivity") == 1);
  }

  TEST_CASE("classify: h1 = 2 with gonal components") {
    const auto r = classify(make_scroll(29, 8, 2), true);
    // no Z_{t,2} exists for g = 8 (very-ampleness fails) nor below 6g-5
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].m == 9);
    CHECK(r.equidimensional);
    CHECK(r.complete);

    const auto big = classify(make_scroll(61, 11, 2), true);
    REQUIRE(big.components.size() == 3);
    CHECK(big.components[0].kind == ComponentKind::GeneralModuli);
    CHECK(big.components[1].kind == ComponentKind::GeneralModuli);
    CHECK(big.components[2].kind == ComponentKind::Gonal);
    CHECK(big.components[2].t == Int{3});
    CHECK(big.components[2].l == Int{2});
    CHECK_FALSE(big.components[2].generically_smooth.has_value());
    CHECK(big.components[2].bundle_class == BundleClass::UnstableDecomposable);
    CHECK(big.reducible);
    CHECK(big.equidimensional);
    CHECK(big.complete);
    CHECK(note_kinds(big).count("completeness") == 1);
  }

  TEST_CASE("classify: h1 >= 3 is reducible and not equidimensional") {
    const auto p = make_scroll(min_degree_threshold(20, 3), 20, 3);
    const auto r = classify(p, true);
    REQUIRE(r.components.size() == 3);
    CHECK(r.reducible);
    CHECK_FALSE(r.equidimensional);
    CHECK_FALSE(r.complete);
    // maximal dimension at m = g + 3 - h1
    CHECK(r.components[0].dim > r.components[1].dim);
    CHECK(r.components[1].dim > r.components[2].dim);
  }

  TEST_CASE("classify: special moduli only") {
    CHECK(error_code([] { classify(make_scroll(109, 19, 5)); }) == "BN1-violated");
    const auto r = classify(make_scroll(109, 19, 5), true);
    REQUIRE_FALSE(r.components.empty());
    for (const auto& c : r.components) CHECK(c.kind == ComponentKind::Gonal);
    CHECK(r.components[0].dim == 6097);
    CHECK(note_kinds(r).count("special-moduli") == 1);
    CHECK(note_kinds(r).count("non-containment") == r.components.size());
  }

  TEST_CASE("classify: boundary self-intersection keeps the component") {
    const auto r = classify(make_scroll(28, 8, 1));
    REQUIRE(r.components.size() == 1);
    CHECK(r.components[0].dim == 259);
    CHECK_FALSE(r.components[0].bundle_class.has_value());
    CHECK(note_kinds(r).count("boundary") == 1);
  }

  TEST_CASE("classify rejects degrees below the threshold") {
    CHECK(error_code([] { classify(make_scroll(28, 8, 2)); }) == "degree-below-threshold");
  }
}
