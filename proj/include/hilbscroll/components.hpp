#pragma once

// Irreducible components of Hilb(d, g, h1): the general-moduli components
// H^m_{d,g,h1} and, on request, the special-moduli components Z_{t,l}.

#include <optional>
#include <string>
#include <vector>

#include "hilbscroll/scroll.hpp"

namespace hilbscroll {

enum class ComponentKind { GeneralModuli, Gonal };

const char* to_string(ComponentKind k);

struct ComponentRecord {
  ComponentKind kind = ComponentKind::GeneralModuli;
  Int d = 0;
  Int g = 0;
  Int h1 = 0;
  Int m = 0;
  std::optional<Int> t;  // Gonal only
  std::optional<Int> l;  // Gonal only
  Int dim = 0;
  /// Known true for general-moduli components; not established for Z_{t,l}.
  std::optional<bool> generically_smooth;
  /// Absent when Gamma^2 >= 0 (special section not certified unique).
  std::optional<BundleClass> bundle_class;
};

/// A structured remark attached to a report. `component` indexes into
/// ClassificationReport::components when the note concerns one component.
struct Note {
  std::string kind;
  std::string text;
  std::optional<std::size_t> component;
};

struct ClassificationReport {
  ScrollParams params;
  std::vector<ComponentRecord> components;
  bool reducible = false;
  bool equidimensional = true;
  /// True only where the component list is known to be exhaustive.
  bool complete = false;
  std::vector<Note> notes;
};

/// Section degrees of the general-moduli components. Throws "BN1-violated"
/// unless g >= 4 h1 or (g, h1) = (3, 1).
std::vector<Int> admissible_m_range(Int g, Int h1);

/// 7(g-1) + (R+1)(R+1-h1) + (d-m-g+1)h1 - (d-2m+g-1), unchecked.
Int component_dimension_formula(const ScrollParams& p, Int m);

/// dim H^m_{d,g,h1}; validates d against the threshold and m against the
/// admissible range.
Int component_dimension(const ScrollParams& p, Int m);

/// dim H^{2g-2}_{d,g,1} = 7(g-1) + (d-2g+3)^2 - (d-2g+3).
Int component_dimension_h1_1(Int d, Int g);

/// Codimension 2g-2-m of the h1 = 1 scrolls with section degree m inside
/// H^{2g-2}. Throws "m-not-below-canonical" for m >= 2g-2.
Int sublocus_codim_h1_1(Int g, Int m);

/// g(h1+1) >= h1(m+h1+2): H^m carries singular points coming from residual
/// series |K - L| with base points. False when 2g-3-m < 0.
bool singular_point_predicate(Int g, Int h1, Int m);

/// True iff m_inner < m_outer: a scroll of H^{m_outer} whose special section
/// has degree m_inner also lies on H^{m_inner}.
bool singular_by_smaller_section(Int g, Int h1, Int m_outer, Int m_inner);

/// Full classification for one (d, g, h1). General-moduli components come
/// first by increasing m, then Z_{t,l} by (t, l).
ClassificationReport classify(const ScrollParams& p, bool include_gonal = false);

}  // namespace hilbscroll
