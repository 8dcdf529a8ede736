#pragma once

// Text encodings of reports. Output is a pure function of the input: fixed
// field order, decimal integers, no timestamps.
//
// CSV columns for components: kind,d,g,h1,m,t,l,dim,generically_smooth,
// bundle_class,notes. Absent values are empty cells. Quoting follows RFC 4180.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hilbscroll/components.hpp"
#include "hilbscroll/gonal.hpp"
#include "hilbscroll/projections.hpp"

namespace hilbscroll {

/// Quotes a CSV cell when it contains a comma, quote or line break.
std::string csv_escape(const std::string& cell);

/// Texts of the notes attached to component `index`, in report order.
std::vector<std::string> component_notes(const ClassificationReport& r, std::size_t index);

std::string components_csv_header();

/// One CSV line per component (no header).
std::string components_csv_rows(const ClassificationReport& r);

/// A single JSON document for one report.
std::string report_to_json(const ClassificationReport& r);

/// A single JSON document {"rows": [...]} with one entry per component.
std::string reports_to_json_rows(std::span<const ClassificationReport> reports);

/// Everything the `gonal` command prints for one Z_{t,l}.
struct GonalRecord {
  GonalParams params;
  Int gonal_locus_dim = 0;
  Int dim_z = 0;
  HmlDimension dim_h;
  Int difference = 0;
  bool kk_very_ample = false;
  bool kk_equality = false;
  std::optional<Int> oracle_dim_z;
};

GonalRecord make_gonal_record(const GonalParams& gp, bool with_oracle);
std::string gonal_record_to_json(const GonalRecord& rec);
std::string gonal_record_to_csv(const GonalRecord& rec);

struct ProjectionRecord {
  ProjectionParams params;
  ProjectionVerdict verdict;
  std::optional<DivisorCase> divisor;
};

ProjectionRecord make_projection_record(const ProjectionParams& pp);
std::string projection_record_to_json(const ProjectionRecord& rec);
std::string projection_record_to_csv(const ProjectionRecord& rec);

}  // namespace hilbscroll
