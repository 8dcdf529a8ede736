#include "hilbscroll/report_io.hpp"

#include <type_traits>

#include "hilbscroll/oracle.hpp"
#include "json.hpp"

namespace hilbscroll {

namespace {

using json = nlohmann::ordered_json;

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, bool>) return *v ? "true" : "false";
  else return std::to_string(*v);
}

std::string cell(bool v) { return v ? "true" : "false"; }
std::string cell(Int v) { return std::to_string(v); }

json component_json(const ComponentRecord& c) {
  json j;
  j["kind"] = to_string(c.kind);
  j["d"] = c.d;
  j["g"] = c.g;
  j["h1"] = c.h1;
  j["m"] = c.m;
  j["t"] = opt(c.t);
  j["l"] = opt(c.l);
  j["dim"] = c.dim;
  j["generically_smooth"] = opt(c.generically_smooth);
  j["bundle_class"] = c.bundle_class ? json(to_string(*c.bundle_class)) : json(nullptr);
  return j;
}

std::string join_csv(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(cells[i]);
  }
  line += '\n';
  return line;
}

}  // namespace

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char ch : cell) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::vector<std::string> component_notes(const ClassificationReport& r, std::size_t index) {
  std::vector<std::string> out;
  for (const Note& n : r.notes) {
    if (n.component == index) out.push_back(n.text);
  }
  return out;
}

std::string components_csv_header() {
  return "kind,d,g,h1,m,t,l,dim,generically_smooth,bundle_class,notes\n";
}

std::string components_csv_rows(const ClassificationReport& r) {
  std::string out;
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const ComponentRecord& c = r.components[i];
    std::string notes;
    for (const std::string& n : component_notes(r, i)) notes += (notes.empty() ? "" : "; ") + n;
    out += join_csv({to_string(c.kind), cell(c.d), cell(c.g), cell(c.h1), cell(c.m), cell(c.t),
                     cell(c.l), cell(c.dim), cell(c.generically_smooth),
                     c.bundle_class ? to_string(*c.bundle_class) : "", notes});
  }
  return out;
}

std::string report_to_json(const ClassificationReport& r) {
  json j;
  j["params"] = {{"d", r.params.d}, {"g", r.params.g}, {"h1", r.params.h1}, {"R", r.params.R}};
  j["components"] = json::array();
  for (const ComponentRecord& c : r.components) j["components"].push_back(component_json(c));
  j["reducible"] = r.reducible;
  j["equidimensional"] = r.equidimensional;
  j["complete"] = r.complete;
  j["notes"] = json::array();
  for (const Note& n : r.notes) {
    j["notes"].push_back({{"kind", n.kind}, {"text", n.text}, {"component", opt(n.component)}});
  }
  return j.dump(2) + "\n";
}

std::string reports_to_json_rows(std::span<const ClassificationReport> reports) {
  json rows = json::array();
  for (const ClassificationReport& r : reports) {
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      json row = component_json(r.components[i]);
      row["notes"] = component_notes(r, i);
      rows.push_back(std::move(row));
    }
  }
  json j;
  j["rows"] = std::move(rows);
  return j.dump(2) + "\n";
}

GonalRecord make_gonal_record(const GonalParams& gp, bool with_oracle) {
  GonalRecord rec;
  rec.params = gp;
  rec.gonal_locus_dim = gonal_locus_dimension(gp.g, gp.t);
  rec.dim_z = z_component_dimension(gp);
  rec.dim_h = h_component_dimension_at_gonal_m(gp);
  rec.difference = z_vs_h_difference(gp);
  rec.kk_very_ample = kk_very_ample(gp.g, gp.t, gp.l);
  rec.kk_equality = kk_equality(gp.g, gp.t, gp.l);
  if (with_oracle) rec.oracle_dim_z = oracle::z_dim_via_parameter_count(gp);
  return rec;
}

std::string gonal_record_to_json(const GonalRecord& rec) {
  const GonalParams& p = rec.params;
  json j;
  j["g"] = p.g;
  j["t"] = p.t;
  j["l"] = p.l;
  j["d"] = p.d;
  j["a"] = p.a;
  j["m"] = p.m;
  j["R"] = p.R();
  j["gonal_locus_dim"] = rec.gonal_locus_dim;
  j["dim_z"] = rec.dim_z;
  j["dim_h"] = rec.dim_h.value;
  j["h_component_exists"] = rec.dim_h.component_exists;
  j["difference"] = rec.difference;
  j["kk_very_ample"] = rec.kk_very_ample;
  j["kk_equality"] = rec.kk_equality;
  j["oracle_dim_z"] = opt(rec.oracle_dim_z);
  return j.dump(2) + "\n";
}

std::string gonal_record_to_csv(const GonalRecord& rec) {
  const GonalParams& p = rec.params;
  return "g,t,l,d,a,m,R,gonal_locus_dim,dim_z,dim_h,h_component_exists,difference,"
         "kk_very_ample,kk_equality,oracle_dim_z\n" +
         join_csv({cell(p.g), cell(p.t), cell(p.l), cell(p.d), cell(p.a), cell(p.m),
                   cell(p.R()), cell(rec.gonal_locus_dim), cell(rec.dim_z),
                   cell(rec.dim_h.value), cell(rec.dim_h.component_exists),
                   cell(rec.difference), cell(rec.kk_very_ample), cell(rec.kk_equality),
                   cell(rec.oracle_dim_z)});
}

ProjectionRecord make_projection_record(const ProjectionParams& pp) {
  ProjectionRecord rec;
  rec.params = pp;
  rec.verdict = projection_verdict(pp);
  if (rec.verdict.which == ProjectionCase::Divisor) rec.divisor = divisor_case(pp.d, pp.g);
  return rec;
}

std::string projection_record_to_json(const ProjectionRecord& rec) {
  const ProjectionParams& p = rec.params;
  const ProjectionVerdict& v = rec.verdict;
  json j;
  j["d"] = p.d;
  j["g"] = p.g;
  j["l"] = p.l;
  j["k"] = p.k;
  j["m"] = p.m;
  j["r"] = p.r;
  j["case"] = to_string(v.which);
  j["y_dim"] = v.y_dim;
  j["y_dim_exact"] = v.y_dim_exact;
  j["difference"] = v.difference;
  j["gate_holds"] = v.gate_holds;
  j["new_component"] = v.new_component;
  j["h_dim"] = rec.divisor ? json(rec.divisor->h_dim) : json(nullptr);
  return j.dump(2) + "\n";
}

std::string projection_record_to_csv(const ProjectionRecord& rec) {
  const ProjectionParams& p = rec.params;
  const ProjectionVerdict& v = rec.verdict;
  return "d,g,l,k,m,r,case,y_dim,y_dim_exact,difference,gate_holds,new_component,h_dim\n" +
         join_csv({cell(p.d), cell(p.g), cell(p.l), cell(p.k), cell(p.m), cell(p.r),
                   to_string(v.which), cell(v.y_dim), cell(v.y_dim_exact), cell(v.difference),
                   cell(v.gate_holds), cell(v.new_component),
                   rec.divisor ? cell(rec.divisor->h_dim) : std::string()});
}

}  // namespace hilbscroll
