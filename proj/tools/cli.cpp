#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <optional>
#include <ostream>
#include <set>
#include <string_view>
#include <thread>

#include "CLI11.hpp"
#include "hilbscroll/components.hpp"
#include "hilbscroll/error.hpp"
#include "hilbscroll/gonal.hpp"
#include "hilbscroll/oracle.hpp"
#include "hilbscroll/projections.hpp"
#include "hilbscroll/report_io.hpp"

namespace hilbscroll::cli {

namespace {

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IntRange {
  Int lo = 0;
  Int hi = 0;
};

Int parse_int(std::string_view s, const std::string& what) {
  Int v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw InputError("malformed-" + what, "cannot read an integer from '" + std::string(s) + "'");
  }
  return v;
}

// "A..B" or "A"
IntRange parse_range(const std::string& text, const std::string& name) {
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text, "range");
  } else {
    r.lo = parse_int(std::string_view(text).substr(0, dots), "range");
    r.hi = parse_int(std::string_view(text).substr(dots + 2), "range");
  }
  if (r.lo > r.hi) {
    throw InputError("empty-range", "--" + name + " " + text + " contains no values");
  }
  return r;
}

// "min", "min+K" or "d1,d2,..."
std::vector<Int> degrees_for(const std::string& policy, Int g, Int h1) {
  if (policy.rfind("min", 0) == 0) {
    Int offset = 0;
    if (policy.size() > 3) {
      if (policy[3] != '+') throw InputError("malformed-d-policy", policy);
      offset = parse_int(std::string_view(policy).substr(4), "d-policy");
      if (offset < 0) throw InputError("malformed-d-policy", policy);
    }
    return {min_degree_threshold(g, h1) + offset};
  }
  std::set<Int> ds;
  std::string_view rest = policy;
  while (true) {
    const auto comma = rest.find(',');
    ds.insert(parse_int(rest.substr(0, comma), "d-policy"));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return {ds.begin(), ds.end()};
}

void verify_report(const ClassificationReport& r) {
  const ScrollParams& p = r.params;
  for (const ComponentRecord& c : r.components) {
    if (c.kind == ComponentKind::GeneralModuli) {
      const Int explicit_h0 = h0_explicit(p, c.m);
      const Int counted = oracle::dim_via_parameter_count(p, c.m);
      if (c.dim != explicit_h0 || c.dim != counted) {
        throw VerificationFailure("H^" + std::to_string(c.m) + " at (d=" + std::to_string(p.d) +
                                  ", g=" + std::to_string(p.g) +
                                  ", h1=" + std::to_string(p.h1) + "): closed form " +
                                  std::to_string(c.dim) + ", h0 " + std::to_string(explicit_h0) +
                                  ", parameter count " + std::to_string(counted));
      }
    } else {
      const GonalParams gp = make_gonal(c.g, *c.t, *c.l, c.d);
      const Int counted = oracle::z_dim_via_parameter_count(gp);
      const Int diff = z_vs_h_difference(gp);
      const Int h_formula = h_component_dimension_at_gonal_m(gp).value;
      if (c.dim != counted || c.dim - h_formula != diff ||
          h_formula != component_dimension_formula(p, gp.m)) {
        throw VerificationFailure("Z_{" + std::to_string(*c.t) + "," + std::to_string(*c.l) +
                                  "} at d=" + std::to_string(c.d) + ", g=" +
                                  std::to_string(c.g) + ": dimension identities disagree");
      }
    }
  }
}

void emit_report(const ClassificationReport& r, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << components_csv_header() << components_csv_rows(r);
  } else {
    out << report_to_json(r);
  }
}

int cmd_classify(Int d, Int g, Int h1, bool gonal, bool verify, const std::string& format,
                 std::ostream& out) {
  const ClassificationReport r = classify(make_scroll(d, g, h1), gonal);
  if (verify) verify_report(r);
  emit_report(r, format, out);
  return kOk;
}

int cmd_scan(const std::string& g_text, const std::string& h1_text, const std::string& d_policy,
             bool gonal, bool verify, const std::string& format, unsigned jobs,
             std::ostream& out, std::ostream& err) {
  const IntRange gs = parse_range(g_text, "g");
  const IntRange hs = parse_range(h1_text, "h1");
  if (d_policy.empty()) throw InputError("malformed-d-policy", "empty --d");

  struct Task {
    Int d, g, h1;
  };
  std::vector<Task> tasks;
  for (Int g = gs.lo; g <= gs.hi; ++g) {
    for (Int h1 = hs.lo; h1 <= hs.hi; ++h1) {
      if (g < 3 || h1 <= 0 || h1 >= g) continue;
      for (Int d : degrees_for(d_policy, g, h1)) tasks.push_back({d, g, h1});
    }
  }

  std::vector<std::optional<ClassificationReport>> slots(tasks.size());
  std::vector<std::string> failures(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      try {
        ClassificationReport r = classify(make_scroll(t.d, t.g, t.h1), gonal);
        if (verify) verify_report(r);
        slots[i] = std::move(r);
      } catch (const VerificationFailure& e) {
        failures[i] = e.what();
      } catch (const InputError&) {
        // tuple outside the classified range
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, 64));
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  pool.clear();

  bool failed = false;
  for (const std::string& f : failures) {
    if (!f.empty()) {
      err << "verification-failed: " << f << '\n';
      failed = true;
    }
  }
  if (failed) return kVerifyFailed;

  std::vector<ClassificationReport> reports;
  for (auto& s : slots) {
    if (s) reports.push_back(std::move(*s));
  }
  const std::size_t skipped = tasks.size() - reports.size();
  if (skipped > 0) err << "skipped " << skipped << " tuple(s) outside the classified range\n";

  if (format == "json") {
    out << reports_to_json_rows(reports);
  } else {
    out << components_csv_header();
    for (const ClassificationReport& r : reports) out << components_csv_rows(r);
  }
  return kOk;
}

int cmd_gonal(std::optional<Int> g, std::optional<Int> t, Int l, std::optional<Int> d,
              bool family, bool verify, const std::string& format, std::ostream& out) {
  GonalParams gp;
  if (family) {
    gp = rem19608_family(l);
    if (d) gp = make_gonal(gp.g, gp.t, gp.l, *d);
  } else {
    if (!g || !t || !d) {
      throw InputError("missing-argument", "--g, --t and --d are required without --family-19608");
    }
    gp = make_gonal(*g, *t, l, *d);
  }
  const GonalRecord rec = make_gonal_record(gp, verify);
  if (verify) {
    const ScrollParams p = make_scroll(gp.d, gp.g, gp.l);
    if (*rec.oracle_dim_z != rec.dim_z || rec.dim_z - rec.dim_h.value != rec.difference ||
        rec.dim_h.value != component_dimension_formula(p, gp.m)) {
      throw VerificationFailure("Z_{" + std::to_string(gp.t) + "," + std::to_string(gp.l) +
                                "}: dimension identities disagree");
    }
  }
  out << (format == "csv" ? gonal_record_to_csv(rec) : gonal_record_to_json(rec));
  return kOk;
}

int cmd_project(Int d, Int g, Int l, Int k, Int m, const std::string& format,
                std::ostream& out) {
  const ProjectionRecord rec = make_projection_record(make_projection(d, g, l, k, m));
  out << (format == "csv" ? projection_record_to_csv(rec) : projection_record_to_json(rec));
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert-scheme components of linearly normal special scrolls"};
  app.name("hilbscroll");
  app.require_subcommand(1);

  Int d = 0, g = 0, h1 = 0, t = 0, l = 0, k = 0, m = 0;
  std::optional<Int> og, ot, od;
  bool gonal = false, verify = false, family = false;
  std::string format = "json", scan_format = "csv";
  std::string g_range, h1_range, d_policy;
  unsigned jobs = 1;
  const std::vector<std::string> formats{"json", "csv"};

  auto* classify_cmd = app.add_subcommand("classify", "classify the components for one (d, g, h1)");
  classify_cmd->add_option("--d", d, "degree")->required();
  classify_cmd->add_option("--g", g, "genus")->required();
  classify_cmd->add_option("--h1", h1, "speciality")->required();
  classify_cmd->add_flag("--gonal", gonal, "append special-moduli components Z_{t,h1}");
  classify_cmd->add_flag("--verify", verify, "cross-check every dimension against the oracle");
  classify_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember(formats));

  auto* scan_cmd = app.add_subcommand("scan", "tabulate components over a parameter grid");
  scan_cmd->add_option("--g", g_range, "genus range A..B")->required();
  scan_cmd->add_option("--h1", h1_range, "speciality range A..B")->required();
  scan_cmd->add_option("--d", d_policy, "min, min+K, or a list d1,d2,...")->required();
  scan_cmd->add_flag("--gonal", gonal, "include special-moduli components");
  scan_cmd->add_flag("--verify", verify, "cross-check every dimension against the oracle");
  scan_cmd->add_option("--format", scan_format, "csv or json")->check(CLI::IsMember(formats));
  scan_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1u, 64u));

  auto* gonal_cmd = app.add_subcommand("gonal", "dimensions of a special-moduli component Z_{t,l}");
  gonal_cmd->add_option("--g", og, "genus");
  gonal_cmd->add_option("--t", ot, "gonality");
  gonal_cmd->add_option("--l", l, "speciality")->required();
  gonal_cmd->add_option("--d", od, "degree");
  gonal_cmd->add_flag("--family-19608", family, "t=3, g=3l+4, d=6g-5 family");
  gonal_cmd->add_flag("--verify", verify, "cross-check against the oracle");
  gonal_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember(formats));

  auto* project_cmd = app.add_subcommand("project", "dimension bounds for projected families");
  project_cmd->add_option("--d", d, "degree")->required();
  project_cmd->add_option("--g", g, "genus")->required();
  project_cmd->add_option("--l", l, "source speciality")->required();
  project_cmd->add_option("--k", k, "target speciality")->required();
  project_cmd->add_option("--m", m, "section degree")->required();
  project_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember(formats));

  std::vector<std::string> argv_store{"hilbscroll"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "invalid-arguments: " << e.what() << '\n';
    return kInvalidInput;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(d, g, h1, gonal, verify, format, out);
    if (scan_cmd->parsed()) {
      return cmd_scan(g_range, h1_range, d_policy, gonal, verify, scan_format, jobs, out, err);
    }
    if (gonal_cmd->parsed()) return cmd_gonal(og, ot, l, od, family, verify, format, out);
    if (project_cmd->parsed()) return cmd_project(d, g, l, k, m, format, out);
  } catch (const InputError& e) {
    err << e.what() << '\n';
    return kInvalidInput;
  } catch (const VerificationFailure& e) {
    err << "verification-failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::exception& e) {
    err << "internal-error: " << e.what() << '\n';
    return kFault;
  }
  return kFault;
}

}  // namespace hilbscroll::cli
