#include "biharm/cli.hpp"

#include "biharm/json_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace biharm::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Text };

struct Options {
  std::string kind;
  Multiplicities mults;
  std::string family;
  int b = -1, c = -1, q = -1;
  std::string input;
  std::string out_path;
  bool json = false, csv = false, text = false;
  bool table = false, duality = false;
  int samples = 0;
  double tolerance = 1e-9;
  int max_param = 6;
  int size_cap = kDefaultSizeCap;
  std::uint64_t seed = kDefaultSeed;
  std::string oracle_case;
};

Format format_of(const Options& o, Format fallback) {
  if (o.json) return Format::Json;
  if (o.csv) return Format::Csv;
  if (o.text) return Format::Text;
  return fallback;
}

std::string read_all(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read input file '" + path + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

struct ResolvedTriad {
  TriadInput input;
  std::optional<CatalogEntry> entry;  // set when picked from the catalog
};

ResolvedTriad resolve_triad(const Options& o, const CLI::App& sub) {
  const bool inline_mults = sub.count("--m1") + sub.count("--m2") + sub.count("--n1") + sub.count("--n2") > 0;
  if (!o.input.empty()) {
    if (!o.kind.empty() || inline_mults || !o.family.empty())
      throw UsageError("--input cannot be combined with an inline triad");
    return {parse_triad_document(read_all(o.input)), std::nullopt};
  }
  if (!o.family.empty()) {
    if (!o.kind.empty() || inline_mults) throw UsageError("--family cannot be combined with --kind or multiplicities");
    const CatalogFamily& fam = find_family(o.family);
    ParamValues pv;
    if (o.b >= 0) pv["b"] = o.b;
    if (o.c >= 0) pv["c"] = o.c;
    if (o.q >= 0) pv["q"] = o.q;
    auto entry = instantiate_at(fam, pv);
    if (!entry) {
      std::string need;
      for (const auto& param : fam.params)
        need += (need.empty() ? "" : ", ") + param_name(param.var) + " >= " + std::to_string(param.min);
      throw UsageError("case " + o.family + " is not defined at these parameters (needs " +
                       (need.empty() ? std::string("no parameters") : need) + ")");
    }
    TriadInput in{entry->triad.kind(), entry->triad.mults()};
    return {in, std::move(entry)};
  }
  if (o.kind.empty()) throw UsageError("a triad is required: --kind with --m1 --m2 --n1 --n2, --family, or --input");
  try {
    return {{parse_kind(o.kind), o.mults}, std::nullopt};
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--kind: ") + e.what());
  }
}

SymmetricTriad1D make_triad(const TriadInput& in) {
  try {
    return SymmetricTriad1D(in.kind, in.mults);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + " (the validate subcommand lists the failing condition)");
  }
}

std::string join_surds(const std::vector<QuadraticSurd>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ", ") + x.str();
  return "{" + s + "}";
}

std::string join_doubles(const std::vector<double>& xs) {
  std::string s;
  for (double x : xs) s += (s.empty() ? "" : ", ") + format_double(x);
  return "[" + s + "]";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_validate(const Options& o, const CLI::App& sub, std::string& doc) {
  const TriadInput in = resolve_triad(o, sub).input;
  const ValidationReport rep = validate_triad(in.kind, in.mults);
  if (format_of(o, Format::Json) == Format::Text) {
    std::ostringstream s;
    for (const auto& c : rep.entries)
      s << (c.ok ? "ok    " : "FAIL  ") << c.condition << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
    s << (rep.passed() ? "valid" : "invalid") << " " << kind_name(in.kind) << "\n";
    doc = s.str();
  } else {
    Json j{{"triad", triad_to_json(in.kind, in.mults)}};
    j.update(to_json(rep));
    doc = dump(j);
  }
  return rep.passed() ? kOk : kMismatch;
}

int cmd_solve(const Options& o, const CLI::App& sub, std::string& doc, bool full) {
  const ResolvedTriad rt = resolve_triad(o, sub);
  const SymmetricTriad1D t = make_triad(rt.input);
  const ClassificationResult r = classify(t);
  std::optional<CaseLabel> expected;
  if (rt.entry) expected = expected_label(rt.entry->theorem_case);

  if (format_of(o, Format::Json) == Format::Text) {
    std::ostringstream s;
    s << "triad       " << kind_name(t.kind()) << " (" << t.mults().m1 << ", " << t.mults().m2 << ", "
      << t.mults().n1 << ", " << t.mults().n2 << ")\n";
    s << "variable    " << variable_name(t) << "\n";
    s << "harmonic    " << r.harmonic_t.str() << "\n";
    s << "biharmonic  " << join_surds(r.biharmonic_t) << "\n";
    s << "proper      " << join_surds(r.proper_biharmonic_t) << "\n";
    s << "case        " << case_label_name(r.case_label) << "\n";
    s << "angles_rad  " << join_doubles(r.angles_radians) << "\n";
    if (expected) s << "expected    " << case_label_name(*expected) << " (case " << rt.entry->theorem_case << ")\n";
    doc = s.str();
  } else {
    Json j = full ? classify_json(t, r) : solve_json(t, r);
    if (expected) {
      j["theorem_case"] = rt.entry->theorem_case;
      j["expected"] = std::string(case_label_name(*expected));
    }
    doc = dump(j);
  }
  return expected && *expected != r.case_label ? kMismatch : kOk;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

int cmd_catalog(const Options& o, std::string& doc) {
  const Format fmt = format_of(o, Format::Json);
  if (o.table || fmt == Format::Csv) {
    const auto rows = catalog(o.max_param);
    if (fmt == Format::Csv) {
      std::ostringstream s;
      s << "group_g,group_k1,group_k2,kind,m1,m2,n1,n2,params,theorem_case\n";
      for (const auto& e : rows) {
        std::string params;
        for (const auto& [k, v] : e.params) params += (params.empty() ? "" : ";") + k + "=" + std::to_string(v);
        const auto& m = e.triad.mults();
        s << csv_field(e.group_g) << ',' << csv_field(e.group_k1) << ',' << csv_field(e.group_k2) << ','
          << kind_name(e.triad.kind()) << ',' << m.m1 << ',' << m.m2 << ',' << m.n1 << ',' << m.n2 << ','
          << csv_field(params) << ',' << e.theorem_case << "\n";
      }
      doc = s.str();
    } else {
      doc = dump(catalog_table_json(rows));
    }
    return kOk;
  }

  const CatalogReport rep = classify_catalog(o.max_param);
  if (fmt == Format::Text) {
    std::ostringstream s;
    for (const auto& f : rep.families)
      s << f.theorem_case << "  " << case_label_name(f.expected) << "  instances=" << f.instances
        << " mismatches=" << f.mismatches << "  " << f.certificate.argument << "\n";
    for (const auto& m : rep.mismatches) s << "mismatch: " << m << "\n";
    s << "families " << rep.families.size() << ", group sizes " << rep.group_sizes[0] << "/" << rep.group_sizes[1]
      << "/" << rep.group_sizes[2] << ", instances " << rep.entries.size() << ", " << (rep.ok() ? "ok" : "FAILED")
      << "\n";
    doc = s.str();
  } else {
    doc = dump(to_json(rep));
  }
  return rep.ok() ? kOk : kMismatch;
}

int cmd_oracle(const Options& o, std::string& doc) {
  if (o.b < 0 || o.c < 0) throw UsageError("oracle needs --b and --c");
  const TriadBuild build =
      o.oracle_case == "so" ? build_so_triad(o.b, o.c, o.size_cap) : build_su_triad(o.b, o.c, o.size_cap);
  const OracleReport rep = verify_closed_forms(build, o.samples > 0 ? o.samples : 20, o.tolerance, Exec::Parallel,
                                               o.seed);
  Json j = to_json(rep);
  bool pass = rep.pass;
  if (o.duality && rep.error.empty()) {
    const DecompositionData d = decompose(build);
    Json rows = Json::array();
    bool dual_ok = true;
    for (double s : cell_grid(d.triad(), 5)) {
      const DualityReport dr = verify_duality(d, s);
      dual_ok = dual_ok && dr.b_dev <= o.tolerance && dr.tension_dev <= o.tolerance;
      rows.push_back(Json{{"s", dr.s}, {"b_dev", dr.b_dev}, {"tension_dev", dr.tension_dev}});
    }
    j["duality"] = std::move(rows);
    j["duality_pass"] = dual_ok;
    pass = pass && dual_ok;
  }
  if (format_of(o, Format::Json) == Format::Text) {
    const auto mstr = [](const Multiplicities& m) {
      return "(" + std::to_string(m.m1) + ", " + std::to_string(m.m2) + ", " + std::to_string(m.n1) + ", " +
             std::to_string(m.n2) + ")";
    };
    std::ostringstream s;
    s << o.oracle_case << "(1+" << o.b << "+" << o.c << "), dim " << rep.dim << "\n";
    s << "recovered   " << mstr(rep.recovered) << "\n";
    s << "catalog     " << mstr(rep.catalog) << "\n";
    s << "samples     " << rep.samples.size() << "\n";
    s << "max_rel_dev " << format_double(rep.max_rel_dev) << "\n";
    if (!rep.error.empty()) s << "error       " << rep.error << "\n";
    s << (pass ? "pass" : "FAIL") << "\n";
    doc = s.str();
  } else {
    doc = dump(j);
  }
  return pass ? kOk : kMismatch;
}

int cmd_curve(const Options& o, const CLI::App& sub, std::string& doc) {
  const SymmetricTriad1D t = make_triad(resolve_triad(o, sub).input);
  const auto rows = sample_curve(t, o.samples > 0 ? o.samples : 64, Exec::Parallel);
  if (format_of(o, Format::Csv) == Format::Json) {
    Json pts = Json::array();
    for (const auto& r : rows)
      pts.push_back(Json{{"s_rad", r.s}, {"b_norm_sq", r.b_norm_sq}, {"tension_coeff", r.tension_coeff}});
    const Cell cell = fundamental_cell(t);
    doc = dump(Json{{"triad", triad_to_json(t)},
                    {"cell_rad", Json::array({cell.lo_rad(), cell.hi_rad()})},
                    {"samples", std::move(pts)}});
  } else {
    std::string s = "s_rad,b_norm_sq,tension_coeff\n";
    for (const auto& r : rows)
      s += format_double(r.s) + "," + format_double(r.b_norm_sq) + "," + format_double(r.tension_coeff) + "\n";
    doc = std::move(s);
  }
  return kOk;
}

void add_triad_options(CLI::App* sub, Options& o) {
  sub->add_option("--kind", o.kind, "III-B1, I-BC1, II-BC1, III-BC1, ISO-A1 or ISO-BC1");
  sub->add_option("--m1", o.mults.m1, "m(alpha)")->check(CLI::NonNegativeNumber);
  sub->add_option("--m2", o.mults.m2, "m(2 alpha)")->check(CLI::NonNegativeNumber);
  sub->add_option("--n1", o.mults.n1, "n(alpha)")->check(CLI::NonNegativeNumber);
  sub->add_option("--n2", o.mults.n2, "n(2 alpha)")->check(CLI::NonNegativeNumber);
  sub->add_option("--family", o.family, "catalog case label such as 2-2; use with --b --c --q");
  sub->add_option("--b", o.b)->check(CLI::NonNegativeNumber);
  sub->add_option("--c", o.c)->check(CLI::NonNegativeNumber);
  sub->add_option("--q", o.q)->check(CLI::NonNegativeNumber);
  sub->add_option("--input", o.input, "triad JSON document, - for stdin");
}

void add_output_options(CLI::App* sub, Options& o, bool csv) {
  auto* j = sub->add_flag("--json", o.json, "JSON output");
  auto* t = sub->add_flag("--text", o.text, "plain text output");
  j->excludes(t);
  if (csv) {
    auto* c = sub->add_flag("--csv", o.csv, "CSV output");
    c->excludes(j)->excludes(t);
  }
  sub->add_option("--out", o.out_path, "write the document to PATH");
  sub->add_option("--seed", o.seed, "seed for randomized checks");
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Harmonic and biharmonic regular orbits of rank-one commutative Hermann actions", "biharm_cli"};
  app.require_subcommand(1, 1);

  auto* validate = app.add_subcommand("validate", "check the axioms of a rank-one triad");
  add_triad_options(validate, o);
  add_output_options(validate, o, false);

  auto* solve = app.add_subcommand("solve", "harmonic and biharmonic orbits of a triad");
  add_triad_options(solve, o);
  add_output_options(solve, o, false);

  auto* classify_cmd = app.add_subcommand("classify", "solve and report the case label");
  add_triad_options(classify_cmd, o);
  add_output_options(classify_cmd, o, false);

  auto* catalog_cmd = app.add_subcommand("catalog", "classify every catalog instance");
  catalog_cmd->add_option("--max-param", o.max_param, "largest value of b, c, q")->check(CLI::NonNegativeNumber);
  catalog_cmd->add_flag("--table", o.table, "export the instance table only");
  add_output_options(catalog_cmd, o, true);

  auto* oracle = app.add_subcommand("oracle", "check closed forms against a matrix Lie algebra");
  oracle->add_option("--case", o.oracle_case, "so or su")->required()->check(CLI::IsMember({"so", "su"}));
  oracle->add_option("--b", o.b)->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--c", o.c)->required()->check(CLI::NonNegativeNumber);
  oracle->add_option("--samples", o.samples, "regular angles, default 20")->check(CLI::PositiveNumber);
  oracle->add_option("--tolerance", o.tolerance, "relative deviation bound")->check(CLI::PositiveNumber);
  oracle->add_option("--size-cap", o.size_cap, "largest matrix size")->check(CLI::PositiveNumber);
  oracle->add_flag("--duality", o.duality, "also compare with the dual orbit at 5 angles");
  add_output_options(oracle, o, false);

  auto* curve = app.add_subcommand("curve", "sample |B|^2 and the tension across the cell");
  add_triad_options(curve, o);
  curve->add_option("--samples", o.samples, "grid points, default 64")->check(CLI::PositiveNumber);
  add_output_options(curve, o, true);

  std::vector<std::string> argv_store{"biharm_cli"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::string doc;
  int status = kOk;
  try {
    if (*validate) status = cmd_validate(o, *validate, doc);
    else if (*solve) status = cmd_solve(o, *solve, doc, false);
    else if (*classify_cmd) status = cmd_solve(o, *classify_cmd, doc, true);
    else if (*catalog_cmd) status = cmd_catalog(o, doc);
    else if (*oracle) status = cmd_oracle(o, doc);
    else if (*curve) status = cmd_curve(o, *curve, doc);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (o.out_path.empty()) {
    out << doc;
  } else {
    std::ofstream file(o.out_path);
    if (!(file << doc)) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kUsage;
    }
  }
  return status;
}

}  // namespace biharm::cli
