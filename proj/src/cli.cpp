#include "toric/cli.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "toric/catalog.hpp"
#include "toric/classify.hpp"
#include "toric/errors.hpp"
#include "toric/io.hpp"

namespace toric {

namespace {

long parse_long(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw ParseError(what + ": not an integer: '" + s + "'");
  }
  if (used != s.size()) throw ParseError(what + ": not an integer: '" + s + "'");
  return v;
}

std::vector<long> parse_param_list(const std::string& s) {
  std::vector<long> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_long(item, "catalog parameter"));
  return out;
}

struct CatalogSpec {
  std::string name;
  std::vector<long> params;
};

std::optional<CatalogSpec> catalog_spec(const std::string& spec) {
  const std::string prefix = "catalog:";
  if (spec.rfind(prefix, 0) != 0) return std::nullopt;
  const std::string rest = spec.substr(prefix.size());
  const auto colon = rest.find(':');
  CatalogSpec c;
  c.name = rest.substr(0, colon);
  if (colon != std::string::npos) c.params = parse_param_list(rest.substr(colon + 1));
  return c;
}

CatalogEntry catalog_or_parse_error(const std::string& name, const std::vector<long>& params) {
  try {
    return catalog(name, params);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::optional<int> degree_cap;
  bool prefilter = false;
  bool random_check = false;
  int samples = 1000;
};

Json header(const std::string& command, const Options& o) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["seed"] = o.seed;
  return j;
}

void emit(const Json& doc, const Options& o, std::ostream& out) {
  if (o.json)
    out << doc.dump(2) << "\n";
  else
    render_text(doc, out);
}

int cmd_check(const std::string& spec, const Options& o, std::ostream& out, std::ostream& err) {
  const Fan f = resolve_fan(spec);
  Json doc = header("check", o);
  doc["input"] = spec;
  const ValidationReport v = validate(f);
  doc["validation"] = validation_json(v);
  if (!v.ok()) {
    emit(doc, o, out);
    err << "invalid fan: " << v.summary() << "\n";
    return kExitInvalidFan;
  }
  const SmoothnessResult s = is_smooth(f);
  const CompletenessResult c = is_complete(f);
  doc["smoothness"] = smoothness_json(s);
  doc["completeness"] = completeness_json(c);
  if (o.random_check) doc["random_check"] = covering_json(random_covering_check(f, o.samples, o.seed));
  emit(doc, o, out);
  if (!s.smooth) {
    err << "not smooth: cone " << *s.cone_index << " has det " << s.det.get_str() << "\n";
    return kExitGeometry;
  }
  if (!c.complete) {
    err << "not complete: " << c.message << "\n";
    return kExitGeometry;
  }
  return kExitOk;
}

int cmd_cohomology(const std::string& spec, const Options& o, std::ostream& out) {
  const Fan f = resolve_fan(spec);
  Json doc = header("cohomology", o);
  doc["input"] = spec;
  doc["cohomology"] = cohomology_json(cohomology_report(f));
  emit(doc, o, out);
  return kExitOk;
}

int cmd_ellipticity(const std::string& spec, const Options& o, std::ostream& out) {
  const Fan f = resolve_fan(spec);
  Json doc = header("ellipticity", o);
  doc["input"] = spec;
  CertifyOptions co;
  co.prefilter = o.prefilter;
  co.degree_cap = o.degree_cap;
  doc["certificate"] = certificate_json(certify(f, co));
  emit(doc, o, out);
  return kExitOk;
}

int cmd_classify(const std::string& spec, const Options& o, std::ostream& out) {
  const Fan f = resolve_fan(spec);
  Json doc = header("classify", o);
  doc["input"] = spec;
  doc["classification"] = classification_json(classify(f));
  emit(doc, o, out);
  return kExitOk;
}

int cmd_catalog_list(const Options& o, std::ostream& out) {
  Json doc = header("catalog list", o);
  Json families = Json::array();
  for (const auto& fam : catalog_families())
    families.push_back({{"name", fam.name}, {"params", fam.param_names}, {"description", fam.description}});
  doc["families"] = families;
  emit(doc, o, out);
  return kExitOk;
}

int cmd_catalog_emit(const std::string& name, const std::vector<std::string>& raw, const Options& o, std::ostream& out) {
  std::vector<long> params;
  for (const auto& r : raw)
    for (long p : parse_param_list(r)) params.push_back(p);
  const CatalogEntry e = catalog_or_parse_error(name, params);
  // The emitted document is a fan file, so it is JSON in both modes.
  (void)o;
  out << fan_to_json(e.fan).dump(2) << "\n";
  return kExitOk;
}

int cmd_sweep(const std::string& family, const std::vector<std::string>& ranges_text, const Options& o,
              std::ostream& out) {
  std::vector<ParamRange> ranges;
  for (const auto& r : ranges_text) ranges.push_back(parse_range(r));
  SweepSummary s;
  try {
    s = sweep(family, ranges, o.jobs);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (o.json) {
    Json doc = header("sweep", o);
    doc["sweep"] = sweep_json(s);
    out << doc.dump(2) << "\n";
  } else {
    write_sweep_tsv(s, out);
  }
  return s.failures ? kExitConsistency : kExitOk;
}

int cmd_enumerate(int dim, int max_rays, long bound, const Options& o, std::ostream& out) {
  if (dim != 2) throw ParseError("enumerate: only --dim 2 is supported");
  if (max_rays < 3 || bound < 1) throw ParseError("enumerate: need --max-rays >= 3 and --coord-bound >= 1");
  const auto fans = enumerate_dim2(max_rays, bound, o.jobs);
  Json doc = header("enumerate", o);
  doc["dim"] = dim;
  doc["max_rays"] = max_rays;
  doc["coord_bound"] = bound;
  doc["count"] = fans.size();
  Json list = Json::array();
  for (const auto& f : fans) {
    const ClassificationResult c = classify(f);
    list.push_back({{"fan", fan_to_json(f)}, {"classification", c.label()}, {"verdict", to_string(c.verdict)}});
  }
  doc["fans"] = list;
  emit(doc, o, out);
  return kExitOk;
}

}  // namespace

ParamRange parse_range(const std::string& text) {
  // A leading '-' belongs to the first number, so split at the first ':' after it.
  const auto colon = text.find(':', 1);
  ParamRange r;
  if (colon == std::string::npos) {
    r.lo = r.hi = parse_long(text, "range");
  } else {
    r.lo = parse_long(text.substr(0, colon), "range");
    r.hi = parse_long(text.substr(colon + 1), "range");
  }
  if (r.lo > r.hi) throw ParseError("range '" + text + "' is empty");
  return r;
}

Fan resolve_fan(const std::string& spec) {
  if (const auto c = catalog_spec(spec)) return catalog_or_parse_error(c->name, c->params).fan;
  return read_fan_file(spec);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational ellipticity of smooth complete toric varieties from fan data", "toric"};
  app.set_version_flag("--version", kSchemaVersion);
  app.require_subcommand(1, 1);
  app.fallthrough();

  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--seed", o.seed, "Seed for randomized cross-checks (recorded in the output)");
  app.add_option("--jobs", o.jobs, "Worker threads for sweeps and enumeration")->check(CLI::PositiveNumber);

  std::string fan_spec;
  const char* fan_help = "Fan JSON file, or catalog:NAME[:p1,p2,...]";

  auto* check = app.add_subcommand("check", "Validate a fan and test smoothness and completeness");
  check->add_option("fan", fan_spec, fan_help)->required();
  check->add_flag("--random-check", o.random_check, "Also run the randomized covering check");
  check->add_option("--samples", o.samples, "Samples for --random-check")->check(CLI::PositiveNumber);

  auto* cohom = app.add_subcommand("cohomology", "Rational cohomology ring and Betti numbers");
  cohom->add_option("fan", fan_spec, fan_help)->required();

  auto* ell = app.add_subcommand("ellipticity", "Elliptic/hyperbolic certificate");
  ell->add_option("fan", fan_spec, fan_help)->required();
  ell->add_option("--degree-cap", o.degree_cap, "Fail unless the quotient vanishes by this algebraic degree");
  ell->add_flag("--prefilter", o.prefilter, "Report hyperbolic without Groebner work when b2 > N (no mu table)");

  auto* cls = app.add_subcommand("classify", "Match against the catalog families");
  cls->add_option("fan", fan_spec, fan_help)->required();

  auto* cat = app.add_subcommand("catalog", "List catalog families or emit a catalog fan");
  cat->require_subcommand(1, 1);
  auto* cat_list = cat->add_subcommand("list", "List the families");
  auto* cat_emit = cat->add_subcommand("emit", "Write a catalog fan as a fan file");
  std::string emit_name;
  std::vector<std::string> emit_params;
  cat_emit->add_option("name", emit_name, "Family name")->required();
  cat_emit->add_option("params", emit_params, "Integer parameters (separate words or comma lists)");

  auto* sw = app.add_subcommand("sweep", "Run the pipeline over a family's parameter box");
  std::string sweep_family;
  std::vector<std::string> sweep_ranges;
  sw->add_option("family", sweep_family, "Family name, case2, or case2:K")->required();
  sw->add_option("--range", sweep_ranges, "LO:HI, once for all parameters or once per parameter")->take_all();

  auto* en = app.add_subcommand("enumerate", "Enumerate smooth complete surfaces up to GL(2,Z)");
  int en_dim = 2, en_rays = 4;
  long en_bound = 5;
  en->add_option("--dim", en_dim, "Dimension (2)")->required();
  en->add_option("--max-rays", en_rays, "Maximum number of rays")->required();
  en->add_option("--coord-bound", en_bound, "Bound on canonical coordinates")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kSchemaVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (check->parsed()) return cmd_check(fan_spec, o, out, err);
    if (cohom->parsed()) return cmd_cohomology(fan_spec, o, out);
    if (ell->parsed()) return cmd_ellipticity(fan_spec, o, out);
    if (cls->parsed()) return cmd_classify(fan_spec, o, out);
    if (cat_list->parsed()) return cmd_catalog_list(o, out);
    if (cat_emit->parsed()) return cmd_catalog_emit(emit_name, emit_params, o, out);
    if (sw->parsed()) return cmd_sweep(sweep_family, sweep_ranges, o, out);
    if (en->parsed()) return cmd_enumerate(en_dim, en_rays, en_bound, o, out);
  } catch (const InvalidFanError& e) {
    err << e.what() << "\n";
    return kExitInvalidFan;
  } catch (const GeometryError& e) {
    err << e.what() << "\n";
    return kExitGeometry;
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitConsistency;
  }
  err << "no command given\n";
  return kExitParse;
}

}  // namespace toric
