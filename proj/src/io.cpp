#include "toric/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    const std::string s = j.get<std::string>();
    if (s.empty() || x.set_str(s, 10) != 0) throw ParseError(where + ": not an integer string: \"" + s + "\"");
    return x;
  }
  throw ParseError(where + ": expected an integer");
}

std::string join_longs(const std::vector<long>& xs, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
  return s;
}

std::string join_ints(const std::vector<int>& xs, const char* sep) {
  return join_longs(std::vector<long>(xs.begin(), xs.end()), sep);
}

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !is_scalar_array(value))) {
        out << pad << key << ":\n";
        render(value, out, indent + 2);
      } else if (value.is_array()) {
        out << pad << key << ": [";
        for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar_text(value[i]);
        out << "]\n";
      } else {
        out << pad << key << ": " << scalar_text(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const Json& value = j[i];
      if (value.is_object()) {
        out << pad << "- [" << i << "]\n";
        render(value, out, indent + 2);
      } else if (value.is_array() && is_scalar_array(value)) {
        out << pad << "- [";
        for (std::size_t k = 0; k < value.size(); ++k) out << (k ? ", " : "") << scalar_text(value[k]);
        out << "]\n";
      } else if (value.is_array()) {
        out << pad << "- [" << i << "]\n";
        render(value, out, indent + 2);
      } else {
        out << pad << "- " << scalar_text(value) << "\n";
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

Fan fan_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("fan: expected a JSON object");
  static const std::set<std::string> allowed = {"dim", "rays", "max_cones"};
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw ParseError("fan: unknown key \"" + key + "\"");
  for (const auto& key : allowed)
    if (!j.contains(key)) throw ParseError("fan: missing key \"" + key + "\"");

  Fan f;
  if (!j["dim"].is_number_integer()) throw ParseError("fan: \"dim\" must be an integer");
  const long dim = j["dim"].get<long>();
  if (dim < 0 || dim > 64) throw ParseError("fan: \"dim\" out of range");
  f.dim = static_cast<int>(dim);

  if (!j["rays"].is_array()) throw ParseError("fan: \"rays\" must be an array");
  for (std::size_t i = 0; i < j["rays"].size(); ++i) {
    const Json& r = j["rays"][i];
    const std::string where = "fan: rays[" + std::to_string(i) + "]";
    if (!r.is_array()) throw ParseError(where + ": expected an array");
    std::vector<Integer> coords;
    for (std::size_t k = 0; k < r.size(); ++k) coords.push_back(integer_from_json(r[k], where));
    f.rays.emplace_back(std::move(coords));
  }

  if (!j["max_cones"].is_array()) throw ParseError("fan: \"max_cones\" must be an array");
  for (std::size_t i = 0; i < j["max_cones"].size(); ++i) {
    const Json& c = j["max_cones"][i];
    const std::string where = "fan: max_cones[" + std::to_string(i) + "]";
    if (!c.is_array()) throw ParseError(where + ": expected an array");
    Cone cone;
    for (const auto& x : c) {
      if (!x.is_number_integer()) throw ParseError(where + ": indices must be integers");
      const long v = x.get<long>();
      if (v < -1000000 || v > 1000000) throw ParseError(where + ": index out of range");
      cone.push_back(static_cast<int>(v));
    }
    f.max_cones.push_back(std::move(cone));
  }
  return f;
}

Json fan_to_json(const Fan& f) {
  Json j;
  j["dim"] = f.dim;
  j["rays"] = Json::array();
  for (const auto& r : f.rays) {
    Json row = Json::array();
    for (const auto& x : r.coords()) row.push_back(integer_json(x));
    j["rays"].push_back(row);
  }
  j["max_cones"] = Json::array();
  for (const auto& c : f.max_cones) j["max_cones"].push_back(c);
  return j;
}

Fan parse_fan(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("fan: invalid JSON: ") + e.what());
  }
  return fan_from_json(j);
}

Fan read_fan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open fan file '" + path + "'");
  return parse_fan(in);
}

Json validation_json(const ValidationReport& r) {
  Json j;
  j["ok"] = r.ok();
  j["violations"] = Json::array();
  for (const auto& v : r.violations)
    j["violations"].push_back({{"kind", to_string(v.kind)}, {"index", v.index}, {"message", v.message}});
  return j;
}

Json smoothness_json(const SmoothnessResult& r) {
  Json j;
  j["smooth"] = r.smooth;
  if (!r.smooth) {
    j["cone_index"] = *r.cone_index;
    j["cone"] = r.cone;
    j["det"] = integer_json(r.det);
  }
  return j;
}

Json completeness_json(const CompletenessResult& r) {
  Json j;
  j["complete"] = r.complete;
  if (!r.complete) {
    j["message"] = r.message;
    if (!r.wall.empty()) j["wall"] = r.wall;
    if (r.cone_index) j["cone_index"] = *r.cone_index;
  }
  return j;
}

Json covering_json(const CoveringCheck& c) {
  Json j;
  j["ok"] = c.ok;
  j["samples"] = c.samples;
  j["seed"] = c.seed;
  if (c.uncovered) {
    Json p = Json::array();
    for (const auto& x : c.uncovered->coords()) p.push_back(integer_json(x));
    j["uncovered"] = p;
  }
  return j;
}

Json presentation_json(const GradedPresentation& p) {
  Json j;
  j["form"] = p.form == PresentationForm::kFull ? "full" : "reduced";
  j["variables"] = p.variables;
  j["generators"] = p.generator_strings();
  if (p.form == PresentationForm::kReduced) {
    Json subst = Json::array();
    for (std::size_t i = 0; i < p.substitution.size(); ++i)
      subst.push_back("D" + std::to_string(i + 1) + " = " + p.substitution[i].to_string(p.variables));
    j["substitution"] = subst;
  }
  return j;
}

Json rational_matrix_json(const RationalMatrix& m) {
  Json j = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_to_string(x));
    j.push_back(r);
  }
  return j;
}

Json cohomology_json(const CohomologyReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["num_rays"] = r.num_rays;
  j["num_max_cones"] = r.num_max_cones;
  j["b2"] = r.b2;
  j["betti"] = r.betti;
  j["poincare"] = r.poincare;
  j["euler"] = r.euler;
  j["top_degree"] = 2 * r.socle_degree;
  j["full_presentation"] = presentation_json(r.full);
  j["reduced_presentation"] = presentation_json(r.reduced);
  Json gb = Json::array();
  for (const auto& g : r.reduced_basis.generators()) gb.push_back(g.to_string(r.reduced.variables));
  j["groebner_basis"] = gb;
  Json pairings = Json::array();
  for (int k = 0; k <= r.dim; ++k) {
    const RationalMatrix m = cup_pairing(r, k);
    Json p;
    p["degrees"] = {2 * k, 2 * (r.dim - k)};
    p["matrix"] = rational_matrix_json(m);
    if (m.size() == m.front().size()) p["determinant"] = rational_to_string(determinant(m));
    pairings.push_back(p);
  }
  j["cup_pairings"] = pairings;
  if (r.dim == 2 && r.b2 <= 2) j["intersection_discriminant"] = integer_json(intersection_discriminant(r));
  return j;
}

Json certificate_json(const EllipticityCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["dim"] = c.dim;
  j["n"] = c.n;
  j["prefiltered"] = c.prefiltered;
  if (!c.prefiltered) {
    Json mu = Json::array();
    for (std::size_t k = 0; k < c.mu.size(); ++k) mu.push_back({{"degree", 2 * (k + 1)}, {"count", c.mu[k]}});
    j["mu"] = mu;
    j["mu_total"] = c.mu_total;
    j["variables"] = c.variables;
    Json gens = Json::array();
    for (const auto& g : c.generators) gens.push_back(g.to_string(c.variables));
    j["generators"] = gens;
  }
  if (c.verdict == Verdict::kElliptic) {
    j["betas"] = c.betas;
    j["generator_degrees"] = c.generator_degrees;
    j["alphas"] = c.alphas;
    j["homotopy_ranks"] = {{"even", *c.pi_even}, {"odd", *c.pi_odd}};
  } else if (c.excess_degree) {
    j["excess_degree"] = 2 * *c.excess_degree;
  }
  if (c.report) j["poincare"] = c.report->poincare;
  return j;
}

Json classification_json(const ClassificationResult& r) {
  Json j;
  j["family"] = to_string(r.tag);
  j["label"] = r.label();
  j["params"] = r.params;
  j["verdict"] = to_string(r.verdict);
  if (r.witness) {
    Json w;
    Json rows = Json::array();
    for (const auto& row : r.witness->transform.rows()) {
      Json rr = Json::array();
      for (const auto& x : row) rr.push_back(integer_json(x));
      rows.push_back(rr);
    }
    w["transform"] = rows;
    w["relabel"] = r.witness->relabel;
    w["catalog"] = {{"name", r.witness->catalog_name}, {"params", r.witness->catalog_params}};
    j["witness"] = w;
  }
  return j;
}

Json sweep_row_json(const SweepRow& r) {
  Json j;
  j["family"] = r.family;
  j["params"] = r.params;
  if (!r.error.empty()) {
    j["error"] = r.error;
  } else {
    j["verdict"] = to_string(r.verdict);
    j["poincare"] = r.poincare;
    j["mu"] = r.mu;
    j["mu_total"] = r.mu_total;
    j["betas"] = r.betas;
    j["classification"] = r.classification;
    if (r.display_match) j["display_match"] = *r.display_match;
  }
  j["failures"] = r.failures;
  return j;
}

Json sweep_json(const SweepSummary& s) {
  Json j;
  j["family"] = s.family;
  j["instances"] = s.rows.size();
  j["elliptic"] = s.elliptic;
  j["hyperbolic"] = s.hyperbolic;
  j["failures"] = s.failures;
  Json rows = Json::array();
  for (const auto& r : s.rows) rows.push_back(sweep_row_json(r));
  j["rows"] = rows;
  return j;
}

Json catalog_entry_json(const CatalogEntry& e) {
  Json j;
  j["family"] = e.family;
  j["params"] = e.params;
  j["fan"] = fan_to_json(e.fan);
  j["expected_verdict"] = to_string(e.expected_verdict);
  if (e.expected_poincare) j["expected_poincare"] = *e.expected_poincare;
  if (e.display) {
    j["expected_algebra"] = {{"variables", e.display->variables},
                             {"generators", e.display->generator_strings()},
                             {"identification", e.display->identification_strings()}};
  }
  return j;
}

void write_sweep_tsv(const SweepSummary& s, std::ostream& out) {
  out << "family\tparams\tverdict\tpoincare\tmu\tmu_total\tbetas\tclassification\tdisplay_match\tfailures\n";
  for (const auto& r : s.rows) {
    out << r.family << '\t' << join_longs(r.params, ",") << '\t';
    if (!r.error.empty()) {
      out << "error\t\t\t\t\t\t\t";
    } else {
      out << to_string(r.verdict) << '\t' << join_longs(r.poincare, ",") << '\t' << join_ints(r.mu, ",") << '\t'
          << r.mu_total << '\t' << join_ints(r.betas, ",") << '\t' << r.classification << '\t'
          << (r.display_match ? (*r.display_match ? "true" : "false") : "") << '\t';
    }
    for (std::size_t i = 0; i < r.failures.size(); ++i) out << (i ? "; " : "") << r.failures[i];
    out << '\n';
  }
  out << "# instances " << s.rows.size() << "\telliptic " << s.elliptic << "\thyperbolic " << s.hyperbolic
      << "\tfailures " << s.failures << '\n';
}

void render_text(const Json& j, std::ostream& out) { render(j, out, 0); }

}  // namespace toric
