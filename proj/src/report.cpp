#include "quadwalk/report.hpp"

#include "quadwalk/errors.hpp"

#include <iomanip>
#include <map>
#include <sstream>

namespace quadwalk {

namespace {

Json constant_json(const Constant& c) {
  Json j;
  j["exact"] = c.exact ? Json(c.exact->to_string()) : Json(nullptr);
  j["value"] = c.value;
  return j;
}

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json algebraic_json(const AlgebraicNumber& a) {
  Json j;
  j["exact"] = a.to_string();
  j["approx"] = complex_json(a.approx);
  j["error_bound"] = a.error_bound;
  return j;
}

template <class T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("report is missing \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad value for \"") + key + "\": " + e.what());
  }
}

std::string fixed(double v, int digits) {
  std::ostringstream out;
  out << std::setprecision(digits) << v;
  return out.str();
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

Json to_json(const AsymptoticTerm& t) {
  Json j;
  j["row"] = t.row;
  j["source"] = to_string(t.source);
  j["rho"] = {{"exact", t.rho.to_string()}, {"value", t.rho_value()}};
  j["alpha"] = to_string(t.alpha);
  j["period"] = t.period;
  Json kappa = Json::array();
  for (const auto& c : t.kappa) kappa.push_back(constant_json(c));
  j["kappa"] = kappa;
  return j;
}

Json to_json(const GrowthEstimate& e) {
  Json j;
  j["rho"] = e.rho;
  j["alpha"] = e.alpha;
  j["kappa"] = e.kappa;
  j["zero_class"] = e.zero_class;
  j["n_range"] = {e.n_min, e.n_max};
  j["order"] = e.order;
  j["power"] = e.power;
  j["rho_gap"] = e.rho_gap;
  j["alpha_gap"] = e.alpha_gap;
  j["kappa_gap"] = e.kappa_gap;
  j["converged"] = e.converged;
  j["diagnostics"] = e.diagnostics;
  return j;
}

Json to_json(const Tolerances& t) {
  Json j;
  j["rho_ratio"] = t.rho_ratio;
  j["alpha_abs"] = t.alpha_abs;
  j["kappa_rel"] = t.kappa_rel;
  j["loose"] = t.loose;
  return j;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["model"] = r.model_id;
  j["steps"] = r.steps.to_string();
  j["flavor"] = to_string(r.flavor);
  j["predicted"] = to_json(r.predicted);
  j["estimated"] = to_json(r.estimated);
  j["tolerances"] = to_json(r.tolerances);
  j["verdict"] = to_string(r.verdict);
  j["failures"] = r.failures;
  j["n_used"] = r.n_used;
  j["seconds"] = r.seconds;
  return j;
}

Json to_json(const CriticalPoint& p) {
  Json j;
  j["name"] = p.name;
  j["x"] = algebraic_json(p.coords[0]);
  j["y"] = algebraic_json(p.coords[1]);
  j["t"] = algebraic_json(p.coords[2]);
  j["stratum"] = p.stratum;
  j["minimal"] = p.minimal;
  j["contributing"] = p.contributing;
  j["rank"] = p.rank;
  j["cone_interior"] = p.cone_interior;
  return j;
}

Json to_json(const ComputedAsymptotics& c) {
  Json j;
  j["term"] = to_json(c.term);
  Json pts = Json::array();
  for (const auto& p : c.points) {
    Json q;
    q["point"] = p.point.name;
    q["kappa"] = complex_json(p.kappa);
    q["exact"] = p.exact ? Json(p.exact->to_string()) : Json(nullptr);
    q["phase"] = p.phase.to_string();
    pts.push_back(q);
  }
  j["points"] = pts;
  j["skipped"] = c.skipped;
  return j;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.model_id = get<int>(j, "model");
  r.steps = parse_step_set(get<std::string>(j, "steps")).steps;
  r.flavor = parse_flavor(get<std::string>(j, "flavor"));
  r.predicted = predicted_asymptotics(r.steps, r.flavor);
  if (!j.contains("predicted") || get<std::string>(j.at("predicted"), "row") != r.predicted.row) {
    throw ParseError("predicted row does not match the model and flavor");
  }
  const Json& e = j.at("estimated");
  GrowthEstimate& g = r.estimated;
  g.rho = get<double>(e, "rho");
  g.alpha = get<double>(e, "alpha");
  g.kappa = get<std::vector<double>>(e, "kappa");
  g.zero_class = get<std::vector<bool>>(e, "zero_class");
  auto range = get<std::vector<int>>(e, "n_range");
  if (range.size() != 2) throw ParseError("n_range must have two entries");
  g.n_min = range[0];
  g.n_max = range[1];
  g.order = get<int>(e, "order");
  g.power = get<double>(e, "power");
  g.rho_gap = get<double>(e, "rho_gap");
  g.alpha_gap = get<double>(e, "alpha_gap");
  g.kappa_gap = get<std::vector<double>>(e, "kappa_gap");
  g.converged = get<bool>(e, "converged");
  g.diagnostics = get<std::string>(e, "diagnostics");
  const Json& t = j.at("tolerances");
  r.tolerances.rho_ratio = get<double>(t, "rho_ratio");
  r.tolerances.alpha_abs = get<double>(t, "alpha_abs");
  r.tolerances.kappa_rel = get<double>(t, "kappa_rel");
  r.tolerances.loose = get<bool>(t, "loose");
  std::string verdict = get<std::string>(j, "verdict");
  if (verdict == "pass") r.verdict = Verdict::Pass;
  else if (verdict == "fail") r.verdict = Verdict::Fail;
  else if (verdict == "inconclusive") r.verdict = Verdict::Inconclusive;
  else throw ParseError("unknown verdict " + verdict);
  r.failures = get<std::vector<std::string>>(j, "failures");
  r.n_used = get<int>(j, "n_used");
  r.seconds = get<double>(j, "seconds");
  return r;
}

std::string dump(const Json& j) { return j.dump(2); }

std::string reproduce_tables(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  auto mark = [](Verdict v) { return v == Verdict::Pass ? "PASS" : (v == Verdict::Fail ? "FAIL" : "????"); };
  auto line = [&](const VerificationReport& r) {
    const auto& p = r.predicted;
    std::string kappa_hat;
    for (std::size_t k = 0; k < r.estimated.kappa.size(); ++k) {
      kappa_hat += (k ? ", " : "") + fixed(r.estimated.kappa[k], 7);
    }
    out << "  " << pad(std::to_string(r.model_id), 3) << pad(r.steps.to_string(), 26) << pad(to_string(r.flavor), 9)
        << p.to_string() << "\n"
        << "     estimate: rho " << fixed(r.estimated.rho, 10) << ", alpha " << fixed(r.estimated.alpha, 6) << ", kappa ["
        << kappa_hat << "], n <= " << r.n_used << (r.tolerances.loose ? " (loose)" : "") << "  " << mark(r.verdict)
        << "\n";
  };
  auto section = [&](const std::string& title, auto keep) {
    std::vector<const VerificationReport*> rows;
    for (const auto& r : reports) {
      if (keep(r)) rows.push_back(&r);
    }
    if (rows.empty()) return;
    out << title << "\n";
    for (const auto* r : rows) line(*r);
    out << "\n";
  };
  section("Walks ending anywhere", [](const VerificationReport& r) { return r.flavor == Flavor::Anywhere; });
  section("Boundary returns: highly symmetric, positive drift and sporadic models", [](const VerificationReport& r) {
    return r.flavor != Flavor::Anywhere && !(r.model_id >= 17 && r.model_id <= 22);
  });
  section("Boundary returns: negative drift models", [](const VerificationReport& r) {
    return r.flavor != Flavor::Anywhere && r.model_id >= 17 && r.model_id <= 22;
  });
  std::map<Verdict, int> counts;
  for (const auto& r : reports) ++counts[r.verdict];
  out << "summary: " << counts[Verdict::Pass] << " pass, " << counts[Verdict::Fail] << " fail, "
      << counts[Verdict::Inconclusive] << " inconclusive of " << reports.size() << "\n";
  return out.str();
}

}  // namespace quadwalk
