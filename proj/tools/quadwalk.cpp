#include "CLI11.hpp"

#include "quadwalk/asymptotics.hpp"
#include "quadwalk/catalog.hpp"
#include "quadwalk/enumeration.hpp"
#include "quadwalk/errors.hpp"
#include "quadwalk/geometry.hpp"
#include "quadwalk/group.hpp"
#include "quadwalk/report.hpp"
#include "quadwalk/series.hpp"
#include "quadwalk/verifier.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

using namespace quadwalk;

namespace {

constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct Options {
  std::string steps;
  int id = 0;
  int n = -1;
  std::string flavor;
  std::string format = "text";
  double tolerance = 0;
  std::string out;
  std::string catalog;

  // subcommand specific
  bool scaled = false;
  std::string rho;
  int bound = 200;
  int degree_cap = 8;
  bool contributing = false;
  bool all = false;
  std::string ids;
  int jobs = 0;
};

struct UsageError : Error {
  using Error::Error;
};

Catalog load_catalog(const Options& o) {
  std::string path = o.catalog;
  if (path.empty()) {
    if (const char* env = std::getenv("QUADWALK_CATALOG")) path = env;
  }
  return path.empty() ? Catalog::builtin() : Catalog::load_file(path);
}

StepSet resolve_steps(const Options& o, const Catalog& catalog) {
  if (o.steps.empty() == (o.id == 0)) throw UsageError("select a model with exactly one of --steps or --id");
  if (o.id != 0) {
    const CatalogEntry* e = catalog.find_id(o.id);
    if (e == nullptr) throw UsageError("no catalog model with id " + std::to_string(o.id));
    return e->steps;
  }
  ParsedStepSet parsed = parse_step_set(o.steps);
  for (const auto& note : parsed.notices) std::cerr << "note: " << note << "\n";
  return parsed.steps;
}

std::vector<Flavor> flavors(const std::string& text, Flavor fallback) {
  if (text.empty()) return {fallback};
  if (text == "all") return {Flavor::Anywhere, Flavor::XAxis, Flavor::YAxis, Flavor::Origin};
  return {parse_flavor(text)};
}

std::pair<int, int> flavor_exponents(Flavor f) {
  switch (f) {
    case Flavor::Anywhere: return {1, 1};
    case Flavor::XAxis: return {1, 0};
    case Flavor::YAxis: return {0, 1};
    case Flavor::Origin: return {0, 0};
  }
  return {1, 1};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw UsageError("cannot write " + o.out);
  file << text;
  if (!text.empty() && text.back() != '\n') file << "\n";
}

bool json_format(const Options& o) {
  if (o.format != "text" && o.format != "json" && o.format != "csv") throw UsageError("unknown format " + o.format);
  return o.format == "json";
}

std::string drift_text(const StepSet& s) {
  auto [dx, dy] = drift(s);
  return "(" + std::to_string(dx) + "," + std::to_string(dy) + ")";
}

int cmd_classify(const Options& o) {
  Catalog catalog = load_catalog(o);
  StepSet s = resolve_steps(o, catalog);
  ModelClass cls = classify(s);
  auto [dx, dy] = drift(s);
  if (json_format(o)) {
    Json j;
    j["steps"] = s.to_string();
    j["class"] = to_string(cls.kind);
    j["model"] = cls.model_id;
    j["axis_swapped"] = cls.axis_swapped;
    j["drift"] = {dx, dy};
    emit(o, dump(j));
    return 0;
  }
  std::string text = to_string(cls.kind);
  if (cls.model_id != 0) text += ", model " + std::to_string(cls.model_id);
  text += ", drift " + drift_text(s);
  if (cls.axis_swapped) text += ", axes swapped";
  emit(o, text);
  return 0;
}

int cmd_count(const Options& o) {
  Catalog catalog = load_catalog(o);
  StepSet s = resolve_steps(o, catalog);
  const int n = o.n < 0 ? 10 : o.n;
  auto fl = flavors(o.flavor, Flavor::Anywhere);
  if (o.scaled) {
    double rho = 0;
    std::string label;
    if (!o.rho.empty()) {
      rho = std::stod(o.rho);
      label = o.rho;
    } else {
      AsymptoticTerm t = predicted_asymptotics(s, fl.front());
      rho = t.rho_value();
      label = t.rho.to_string();
    }
    CountOptions opt;
    opt.keep_grids = false;
    ScaledCounts c = count_scaled(s, n, rho, opt);
    c.scale_label = label;
    if (o.format == "csv") {
      emit(o, sequences_csv(c));
    } else if (json_format(o)) {
      Json j;
      j["steps"] = s.to_string();
      j["n"] = n;
      j["scale"] = {{"exact", label}, {"value", rho}};
      for (Flavor f : fl) j["flavors"][to_string(f)] = select(c.sequences, f);
      emit(o, dump(j));
    } else {
      std::ostringstream out;
      out.precision(17);
      for (Flavor f : fl) {
        if (fl.size() > 1) out << to_string(f) << ": ";
        const auto& seq = select(c.sequences, f);
        for (std::size_t k = 0; k < seq.size(); ++k) out << (k ? ", " : "") << seq[k];
        out << "\n";
      }
      emit(o, out.str());
    }
    return 0;
  }
  CountOptions opt;
  opt.keep_grids = false;
  ExactCounts c = count_exact(s, n, opt);
  if (o.format == "csv") {
    emit(o, sequences_csv(c.sequences));
  } else if (json_format(o)) {
    Json j;
    j["steps"] = s.to_string();
    j["n"] = n;
    for (Flavor f : fl) {
      Json seq = Json::array();
      for (const auto& v : select(c.sequences, f)) seq.push_back(to_string(v));
      j["flavors"][to_string(f)] = seq;
    }
    emit(o, dump(j));
  } else {
    std::ostringstream out;
    for (Flavor f : fl) {
      if (fl.size() > 1) out << to_string(f) << ": ";
      const auto& seq = select(c.sequences, f);
      for (std::size_t k = 0; k < seq.size(); ++k) out << (k ? ", " : "") << to_string(seq[k]);
      out << "\n";
    }
    emit(o, out.str());
  }
  return 0;
}

int cmd_series(const Options& o) {
  Catalog catalog = load_catalog(o);
  StepSet s = resolve_steps(o, catalog);
  const int n = o.n < 0 ? 10 : o.n;
  auto fl = flavors(o.flavor, Flavor::Anywhere);
  Json j;
  std::ostringstream out;
  for (Flavor f : fl) {
    auto [a, b] = flavor_exponents(f);
    RationalFunction3 rep = diagonal_representation(s, a, b);
    std::vector<Rational> diag = diagonal_sequence(rep, n);
    Json seq = Json::array();
    out << to_string(f) << ": F = " << rep.to_string() << "\n  diagonal: ";
    for (std::size_t k = 0; k < diag.size(); ++k) {
      out << (k ? ", " : "") << to_string(diag[k]);
      seq.push_back(to_string(diag[k]));
    }
    out << "\n";
    j[to_string(f)] = {{"integrand", rep.to_string()}, {"origin_shift", rep.origin_shift}, {"diagonal", seq}};
  }
  emit(o, json_format(o) ? dump(j) : out.str());
  return 0;
}

int cmd_group(const Options& o) {
  Catalog catalog = load_catalog(o);
  StepSet s = resolve_steps(o, catalog);
  GroupOptions opt;
  opt.bound = o.bound;
  opt.degree_cap = o.degree_cap;
  WalkGroup g = generate_group(s, opt);
  std::string orbit;
  if (g.finite()) orbit = orbit_sum_rational(g).to_string();
  if (json_format(o)) {
    Json j;
    j["steps"] = s.to_string();
    j["status"] = to_string(g.status);
    j["order"] = g.finite() ? Json(g.order()) : Json(nullptr);
    Json elems = Json::array();
    for (const auto& e : g.elements) {
      elems.push_back({{"word", e.word.empty() ? "id" : e.word},
                       {"x", e.map.x_image.to_string()},
                       {"y", e.map.y_image.to_string()},
                       {"sign", e.sign}});
    }
    j["elements"] = elems;
    j["orbit_sum"] = g.finite() ? Json(orbit) : Json(nullptr);
    emit(o, dump(j));
    return 0;
  }
  std::string text = describe_group(g);
  if (g.finite()) text += (text.empty() || text.back() == '\n' ? "" : "\n") + std::string("orbit sum: ") + orbit + "\n";
  emit(o, text);
  return 0;
}

int cmd_diagonal_check(const Options& o) {
  Catalog catalog = load_catalog(o);
  StepSet s = resolve_steps(o, catalog);
  const int n = o.n < 0 ? 30 : o.n;
  auto fl = flavors(o.flavor.empty() ? "all" : o.flavor, Flavor::Anywhere);
  CountOptions opt;
  opt.keep_grids = false;
  ExactCounts counts = count_exact(s, n, opt);
  bool ok = true;
  Json j;
  std::ostringstream out;
  for (Flavor f : fl) {
    auto [a, b] = flavor_exponents(f);
    std::vector<Rational> diag = diagonal_sequence(diagonal_representation(s, a, b), n);
    const auto& want = select(counts.sequences, f);
    int first_bad = -1;
    for (int k = 0; k <= n && first_bad < 0; ++k) {
      if (diag[static_cast<std::size_t>(k)] != Rational(want[static_cast<std::size_t>(k)])) first_bad = k;
    }
    ok = ok && first_bad < 0;
    j[to_string(f)] = first_bad < 0 ? Json("ok") : Json("mismatch at n=" + std::to_string(first_bad));
    out << to_string(f) << ": " << (first_bad < 0 ? "ok" : "mismatch at n=" + std::to_string(first_bad)) << " (n <= " << n
        << ")\n";
  }
  emit(o, json_format(o) ? dump(j) : out.str());
  return ok ? 0 : kFailure;
}

int cmd_critical_points(const Options& o) {
  Catalog catalog = load_catalog(o);
  StepSet s = resolve_steps(o, catalog);
  std::vector<CriticalPoint> pts = o.contributing ? contributing_set(s) : critical_points(s);
  RationalFunction3 f = diagonal_representation(s, 1, 1);
  if (json_format(o)) {
    Json arr = Json::array();
    for (const auto& p : pts) {
      Json j = to_json(p);
      MinimalityCertificate c = certify_minimality(p, f);
      j["certificate"] = {{"certified", c.certified},
                          {"blocking", c.blocking},
                          {"sampled_margin", c.sampled_margin},
                          {"sampled_ok", c.sampled_ok},
                          {"note", c.note}};
      arr.push_back(j);
    }
    emit(o, dump(arr));
    return 0;
  }
  std::ostringstream out;
  out.precision(10);
  for (const auto& p : pts) {
    MinimalityCertificate c = certify_minimality(p, f);
    out << p.to_string() << "\n";
    out << "  approx (" << p.coords[0].approx << ", " << p.coords[1].approx << ", " << p.coords[2].approx << ")\n";
    out << "  stratum {";
    for (std::size_t k = 0; k < p.stratum.size(); ++k) out << (k ? ", " : "") << p.stratum[k];
    out << "}, minimal " << (p.minimal ? "yes" : "no") << ", contributing " << (p.contributing ? "yes" : "no");
    if (o.contributing) out << ", rank " << p.rank;
    out << ", cone interior " << (p.cone_interior ? "yes" : "no") << "\n";
    out << "  segment check " << (c.certified ? "certified" : "blocked");
    for (const auto& b : c.blocking) out << " by " << b;
    out << ", torus margin " << c.sampled_margin << " (" << c.note << ")\n";
  }
  emit(o, out.str());
  return 0;
}

int cmd_asymptotics(const Options& o) {
  Catalog catalog = load_catalog(o);
  StepSet s = resolve_steps(o, catalog);
  auto fl = flavors(o.flavor.empty() ? "all" : o.flavor, Flavor::Anywhere);
  Json j;
  std::ostringstream out;
  out.precision(12);
  for (Flavor f : fl) {
    try {
      AsymptoticTerm t = predicted_asymptotics(s, f);
      j[to_string(f)] = to_json(t);
      out << to_string(f) << " [" << to_string(t.source) << ", " << t.row << "]: " << t.to_string() << "\n";
      for (int r = 0; r < t.period; ++r) {
        out << "  kappa[" << r << "] = " << t.kappa[static_cast<std::size_t>(r)].to_string() << " ~ "
            << t.kappa[static_cast<std::size_t>(r)].value << "\n";
      }
    } catch (const NotEncoded& e) {
      j[to_string(f)] = nullptr;
      out << to_string(f) << ": not encoded (" << e.what() << ")\n";
    }
  }
  ModelKind kind = classify(s).kind;
  if (kind == ModelKind::HighlySymmetric || kind == ModelKind::PositiveDrift) {
    ComputedAsymptotics c = computed_asymptotics(s);
    j["computed"] = to_json(c);
    out << "anywhere [" << to_string(c.term.source) << "]: " << c.term.to_string() << "\n";
    for (int r = 0; r < c.term.period; ++r) out << "  kappa[" << r << "] ~ " << c.term.kappa[static_cast<std::size_t>(r)].value << "\n";
    for (const auto& name : c.skipped) out << "  " << name << ": vanishing amplitude, lower order\n";
  }
  emit(o, json_format(o) ? dump(j) : out.str());
  return 0;
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  out.precision(10);
  out << "model " << r.model_id << " " << r.steps.to_string() << " " << to_string(r.flavor) << ": " << to_string(r.verdict)
      << "\n  predicted " << r.predicted.to_string() << " [" << r.predicted.row << "]\n  estimated rho " << r.estimated.rho
      << ", alpha " << r.estimated.alpha << ", kappa";
  for (double k : r.estimated.kappa) out << " " << k;
  out << "\n  n <= " << r.n_used << ", order " << r.estimated.order << ", h = n^-" << r.estimated.power << ", "
      << r.seconds << " s" << (r.tolerances.loose ? ", loose tolerance" : "") << "\n";
  for (const auto& f : r.failures) out << "  " << f << "\n";
  return out.str();
}

std::vector<VerificationReport> verify_reports(const StepSet& s, const std::vector<Flavor>& fl, const Options& o) {
  std::vector<VerificationReport> reports;
  if (fl.size() > 1 && o.tolerance <= 0) {
    for (auto& r : verify_all_flavors(s, o.n)) reports.push_back(r);
    return reports;
  }
  for (Flavor f : fl) {
    std::optional<Tolerances> tol;
    if (o.tolerance > 0) {
      AsymptoticTerm t = predicted_asymptotics(s, f);
      tol = default_tolerances(classify(s).model_id, f, t);
      tol->kappa_rel = o.tolerance;
    }
    try {
      reports.push_back(verify_model(s, f, o.n, tol));
    } catch (const NotEncoded&) {
      if (fl.size() == 1) throw;
    }
  }
  return reports;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.verdict != Verdict::Pass) return false;
  }
  return true;
}

int cmd_verify(const Options& o) {
  Catalog catalog = load_catalog(o);
  StepSet s = resolve_steps(o, catalog);
  auto reports = verify_reports(s, flavors(o.flavor, Flavor::Anywhere), o);
  if (json_format(o)) {
    if (reports.size() == 1) {
      emit(o, dump(to_json(reports.front())));
    } else {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      emit(o, dump(arr));
    }
  } else {
    std::string text;
    for (const auto& r : reports) text += report_text(r);
    emit(o, text);
  }
  return all_pass(reports) ? 0 : kFailure;
}

// Runs jobs on a bounded pool; results keep the job order.
template <class Result>
std::vector<Result> run_pool(std::size_t count, int jobs, const std::function<Result(std::size_t)>& work) {
  std::vector<Result> results(count);
  std::vector<std::string> errors(count);
  std::atomic<std::size_t> next{0};
  unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++) {
        try {
          results[k] = work(k);
        } catch (const std::exception& e) {
          errors[k] = e.what();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (std::size_t k = 0; k < count; ++k) {
    if (!errors[k].empty()) throw Error("job " + std::to_string(k) + " failed: " + errors[k]);
  }
  return results;
}

std::vector<int> parse_ids(const std::string& text) {
  std::vector<int> ids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      ids.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad id list " + text);
    }
  }
  return ids;
}

int cmd_reproduce_tables(const Options& o) {
  Catalog catalog = load_catalog(o);
  std::vector<StepSet> models;
  for (int id = 1; id <= 23; ++id) models.push_back(catalog.find_id(id)->steps);
  auto per_model = run_pool<std::vector<VerificationReport>>(
      models.size(), o.jobs, [&](std::size_t k) { return verify_all_flavors(models[k], o.n); });
  std::vector<VerificationReport> reports;
  for (auto& v : per_model) reports.insert(reports.end(), v.begin(), v.end());
  if (json_format(o)) {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    emit(o, dump(arr));
  } else {
    emit(o, reproduce_tables(reports));
  }
  return all_pass(reports) ? 0 : kFailure;
}

int cmd_batch(const Options& o) {
  Catalog catalog = load_catalog(o);
  std::vector<int> ids;
  if (o.all) {
    for (int id = 1; id <= 23; ++id) ids.push_back(id);
  } else {
    ids = parse_ids(o.ids);
  }
  if (ids.empty()) throw UsageError("batch needs --all or --ids");
  auto fl = flavors(o.flavor, Flavor::Anywhere);
  std::vector<StepSet> models;
  for (int id : ids) {
    const CatalogEntry* e = catalog.find_id(id);
    if (e == nullptr) throw UsageError("no catalog model with id " + std::to_string(id));
    models.push_back(e->steps);
  }
  auto per_model = run_pool<std::vector<VerificationReport>>(models.size(), o.jobs,
                                                             [&](std::size_t k) { return verify_reports(models[k], fl, o); });
  int pass = 0, fail = 0, inconclusive = 0, total = 0;
  Json arr = Json::array();
  std::string text;
  for (const auto& v : per_model) {
    for (const auto& r : v) {
      ++total;
      if (r.verdict == Verdict::Pass) ++pass;
      else if (r.verdict == Verdict::Fail) ++fail;
      else ++inconclusive;
      arr.push_back(to_json(r));
      text += report_text(r);
    }
  }
  int skipped = static_cast<int>(ids.size() * fl.size()) - total;
  std::ostringstream summary;
  summary << "jobs " << total << ", pass " << pass << ", fail " << fail << ", inconclusive " << inconclusive
          << ", not encoded " << skipped << "\n";
  if (json_format(o)) {
    Json j;
    j["reports"] = arr;
    j["summary"] = {{"jobs", total}, {"pass", pass}, {"fail", fail}, {"inconclusive", inconclusive}, {"not_encoded", skipped}};
    emit(o, dump(j));
  } else {
    emit(o, text + summary.str());
  }
  return pass == total ? 0 : kFailure;
}

void add_model_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--steps", o.steps, "step set, e.g. \"N,SE,SW\" or \"(0,1),(1,-1)\"");
  cmd->add_option("--id", o.id, "catalog id (1-79)");
}

void add_common_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", o.out, "write output to FILE");
  cmd->add_option("--catalog", o.catalog, "catalog JSON (default: QUADWALK_CATALOG or built-in)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quadwalk: quarter-plane lattice walks, diagonals and asymptotics"};
  app.require_subcommand(1);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "classify a step set");
  auto* count_cmd = app.add_subcommand("count", "count walks by dynamic programming");
  auto* series_cmd = app.add_subcommand("series", "rational integrand and its diagonal");
  auto* group_cmd = app.add_subcommand("group", "group of the walk and orbit sum");
  auto* diag_cmd = app.add_subcommand("diagonal-check", "compare diagonals with exact counts");
  auto* crit_cmd = app.add_subcommand("critical-points", "critical points and minimality");
  auto* asym_cmd = app.add_subcommand("asymptotics", "encoded and computed leading terms");
  auto* verify_cmd = app.add_subcommand("verify", "numerical verification of a leading term");
  auto* tables_cmd = app.add_subcommand("reproduce-tables", "verify every encoded row");
  auto* batch_cmd = app.add_subcommand("batch", "verify many models on a worker pool");

  for (auto* cmd : {classify_cmd, count_cmd, series_cmd, group_cmd, diag_cmd, crit_cmd, asym_cmd, verify_cmd}) {
    add_model_flags(cmd, o);
  }
  for (auto* cmd : app.get_subcommands({})) add_common_flags(cmd, o);
  for (auto* cmd : {count_cmd, series_cmd, diag_cmd, verify_cmd, tables_cmd, batch_cmd}) {
    cmd->add_option("--n", o.n, "length");
  }
  for (auto* cmd : {count_cmd, series_cmd, diag_cmd, asym_cmd, verify_cmd, batch_cmd}) {
    cmd->add_option("--flavor", o.flavor, "anywhere, x_axis, y_axis, origin or all");
  }
  for (auto* cmd : {verify_cmd, batch_cmd}) cmd->add_option("--tolerance", o.tolerance, "relative tolerance on kappa");
  count_cmd->add_flag("--scaled", o.scaled, "floating counts divided by rho^n");
  count_cmd->add_option("--rho", o.rho, "scale for --scaled (default: encoded growth)");
  group_cmd->add_option("--bound", o.bound, "largest group order explored");
  group_cmd->add_option("--degree-cap", o.degree_cap, "largest degree of a map component");
  crit_cmd->add_flag("--contributing", o.contributing, "only the contributing set");
  batch_cmd->add_flag("--all", o.all, "all 23 finite-group models");
  batch_cmd->add_option("--ids", o.ids, "comma separated catalog ids");
  for (auto* cmd : {tables_cmd, batch_cmd}) cmd->add_option("--jobs", o.jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o);
    if (count_cmd->parsed()) return cmd_count(o);
    if (series_cmd->parsed()) return cmd_series(o);
    if (group_cmd->parsed()) return cmd_group(o);
    if (diag_cmd->parsed()) return cmd_diagonal_check(o);
    if (crit_cmd->parsed()) return cmd_critical_points(o);
    if (asym_cmd->parsed()) return cmd_asymptotics(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
    if (tables_cmd->parsed()) return cmd_reproduce_tables(o);
    if (batch_cmd->parsed()) return cmd_batch(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
