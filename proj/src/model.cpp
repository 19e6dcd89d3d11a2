#include "quadwalk/model.hpp"

#include "quadwalk/catalog.hpp"
#include "quadwalk/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace quadwalk {

namespace {

constexpr std::array<Step, 8> kCompassOrder{{{0, 1}, {1, 1}, {1, 0}, {1, -1}, {0, -1}, {-1, -1}, {-1, 0}, {-1, 1}}};
constexpr std::array<const char*, 8> kCompassNames{"N", "NE", "E", "SE", "S", "SW", "W", "NW"};

int compass_index(Step s) {
  for (std::size_t k = 0; k < kCompassOrder.size(); ++k) {
    if (kCompassOrder[k] == s) return static_cast<int>(k);
  }
  return -1;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_unit(const std::string& tok) {
  if (tok == "-1") return -1;
  if (tok == "0" || tok == "-0" || tok == "+0") return 0;
  if (tok == "1" || tok == "+1") return 1;
  throw ParseError("step coordinate must be -1, 0 or 1: '" + tok + "'");
}

LaurentPolynomial2 lift_x(const LaurentPolynomial1& p, int y_power) {
  LaurentPolynomial2 r;
  for (const auto& [e, c] : p.terms()) r.add_term({e[0], y_power}, c);
  return r;
}

LaurentPolynomial2 lift_y(const LaurentPolynomial1& p, int x_power) {
  LaurentPolynomial2 r;
  for (const auto& [e, c] : p.terms()) r.add_term({x_power, e[0]}, c);
  return r;
}

}  // namespace

std::string compass_name(Step s) {
  int k = compass_index(s);
  if (k < 0) throw ParseError("not a small step");
  return kCompassNames[static_cast<std::size_t>(k)];
}

StepSet::StepSet(std::vector<Step> steps) {
  for (Step s : steps) {
    if (s.dx < -1 || s.dx > 1 || s.dy < -1 || s.dy > 1) throw ParseError("step coordinates must lie in {-1,0,1}");
    if (s.dx == 0 && s.dy == 0) throw ParseError("the zero step (0,0) is not allowed");
  }
  std::sort(steps.begin(), steps.end(), [](Step a, Step b) { return compass_index(a) < compass_index(b); });
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());
  if (steps.empty()) throw ParseError("empty step set");
  steps_ = std::move(steps);
}

bool StepSet::contains(Step s) const { return std::find(steps_.begin(), steps_.end(), s) != steps_.end(); }

StepSet StepSet::with_catalog_id(std::optional<int> id) const {
  StepSet r = *this;
  r.catalog_id_ = id;
  return r;
}

StepSet StepSet::swapped() const {
  std::vector<Step> v;
  for (Step s : steps_) v.push_back({s.dy, s.dx});
  return StepSet(v);
}

StepSet StepSet::reversed() const {
  std::vector<Step> v;
  for (Step s : steps_) v.push_back({-s.dx, -s.dy});
  return StepSet(v);
}

StepSet StepSet::reflected_x() const {
  std::vector<Step> v;
  for (Step s : steps_) v.push_back({-s.dx, s.dy});
  return StepSet(v);
}

StepSet StepSet::reflected_y() const {
  std::vector<Step> v;
  for (Step s : steps_) v.push_back({s.dx, -s.dy});
  return StepSet(v);
}

std::string StepSet::to_string() const {
  std::string out;
  for (Step s : steps_) {
    if (!out.empty()) out += ",";
    out += compass_name(s);
  }
  return out;
}

unsigned StepSet::mask() const {
  unsigned m = 0;
  for (Step s : steps_) m |= 1U << static_cast<unsigned>(compass_index(s));
  return m;
}

ParsedStepSet parse_step_set(std::string_view text) {
  std::string body = trim(text);
  if (!body.empty() && (body.front() == '{' || body.front() == '[')) body = trim(std::string_view(body).substr(1));
  if (!body.empty() && (body.back() == '}' || body.back() == ']')) body.pop_back();
  body = trim(body);
  if (body.empty()) throw ParseError("empty step set");

  std::vector<Step> steps;
  if (body.find('(') != std::string::npos) {
    std::size_t pos = 0;
    while (true) {
      std::size_t open = body.find('(', pos);
      if (open == std::string::npos) break;
      std::size_t close = body.find(')', open);
      if (close == std::string::npos) throw ParseError("unbalanced parenthesis in step list");
      std::string inner = body.substr(open + 1, close - open - 1);
      std::size_t comma = inner.find(',');
      if (comma == std::string::npos) throw ParseError("step pair needs two coordinates: (" + inner + ")");
      steps.push_back({parse_unit(trim(inner.substr(0, comma))), parse_unit(trim(inner.substr(comma + 1)))});
      std::string between = trim(std::string_view(body).substr(pos, open - pos));
      if (!between.empty() && between != ",") throw ParseError("unexpected text in step list: '" + between + "'");
      pos = close + 1;
    }
    std::string rest = trim(std::string_view(body).substr(pos));
    if (!rest.empty()) throw ParseError("unexpected text in step list: '" + rest + "'");
  } else {
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::string name = trim(tok);
      for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      auto it = std::find_if(kCompassNames.begin(), kCompassNames.end(), [&](const char* n) { return name == n; });
      if (it == kCompassNames.end()) throw ParseError("unknown step token '" + trim(tok) + "'");
      steps.push_back(kCompassOrder[static_cast<std::size_t>(it - kCompassNames.begin())]);
    }
  }
  ParsedStepSet out;
  std::size_t given = steps.size();
  out.steps = StepSet(std::move(steps));
  if (out.steps.size() != given) {
    out.notices.push_back("collapsed " + std::to_string(given - out.steps.size()) + " duplicate step(s)");
  }
  return out;
}

LaurentPolynomial2 characteristic_polynomial(const StepSet& s) {
  LaurentPolynomial2 p;
  for (Step st : s.steps()) p.add_term({st.dx, st.dy}, 1);
  return p;
}

Sections sections(const StepSet& s) {
  Sections sec;
  for (Step st : s.steps()) {
    LaurentPolynomial1& a = st.dy < 0 ? sec.a_minus : (st.dy == 0 ? sec.a_zero : sec.a_plus);
    a.add_term({st.dx}, 1);
    LaurentPolynomial1& b = st.dx < 0 ? sec.b_minus : (st.dx == 0 ? sec.b_zero : sec.b_plus);
    b.add_term({st.dy}, 1);
  }
  return sec;
}

std::pair<LaurentPolynomial2, LaurentPolynomial2> recombine_sections(const Sections& sec) {
  LaurentPolynomial2 by_y = lift_x(sec.a_minus, -1) + lift_x(sec.a_zero, 0) + lift_x(sec.a_plus, 1);
  LaurentPolynomial2 by_x = lift_y(sec.b_minus, -1) + lift_y(sec.b_zero, 0) + lift_y(sec.b_plus, 1);
  return {by_y, by_x};
}

std::pair<int, int> drift(const StepSet& s) {
  int dx = 0, dy = 0;
  for (Step st : s.steps()) {
    dx += st.dx;
    dy += st.dy;
  }
  return {dx, dy};
}

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::HalfplaneReducible: return "HalfplaneReducible";
    case ModelKind::HighlySymmetric: return "HighlySymmetric";
    case ModelKind::PositiveDrift: return "PositiveDrift";
    case ModelKind::NegativeDrift: return "NegativeDrift";
    case ModelKind::Sporadic: return "Sporadic";
    case ModelKind::Algebraic: return "Algebraic";
    case ModelKind::InfiniteGroup: return "InfiniteGroup";
  }
  return "?";
}

bool symmetric_about_y_axis(const StepSet& s) { return s.reflected_x() == s; }
bool symmetric_about_x_axis(const StepSet& s) { return s.reflected_y() == s; }

Canonical canonicalize(const StepSet& s) {
  if (symmetric_about_x_axis(s) && !symmetric_about_y_axis(s)) return {s.swapped(), true};
  return {s, false};
}

ModelClass classify(const StepSet& s) {
  ModelClass mc;
  Sections sec = sections(s);
  if (sec.a_minus.is_zero() || sec.a_plus.is_zero() || sec.b_minus.is_zero() || sec.b_plus.is_zero()) {
    mc.kind = ModelKind::HalfplaneReducible;
    return mc;
  }
  CatalogMatch m = Catalog::builtin().match(s);
  if (m.entry == nullptr) {
    // Every direction is present but the quadrant constraint reduces to a
    // half-plane one (or the walks die out); these are not catalog models.
    mc.kind = ModelKind::HalfplaneReducible;
    return mc;
  }
  mc.model_id = m.entry->id;
  bool sy = symmetric_about_y_axis(s), sx = symmetric_about_x_axis(s);
  if (sx && sy) {
    mc.kind = ModelKind::HighlySymmetric;
    mc.axis_swapped = m.swapped;
  } else if (sx || sy) {
    Canonical c = canonicalize(s);
    mc.axis_swapped = c.swapped;
    mc.kind = drift(c.steps).second > 0 ? ModelKind::PositiveDrift : ModelKind::NegativeDrift;
  } else {
    mc.axis_swapped = m.swapped;
    int id = m.entry->id;
    if (id == 15 || id == 16 || id == 23) {
      mc.kind = ModelKind::Sporadic;
    } else if (id >= 5 && id <= 8) {
      mc.kind = ModelKind::Algebraic;
    } else {
      mc.kind = ModelKind::InfiniteGroup;
    }
  }
  if (mc.kind != m.entry->kind) {
    throw Error("classification of " + s.to_string() + " disagrees with the catalog entry " +
                std::to_string(m.entry->id));
  }
  return mc;
}

Canonical analysis_orientation(const StepSet& s) {
  CatalogMatch m = Catalog::builtin().match(s);
  if (m.entry == nullptr) return {s, false};
  return {m.entry->steps, m.swapped};
}

}  // namespace quadwalk
