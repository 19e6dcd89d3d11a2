#include "quadwalk/asymptotics.hpp"
#include "quadwalk/errors.hpp"

namespace quadwalk {

namespace {

using CF = ClosedForm;

CF pi() { return CF::pi(); }
CF sq(const CF& x) { return CF::sqrt(x); }
CF sqpi() { return sq(pi()); }
CF g14() { return CF::gamma(Rational(1, 4)); }
CF g13() { return CF::gamma(Rational(1, 3)); }
CF pw(const CF& x, int num, int den) { return CF::pow(x, Rational(num, den)); }

const RealQuad s2 = RealQuad::sqrt2(), s3 = RealQuad::sqrt3(), s6 = RealQuad::sqrt6();
const RealQuad A = RealQuad(1) + s2, B = RealQuad(1) + s3, K = RealQuad(1) + s6;

CF D() { return CF(RealQuad(156) + RealQuad(41) * s6) * sq(CF(RealQuad(23) - RealQuad(3) * s6)); }
CF E() { return CF(RealQuad(583) + RealQuad(138) * s6) * sq(CF(RealQuad(23) - RealQuad(3) * s6)); }

AsymptoticTerm term(RealQuad rho, Rational alpha, std::vector<CF> kappa, std::string row) {
  AsymptoticTerm t;
  t.rho = std::move(rho);
  t.alpha = std::move(alpha);
  t.period = static_cast<int>(kappa.size());
  for (auto& k : kappa) t.kappa.emplace_back(k);
  t.source = TermSource::TableEncoded;
  t.row = std::move(row);
  return t;
}

// δ_n, σ_n, ε_n: the constant on residue 0 of the period, zero elsewhere
std::vector<CF> delta(const CF& c) { return {c, CF(0)}; }
std::vector<CF> sigma(const CF& c) { return {c, CF(0), CF(0)}; }
std::vector<CF> epsilon(const CF& c) { return {c, CF(0), CF(0), CF(0)}; }

AsymptoticTerm anywhere(int id) {
  const std::string row = "anywhere:" + std::to_string(id);
  const Rational m1(-1), m12(-1, 2), m32(-3, 2), m34(-3, 4), m2(-2);
  switch (id) {
    case 1: return term(4, m1, {CF(4) / pi()}, row);
    case 2: return term(4, m1, {CF(2) / pi()}, row);
    case 3: return term(6, m1, {sq(6) / pi()}, row);
    case 4: return term(8, m1, {CF(8) / (CF(3) * pi())}, row);
    case 5: return term(3, m34, {CF(2) * sq(2) / g14()}, row);
    case 6: return term(3, m34, {CF(3) * sq(3) / (sq(2) * g14())}, row);
    case 7: return term(6, m34, {sq(CF(6) * sq(3)) / g14()}, row);
    case 8: return term(4, Rational(-2, 3), {CF(4) * sq(3) / (CF(3) * g13())}, row);
    case 9: return term(3, m12, {sq(3) / (CF(2) * sqpi())}, row);
    case 10: return term(4, m12, {CF(4) / (CF(3) * sqpi())}, row);
    case 11: return term(5, m12, {sq(5) / (CF(2) * sq(CF(2) * pi()))}, row);
    case 12: return term(5, m12, {sq(5) / (CF(3) * sq(CF(2) * pi()))}, row);
    case 13: return term(6, m12, {CF(2) * sq(3) / (CF(3) * sqpi())}, row);
    case 14: return term(7, m12, {sq(7) / (CF(3) * sq(CF(3) * pi()))}, row);
    case 15: return term(3, m32, {CF(3) * sq(3) / (CF(2) * sqpi())}, row);
    case 16: return term(6, m32, {CF(3) * sq(3) / (CF(2) * sqpi())}, row);
    case 17: {
      // A_n = 4(1-(-1)^n) + 3√2(1+(-1)^n)
      return term(RealQuad(2) * s2, m2, {CF(4) * CF(RealQuad(6) * s2) / pi(), CF(4) * CF(8) / pi()}, row);
    }
    case 18: {
      // B_n = √3(1-(-1)^n) + 2(1+(-1)^n)
      return term(RealQuad(2) * s3, m2, {CF(3) * sq(3) * CF(4) / pi(), CF(3) * sq(3) * CF(RealQuad(2) * s3) / pi()},
                  row);
    }
    case 19: return term(RealQuad(2) + RealQuad(2) * s2, m2, {sq(8) * pw(CF(A), 7, 2) / pi()}, row);
    case 20: {
      // C_n = 12/√5 (1-(-1)^n) + √30 (1+(-1)^n)
      CF even = CF(2) * sq(30), odd = CF(24) / sq(5);
      return term(RealQuad(2) * s6, m2, {CF(6) * even / pi(), CF(6) * odd / pi()}, row);
    }
    case 21: return term(RealQuad(2) + RealQuad(2) * s3, m2, {sq(3) * pw(CF(B), 7, 2) / (CF(2) * pi())}, row);
    case 22: {
      CF inner = CF(6) * CF(RealQuad(379) + RealQuad(156) * s6) * CF::pow(CF(K), Rational(7));
      return term(RealQuad(2) + RealQuad(2) * s6, m2, {sq(inner) / (CF(5) * sq(95) * pi())}, row);
    }
    case 23: return term(4, m2, {CF(8) / pi()}, row);
    default: break;
  }
  throw NotEncoded("no table row for model " + std::to_string(id));
}

// boundary rows for the highly symmetric, positive drift and sporadic models
AsymptoticTerm boundary(int id, Flavor f) {
  const std::string row = "boundary:" + std::to_string(id) + ":" + to_string(f);
  const Rational m2(-2), m3(-3), m32(-3, 2), m52(-5, 2);
  const RealQuad r2 = RealQuad(2) * s2, r3 = RealQuad(2) * s3, r6 = RealQuad(2) * s6;
  switch (id) {
    case 1:
      if (f == Flavor::Origin) return term(4, m3, delta(CF(32) / pi()), row);
      return term(4, m2, {CF(8) / pi()}, row);
    case 2:
      if (f == Flavor::Origin) return term(4, m3, delta(CF(8) / pi()), row);
      return term(4, m2, delta(CF(4) / pi()), row);
    case 3:
      if (f == Flavor::YAxis) return term(6, m2, {CF(3) * sq(6) / (CF(2) * pi())}, row);
      if (f == Flavor::XAxis) return term(6, m2, delta(CF(2) * sq(6) / pi()), row);
      return term(6, m3, delta(CF(3) * sq(6) / pi()), row);
    case 4:
      if (f == Flavor::Origin) return term(8, m3, {CF(128) / (CF(27) * pi())}, row);
      return term(8, m2, {CF(32) / (CF(9) * pi())}, row);
    case 9:
      if (f == Flavor::YAxis) return term(3, m32, {CF(3) * sq(3) / (CF(4) * sqpi())}, row);
      if (f == Flavor::XAxis) return term(r2, m2, delta(CF(4) * sq(2) / pi()), row);
      return term(r2, m3, epsilon(CF(16) * sq(2) / pi()), row);
    case 10:
      if (f == Flavor::YAxis) return term(4, m32, {CF(8) / (CF(3) * sqpi())}, row);
      if (f == Flavor::XAxis) return term(r3, m2, delta(CF(4) * sq(3) / pi()), row);
      return term(r3, m3, delta(CF(12) * sq(3) / pi()), row);
    case 11:
      if (f == Flavor::YAxis) return term(5, m32, {CF(5) * sq(10) / (CF(16) * sqpi())}, row);
      if (f == Flavor::XAxis) return term(RealQuad(2) * A, m2, {sq(2) * pw(CF(A), 3, 2) / pi()}, row);
      return term(RealQuad(2) * A, m3, {CF(2) * pw(CF(A), 3, 2) / pi()}, row);
    case 12:
      if (f == Flavor::YAxis) return term(5, m32, {CF(5) * sq(10) / (CF(24) * sqpi())}, row);
      if (f == Flavor::XAxis) return term(r6, m2, delta(CF(4) * sq(30) / (CF(5) * pi())), row);
      return term(r6, m3, delta(CF(24) * sq(30) / (CF(25) * pi())), row);
    case 13:
      if (f == Flavor::YAxis) return term(6, m32, {sq(3) / sqpi()}, row);
      if (f == Flavor::XAxis) return term(RealQuad(2) * B, m2, {CF(2) * sq(3) * pw(CF(B), 3, 2) / (CF(3) * pi())}, row);
      return term(RealQuad(2) * B, m3, {CF(2) * pw(CF(B), 3, 2) / pi()}, row);
    case 14:
      if (f == Flavor::YAxis) return term(7, m32, {CF(7) * sq(21) / (CF(54) * sqpi())}, row);
      if (f == Flavor::XAxis) return term(RealQuad(2) * K, m2, {D() / (CF(285) * pi())}, row);
      return term(RealQuad(2) * K, m3, {CF(2) * E() / (CF(1805) * pi())}, row);
    case 15:
      if (f == Flavor::Origin) return term(3, Rational(-4), sigma(CF(81) * sq(3) / pi()), row);
      return term(3, m52, {CF(27) * sq(3) / (CF(8) * sqpi())}, row);
    case 16:
      if (f == Flavor::Origin) return term(6, Rational(-4), {CF(27) * sq(3) / pi()}, row);
      return term(6, m52, {CF(27) * sq(3) / (CF(8) * sqpi())}, row);
    case 23:
      if (f == Flavor::YAxis) return term(4, m3, delta(CF(32) / pi()), row);
      if (f == Flavor::XAxis) return term(4, m3, {CF(32) / pi()}, row);
      return term(4, Rational(-5), delta(CF(768) / pi()), row);
    default: break;
  }
  throw NotEncoded("no boundary row for model " + std::to_string(id));
}

// C(0,1,t) for the negative drift models
AsymptoticTerm negative_y_axis(int id) {
  const std::string row = "negative-y:" + std::to_string(id);
  const Rational m3(-3);
  switch (id) {
    case 17:
      return term(RealQuad(2) * s2, m3,
                  {CF(448) * sq(2) / (CF(9) * pi()), CF(640) / (CF(9) * pi()), CF(416) * sq(2) / (CF(9) * pi()),
                   CF(512) / (CF(9) * pi())},
                  row);
    case 18: return term(RealQuad(2) * s3, m3, {CF(36) * sq(3) / pi(), CF(54) / pi()}, row);
    case 19: return term(RealQuad(2) * A, m3, {CF(4) * pw(CF(A), 7, 2) / pi()}, row);
    case 20:
      return term(RealQuad(2) * s6, m3, {CF(72) * sq(30) / (CF(5) * pi()), CF(864) * sq(5) / (CF(25) * pi())}, row);
    case 21: return term(RealQuad(2) * B, m3, {CF(3) * pw(CF(B), 7, 2) / (CF(2) * pi())}, row);
    case 22:
      return term(RealQuad(2) * K, m3,
                  {CF(6) * CF(RealQuad(4571) + RealQuad(1856) * s6) * sq(CF(RealQuad(23) - RealQuad(3) * s6)) /
                   (CF(1805) * pi())},
                  row);
    default: break;
  }
  throw NotEncoded("no negative drift row for model " + std::to_string(id));
}

}  // namespace

AsymptoticTerm table_term(int id, Flavor flavor) {
  if (id < 1 || id > 23) throw ClassMismatch("model " + std::to_string(id) + " has an infinite group");
  if (flavor == Flavor::Anywhere) return anywhere(id);
  if (id >= 5 && id <= 8) {
    throw NotEncoded("boundary asymptotics of the algebraic model " + std::to_string(id) + " are not tabulated");
  }
  if (id >= 17 && id <= 22) {
    if (flavor == Flavor::YAxis) return negative_y_axis(id);
    // the remaining flavors coincide with those of the reversed model -S
    AsymptoticTerm t = boundary(id - 8, flavor);
    t.row = "boundary:" + std::to_string(id - 8) + ":" + to_string(flavor) + ":reversed";
    return t;
  }
  return boundary(id, flavor);
}

}  // namespace quadwalk
