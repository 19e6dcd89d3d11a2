#include "quadwalk/closed_form.hpp"

#include "quadwalk/errors.hpp"

#include <boost/math/special_functions/gamma.hpp>

namespace quadwalk {

struct ClosedForm::Node {
  Kind kind = Kind::Number;
  Rational number;  // value for Number, argument for Gamma, exponent for Pow
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ClosedForm::Node>;

HighFloat to_high(const Rational& q) {
  return HighFloat(q.get_num().get_str()) / HighFloat(q.get_den().get_str());
}

int precedence(ClosedForm::Kind k) {
  switch (k) {
    case ClosedForm::Kind::Add:
    case ClosedForm::Kind::Sub: return 1;
    case ClosedForm::Kind::Mul:
    case ClosedForm::Kind::Div: return 2;
    case ClosedForm::Kind::Neg: return 3;
    default: return 4;
  }
}

}  // namespace

ClosedForm::ClosedForm(const Rational& q) {
  auto node = std::make_shared<Node>();
  node->number = q;
  node_ = node;
}

ClosedForm::ClosedForm(const RealQuad& q) : ClosedForm(q.a()) {
  ClosedForm result = q.a();
  bool started = q.a() != 0;
  auto add = [&](const Rational& c, int k) {
    if (c == 0) return;
    ClosedForm term = ClosedForm(abs(c)) * sqrt(ClosedForm(k));
    if (abs(c) == 1) term = sqrt(ClosedForm(k));
    if (!started) result = sgn(c) < 0 ? -term : term;
    else result = sgn(c) < 0 ? result - term : result + term;
    started = true;
  };
  add(q.b(), 2);
  add(q.c(), 3);
  add(q.d(), 6);
  node_ = result.node_;
}

ClosedForm ClosedForm::pi() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pi;
  return ClosedForm(NodePtr(node));
}

ClosedForm ClosedForm::gamma(const Rational& arg) {
  if (arg != Rational(1, 4) && arg != Rational(1, 3)) throw Error("only Gamma(1/4) and Gamma(1/3) are named constants");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Gamma;
  node->number = arg;
  return ClosedForm(NodePtr(node));
}

ClosedForm ClosedForm::pow(const ClosedForm& x, const Rational& e) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pow;
  node->number = e;
  node->lhs = x.node_;
  return ClosedForm(NodePtr(node));
}

namespace {

ClosedForm::Kind kind_of(const NodePtr& n) { return n->kind; }

}  // namespace

#define QUADWALK_BINARY(op, K)                                       \
  ClosedForm operator op(const ClosedForm& x, const ClosedForm& y) { \
    auto node = std::make_shared<ClosedForm::Node>();                \
    node->kind = ClosedForm::Kind::K;                                \
    node->lhs = x.node_;                                             \
    node->rhs = y.node_;                                             \
    return ClosedForm(NodePtr(node));                                \
  }
QUADWALK_BINARY(+, Add)
QUADWALK_BINARY(-, Sub)
QUADWALK_BINARY(*, Mul)
QUADWALK_BINARY(/, Div)
#undef QUADWALK_BINARY

ClosedForm operator-(const ClosedForm& x) {
  auto node = std::make_shared<ClosedForm::Node>();
  node->kind = ClosedForm::Kind::Neg;
  node->lhs = x.node_;
  return ClosedForm(NodePtr(node));
}

ClosedForm::Kind ClosedForm::kind() const { return kind_of(node_); }

bool ClosedForm::is_zero() const { return evaluate() == 0; }

namespace {

HighFloat eval(const ClosedForm::Node& n) {
  using K = ClosedForm::Kind;
  switch (n.kind) {
    case K::Number: return to_high(n.number);
    case K::Pi: return boost::math::constants::pi<HighFloat>();
    case K::Gamma: return boost::math::tgamma(to_high(n.number));
    case K::Add: return eval(*n.lhs) + eval(*n.rhs);
    case K::Sub: return eval(*n.lhs) - eval(*n.rhs);
    case K::Mul: return eval(*n.lhs) * eval(*n.rhs);
    case K::Div: return eval(*n.lhs) / eval(*n.rhs);
    case K::Neg: return -eval(*n.lhs);
    case K::Pow: {
      HighFloat base = eval(*n.lhs);
      if (n.number == Rational(1, 2)) return boost::multiprecision::sqrt(base);
      if (n.number.get_den() == 1) return boost::multiprecision::pow(base, to_high(n.number));
      return boost::multiprecision::pow(base, to_high(n.number));
    }
  }
  return 0;
}

std::string render(const ClosedForm::Node& n, int parent_prec, bool right_side) {
  using K = ClosedForm::Kind;
  int prec = precedence(n.kind);
  std::string s;
  switch (n.kind) {
    case K::Number:
      s = to_string(n.number);
      if (n.number.get_den() != 1) prec = 2;
      if (sgn(n.number) < 0) prec = 3;
      break;
    case K::Pi: s = "pi"; break;
    case K::Gamma: s = "Gamma(" + to_string(n.number) + ")"; break;
    case K::Add: s = render(*n.lhs, 1, false) + " + " + render(*n.rhs, 1, true); break;
    case K::Sub: s = render(*n.lhs, 1, false) + " - " + render(*n.rhs, 2, true); break;
    case K::Mul: s = render(*n.lhs, 2, false) + "*" + render(*n.rhs, 2, true); break;
    case K::Div: s = render(*n.lhs, 2, false) + "/" + render(*n.rhs, 3, true); break;
    case K::Neg: s = "-" + render(*n.lhs, 3, false); break;
    case K::Pow:
      if (n.number == Rational(1, 2)) s = "sqrt(" + render(*n.lhs, 0, false) + ")";
      else s = render(*n.lhs, 5, false) + "^" + (n.number.get_den() == 1 ? to_string(n.number) : "(" + to_string(n.number) + ")");
      prec = 4;
      break;
  }
  bool wrap = prec < parent_prec || (right_side && prec == parent_prec && (n.kind == K::Add || n.kind == K::Sub));
  return wrap ? "(" + s + ")" : s;
}

}  // namespace

HighFloat ClosedForm::evaluate() const { return eval(*node_); }

std::string ClosedForm::to_string() const { return render(*node_, 0, false); }

}  // namespace quadwalk
