#include "tautcalc/expand.hpp"

#include <optional>
#include <stdexcept>

#include "tautcalc/product.hpp"

namespace tautcalc {
namespace {

TautClass locus(const StableGraph& g) {
  return TautClass::of(DecoratedStratum(g), Rational(1, canonicalize(g).automorphisms));
}

// Linear combination of divisors, if the expression is one.
std::optional<std::vector<std::pair<Rational, DivisorGen>>> linear_divisors(const GeneratorExpr& e) {
  using Op = GeneratorExpr::Op;
  std::vector<std::pair<Rational, DivisorGen>> out;
  switch (e.op()) {
    case Op::Atom:
      if (e.atom().kind != Symbol::Kind::Divisor) return std::nullopt;
      out.push_back({1, e.atom().divisor});
      return out;
    case Op::Sum:
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        auto sub = linear_divisors(e.children()[i]);
        if (!sub) return std::nullopt;
        for (auto& [c, d] : *sub) out.push_back({c * e.coefficients()[i], d});
      }
      return out;
    case Op::Product:
      if (e.children().size() == 1) return linear_divisors(e.children()[0]);
      return std::nullopt;
    case Op::Constant:
      if (is_zero(e.constant())) return out;
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

TautClass symbol_class(MarkedSpace space, const Symbol& s) {
  s.validate(space);
  const int g = space.g, n = space.n;
  switch (s.kind) {
    case Symbol::Kind::Divisor: {
      const DivisorGen& d = s.divisor;
      switch (d.kind) {
        case DivisorGen::Kind::Psi: {
          DecoratedStratum st(StableGraph::smooth(space));
          st.psi[d.index - 1] = 1;
          return TautClass::of(st);
        }
        case DivisorGen::Kind::Omega: return expand(omega_expr(space, d.index), space);
        case DivisorGen::Kind::Lambda: return expand(lambda_expr(space), space);
        case DivisorGen::Kind::DeltaIrr:
          return locus(StableGraph({g - 1}, std::vector<int>(n, 0), {{0, 0}}));
        case DivisorGen::Kind::DeltaSep: {
          std::vector<int> legs(n);
          for (int i = 1; i <= n; ++i) legs[i - 1] = (d.J & marking_bit(i)) ? 0 : 1;
          return locus(StableGraph({d.h, g - d.h}, legs, {{0, 1}}));
        }
      }
      break;
    }
    case Symbol::Kind::Gamma: {
      std::vector<int> legs(n);
      for (int i = 1; i <= n; ++i) legs[i - 1] = (s.J & marking_bit(i)) ? 0 : 1;
      return locus(StableGraph({1, g - 2}, legs, {{0, 1}, {0, 1}}));
    }
    case Symbol::Kind::Delta2Psi: {
      DecoratedStratum st(StableGraph({2, 0}, {1, 1}, {{0, 1}}));
      st.psi[n] = 1;  // genus-two end of the edge
      return TautClass::of(st);
    }
  }
  throw std::logic_error("unhandled generator");
}

TautClass expand(const GeneratorExpr& expr, MarkedSpace space) {
  using Op = GeneratorExpr::Op;
  switch (expr.op()) {
    case Op::Constant: return expr.constant() * TautClass::fundamental(space);
    case Op::Atom: return symbol_class(space, expr.atom());
    case Op::Sum: {
      TautClass out(space);
      for (std::size_t i = 0; i < expr.children().size(); ++i)
        out.add(expand(expr.children()[i], space), expr.coefficients()[i]);
      return out;
    }
    case Op::Product: {
      std::optional<TautClass> acc;
      for (const auto& f : expr.children()) {
        if (!acc) {
          acc = expand(f, space);
          continue;
        }
        if (f.op() == Op::Constant) {
          *acc *= f.constant();
        } else if (auto lin = linear_divisors(f)) {
          f.validate(space);
          TautClass next(space);
          for (const auto& [c, d] : *lin) next.add(mult_divisor(*acc, d), c);
          acc = std::move(next);
        } else {
          acc = mult(*acc, expand(f, space));
        }
      }
      return acc ? *acc : TautClass::fundamental(space);
    }
  }
  throw std::logic_error("unhandled expression");
}

}  // namespace tautcalc
