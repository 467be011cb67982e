#include "tautcalc/taut_class.hpp"

#include <stdexcept>

namespace tautcalc {

TautClass::TautClass(MarkedSpace space) : space_(space) { space_.validate(); }

TautClass TautClass::fundamental(MarkedSpace space) {
  TautClass c(space);
  c.add(DecoratedStratum(StableGraph::smooth(space)), 1);
  return c;
}

TautClass TautClass::of(const DecoratedStratum& s, const Rational& coeff) {
  TautClass c(s.space());
  c.add(s, coeff);
  return c;
}

void TautClass::insert_canonical(CanonicalStratum cs, const Rational& coeff) {
  Rational c = coeff;
  c.canonicalize();  // callers may hand in unreduced p/q
  auto [it, inserted] = terms_.try_emplace(std::move(cs.code), Term{std::move(cs.stratum), c});
  if (!inserted) {
    it->second.coeff += coeff;
    if (is_zero(it->second.coeff)) terms_.erase(it);
  }
}

void TautClass::add(const DecoratedStratum& s, const Rational& coeff) {
  if (is_zero(coeff)) return;
  if (s.graph.num_legs() != space_.n || s.graph.total_genus() != space_.g)
    throw std::invalid_argument("stratum does not live on this space");
  if (s.degree() > space_.dim() || s.vanishes_by_dimension()) return;
  insert_canonical(canonicalize(s), coeff);
}

void TautClass::add(const TautClass& other, const Rational& scale) {
  check_space(other);
  Rational k = scale;
  k.canonicalize();
  if (is_zero(k)) return;
  for (const auto& [code, t] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(code, Term{t.stratum, t.coeff * k});
    if (!inserted) {
      it->second.coeff += t.coeff * k;
      if (is_zero(it->second.coeff)) terms_.erase(it);
    }
  }
}

int TautClass::degree(int fallback) const {
  if (terms_.empty()) return fallback;
  const int d = terms_.begin()->second.stratum.degree();
  for (const auto& [code, t] : terms_)
    if (t.stratum.degree() != d) throw std::domain_error("class is not homogeneous");
  return d;
}

TautClass TautClass::degree_part(int d) const {
  TautClass out(space_);
  for (const auto& [code, t] : terms_)
    if (t.stratum.degree() == d) out.terms_.emplace(code, t);
  return out;
}

TautClass& TautClass::operator+=(const TautClass& o) {
  add(o, 1);
  return *this;
}

TautClass& TautClass::operator-=(const TautClass& o) {
  add(o, -1);
  return *this;
}

TautClass& TautClass::operator*=(const Rational& scale) {
  Rational c = scale;
  c.canonicalize();
  if (is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [code, t] : terms_) t.coeff *= c;
  return *this;
}

bool TautClass::operator==(const TautClass& o) const {
  if (space_ != o.space_ || terms_.size() != o.terms_.size()) return false;
  for (auto it = terms_.begin(), jt = o.terms_.begin(); it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second.coeff != jt->second.coeff) return false;
  return true;
}

void TautClass::check_space(const TautClass& o) const {
  if (space_ != o.space_) throw std::invalid_argument("classes live on different spaces");
}

std::string TautClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [code, t] : terms_) {
    if (!out.empty()) out += " + ";
    out += tautcalc::to_string(t.coeff) + "*" + describe(t.stratum);
  }
  return out;
}

TautClass operator+(TautClass a, const TautClass& b) { return a += b; }
TautClass operator-(TautClass a, const TautClass& b) { return a -= b; }
TautClass operator-(TautClass a) { return a *= Rational(-1); }
TautClass operator*(const Rational& c, TautClass a) { return a *= c; }

}  // namespace tautcalc
