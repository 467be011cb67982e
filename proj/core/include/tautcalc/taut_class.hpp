#pragma once

#include <map>
#include <string>
#include <vector>

#include "tautcalc/decorated.hpp"
#include "tautcalc/rational.hpp"

namespace tautcalc {

/// Finite formal sum of decorated strata on a fixed Mbar_{g,n}, exact coefficients.
///
/// Terms are stored under their canonical code, so isomorphic decorated strata
/// merge and iteration order is stable. Zero coefficients are never stored, and
/// terms that vanish for dimension reasons (total degree above dim, or a vertex
/// decorated beyond its own dimension) are dropped on insertion.
class TautClass {
 public:
  struct Term {
    DecoratedStratum stratum;  // canonical representative
    Rational coeff;
  };

  explicit TautClass(MarkedSpace space);

  static TautClass fundamental(MarkedSpace space);
  static TautClass of(const DecoratedStratum& s, const Rational& coeff = 1);

  MarkedSpace space() const { return space_; }
  const std::map<std::string, Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const DecoratedStratum& s, const Rational& coeff);
  void add(const TautClass& other, const Rational& scale = 1);

  /// Common degree of all terms; throws std::domain_error for mixed degree.
  /// The zero class reports `fallback`.
  int degree(int fallback = 0) const;
  TautClass degree_part(int d) const;

  TautClass& operator+=(const TautClass& o);
  TautClass& operator-=(const TautClass& o);
  TautClass& operator*=(const Rational& c);

  /// Term-by-term identity (not numerical equivalence).
  bool operator==(const TautClass& o) const;

  std::string to_string() const;

 private:
  void check_space(const TautClass& o) const;
  void insert_canonical(CanonicalStratum cs, const Rational& coeff);

  MarkedSpace space_;
  std::map<std::string, Term> terms_;
};

TautClass operator+(TautClass a, const TautClass& b);
TautClass operator-(TautClass a, const TautClass& b);
TautClass operator-(TautClass a);
TautClass operator*(const Rational& c, TautClass a);

}  // namespace tautcalc
