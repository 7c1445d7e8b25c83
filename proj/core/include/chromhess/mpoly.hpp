#ifndef CHROMHESS_MPOLY_HPP
#define CHROMHESS_MPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "chromhess/rational.hpp"

namespace chromhess {

/// Which set of indeterminates a polynomial lives in.
enum class VarFamily { L, R };

inline const char* family_name(VarFamily f) {
  return f == VarFamily::L ? "L" : "R";
}

/// Graded lexicographic order on exponent vectors: lower total degree first,
/// ties broken lexicographically.  Gives every MPoly a deterministic term
/// order; the leading term is the last one.
struct GrlexLess {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Multivariate polynomial over Rational in n indeterminates tagged with a
/// family (L or R).  No zero coefficients are stored.
class MPoly {
public:
  using TermMap = std::map<std::vector<int>, Rational, GrlexLess>;

  MPoly(int nvars, VarFamily family) : nvars_(nvars), family_(family) {}

  static MPoly constant(int nvars, VarFamily family, const Rational& c);
  static MPoly variable(int nvars, VarFamily family, int i);
  /// X_i - X_j.
  static MPoly difference(int nvars, VarFamily family, int i, int j);

  int nvars() const { return nvars_; }
  VarFamily family() const { return family_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;

  void add_term(const std::vector<int>& exponents, const Rational& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const Rational& c) const;

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.family_ == b.family_ &&
           a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Substitutes X_i := X_j (all occurrences of variable i become j).
  MPoly substituted(int i, int j) const;

  /// True iff this vanishes on the hyperplane X_i = X_j, i.e. is divisible
  /// by X_i - X_j.  Checked by substitution, not division.
  bool divisible_by_difference(int i, int j) const;

  /// Replaces each variable X_i by X_{sigma(i)}; sigma given as the image
  /// vector of a permutation of {0..n-1}.  Optionally moves the result to
  /// the other family.
  MPoly permuted(const std::vector<int>& sigma, VarFamily retag) const;
  MPoly permuted(const std::vector<int>& sigma) const {
    return permuted(sigma, family_);
  }

  /// Exact quotient g / d; throws NotDivisible when none exists and
  /// DivisionByZero when d = 0.
  static MPoly exact_divide(const MPoly& g, const MPoly& d);

  std::string str() const;

private:
  void check_compatible(const MPoly& o) const;
  int nvars_;
  VarFamily family_;
  TermMap terms_;
};

}  // namespace chromhess

#endif
