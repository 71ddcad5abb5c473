#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace orthoweave {

// Reduced p/q with q >= 0; infinity is 1/0.
struct Slope {
  mpz_class p = 0, q = 1;

  Slope() = default;
  Slope(mpz_class p_, mpz_class q_);  // normalizes; throws on 0/0
  static Slope infinity() { return Slope(1, 0); }
  bool is_infinite() const { return q == 0; }
  Slope negated() const { return Slope(-p, q); }
  Slope reciprocal() const { return Slope(q, p); }
  std::string to_string() const;  // "p/q" or "inf"
  friend bool operator==(const Slope&, const Slope&) = default;
};

enum class Elementary { T0, TInf, T1, TMinus1 };

struct TangleExpr;
using ExprPtr = std::shared_ptr<const TangleExpr>;

struct TangleExpr {
  enum class Kind { Elementary, Rational, Fraction, Sum, Neg, Flip, Pretzel, ClosureN, ClosureD, Braid };

  Kind kind = Kind::Elementary;
  Elementary elementary = Elementary::TInf;
  std::vector<long> coeffs;  // Rational, Pretzel
  mpz_class p = 0, q = 1;    // Fraction
  ExprPtr left, right;       // unary nodes use left
  std::string word;          // Braid

  bool operator==(const TangleExpr& o) const;
};

ExprPtr make_elementary(Elementary e);
ExprPtr make_rational(std::vector<long> coeffs);
ExprPtr make_fraction(mpz_class p, mpz_class q);
ExprPtr make_unary(TangleExpr::Kind k, ExprPtr x);
ExprPtr make_sum(ExprPtr l, ExprPtr r);
ExprPtr make_pretzel(std::vector<long> qs);
ExprPtr make_braid(std::string word);

// Throws ParseError (syntax, semantic) with 1-based line/column.
ExprPtr parse(const std::string& text);
std::string print(const ExprPtr& e);

bool is_rational(const ExprPtr& e);
Slope slope_of(const ExprPtr& e);

Slope cf_eval(const std::vector<long>& coeffs);
std::vector<long> cf_expand(const Slope& s, bool positive);

// Strand count of a braid word: 1 + highest generator index.
int braid_strands(const std::string& word);

}  // namespace orthoweave
