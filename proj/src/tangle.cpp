#include "orthoweave/tangle.hpp"

#include <cctype>
#include <climits>

#include "orthoweave/errors.hpp"

namespace orthoweave {

Slope::Slope(mpz_class p_, mpz_class q_) : p(std::move(p_)), q(std::move(q_)) {
  if (p == 0 && q == 0) throw DomainError("slope 0/0");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (q == 0) {
    p = 1;
    return;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  p /= g;
  q /= g;
}

std::string Slope::to_string() const {
  if (is_infinite()) return "inf";
  return p.get_str() + "/" + q.get_str();
}

bool TangleExpr::operator==(const TangleExpr& o) const {
  auto same_child = [](const ExprPtr& a, const ExprPtr& b) { return (!a && !b) || (a && b && *a == *b); };
  return kind == o.kind && elementary == o.elementary && coeffs == o.coeffs && p == o.p && q == o.q &&
         word == o.word && same_child(left, o.left) && same_child(right, o.right);
}

ExprPtr make_elementary(Elementary e) {
  auto n = std::make_shared<TangleExpr>();
  n->kind = TangleExpr::Kind::Elementary;
  n->elementary = e;
  return n;
}

ExprPtr make_rational(std::vector<long> coeffs) {
  if (coeffs.empty()) throw DomainError("rational tangle needs at least one coefficient");
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    if (coeffs[i] == 0) throw DomainError("interior continued-fraction coefficient is zero");
  auto n = std::make_shared<TangleExpr>();
  n->kind = TangleExpr::Kind::Rational;
  n->coeffs = std::move(coeffs);
  return n;
}

ExprPtr make_fraction(mpz_class p, mpz_class q) {
  if (q == 0) throw DomainError("fraction with zero denominator; write 'inf'");
  Slope s(std::move(p), std::move(q));
  auto n = std::make_shared<TangleExpr>();
  n->kind = TangleExpr::Kind::Fraction;
  n->p = s.p;
  n->q = s.q;
  return n;
}

ExprPtr make_unary(TangleExpr::Kind k, ExprPtr x) {
  auto n = std::make_shared<TangleExpr>();
  n->kind = k;
  n->left = std::move(x);
  return n;
}

ExprPtr make_sum(ExprPtr l, ExprPtr r) {
  auto n = std::make_shared<TangleExpr>();
  n->kind = TangleExpr::Kind::Sum;
  n->left = std::move(l);
  n->right = std::move(r);
  return n;
}

ExprPtr make_pretzel(std::vector<long> qs) {
  if (qs.empty()) throw DomainError("pretzel needs at least one entry");
  for (long v : qs)
    if (v == 0) throw DomainError("pretzel entries must be nonzero");
  auto n = std::make_shared<TangleExpr>();
  n->kind = TangleExpr::Kind::Pretzel;
  n->coeffs = std::move(qs);
  return n;
}

ExprPtr make_braid(std::string word) {
  if (word.empty()) throw DomainError("empty braid word");
  for (char c : word)
    if (!std::isalpha(static_cast<unsigned char>(c))) throw DomainError("braid letters must be a-z or A-Z");
  auto n = std::make_shared<TangleExpr>();
  n->kind = TangleExpr::Kind::Braid;
  n->word = std::move(word);
  return n;
}

int braid_strands(const std::string& word) {
  int top = 0;
  for (char c : word) top = std::max(top, std::tolower(static_cast<unsigned char>(c)) - 'a' + 1);
  return top + 1;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  struct Mark {
    std::size_t pos;
    int line, col;
  };

  [[noreturn]] void fail(const std::string& msg) { fail_at(here(), msg); }
  [[noreturn]] void fail_at(Mark m, const std::string& msg) {
    throw ParseError(msg + " at line " + std::to_string(m.line) + ", column " + std::to_string(m.col), m.line,
                     m.col);
  }

  Mark here() const { return {pos_, line_, col_}; }

  void advance() {
    if (s_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  std::string ident() {
    skip_ws();
    std::string id;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      id += s_[pos_];
      advance();
    }
    return id;
  }

  mpz_class integer() {
    skip_ws();
    Mark start = here();
    std::string digits;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      digits += '-';
      advance();
      skip_ws();
    }
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      digits += s_[pos_];
      advance();
    }
    if (digits.empty() || digits == "-") fail_at(start, "expected an integer");
    return mpz_class(digits, 10);
  }

  long small_integer() {
    Mark start = (skip_ws(), here());
    mpz_class v = integer();
    if (!v.fits_slong_p()) fail_at(start, "integer out of range");
    return v.get_si();
  }

  // frac := int '/' posint, with the int already read
  ExprPtr fraction_rest(const mpz_class& p, Mark start) {
    skip_ws();
    Mark qm = here();
    mpz_class q = integer();
    if (q <= 0) fail_at(qm, "fraction denominator must be positive; use 'inf' for infinity");
    try {
      return make_fraction(p, q);
    } catch (const DomainError& e) {
      fail_at(start, e.what());
    }
  }

  std::vector<long> int_list() {
    std::vector<long> v{small_integer()};
    while (accept(',')) v.push_back(small_integer());
    return v;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (accept('+')) e = make_sum(e, term());
    return e;
  }

  ExprPtr term() {
    char c = peek();
    Mark start = here();
    if (c == '\0') fail("unexpected end of input");
    if (c == '-') {
      advance();
      char n = peek();
      if (std::isdigit(static_cast<unsigned char>(n))) {
        mpz_class v = -integer();
        expect('/');
        return fraction_rest(v, start);
      }
      return make_unary(TangleExpr::Kind::Neg, term());
    }
    if (c == '(') {
      advance();
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class v = integer();
      expect('/');
      return fraction_rest(v, start);
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
    std::string id = ident();
    if (id == "inf") return make_elementary(Elementary::TInf);
    if (id == "flip" || id == "N" || id == "D") {
      expect('(');
      ExprPtr inner = expr();
      expect(')');
      auto kind = id == "flip" ? TangleExpr::Kind::Flip
                               : (id == "N" ? TangleExpr::Kind::ClosureN : TangleExpr::Kind::ClosureD);
      return make_unary(kind, inner);
    }
    if (id == "t") {
      expect('(');
      Mark inner = here();
      skip_ws();
      inner = here();
      if (std::isalpha(static_cast<unsigned char>(peek()))) {
        if (ident() != "inf") fail_at(inner, "expected an integer or 'inf'");
        expect(')');
        return make_elementary(Elementary::TInf);
      }
      mpz_class first = integer();
      if (accept('/')) {
        ExprPtr f = fraction_rest(first, inner);
        expect(')');
        return f;
      }
      if (!first.fits_slong_p()) fail_at(inner, "integer out of range");
      std::vector<long> coeffs{first.get_si()};
      while (accept(',')) {
        skip_ws();
        Mark m = here();
        long v = small_integer();
        if (v == 0) fail_at(m, "interior continued-fraction coefficient is zero");
        coeffs.push_back(v);
      }
      expect(')');
      return make_rational(std::move(coeffs));
    }
    if (id == "pretzel") {
      expect('(');
      skip_ws();
      Mark m = here();
      auto v = int_list();
      expect(')');
      for (long x : v)
        if (x == 0) fail_at(m, "pretzel entries must be nonzero");
      return make_pretzel(std::move(v));
    }
    if (id == "braid") {
      expect('(');
      expect('"');
      std::string w;
      Mark m = here();
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
        w += s_[pos_];
        advance();
      }
      if (w.empty()) fail_at(m, "braid word must be letters a-z / A-Z");
      if (pos_ >= s_.size() || s_[pos_] != '"') fail("expected '\"'");
      advance();
      expect(')');
      return make_braid(std::move(w));
    }
    fail_at(start, "unknown name '" + id + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

std::string join(const std::vector<long>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string print(const ExprPtr& e) {
  using K = TangleExpr::Kind;
  auto wrapped = [](const ExprPtr& x) { return x->kind == K::Sum ? "(" + print(x) + ")" : print(x); };
  switch (e->kind) {
    case K::Elementary:
      switch (e->elementary) {
        case Elementary::TInf: return "inf";
        case Elementary::T0: return "t(0)";
        case Elementary::T1: return "t(1)";
        case Elementary::TMinus1: return "t(-1)";
      }
      break;
    case K::Rational: return "t(" + join(e->coeffs) + ")";
    case K::Fraction: return "t(" + e->p.get_str() + "/" + e->q.get_str() + ")";
    case K::Sum: return print(e->left) + " + " + wrapped(e->right);
    case K::Neg: return "-" + wrapped(e->left);
    case K::Flip: return "flip(" + print(e->left) + ")";
    case K::ClosureN: return "N(" + print(e->left) + ")";
    case K::ClosureD: return "D(" + print(e->left) + ")";
    case K::Pretzel: return "pretzel(" + join(e->coeffs) + ")";
    case K::Braid: return "braid(\"" + e->word + "\")";
  }
  return "";
}

bool is_rational(const ExprPtr& e) {
  using K = TangleExpr::Kind;
  switch (e->kind) {
    case K::Elementary:
    case K::Rational:
    case K::Fraction: return true;
    case K::Neg:
    case K::Flip: return is_rational(e->left);
    default: return false;
  }
}

Slope slope_of(const ExprPtr& e) {
  using K = TangleExpr::Kind;
  switch (e->kind) {
    case K::Elementary:
      switch (e->elementary) {
        case Elementary::T0: return Slope(0, 1);
        case Elementary::TInf: return Slope::infinity();
        case Elementary::T1: return Slope(1, 1);
        case Elementary::TMinus1: return Slope(-1, 1);
      }
      break;
    case K::Rational: return cf_eval(e->coeffs);
    case K::Fraction: return Slope(e->p, e->q);
    case K::Neg: return slope_of(e->left).negated();
    case K::Flip: return slope_of(e->left).reciprocal();
    default: break;
  }
  throw DomainError("slope_of needs a rational tangle expression");
}

Slope cf_eval(const std::vector<long>& coeffs) {
  if (coeffs.empty()) throw DomainError("empty continued fraction");
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    if (coeffs[i] == 0) throw DomainError("interior continued-fraction coefficient is zero");
  // Fold from the right: a + 1/(p/q) = (a p + q)/p, total over the extended line.
  mpz_class p = coeffs.back(), q = 1;
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    mpz_class np = mpz_class(coeffs[i]) * p + q;
    q = p;
    p = np;
  }
  return Slope(p, q);
}

std::vector<long> cf_expand(const Slope& s, bool positive) {
  if (s.is_infinite()) throw DomainError("cannot expand the infinite slope");
  if (s.p < 0) {
    if (positive) throw DomainError("negative slope has no positive expansion; mirror instead");
    auto v = cf_expand(s.negated(), true);
    for (auto& a : v) a = -a;
    return v;
  }
  std::vector<long> out;
  mpz_class p = s.p, q = s.q;
  do {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (!a.fits_slong_p()) throw DomainError("continued-fraction coefficient out of range");
    out.push_back(a.get_si());
    mpz_class rem = p - a * q;
    p = q;
    q = rem;
  } while (q != 0);
  return out;
}

}  // namespace orthoweave
