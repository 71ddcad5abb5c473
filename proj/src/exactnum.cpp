#include "orthoweave/exactnum.hpp"

#include <cstdlib>
#include <functional>

#include "orthoweave/errors.hpp"

namespace orthoweave {

Rat::Rat(const mpz_class& n, const mpz_class& d) {
  if (d == 0) throw DomainError("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view s) {
  auto parse_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) throw DomainError("malformed rational '" + std::string(t) + "'");
    for (std::size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') throw DomainError("malformed rational '" + std::string(t) + "'");
    std::string str(t[0] == '+' ? t.substr(1) : t);
    return mpz_class(str, 10);
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(s), 1);
  mpz_class d = parse_int(s.substr(slash + 1));
  if (d == 0) throw DomainError("rational with zero denominator");
  return Rat(parse_int(s.substr(0, slash)), d);
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rat::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_str();
}

std::size_t Rat::hash() const {
  std::size_t h = std::hash<std::string>{}(v_.get_num().get_str(16));
  return h * 1000003u ^ std::hash<std::string>{}(v_.get_den().get_str(16));
}

int QuadExt::sign() const {
  int sa = a_.sign(), sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  return sa * norm().sign();
}

int sign(const QuadExt& x) { return x.sign(); }

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Rat n = norm();  // nonzero since √2 is irrational
  return QuadExt(a_ / n, -b_ / n);
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QuadExt();
  if (b_.is_zero()) {
    b_ = a_ * o.b_;
    a_ *= o.a_;
    return *this;
  }
  if (o.b_.is_zero()) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  Rat na = a_ * o.a_ + Rat(2) * b_ * o.b_;
  Rat nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool lex_less(const QuadExt& x, const QuadExt& y) {
  if (x.a() != y.a()) return x.a() < y.a();
  return x.b() < y.b();
}

double QuadExt::to_double() const { return a_.to_double() + b_.to_double() * 1.4142135623730951; }

mpz_class QuadExt::floor() const {
  // Estimate with a generous mpf, then settle by exact sign tests.
  std::size_t bits = 64;
  for (const Rat* r : {&a_, &b_}) {
    bits += mpz_sizeinbase(r->num().get_mpz_t(), 2) + mpz_sizeinbase(r->den().get_mpz_t(), 2);
  }
  mpf_class s2(2, bits), av(a_.value(), bits), bv(b_.value(), bits);
  s2 = ::sqrt(s2);
  mpf_class est(av + bv * s2, bits);
  mpf_class fl(0, bits);
  mpf_floor(fl.get_mpf_t(), est.get_mpf_t());
  mpz_class g(fl);
  while ((*this - QuadExt(Rat(g, 1))).sign() < 0) g -= 1;
  while ((*this - QuadExt(Rat(g + 1, 1))).sign() >= 0) g += 1;
  return g;
}

std::string QuadExt::approx(int digits) const {
  if (digits < 1) throw DomainError("approx needs digits >= 1");
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  QuadExt y = *this * QuadExt(Rat(scale, 1));
  bool neg = y.sign() < 0;
  if (neg) y = -y;
  mpz_class n = (y + QuadExt(Rat(1, 2))).floor();
  std::string s = n.get_str();
  if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  if (neg && n != 0) s.insert(0, "-");
  return s;
}

std::string approx(const QuadExt& x, int digits) { return x.approx(digits); }

namespace {

std::optional<Rat> rational_sqrt(const Rat& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class n = r.num(), d = r.den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rat(sn, sd);
}

}  // namespace

std::optional<QuadExt> QuadExt::sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (is_zero()) return QuadExt();
  std::optional<QuadExt> root;
  if (b_.is_zero()) {
    if (auto c = rational_sqrt(a_)) root = QuadExt(*c);
    else if (auto d = rational_sqrt(a_ / Rat(2))) root = QuadExt(Rat(0), *d);
  } else if (auto n = rational_sqrt(norm())) {
    for (const Rat& c2 : {(a_ + *n) / Rat(2), (a_ - *n) / Rat(2)}) {
      auto c = rational_sqrt(c2);
      if (!c || c->is_zero()) continue;
      root = QuadExt(*c, b_ / (Rat(2) * *c));
      break;
    }
  }
  if (root && root->sign() < 0) root = -*root;
  return root;
}

std::string QuadExt::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string s = a_.is_zero() ? "" : a_.to_string() + (b_.sign() > 0 ? "+" : "");
  return s + b_.to_string() + "*sqrt2";
}

std::size_t QuadExt::hash() const { return a_.hash() * 31u + b_.hash(); }

int output_precision() {
  if (const char* env = std::getenv("ORTHOWEAVE_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 200) return static_cast<int>(v);
  }
  return 12;
}

}  // namespace orthoweave
