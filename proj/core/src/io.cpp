#include "uhg/io.hpp"

#include <cctype>
#include <vector>

#include "scalar_ops.hpp"

namespace uhg {

namespace {

bool needs_parens(const std::string& s) {
  for (char c : s)
    if (c == '+' || c == '-') return true;
  return false;
}

std::string wrap(const std::string& s) { return needs_parens(s) ? "(" + s + ")" : s; }

}  // namespace

std::string scalar_literal(const Scalar& s) {
  const Field& f = s.field();
  switch (f.kind()) {
    case Field::Kind::rationals:
      return std::get<mpq_class>(ScalarOps::payload(s)).get_str();
    case Field::Kind::prime:
      return std::to_string(std::get<std::uint64_t>(ScalarOps::payload(s)));
    case Field::Kind::extension: {
      const auto& e = ScalarOps::ext(s);
      if (e.b.is_zero()) return scalar_literal(e.a);
      std::string sb = wrap(scalar_literal(e.b)) + "*sqrt(" + scalar_literal(f.radicand()) + ")";
      if (e.a.is_zero()) return sb;
      return wrap(scalar_literal(e.a)) + "+" + sb;
    }
  }
  __builtin_unreachable();
}

namespace {

// Over the rationals, scale canonical coordinates to coprime integers for
// display; other fields print coordinates as-is.
std::vector<std::string> display_coords(const Field& f, const std::vector<Scalar>& v) {
  std::vector<std::string> out;
  if (f.kind() == Field::Kind::rationals) {
    std::vector<mpq_class> qs;
    qs.reserve(v.size());
    for (const auto& s : v) qs.push_back(std::get<mpq_class>(ScalarOps::payload(s)));
    mpz_class lcm = 1;
    for (const auto& q : qs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> ints;
    mpz_class g = 0;
    for (const auto& q : qs) {
      mpz_class n = q.get_num() * (lcm / q.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
      ints.push_back(n);
    }
    if (g == 0) g = 1;
    for (auto& n : ints) out.push_back(mpz_class(n / g).get_str());
    return out;
  }
  for (const auto& s : v) out.push_back(scalar_literal(s));
  return out;
}

std::string triple_literal(const Triple& t, char open, char close) {
  Triple c = canonical3(t);
  auto parts = display_coords(c[0].field(), {c[0], c[1], c[2]});
  std::string out;
  out += open;
  out += parts[0] + ":" + parts[1] + ":" + parts[2];
  out += close;
  return out;
}

}  // namespace

std::string literal(const Point& a) { return triple_literal(a.vec(), '[', ']'); }
std::string literal(const Line& L) { return triple_literal(L.vec(), '(', ')'); }

std::string literal(const Proportion2& tu) {
  Proportion2 c = tu.canonical();
  auto parts = display_coords(c.t().field(), {c.t(), c.u()});
  return parts[0] + ":" + parts[1];
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ScalarParser {
 public:
  ScalarParser(const FieldHandle& f, std::string_view text) : f_(f) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_ += c;
  }

  Scalar parse() {
    Scalar v = expr();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    std::string tok = pos_ < s_.size() ? s_.substr(pos_, 8) : "<end>";
    throw error(errc::parse_error, "scalar parse error (" + why + ") at '" + tok + "'");
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  Scalar expr() {
    Scalar v = term();
    while (peek() == '+' || peek() == '-') {
      char op = s_[pos_++];
      Scalar r = term();
      v = (op == '+') ? v + r : v - r;
    }
    return v;
  }

  Scalar term() {
    Scalar v = factor();
    while (peek() == '*' || peek() == '/') {
      char op = s_[pos_++];
      Scalar r = factor();
      if (op == '/') {
        if (r.is_zero()) fail("division by zero");
        v = v / r;
      } else {
        v = v * r;
      }
    }
    return v;
  }

  Scalar factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    if (s_.compare(pos_, 5, "sqrt(") == 0) {
      pos_ += 5;
      Scalar arg = expr();
      if (!eat(')')) fail("expected ')'");
      auto r = f_->sqrt(arg);
      if (!r) fail("sqrt of a non-square in this field");
      return *r;
    }
    if (eat('(')) {
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      mpz_class n(s_.substr(start, pos_ - start), 10);
      return f_->from_mpz(n);
    }
    fail("expected a number, sqrt or parenthesis");
  }

  FieldHandle f_;
  std::string s_;
  size_t pos_ = 0;
};

std::vector<std::string> split_colons(std::string_view body) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : body) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ':' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string strip(std::string_view text) {
  std::string out;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

Triple parse_triple(const FieldHandle& f, std::string_view text, char open, char close,
                    const char* what) {
  std::string s = strip(text);
  if (s.size() < 2 || s.front() != open || s.back() != close)
    throw error(errc::parse_error, std::string("expected ") + what + " literal delimited by '" +
                                       open + "'...'" + close + "' in '" + s + "'");
  auto parts = split_colons(std::string_view(s).substr(1, s.size() - 2));
  if (parts.size() != 3)
    throw error(errc::parse_error, std::string(what) + " literal needs three coordinates");
  return Triple{ScalarParser(f, parts[0]).parse(), ScalarParser(f, parts[1]).parse(),
                ScalarParser(f, parts[2]).parse()};
}

}  // namespace

Scalar parse_scalar(const FieldHandle& f, std::string_view text) {
  return ScalarParser(f, text).parse();
}

Point parse_point(const FieldHandle& f, std::string_view text) {
  return Point(parse_triple(f, text, '[', ']', "point"));
}

Line parse_line(const FieldHandle& f, std::string_view text) {
  return Line(parse_triple(f, text, '(', ')', "line"));
}

Proportion2 parse_param(const FieldHandle& f, std::string_view text) {
  auto parts = split_colons(strip(text));
  if (parts.size() != 2) throw error(errc::parse_error, "proportion literal needs the form t:u");
  return Proportion2(ScalarParser(f, parts[0]).parse(), ScalarParser(f, parts[1]).parse());
}

}  // namespace uhg
