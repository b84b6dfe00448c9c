#pragma once

// Sparse bivariate Laurent polynomials in (v, z) with exact integer
// coefficients. Used for HOMFLYPT values; Conway values live in the same
// type with every v-exponent equal to zero.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace linkalt {

using BigInt = boost::multiprecision::cpp_int;

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Monomial {
  int v = 0;
  int z = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

class SkeinPolynomial {
 public:
  // Ordered by (z desc, v desc): the print order.
  struct PrintOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
      if (a.z != b.z) return a.z > b.z;
      return a.v > b.v;
    }
  };
  using Terms = std::map<Monomial, BigInt, PrintOrder>;

  SkeinPolynomial() = default;
  explicit SkeinPolynomial(BigInt constant) { add_term({0, 0}, std::move(constant)); }

  static SkeinPolynomial monomial(int v_exp, int z_exp, BigInt coeff = 1) {
    SkeinPolynomial p;
    p.add_term({v_exp, z_exp}, std::move(coeff));
    return p;
  }
  static SkeinPolynomial one() { return SkeinPolynomial(BigInt(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coefficient(int v_exp, int z_exp) const {
    auto it = terms_.find({v_exp, z_exp});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(Monomial m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SkeinPolynomial& operator+=(const SkeinPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SkeinPolynomial& operator-=(const SkeinPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend SkeinPolynomial operator+(SkeinPolynomial a, const SkeinPolynomial& b) { return a += b; }
  friend SkeinPolynomial operator-(SkeinPolynomial a, const SkeinPolynomial& b) { return a -= b; }
  friend SkeinPolynomial operator-(const SkeinPolynomial& a) { return SkeinPolynomial() - a; }

  friend SkeinPolynomial operator*(const SkeinPolynomial& a, const SkeinPolynomial& b) {
    SkeinPolynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term({ma.v + mb.v, ma.z + mb.z}, ca * cb);
    return r;
  }
  SkeinPolynomial& operator*=(const SkeinPolynomial& o) { return *this = *this * o; }

  // Multiply by c * v^dv * z^dz.
  SkeinPolynomial shifted(int dv, int dz, const BigInt& c = 1) const {
    SkeinPolynomial r;
    for (const auto& [m, k] : terms_) r.add_term({m.v + dv, m.z + dz}, k * c);
    return r;
  }

  // P(v, z) -> P(1, z).
  SkeinPolynomial at_v_one() const {
    SkeinPolynomial r;
    for (const auto& [m, c] : terms_) r.add_term({0, m.z}, c);
    return r;
  }
  // P(v, z) -> P(v, -z).
  SkeinPolynomial negate_z() const {
    SkeinPolynomial r;
    for (const auto& [m, c] : terms_) r.add_term(m, (m.z % 2 != 0) ? BigInt(-c) : c);
    return r;
  }
  // P(v, z) -> P(v^-1, z).
  SkeinPolynomial invert_v() const {
    SkeinPolynomial r;
    for (const auto& [m, c] : terms_) r.add_term({-m.v, m.z}, c);
    return r;
  }

  bool depends_on_v() const {
    for (const auto& [m, c] : terms_)
      if (m.v != 0) return true;
    return false;
  }

  friend bool operator==(const SkeinPolynomial&, const SkeinPolynomial&) = default;

  std::string to_string() const;
  static SkeinPolynomial parse(std::string_view text);

 private:
  Terms terms_;
};

// Highest z-degree; throws on the zero polynomial.
inline int maxdeg(const SkeinPolynomial& p) {
  if (p.is_zero()) throw PolyError("maxdeg of the zero polynomial");
  return p.terms().begin()->first.z;
}

// Coefficient of z^maxdeg in P(1, z).
inline BigInt leading_coefficient(const SkeinPolynomial& p) {
  if (p.is_zero()) throw PolyError("leading coefficient of the zero polynomial");
  SkeinPolynomial q = p.at_v_one();
  if (q.is_zero()) throw PolyError("leading coefficient of the zero polynomial");
  return q.terms().begin()->second;
}

namespace detail {

inline std::string power_string(char var, int e) {
  if (e == 0) return {};
  if (e == 1) return std::string(1, var);
  return std::string(1, var) + "^" + std::to_string(e);
}

}  // namespace detail

inline std::string SkeinPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string vars;
    std::string vp = detail::power_string('v', m.v);
    std::string zp = detail::power_string('z', m.z);
    vars = vp;
    if (!zp.empty()) vars += (vars.empty() ? "" : "*") + zp;
    if (vars.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += vars;
    } else {
      out += mag.str() + "*" + vars;
    }
  }
  return out;
}

// Accepts the printed form plus any whitespace and term order, e.g.
// "z^4 + 5*z^2 + 1" or "v^-1*z^-1 - v*z^-1".
inline SkeinPolynomial SkeinPolynomial::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw PolyError("empty polynomial text");
  if (s == "0") return {};

  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw PolyError("polynomial parse error at " + std::to_string(pos) + ": " + why);
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return s.substr(start, pos - start);
  };

  SkeinPolynomial result;
  bool first = true;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    BigInt coeff = 1;
    Monomial m;
    bool have_factor = false;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (have_factor) {
        if (s[pos] != '*') fail("expected '*'");
        ++pos;
      }
      if (pos >= s.size()) fail("dangling '*'");
      char ch = s[pos];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= BigInt(read_int());
      } else if (ch == 'v' || ch == 'z') {
        ++pos;
        int e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          int esign = 1;
          if (pos < s.size() && s[pos] == '-') {
            esign = -1;
            ++pos;
          }
          e = esign * std::stoi(read_int());
        }
        (ch == 'v' ? m.v : m.z) += e;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      have_factor = true;
    }
    if (!have_factor) fail("empty term");
    result.add_term(m, sign * coeff);
  }
  return result;
}

}  // namespace linkalt
