#pragma once

/**
 * Dense polynomials with arbitrary-precision integer coefficients, together
 * with exact real-root counting (Sturm chains over primitive remainder
 * sequences) and a display-only numeric root finder built on top of it.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cospec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class IntPolynomial {
public:
  IntPolynomial() = default;

  /// coefficients[k] multiplies x^k.
  explicit IntPolynomial(std::vector<BigInt> coefficients) : c_(std::move(coefficients)) { trim(); }

  IntPolynomial(std::initializer_list<long long> coefficients) {
    for (long long v : coefficients)
      c_.emplace_back(v);
    trim();
  }

  static auto monomial(int power, BigInt coefficient = 1) -> IntPolynomial {
    std::vector<BigInt> c(power + 1);
    c[power] = std::move(coefficient);
    return IntPolynomial(std::move(c));
  }

  static auto constant(BigInt value) -> IntPolynomial { return IntPolynomial(std::vector<BigInt>{std::move(value)}); }

  /// -1 for the zero polynomial.
  auto degree() const -> int { return static_cast<int>(c_.size()) - 1; }
  auto is_zero() const -> bool { return c_.empty(); }
  auto coefficients() const -> const std::vector<BigInt>& { return c_; }

  /// Coefficient of x^k; zero outside the stored range.
  auto operator[](int k) const -> BigInt {
    if (k < 0 || k > degree())
      return 0;
    return c_[k];
  }

  auto leading() const -> const BigInt& {
    if (is_zero())
      throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  friend auto operator==(const IntPolynomial&, const IntPolynomial&) -> bool = default;

  friend auto operator+(const IntPolynomial& a, const IntPolynomial& b) -> IntPolynomial {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      c[i] += b.c_[i];
    return IntPolynomial(std::move(c));
  }

  friend auto operator-(const IntPolynomial& a) -> IntPolynomial {
    std::vector<BigInt> c = a.c_;
    for (auto& v : c)
      v = -v;
    return IntPolynomial(std::move(c));
  }

  friend auto operator-(const IntPolynomial& a, const IntPolynomial& b) -> IntPolynomial { return a + (-b); }

  friend auto operator*(const IntPolynomial& a, const IntPolynomial& b) -> IntPolynomial {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0)
        continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(c));
  }

  auto scaled(const BigInt& factor) const -> IntPolynomial {
    std::vector<BigInt> c = c_;
    for (auto& v : c)
      v *= factor;
    return IntPolynomial(std::move(c));
  }

  /// Multiplies by x^k.
  auto shifted(int k) const -> IntPolynomial {
    if (k < 0)
      throw std::invalid_argument("negative shift");
    if (is_zero())
      return {};
    std::vector<BigInt> c(k, BigInt(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return IntPolynomial(std::move(c));
  }

  auto derivative() const -> IntPolynomial {
    if (c_.size() <= 1)
      return {};
    std::vector<BigInt> c(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
      c[k - 1] = c_[k] * static_cast<long long>(k);
    return IntPolynomial(std::move(c));
  }

  /// Non-negative gcd of the coefficients.
  auto content() const -> BigInt {
    BigInt g = 0;
    for (const auto& v : c_)
      g = boost::multiprecision::gcd(g, v);
    return boost::multiprecision::abs(g);
  }

  /// Content removed and leading coefficient made positive.
  auto primitive() const -> IntPolynomial {
    if (is_zero())
      return {};
    BigInt g = content();
    if (leading() < 0)
      g = -g;
    std::vector<BigInt> c = c_;
    for (auto& v : c)
      v /= g;
    return IntPolynomial(std::move(c));
  }

  /// Descending powers with explicit signs, e.g. "x^7 - 6*x^5 + 4*x^3".
  auto to_string() const -> std::string {
    if (is_zero())
      return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const BigInt& v = c_[k];
      if (v == 0)
        continue;
      BigInt mag = boost::multiprecision::abs(v);
      if (first)
        out << (v < 0 ? "-" : "");
      else
        out << (v < 0 ? " - " : " + ");
      first = false;
      if (k == 0) {
        out << mag;
        continue;
      }
      if (mag != 1)
        out << mag << '*';
      out << 'x';
      if (k > 1)
        out << '^' << k;
    }
    return out.str();
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0)
      c_.pop_back();
  }

  std::vector<BigInt> c_;
};

inline auto poly_add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
inline auto poly_sub(const IntPolynomial& a, const IntPolynomial& b) { return a - b; }
inline auto poly_mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }
inline auto poly_scale(const IntPolynomial& p, const BigInt& f) { return p.scaled(f); }
inline auto poly_shift(const IntPolynomial& p, int k) { return p.shifted(k); }

/// Parses "x^7 - 6*x^5 + 4*x^3" style text (the inverse of to_string).
inline auto parse_polynomial(const std::string& text) -> IntPolynomial {
  std::vector<BigInt> c;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ')
      ++i;
  };
  auto fail = [&]() -> IntPolynomial { throw std::invalid_argument("malformed polynomial: " + text); };
  skip();
  if (text.substr(i) == "0")
    return {};
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      return fail();
    }
    skip();
    first = false;
    BigInt mag = 1;
    std::size_t d = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    bool has_digits = i > d;
    if (has_digits)
      mag = BigInt(text.substr(d, i - d));
    int power = 0;
    if (i < text.size() && text[i] == '*') {
      if (!has_digits)
        return fail();
      ++i;
    }
    if (i < text.size() && text[i] == 'x') {
      ++i;
      power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t p = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          ++i;
        if (i == p)
          return fail();
        power = std::stoi(text.substr(p, i - p));
      }
    } else if (!has_digits) {
      return fail();
    }
    if (static_cast<int>(c.size()) <= power)
      c.resize(power + 1);
    c[power] += sign * mag;
    skip();
  }
  return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Division and gcd over Z[x].

namespace detail {

/// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q * b + r.
inline auto pseudo_divide(const IntPolynomial& a, const IntPolynomial& b) -> std::pair<IntPolynomial, IntPolynomial> {
  if (b.is_zero())
    throw std::domain_error("division by zero polynomial");
  if (a.degree() < b.degree())
    return {IntPolynomial{}, a};
  const int db = b.degree();
  const int delta = a.degree() - db;
  const BigInt& lc = b.leading();
  std::vector<BigInt> r = a.coefficients();
  std::vector<BigInt> q(delta + 1);
  for (int k = a.degree(); k >= db; --k) {
    // one step scales everything accumulated so far by lc
    for (auto& v : q)
      v *= lc;
    BigInt t = r[k];
    q[k - db] = t;
    for (int j = 0; j < k; ++j)
      r[j] *= lc;
    r[k] = 0;
    for (int j = 0; j < db; ++j)
      r[k - db + j] -= t * b[j];
  }
  return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

} // namespace detail

/// Exact quotient a / b; requires b to divide a in Q[x] and a, b integral.
inline auto exact_quotient(const IntPolynomial& a, const IntPolynomial& b) -> IntPolynomial {
  auto [q, r] = detail::pseudo_divide(a, b);
  if (!r.is_zero())
    throw std::domain_error("polynomial division is not exact");
  const int delta = a.degree() - b.degree();
  if (delta < 0)
    return {};
  BigInt scale = boost::multiprecision::pow(b.leading(), static_cast<unsigned>(delta + 1));
  std::vector<BigInt> c = q.coefficients();
  for (auto& v : c) {
    if (v % scale != 0)
      throw std::domain_error("quotient is not integral");
    v /= scale;
  }
  return IntPolynomial(std::move(c));
}

/// Primitive gcd with positive leading coefficient.
inline auto poly_gcd(IntPolynomial a, IntPolynomial b) -> IntPolynomial {
  a = a.primitive();
  b = b.primitive();
  if (a.degree() < b.degree())
    std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = detail::pseudo_divide(a, b).second;
    a = std::move(b);
    b = r.primitive();
  }
  return a.primitive();
}

inline auto square_free_part(const IntPolynomial& p) -> IntPolynomial {
  if (p.is_zero())
    throw std::domain_error("square-free part of zero polynomial");
  if (p.degree() == 0)
    return IntPolynomial{1};
  IntPolynomial g = poly_gcd(p, p.derivative());
  return exact_quotient(p.primitive(), g).primitive();
}

// ---------------------------------------------------------------------------
// Exact sign evaluation and Sturm chains.

/// Sign of p at the rational point t, computed as sign(den^d * p(num/den)).
inline auto eval_sign(const IntPolynomial& p, const Rational& t) -> int {
  if (p.is_zero())
    return 0;
  const BigInt num = boost::multiprecision::numerator(t);
  const BigInt den = boost::multiprecision::denominator(t);
  // homogeneous Horner: acc = sum_k c_k num^k den^(d-k)
  BigInt acc = p.leading();
  BigInt den_pow = den;
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc = acc * num + p[k] * den_pow;
    den_pow *= den;
  }
  return acc > 0 ? 1 : (acc < 0 ? -1 : 0);
}

class SturmChain {
public:
  /// Builds the chain of the square-free part of p.
  explicit SturmChain(const IntPolynomial& p) {
    if (p.is_zero())
      throw std::domain_error("Sturm chain of zero polynomial");
    chain_.push_back(square_free_part(p));
    if (chain_[0].degree() == 0)
      return;
    chain_.push_back(chain_[0].derivative().primitive());
    while (chain_.back().degree() > 0) {
      const IntPolynomial& prev = chain_[chain_.size() - 2];
      const IntPolynomial& cur = chain_.back();
      IntPolynomial r = detail::pseudo_divide(prev, cur).second;
      if (r.is_zero())
        break;
      const int delta = prev.degree() - cur.degree();
      const bool scale_negative = cur.leading() < 0 && (delta + 1) % 2 == 1;
      // -rem(prev, cur) up to a positive factor
      IntPolynomial next = scale_negative ? r : -r;
      std::vector<BigInt> c = next.coefficients();
      const BigInt g = next.content();
      for (auto& v : c)
        v /= g;
      chain_.emplace_back(std::move(c));
    }
  }

  auto square_free() const -> const IntPolynomial& { return chain_.front(); }
  auto length() const -> std::size_t { return chain_.size(); }

  auto variations_at(const Rational& t) const -> int {
    int count = 0;
    int last = 0;
    for (const auto& s : chain_) {
      int sign = eval_sign(s, t);
      if (sign == 0)
        continue;
      if (last != 0 && sign != last)
        ++count;
      last = sign;
    }
    return count;
  }

  auto variations_at_pos_inf() const -> int {
    int count = 0;
    int last = 0;
    for (const auto& s : chain_) {
      int sign = s.leading() > 0 ? 1 : -1;
      if (last != 0 && sign != last)
        ++count;
      last = sign;
    }
    return count;
  }

  auto variations_at_neg_inf() const -> int {
    int count = 0;
    int last = 0;
    for (const auto& s : chain_) {
      int sign = s.leading() > 0 ? 1 : -1;
      if (s.degree() % 2 == 1)
        sign = -sign;
      if (last != 0 && sign != last)
        ++count;
      last = sign;
    }
    return count;
  }

  /// Distinct roots in the half-open interval (a, b].
  auto roots_in(const Rational& a, const Rational& b) const -> int { return variations_at(a) - variations_at(b); }

  auto roots_above(const Rational& t) const -> int { return variations_at(t) - variations_at_pos_inf(); }

  auto distinct_real_roots() const -> int { return variations_at_neg_inf() - variations_at_pos_inf(); }

private:
  std::vector<IntPolynomial> chain_;
};

struct RootCount {
  int distinct_above = 0;
  Rational threshold;
};

inline auto count_distinct_roots_above(const IntPolynomial& p, const Rational& t) -> RootCount {
  return {SturmChain(p).roots_above(t), t};
}

namespace detail {

/// Integer B with every real root of p inside (-B, B).
inline auto root_bound(const IntPolynomial& p) -> BigInt {
  BigInt lc = boost::multiprecision::abs(p.leading());
  BigInt best = 0;
  for (int k = 0; k < p.degree(); ++k) {
    BigInt q = boost::multiprecision::abs(p[k]) / lc + 1;
    best = std::max(best, q);
  }
  return best + 1;
}

struct IsolatingInterval {
  Rational lo; // exclusive
  Rational hi; // inclusive
};

inline void isolate(const SturmChain& chain, Rational lo, Rational hi, int count,
                    std::vector<IsolatingInterval>& out) {
  if (count == 0)
    return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  int left = chain.roots_in(lo, mid);
  isolate(chain, lo, mid, left, out);
  isolate(chain, mid, hi, count - left, out);
}

} // namespace detail

/// All real roots with multiplicity, ascending, to about 1e-9. Display only;
/// every decision in the toolkit goes through the exact Sturm counts.
inline auto numeric_roots(const IntPolynomial& p, double tolerance = 1e-10) -> std::vector<double> {
  if (p.is_zero())
    throw std::domain_error("roots of zero polynomial");
  std::vector<double> out;
  if (p.degree() == 0)
    return out;
  SturmChain chain(p);
  BigInt bound = detail::root_bound(chain.square_free());
  std::vector<detail::IsolatingInterval> intervals;
  Rational lo(-bound), hi(bound);
  detail::isolate(chain, lo, hi, chain.roots_in(lo, hi), intervals);

  // Layered square-free parts: the k-th layer vanishes exactly at roots of
  // multiplicity greater than k.
  std::vector<SturmChain> layers;
  IntPolynomial rest = p.primitive();
  while (rest.degree() > 0) {
    layers.emplace_back(rest);
    rest = exact_quotient(rest, layers.back().square_free());
  }

  const Rational tol(tolerance);
  for (auto iv : intervals) {
    int multiplicity = 0;
    for (const auto& layer : layers)
      if (layer.roots_in(iv.lo, iv.hi) > 0)
        ++multiplicity;
    while (iv.hi - iv.lo > tol) {
      if (eval_sign(chain.square_free(), iv.hi) == 0) {
        iv.lo = iv.hi;
        break;
      }
      Rational mid = (iv.lo + iv.hi) / 2;
      if (chain.roots_in(iv.lo, mid) == 1)
        iv.hi = mid;
      else
        iv.lo = mid;
    }
    double root = ((iv.lo + iv.hi) / 2).convert_to<double>();
    out.insert(out.end(), multiplicity, root);
  }
  return out;
}

} // namespace cospec
