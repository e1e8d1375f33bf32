#pragma once

#include <cctype>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "camina/error.hpp"
#include "camina/number_theory.hpp"

namespace camina {

/// Coefficients (constant term first) of the n-th cyclotomic polynomial.
/// Thread-safe cache.
inline std::shared_ptr<const std::vector<std::int64_t>> cyclotomic_polynomial(std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::shared_ptr<const std::vector<std::int64_t>>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto div = cyclotomic_polynomial(d);
    const auto& D = *div;
    const std::size_t dd = D.size() - 1;
    std::vector<std::int64_t> q(poly.size() - dd, 0);
    for (std::size_t i = poly.size(); i-- > dd;) {
      const std::int64_t c = poly[i];
      q[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t k = 0; k <= dd; ++k) poly[i - dd + k] -= c * D[k];
    }
    poly = std::move(q);
  }
  auto ptr = std::make_shared<const std::vector<std::int64_t>>(std::move(poly));
  std::lock_guard lock(mu);
  cache.emplace(n, ptr);
  return ptr;
}

/// An element of Z[zeta_e], stored as its coefficient vector modulo the
/// e-th cyclotomic polynomial (length phi(e)). Always reduced, so equality at
/// a common conductor is coefficient equality.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}

  static Cyclotomic integer(std::int64_t v, std::uint32_t e = 1) {
    Cyclotomic c(e);
    c.coeffs_[0] = v;
    return c;
  }

  /// zeta_e^k
  static Cyclotomic zeta_power(std::uint32_t e, std::int64_t k) {
    k %= static_cast<std::int64_t>(e);
    if (k < 0) k += e;
    std::vector<std::int64_t> poly(static_cast<std::size_t>(k) + 1, 0);
    poly[k] = 1;
    return from_poly(e, std::move(poly));
  }

  /// Reduces an arbitrary polynomial in zeta_e.
  static Cyclotomic from_poly(std::uint32_t e, std::vector<std::int64_t> poly) {
    Cyclotomic c(e);
    c.reduce_into(std::move(poly));
    return c;
  }

  std::uint32_t conductor() const { return e_; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }

  /// Same number expressed over zeta_E, where e divides E.
  Cyclotomic in_conductor(std::uint32_t E) const {
    if (E == e_) return *this;
    if (E % e_ != 0) throw ContractViolation("in_conductor: target conductor is not a multiple");
    const std::uint32_t step = E / e_;
    std::vector<std::int64_t> poly(coeffs_.size() * step + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
    return from_poly(E, std::move(poly));
  }

  bool is_zero() const {
    for (auto c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  bool is_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  std::int64_t to_integer() const {
    if (!is_integer()) throw ContractViolation("cyclotomic value is not a rational integer: " + to_string());
    return coeffs_[0];
  }

  /// Complex conjugate: zeta -> zeta^-1.
  Cyclotomic conj() const { return galois(static_cast<std::int64_t>(e_) - 1); }

  /// Image under zeta -> zeta^k (k coprime to e for a field automorphism).
  Cyclotomic galois(std::int64_t k) const {
    k %= static_cast<std::int64_t>(e_);
    if (k < 0) k += e_;
    std::vector<std::int64_t> poly(e_, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) poly[(i * static_cast<std::size_t>(k)) % e_] += coeffs_[i];
    return from_poly(e_, std::move(poly));
  }

  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    const auto E = std::lcm(a.e_, b.e_);
    Cyclotomic r = a.in_conductor(E);
    const Cyclotomic bb = b.in_conductor(E);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += bb.coeffs_[i];
    return r;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    const auto E = std::lcm(a.e_, b.e_);
    const Cyclotomic aa = a.in_conductor(E);
    const Cyclotomic bb = b.in_conductor(E);
    std::vector<std::int64_t> poly(aa.coeffs_.size() + bb.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < aa.coeffs_.size(); ++i) {
      if (aa.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < bb.coeffs_.size(); ++j) poly[i + j] += aa.coeffs_[i] * bb.coeffs_[j];
    }
    return from_poly(E, std::move(poly));
  }

  friend Cyclotomic operator*(std::int64_t s, const Cyclotomic& a) {
    Cyclotomic r = a;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.e_ == b.e_) return a.coeffs_ == b.coeffs_;
    const auto E = std::lcm(a.e_, b.e_);
    return a.in_conductor(E).coeffs_ == b.in_conductor(E).coeffs_;
  }

  /// Lexicographic order on (conductor, coefficients); used only for
  /// canonical sorting.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.e_ != b.e_) return a.e_ < b.e_;
    return a.coeffs_ < b.coeffs_;
  }

  std::complex<double> to_complex() const {
    std::complex<double> z{0.0, 0.0};
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      z += static_cast<double>(coeffs_[i]) * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(i) / e_);
    return z;
  }

  /// Literal form: an integer, or terms `c`, `z<e>^k`, `-z<e>^k`, `c*z<e>^k`
  /// in increasing k joined by their signs, without spaces.
  std::string to_string() const {
    if (is_integer()) return std::to_string(coeffs_[0]);
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const std::int64_t c = coeffs_[i];
      if (c == 0) continue;
      if (!out.empty() && c > 0) out += '+';
      if (i == 0) {
        out += std::to_string(c);
        continue;
      }
      if (c == -1)
        out += '-';
      else if (c != 1)
        out += std::to_string(c) + '*';
      out += 'z' + std::to_string(e_) + '^' + std::to_string(i);
    }
    return out;
  }

  /// Inverse of to_string. A bare integer gets conductor `default_e`.
  static Cyclotomic parse(const std::string& s, std::uint32_t default_e = 1) {
    std::size_t i = 0;
    std::uint32_t e = 0;
    std::vector<std::pair<std::int64_t, std::uint32_t>> terms;  // (coeff, power)
    auto read_uint = [&](std::uint64_t& v) {
      if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw ParseError("bad cyclotomic literal '" + s + "'", 0);
      v = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) v = v * 10 + static_cast<std::uint64_t>(s[i++] - '0');
    };
    if (s.empty()) throw ParseError("empty cyclotomic literal", 0);
    while (i < s.size()) {
      std::int64_t sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      } else if (!terms.empty()) {
        throw ParseError("bad cyclotomic literal '" + s + "'", 0);
      }
      std::uint64_t coef = 1;
      bool has_coef = false;
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        read_uint(coef);
        has_coef = true;
      }
      if (i < s.size() && (s[i] == '*' || s[i] == 'z')) {
        if (s[i] == '*') {
          if (!has_coef) throw ParseError("bad cyclotomic literal '" + s + "'", 0);
          ++i;
        }
        if (i >= s.size() || s[i] != 'z') throw ParseError("bad cyclotomic literal '" + s + "'", 0);
        ++i;
        std::uint64_t te = 0, k = 0;
        read_uint(te);
        if (i >= s.size() || s[i] != '^') throw ParseError("bad cyclotomic literal '" + s + "'", 0);
        ++i;
        read_uint(k);
        if (te == 0 || (e != 0 && te != e)) throw ParseError("inconsistent conductor in '" + s + "'", 0);
        e = static_cast<std::uint32_t>(te);
        terms.emplace_back(sign * static_cast<std::int64_t>(coef), static_cast<std::uint32_t>(k));
      } else {
        if (!has_coef) throw ParseError("bad cyclotomic literal '" + s + "'", 0);
        terms.emplace_back(sign * static_cast<std::int64_t>(coef), 0u);
      }
    }
    if (e == 0) e = default_e;
    std::vector<std::int64_t> poly(e, 0);
    for (auto [c, k] : terms) poly[k % e] += c;
    return from_poly(e, std::move(poly));
  }

 private:
  explicit Cyclotomic(std::uint32_t e) : e_(e), modulus_(cyclotomic_polynomial(e)), coeffs_(modulus_->size() - 1, 0) {}

  void reduce_into(std::vector<std::int64_t> poly) {
    const auto& M = *modulus_;
    const std::size_t d = M.size() - 1;
    for (std::size_t i = poly.size(); i-- > d;) {
      const std::int64_t c = poly[i];
      if (c == 0) continue;
      for (std::size_t k = 0; k <= d; ++k) poly[i - d + k] -= c * M[k];
    }
    poly.resize(d, 0);
    coeffs_ = std::move(poly);
  }

  std::uint32_t e_;
  std::shared_ptr<const std::vector<std::int64_t>> modulus_;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace camina
