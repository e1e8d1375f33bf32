#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "camina/error.hpp"
#include "camina/number_theory.hpp"

namespace camina {

/// GF(p^n) with elements encoded as integers sum c_i p^i (c_i the polynomial
/// coefficients). The modulus is the least monic irreducible polynomial of
/// degree n under the same encoding of its lower coefficients.
class GaloisField {
 public:
  explicit GaloisField(std::uint64_t q) : q_(q) {
    const auto [p, n] = prime_power(q);
    if (p == 0) throw NotPrimePower("GF(" + std::to_string(q) + "): order is not a prime power");
    p_ = static_cast<std::uint32_t>(p);
    n_ = n;
    modulus_ = least_irreducible();
    mul_.assign(q_ * q_, 0);
    for (std::uint64_t a = 0; a < q_; ++a)
      for (std::uint64_t b = 0; b < q_; ++b) mul_[a * q_ + b] = slow_mul(a, b);
  }

  std::uint64_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  unsigned degree() const { return n_; }
  /// Lower coefficients c_0..c_{n-1} of the monic modulus.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0, scale = 1;
    for (unsigned i = 0; i < n_; ++i) {
      r += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_[a * q_ + b]; }

 private:
  static std::vector<std::uint32_t> digits(std::uint64_t a, std::uint32_t p, std::size_t len) {
    std::vector<std::uint32_t> d(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
      d[i] = static_cast<std::uint32_t>(a % p);
      a /= p;
    }
    return d;
  }

  // Remainder of poly (constant first) modulo a monic poly of degree deg
  // given by lower coefficients.
  static std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& low,
                                             std::uint32_t p) {
    const std::size_t deg = low.size();
    for (std::size_t i = a.size(); i-- > deg;) {
      const std::uint32_t c = a[i];
      if (c == 0) continue;
      a[i] = 0;
      for (std::size_t k = 0; k < deg; ++k) a[i - deg + k] = static_cast<std::uint32_t>((a[i - deg + k] + (p - c) * static_cast<std::uint64_t>(low[k])) % p);
    }
    a.resize(deg, 0);
    return a;
  }

  std::vector<std::uint32_t> least_irreducible() const {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < n_; ++i) count *= p_;
    for (std::uint64_t c = 0; c < count; ++c) {
      auto low = digits(c, p_, n_);
      if (is_irreducible(low)) return low;
    }
    throw ContractViolation("no irreducible polynomial found");
  }

  bool is_irreducible(const std::vector<std::uint32_t>& low) const {
    const std::size_t n = low.size();
    std::vector<std::uint32_t> full(low);
    full.push_back(1);
    for (std::size_t d = 1; d <= n / 2; ++d) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= p_;
      for (std::uint64_t c = 0; c < count; ++c) {
        auto dl = digits(c, p_, d);
        if (poly_mod(full, dl, p_) == std::vector<std::uint32_t>(d, 0)) return false;
      }
    }
    return true;
  }

  std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const {
    const auto da = digits(a, p_, n_);
    const auto db = digits(b, p_, n_);
    std::vector<std::uint32_t> prod(2 * n_, 0);
    for (unsigned i = 0; i < n_; ++i)
      for (unsigned j = 0; j < n_; ++j) prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_);
    const auto r = poly_mod(prod, modulus_, p_);
    std::uint64_t out = 0, scale = 1;
    for (unsigned i = 0; i < n_; ++i) {
      out += r[i] * scale;
      scale *= p_;
    }
    return out;
  }

  std::uint64_t q_;
  std::uint32_t p_ = 0;
  unsigned n_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> mul_;
};

/// Square matrices over GF(p), row-major.
struct MatrixSpace {
  std::uint32_t p;
  std::uint32_t n;

  using Matrix = std::vector<std::uint32_t>;

  Matrix identity() const {
    Matrix I(n * n, 0);
    for (std::uint32_t i = 0; i < n; ++i) I[i * n + i] = 1;
    return I;
  }

  Matrix mul(const Matrix& A, const Matrix& B) const {
    Matrix C(n * n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint64_t a = A[i * n + k];
        if (a == 0) continue;
        for (std::uint32_t j = 0; j < n; ++j) C[i * n + j] = static_cast<std::uint32_t>((C[i * n + j] + a * B[k * n + j]) % p);
      }
    return C;
  }

  std::uint32_t det(Matrix A) const {
    std::uint64_t d = 1;
    for (std::uint32_t c = 0; c < n; ++c) {
      std::uint32_t r = c;
      while (r < n && A[r * n + c] == 0) ++r;
      if (r == n) return 0;
      if (r != c) {
        for (std::uint32_t k = 0; k < n; ++k) std::swap(A[r * n + k], A[c * n + k]);
        d = (p - d) % p;
      }
      const std::uint64_t piv = A[c * n + c];
      d = d * piv % p;
      const std::uint64_t inv = modp::inv(piv, p);
      for (std::uint32_t i = c + 1; i < n; ++i) {
        const std::uint64_t f = A[i * n + c] * inv % p;
        if (f == 0) continue;
        for (std::uint32_t k = 0; k < n; ++k) A[i * n + k] = static_cast<std::uint32_t>((A[i * n + k] + (p - f) * A[c * n + k]) % p);
      }
    }
    return static_cast<std::uint32_t>(d);
  }

  std::uint64_t vector_count() const {
    std::uint64_t c = 1;
    for (std::uint32_t i = 0; i < n; ++i) c *= p;
    return c;
  }

  std::vector<std::uint32_t> decode(std::uint64_t v) const {
    std::vector<std::uint32_t> x(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      x[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    return x;
  }

  std::uint64_t encode(const std::vector<std::uint32_t>& x) const {
    std::uint64_t v = 0;
    for (std::uint32_t i = n; i-- > 0;) v = v * p + x[i];
    return v;
  }

  /// M v for a column vector given by its encoding.
  std::uint64_t apply(const Matrix& M, std::uint64_t v) const {
    const auto x = decode(v);
    std::vector<std::uint32_t> y(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      std::uint64_t acc = 0;
      for (std::uint32_t k = 0; k < n; ++k) acc += static_cast<std::uint64_t>(M[i * n + k]) * x[k];
      y[i] = static_cast<std::uint32_t>(acc % p);
    }
    return encode(y);
  }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    auto x = decode(a);
    const auto y = decode(b);
    for (std::uint32_t i = 0; i < n; ++i) x[i] = (x[i] + y[i]) % p;
    return encode(x);
  }

  std::uint64_t negate(std::uint64_t a) const {
    auto x = decode(a);
    for (auto& c : x) c = (p - c) % p;
    return encode(x);
  }
};

}  // namespace camina
