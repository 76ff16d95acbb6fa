#ifndef QORBITAL_CYCLOTOMIC_HPP
#define QORBITAL_CYCLOTOMIC_HPP

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <vector>

#include "qorbital/rational.hpp"

namespace qorbital {

namespace detail {

// Coefficients of the n-th cyclotomic polynomial, monic, index = degree.
// Computed as (x^n - 1) / prod_{d|n, d<n} Phi_d with exact integer division.
inline const std::vector<BigInt>& cyclotomic_poly(unsigned n) {
  static std::map<unsigned, std::vector<BigInt>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::function<const std::vector<BigInt>&(unsigned)> get =
      [&](unsigned m) -> const std::vector<BigInt>& {
    auto found = cache.find(m);
    if (found != cache.end()) return found->second;
    std::vector<BigInt> num(m + 1, 0);  // x^m - 1
    num[m] = 1;
    num[0] = -1;
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      const std::vector<BigInt>& phi_d = get(d);
      // num /= phi_d (exact since phi_d | x^m - 1)
      std::vector<BigInt> quot(num.size() - phi_d.size() + 1, 0);
      std::vector<BigInt> rem = num;
      for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        BigInt c = rem[k + phi_d.size() - 1];  // phi_d monic
        quot[k] = c;
        if (c == 0) continue;
        for (size_t i = 0; i < phi_d.size(); ++i) rem[k + i] -= c * phi_d[i];
      }
      num = std::move(quot);
    }
    return cache.emplace(m, std::move(num)).first->second;
  };
  return get(n);
}

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace detail

// An element of the cyclotomic field Q(zeta_n), stored in the power basis
// {zeta_n^0, ..., zeta_n^{phi(n)-1}} after reduction modulo the n-th
// cyclotomic polynomial. The representation at a fixed conductor is unique,
// so is_zero and equality are exact. No floating point anywhere.
class Cyclo {
 public:
  Cyclo() : n_(1), c_(1, Rational(0)) {}

  explicit Cyclo(const Rational& r) : n_(1), c_(1, r) {}
  explicit Cyclo(long v) : n_(1), c_(1, Rational(v)) {}

  // Builds sum_k coeffs[k] * zeta_n^k and reduces to canonical form.
  Cyclo(unsigned n, const std::map<long, Rational>& coeffs) {
    if (n == 0) throw domain_error("invalid conductor 0");
    n_ = n;
    std::vector<Rational> dense(n, Rational(0));
    for (const auto& [k, v] : coeffs) {
      long e = ((k % static_cast<long>(n)) + static_cast<long>(n)) %
               static_cast<long>(n);
      dense[static_cast<size_t>(e)] += v;
    }
    c_ = reduce(n, std::move(dense));
  }

  static Cyclo zero() { return Cyclo(); }
  static Cyclo one() { return Cyclo(Rational(1)); }

  // zeta_n^k, canonical. Errors on n = 0.
  static Cyclo root_of_unity(unsigned n, long k) {
    if (n == 0) throw domain_error("invalid conductor 0");
    return Cyclo(n, {{k, Rational(1)}});
  }

  unsigned conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  bool is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  // Requires is_rational().
  const Rational& rat() const {
    if (!is_rational()) throw domain_error("cyclotomic value is not rational");
    return c_[0];
  }

  bool is_one() const { return is_rational() && c_[0] == 1; }

  Cyclo lifted(unsigned m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw domain_error("conductor lift must be a multiple");
    unsigned q = m / n_;
    std::vector<Rational> dense(m, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) dense[k * q] = c_[k];
    Cyclo out;
    out.n_ = m;
    out.c_ = reduce(m, std::move(dense));
    return out;
  }

  friend Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    unsigned m = std::lcm(a.n_, b.n_);
    Cyclo x = a.lifted(m), y = b.lifted(m);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }

  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    unsigned m = std::lcm(a.n_, b.n_);
    Cyclo x = a.lifted(m), y = b.lifted(m);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }

  Cyclo operator-() const {
    Cyclo x = *this;
    for (auto& v : x.c_) v = -v;
    return x;
  }

  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    unsigned m = std::lcm(a.n_, b.n_);
    Cyclo x = a.lifted(m), y = b.lifted(m);
    std::vector<Rational> prod(x.c_.size() + y.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i] == 0) continue;
      for (size_t j = 0; j < y.c_.size(); ++j) {
        if (y.c_[j] == 0) continue;
        prod[i + j] += x.c_[i] * y.c_[j];
      }
    }
    Cyclo out;
    out.n_ = m;
    out.c_ = reduce_poly(m, std::move(prod));
    return out;
  }

  friend Cyclo operator*(const Rational& r, const Cyclo& a) {
    Cyclo x = a;
    for (auto& v : x.c_) v *= r;
    return x;
  }

  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  // Complex conjugation: zeta_n -> zeta_n^{n-1}.
  Cyclo conj() const {
    std::map<long, Rational> m;
    for (size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      m[static_cast<long>((n_ - k % n_) % n_)] += c_[k];
    }
    return Cyclo(n_, m);
  }

  // Field inverse via the extended Euclidean algorithm in Q[x] mod Phi_n.
  Cyclo inverse() const {
    if (is_zero()) throw domain_error("division by zero in Q(zeta_n)");
    if (is_rational()) {
      Cyclo out;
      out.n_ = n_;
      out.c_ = std::vector<Rational>(c_.size(), Rational(0));
      out.c_[0] = Rational(1) / c_[0];
      return out;
    }
    std::vector<Rational> a(c_.begin(), c_.end());
    const auto& phi_int = detail::cyclotomic_poly(n_);
    std::vector<Rational> b(phi_int.begin(), phi_int.end());
    // Invariant: r0 = s0 * a (mod Phi), r1 = s1 * a (mod Phi).
    std::vector<Rational> r0 = a, r1 = b;
    std::vector<Rational> s0 = {Rational(1)}, s1 = {Rational(0)};
    auto deg = [](const std::vector<Rational>& p) -> int {
      for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
      return -1;
    };
    while (deg(r1) > 0) {
      // Divide r0 by r1.
      int d1 = deg(r1);
      std::vector<Rational> rem = r0;
      std::vector<Rational> q(std::max<int>(deg(r0) - d1 + 1, 1), Rational(0));
      while (deg(rem) >= d1) {
        int dr = deg(rem);
        Rational c = rem[dr] / r1[d1];
        q[dr - d1] += c;
        for (int i = 0; i <= d1; ++i) rem[dr - d1 + i] -= c * r1[i];
      }
      // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
      std::vector<Rational> s2(std::max(s0.size(), q.size() + s1.size()),
                               Rational(0));
      for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
      for (size_t i = 0; i < q.size(); ++i) {
        if (q[i] == 0) continue;
        for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
      }
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    int d = deg(r1);
    if (d != 0) throw domain_error("inverse failed: gcd not constant");
    Rational lead = r1[0];
    std::map<long, Rational> m;
    for (size_t i = 0; i < s1.size(); ++i)
      if (s1[i] != 0) m[static_cast<long>(i)] = s1[i] / lead;
    return Cyclo(n_, m);
  }

  Cyclo pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclo result = Cyclo::one();
    Cyclo base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    unsigned m = std::lcm(a.n_, b.n_);
    return a.lifted(m).c_ == b.lifted(m).c_;
  }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  // Deterministic printable form, e.g. "1/2 - 1/2*z8^3".
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      Rational v = c_[k];
      if (first) {
        if (v < 0) {
          os << "-";
          v = -v;
        }
      } else {
        os << (v < 0 ? " - " : " + ");
        if (v < 0) v = -v;
      }
      first = false;
      if (k == 0) {
        os << rational_str(v);
      } else {
        if (v != 1) os << rational_str(v) << "*";
        os << "z" << n_;
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

 private:
  static std::vector<Rational> reduce(unsigned n, std::vector<Rational> dense) {
    return reduce_poly(n, std::move(dense));
  }

  // Reduces an arbitrary-degree polynomial in zeta_n to the power basis.
  static std::vector<Rational> reduce_poly(unsigned n,
                                           std::vector<Rational> p) {
    // First fold exponents mod n (zeta_n^n = 1).
    if (p.size() > n) {
      std::vector<Rational> folded(n, Rational(0));
      for (size_t k = 0; k < p.size(); ++k) folded[k % n] += p[k];
      p = std::move(folded);
    }
    p.resize(n, Rational(0));
    const auto& phi = detail::cyclotomic_poly(n);
    size_t d = phi.size() - 1;  // = euler_phi(n)
    for (size_t k = n; k-- > d;) {
      if (p[k] == 0) continue;
      Rational c = p[k];
      p[k] = 0;
      for (size_t i = 0; i < d; ++i)
        p[k - d + i] -= c * Rational(phi[i]);
    }
    p.resize(d == 0 ? 1 : d);
    return p;
  }

  unsigned n_;
  std::vector<Rational> c_;
};

}  // namespace qorbital

#endif  // QORBITAL_CYCLOTOMIC_HPP
