#include "wtspec/algebra/field.hpp"

#include <string>
#include <utility>

#include "wtspec/error.hpp"

namespace wtspec::algebra {
namespace {

using Poly = std::vector<std::uint32_t>;

// Remainder of num modulo a monic divisor over GF(p).
Poly poly_mod(std::uint32_t p, Poly num, const Poly& monic_div) {
  const std::size_t d = monic_div.size() - 1;
  for (std::size_t top = num.size(); top-- > d;) {
    const std::uint64_t c = num[top];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= d; ++i) {
      const std::uint64_t sub = c * monic_div[i] % p;
      num[top - d + i] = static_cast<std::uint32_t>((num[top - d + i] + p - sub) % p);
    }
  }
  num.resize(d);
  return num;
}

bool is_zero(const Poly& a) {
  for (auto c : a)
    if (c != 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

bool prime_power(std::uint64_t q, std::uint32_t* p, std::uint32_t* m) {
  if (q < 2) return false;
  std::uint64_t f = 2;
  while (f * f <= q && q % f != 0) ++f;
  if (q % f != 0) f = q;
  std::uint32_t e = 0;
  std::uint64_t rest = q;
  while (rest % f == 0) {
    rest /= f;
    ++e;
  }
  if (rest != 1) return false;
  if (p) *p = static_cast<std::uint32_t>(f);
  if (m) *m = e;
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const std::size_t m = poly.size() - 1;
  if (m == 1) return true;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::size_t d = 1; d <= m / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    Poly div(d + 1, 0);
    div[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (is_zero(poly_mod(p, poly, div))) return false;
    }
  }
  return true;
}

FieldPtr Field::create(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorCode::DegreeZero, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw Error(ErrorCode::FieldTooLarge,
                  std::to_string(p) + "^" + std::to_string(m) + " exceeds 2^20");
    }
  }
  // Candidates in increasing order of their non-leading coefficients as a
  // base-p number; the first irreducible one is the modulus.
  Poly cand(m + 1, 0);
  cand[m] = 1;
  for (std::uint64_t idx = 0; idx < q; ++idx) {
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < m; ++i) {
      cand[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (is_irreducible(p, cand)) return FieldPtr(new Field(p, m, cand));
  }
  throw Error(ErrorCode::NotIrreducible, "no irreducible polynomial found");  // unreachable
}

FieldPtr Field::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (modulus.size() < 2) throw Error(ErrorCode::DegreeZero, "modulus must have degree >= 1");
  const auto m = static_cast<std::uint32_t>(modulus.size() - 1);
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw Error(ErrorCode::FieldTooLarge, "field order exceeds 2^20");
  }
  for (auto c : modulus)
    if (c >= p) throw Error(ErrorCode::ElementOutOfRange, "modulus coefficient >= p");
  if (!is_irreducible(p, modulus)) {
    throw Error(ErrorCode::NotIrreducible, "modulus is not monic irreducible");
  }
  return FieldPtr(new Field(p, m, std::move(modulus)));
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < m_; ++i) q_ *= p_;
  build_tables();
}

Elem Field::add_digits(Elem a, Elem b) const {
  std::uint32_t x = a.value, y = b.value, out = 0, place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((x % p_ + y % p_) % p_) * place;
    x /= p_;
    y /= p_;
    place *= p_;
  }
  return Elem{out};
}

Elem Field::neg(Elem a) const {
  if (p_ == 2) return a;
  if (m_ == 1) return Elem{a.value == 0 ? 0 : p_ - a.value};
  if (!neg_table_.empty()) return Elem{neg_table_[a.value]};
  std::uint32_t x = a.value, out = 0, place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += ((p_ - x % p_) % p_) * place;
    x /= p_;
    place *= p_;
  }
  return Elem{out};
}

Elem Field::mul_poly(Elem a, Elem b) const {
  Poly x(m_), y(m_);
  std::uint32_t va = a.value, vb = b.value;
  for (std::uint32_t i = 0; i < m_; ++i) {
    x[i] = va % p_;
    va /= p_;
    y[i] = vb % p_;
    vb /= p_;
  }
  Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_);
    }
  }
  Poly rem = poly_mod(p_, std::move(prod), modulus_);
  std::uint32_t out = 0, place = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    out += rem[i] * place;
    place *= p_;
  }
  return Elem{out};
}

Elem Field::pow_slow(Elem a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e != 0) {
    if (e & 1) result = m_ == 1 ? mul(result, base) : mul_poly(result, base);
    base = m_ == 1 ? mul(base, base) : mul_poly(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return one();
  if (a.value == 0) return zero();
  const std::uint64_t order = q_ - 1;
  const std::uint64_t reduced = e % order;
  if (!log_.empty()) return Elem{exp_[log_[a.value] * reduced % order]};
  return pow_slow(a, reduced);
}

Elem Field::inv(Elem a) const {
  if (a.value == 0) throw Error(ErrorCode::InvertZero, "zero has no inverse");
  if (!log_.empty()) return Elem{exp_[(q_ - 1 - log_[a.value]) % (q_ - 1)]};
  return pow_slow(a, q_ - 2);
}

void Field::build_tables() {
  const std::uint64_t order = q_ - 1;
  const auto factors = prime_factors(order);
  for (std::uint32_t g = 1; g < q_; ++g) {
    bool generator = true;
    for (auto f : factors) {
      if (pow_slow(Elem{g}, order / f) == one()) {
        generator = false;
        break;
      }
    }
    if (generator) {
      primitive_ = Elem{g};
      break;
    }
  }

  if (q_ > kTableFieldOrder) return;

  add_table_.resize(std::size_t{q_} * q_);
  neg_table_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_digits(Elem{a}, Elem{b}).value;
  }
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b) {
      if (add_table_[a * q_ + b] == 0) {
        neg_table_[a] = b;
        break;
      }
    }
  }

  log_.assign(q_, 0);
  exp_.assign(2 * order, 0);
  Elem x = one();
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = x.value;
    exp_[i + order] = x.value;
    log_[x.value] = static_cast<std::uint32_t>(i);
    x = m_ == 1 ? Elem{static_cast<std::uint32_t>(std::uint64_t{x.value} * primitive_.value % p_)}
                : mul_poly(x, primitive_);
  }
}

}  // namespace wtspec::algebra
