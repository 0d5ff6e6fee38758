#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace wtspec::algebra {

// A field element is its index in [0, q): the base-p digits of the index are
// the coefficients of the residue polynomial, constant term least significant.
struct Elem {
  std::uint32_t value = 0;

  constexpr Elem() = default;
  constexpr explicit Elem(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;
inline constexpr std::uint32_t kTableFieldOrder = 256;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^m) represented as GF(p)[x] / (modulus).
///
/// Fields with q <= 256 carry dense addition tables and log/antilog
/// multiplication tables built from the smallest primitive element; larger
/// fields fall back to digit-wise addition and polynomial multiplication with
/// reduction. Instances are immutable and meant to be shared through FieldPtr.
class Field {
 public:
  /// Field with the deterministic modulus: the monic irreducible of degree m
  /// whose non-leading coefficients, read as a base-p number, are smallest.
  static FieldPtr create(std::uint32_t p, std::uint32_t m);

  /// Field with a caller-supplied monic irreducible modulus (constant term
  /// first, length m+1).
  static FieldPtr with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool has_tables() const { return !add_table_.empty(); }

  bool contains(Elem a) const { return a.value < q_; }
  bool operator==(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

  static constexpr Elem zero() { return Elem{0}; }
  static constexpr Elem one() { return Elem{1}; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return Elem{a.value ^ b.value};
    if (m_ == 1) {
      const std::uint32_t s = a.value + b.value;
      return Elem{s >= p_ ? s - p_ : s};
    }
    if (!add_table_.empty()) return Elem{add_table_[a.value * q_ + b.value]};
    return add_digits(a, b);
  }

  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a.value == 0 || b.value == 0) return zero();
    if (m_ == 1) {
      return Elem{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
    }
    if (!log_.empty()) return Elem{exp_[log_[a.value] + log_[b.value]]};
    return mul_poly(a, b);
  }

  /// Throws InvertZero for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// pow(0, 0) == 1.
  Elem pow(Elem a, std::uint64_t e) const;

  /// Smallest-index primitive element (generator of the multiplicative group).
  Elem primitive() const { return primitive_; }

 private:
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  Elem add_digits(Elem a, Elem b) const;
  Elem mul_poly(Elem a, Elem b) const;
  Elem pow_slow(Elem a, std::uint64_t e) const;
  void build_tables();

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Elem primitive_{1};

  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1) so log sums need no reduction
};

bool is_prime(std::uint64_t n);

/// Factorises q as p^m; returns false when q is not a prime power.
bool prime_power(std::uint64_t q, std::uint32_t* p, std::uint32_t* m);

/// Exhaustive irreducibility test for a monic polynomial over GF(p)
/// (coefficients constant term first).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

}  // namespace wtspec::algebra
