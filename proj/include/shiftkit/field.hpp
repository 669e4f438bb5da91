#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace shiftkit {

class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_prime(std::uint64_t n);

enum class FieldKind { rationals, prime };

/// Runtime description of a coefficient field: "q" or "p<prime>".
struct FieldSpec {
  FieldKind kind = FieldKind::prime;
  std::uint32_t p = 101;

  static FieldSpec parse(const std::string& text);
  std::string to_string() const;
  bool operator==(const FieldSpec&) const = default;
};

/// The prime field F_p, p < 2^31. Elements are canonical representatives in [0, p).
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 101);

  std::uint32_t characteristic() const { return p_; }
  FieldSpec spec() const { return {FieldKind::prime, p_}; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool less(Elem a, Elem b) const { return a < b; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a - b*c
  Elem sub_mul(Elem a, Elem b, Elem c) const { return sub(a, mul(b, c)); }

  Elem from_int(long long v) const;
  /// Parses "n" or "n/d".
  Elem from_string(const std::string& text) const;
  std::string to_string(Elem a) const { return std::to_string(a); }
  /// Lift to the integer representative in [0, p).
  long long lift(Elem a) const { return a; }

  Elem random(std::mt19937_64& rng) const {
    return static_cast<Elem>(rng() % p_);
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
  std::shared_ptr<const std::vector<Elem>> inv_table_;
};

/// The rationals, backed by GMP. Elements are kept in lowest terms.
class Rationals {
 public:
  using Elem = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  FieldSpec spec() const { return {FieldKind::rationals, 0}; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool less(const Elem& a, const Elem& b) const { return a < b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const;
  Elem sub_mul(const Elem& a, const Elem& b, const Elem& c) const { return a - b * c; }

  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_string(const std::string& text) const;
  std::string to_string(const Elem& a) const { return a.get_str(); }

  /// Small integers in [-4, 4]; keeps random polynomials factorable by rational roots.
  Elem random(std::mt19937_64& rng) const {
    return Elem(static_cast<long>(rng() % 9) - 4);
  }

  bool operator==(const Rationals&) const { return true; }
};

}  // namespace shiftkit
