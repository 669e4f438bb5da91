#include "shiftkit/field.hpp"

#include <cctype>
#include <map>
#include <mutex>

namespace shiftkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "q" || text == "Q") return {FieldKind::rationals, 0};
  if (text.size() >= 2 && (text[0] == 'p' || text[0] == 'P')) {
    std::uint64_t p = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("bad field spec '" + text + "'");
      p = p * 10 + static_cast<std::uint64_t>(text[i] - '0');
      if (p >= (1ULL << 31)) throw std::invalid_argument("prime too large in '" + text + "'");
    }
    if (!is_prime(p)) throw std::invalid_argument("field order " + std::to_string(p) + " is not prime");
    return {FieldKind::prime, static_cast<std::uint32_t>(p)};
  }
  throw std::invalid_argument("bad field spec '" + text + "' (expected q or p<prime>)");
}

std::string FieldSpec::to_string() const {
  return kind == FieldKind::rationals ? std::string("q") : "p" + std::to_string(p);
}

namespace {

std::uint32_t inverse_euclid(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1U << 31) || !is_prime(p))
    throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a prime below 2^31");
  if (p < (1U << 16)) {
    static std::mutex mu;
    static std::map<std::uint32_t, std::shared_ptr<const std::vector<Elem>>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[p];
    if (!slot) {
      auto table = std::make_shared<std::vector<Elem>>(p, 0);
      (*table)[1] = 1;
      // inv(i) = -(p/i) * inv(p mod i)
      for (std::uint32_t i = 2; i < p; ++i)
        (*table)[i] = neg(mul(p / i, (*table)[p % i]));
      slot = std::move(table);
    }
    inv_table_ = slot;
  }
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw MathError("division by zero in F_" + std::to_string(p_));
  if (inv_table_) return (*inv_table_)[a];
  return inverse_euclid(a, p_);
}

PrimeField::Elem PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_string(const std::string& text) const {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad scalar '" + text + "'");
  q.canonicalize();
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) throw std::invalid_argument("scalar '" + text + "' has denominator divisible by p");
  if (num < 0) num += p_;
  return div(static_cast<Elem>(num.get_ui()), static_cast<Elem>(den.get_ui()));
}

Rationals::Elem Rationals::inv(const Elem& a) const {
  if (sgn(a) == 0) throw MathError("division by zero in Q");
  Elem r = 1 / a;
  return r;
}

Rationals::Elem Rationals::div(const Elem& a, const Elem& b) const {
  if (sgn(b) == 0) throw MathError("division by zero in Q");
  Elem r = a / b;
  return r;
}

Rationals::Elem Rationals::from_string(const std::string& text) const {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad scalar '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace shiftkit
