#pragma once

#include <concepts>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "qrep/errors.hpp"

namespace qrep {

/// Requirements on a coefficient field. Every field is a small value type;
/// element arithmetic goes through the field object so that runtime
/// parameters (the characteristic) travel with the data.
template <class K>
concept Field = std::copyable<K> && std::equality_comparable<K> &&
    requires(const K& k, const typename K::value_type& a, std::int64_t n) {
      { k.zero() } -> std::convertible_to<typename K::value_type>;
      { k.one() } -> std::convertible_to<typename K::value_type>;
      { k.from_int(n) } -> std::convertible_to<typename K::value_type>;
      { k.add(a, a) } -> std::convertible_to<typename K::value_type>;
      { k.sub(a, a) } -> std::convertible_to<typename K::value_type>;
      { k.mul(a, a) } -> std::convertible_to<typename K::value_type>;
      { k.neg(a) } -> std::convertible_to<typename K::value_type>;
      { k.inv(a) } -> std::convertible_to<typename K::value_type>;
      { k.is_zero(a) } -> std::convertible_to<bool>;
      { k.name() } -> std::convertible_to<std::string>;
    };

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// GF(p) for a runtime prime p < 2^31.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 2) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
      throw InputError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "gf:" + std::to_string(p_); }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }
  value_type add(value_type a, value_type b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw MathError("division by zero in " + name());
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = t - q * new_t;
      std::swap(t, new_t);
      r = r - q * new_r;
      std::swap(r, new_r);
    }
    return from_int(t);
  }
  bool is_zero(value_type a) const { return a == 0; }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

/// The rationals with exact, always-reduced fractions.
class RationalField {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  std::string name() const { return "rat"; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(std::int64_t v) const { return value_type(v); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw MathError("division by zero in rat");
    return value_type(1) / a;
  }
  bool is_zero(const value_type& a) const { return a == 0; }

  bool operator==(const RationalField&) const = default;
};

static_assert(Field<PrimeField>);
static_assert(Field<RationalField>);

}  // namespace qrep
