#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unexp/errors.hpp"
#include "unexp/rng.hpp"

namespace unexp {

enum class FieldKind { cyclotomic_rational, prime_modular };

// Description of a coefficient field: the cyclotomic rationals Q(zeta_n), or a
// prime field F_p that contains an element of multiplicative order n
// (requires p = 1 mod n).
struct FieldSpec {
  FieldKind kind = FieldKind::cyclotomic_rational;
  unsigned n = 1;
  std::uint64_t p = 0;  // prime_modular only

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

FieldSpec cyclotomic(unsigned n);
FieldSpec modular(unsigned n, std::uint64_t p);

// The largest primes p < 2^61 with p = 1 mod n, indexed from the top;
// index 0 and 1 give two independent moduli for cross-checked reruns.
std::uint64_t default_prime(unsigned n, unsigned index = 0);

bool is_prime_u64(std::uint64_t v);

// Element of Q(zeta_n): coefficients of the canonical residue modulo the n-th
// cyclotomic polynomial; length is always phi(n).
using CycValue = std::vector<mpq_class>;

class Scalar {
 public:
  Scalar() : v_(std::uint64_t{0}) {}

  static Scalar modular_value(std::uint64_t v) { return Scalar(v); }
  static Scalar cyclotomic_value(CycValue c) { return Scalar(std::move(c)); }

  bool is_modular() const noexcept { return std::holds_alternative<std::uint64_t>(v_); }

  std::uint64_t mod() const {
    if (!is_modular()) raise(errc::field_mismatch, "expected a prime-field scalar");
    return std::get<std::uint64_t>(v_);
  }
  const CycValue& cyc() const {
    if (is_modular()) raise(errc::field_mismatch, "expected a cyclotomic scalar");
    return std::get<CycValue>(v_);
  }
  CycValue& cyc() {
    if (is_modular()) raise(errc::field_mismatch, "expected a cyclotomic scalar");
    return std::get<CycValue>(v_);
  }

  // Canonical representations make structural equality semantic equality
  // (within one field).
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

 private:
  explicit Scalar(std::uint64_t v) : v_(v) {}
  explicit Scalar(CycValue c) : v_(std::move(c)) {}

  std::variant<std::uint64_t, CycValue> v_;
};

// Exact scalar arithmetic behind one contract. All operations are pure; a
// Field is immutable after construction and safe to share across threads.
class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  FieldKind kind() const noexcept { return spec_.kind; }
  unsigned n() const noexcept { return spec_.n; }
  std::uint64_t p() const noexcept { return spec_.p; }
  // phi(n) for the cyclotomic field, 1 for a prime field.
  unsigned degree() const noexcept { return phi_; }

  Scalar zero() const;
  Scalar one() const;
  // zeta_n: multiplicative order exactly n.
  Scalar primitive_root() const;
  Scalar from_integer(long v) const;
  Scalar from_rational(const mpq_class& q) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool eq(const Scalar& a, const Scalar& b) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar div(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar pow(const Scalar& a, unsigned long e) const;

  void add_assign(Scalar& a, const Scalar& b) const;
  void sub_assign(Scalar& a, const Scalar& b) const;
  void mul_assign(Scalar& a, const Scalar& b) const;
  // a -= f * x; the elimination kernels live on this.
  void submul_assign(Scalar& a, const Scalar& f, const Scalar& x) const;

  // Cyclotomic: uniform integer in [-bound, bound] embedded as a constant
  // (integer coordinates are generic enough for the sampling done here).
  // Modular: uniform element of F_p; bound is ignored.
  Scalar random_scalar(RngState& rng, std::uint64_t bound) const;

  // Text format: rationals as `a/b` or `a`; cyclotomic values as
  // `c0 + c1*w + ...` with `w` the distinguished root; modular values as
  // decimal integers. Printing and parsing round-trip exactly.
  std::string to_string(const Scalar& a) const;
  Scalar parse(std::string_view text) const;

 private:
  void check(const Scalar& a) const;
  CycValue reduce(std::vector<mpq_class> raw) const;  // length may exceed phi_

  FieldSpec spec_;
  unsigned phi_ = 1;
  std::vector<mpz_class> cyclo_;                  // Phi_n, monic, degree phi_
  std::vector<std::vector<mpz_class>> xpow_red_;  // x^(phi_+k) mod Phi_n
  std::uint64_t root_ = 1;                        // modular zeta_n
};

using FieldHandle = std::shared_ptr<const Field>;

FieldHandle make_field(FieldSpec spec);

}  // namespace unexp
