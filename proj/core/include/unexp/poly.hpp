#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unexp/field.hpp"

namespace unexp {

// Exponent vector; the ambient variable count is its length.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static Monomial unit(std::size_t nvars) { return Monomial(std::vector<unsigned>(nvars)); }
  static Monomial var(std::size_t nvars, std::size_t i, unsigned e = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<unsigned>& exps() const noexcept { return exps_; }
  unsigned degree() const noexcept;

  Monomial times(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial divided_by(const Monomial& other) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<unsigned> exps_;
};

// Graded lexicographic order with x0 > x1 > ...; all printed output and
// matrix row/column orders derive from it.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// All degree-d monomials in grlex-descending order (x0^d first).
// Count is C(nvars-1+d, d).
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d);

class Poly;

// Homogeneous coordinates of a point in P^N; at least one coordinate nonzero.
class ProjPoint {
 public:
  ProjPoint(FieldHandle field, std::vector<Scalar> coords);

  const FieldHandle& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }

  // First nonzero coordinate scaled to one; canonical representative.
  ProjPoint normalized() const;
  bool projectively_equal(const ProjPoint& other) const;

  std::string to_string() const;

 private:
  FieldHandle field_;
  std::vector<Scalar> coords_;
};

// Sparse multivariate polynomial over a fixed field. Stored coefficients are
// never zero; the zero polynomial has an empty term map. Values are immutable
// in spirit: all operations return new polynomials.
class Poly {
 public:
  using TermMap = std::map<Monomial, Scalar, GrlexGreater>;

  Poly() = default;
  Poly(FieldHandle field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

  static Poly constant(FieldHandle field, std::size_t nvars, const Scalar& c);
  static Poly variable(FieldHandle field, std::size_t nvars, std::size_t i);
  static Poly term(FieldHandle field, Monomial m, const Scalar& c);

  const FieldHandle& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  unsigned total_degree() const;  // 0 for the zero polynomial
  bool is_homogeneous() const;

  // Accumulates c on monomial m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Scalar& c);
  Scalar coefficient(const Monomial& m) const;  // zero if absent

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Poly& other) const;
  Poly scaled(const Scalar& c) const;
  Poly pow(unsigned e) const;

  bool equals(const Poly& other) const;

  Poly derivative(std::size_t var) const;
  Scalar evaluate(const ProjPoint& pt) const;
  Scalar evaluate(std::span<const Scalar> coords) const;
  Poly substitute(const std::vector<Poly>& images) const;

  std::string to_string(std::span<const std::string> var_names = {}) const;
  static Poly parse(FieldHandle field, std::size_t nvars, std::string_view text,
                    std::span<const std::string> var_names = {});

 private:
  void check_compatible(const Poly& other) const;

  FieldHandle field_;
  std::size_t nvars_ = 0;
  TermMap terms_;
};

// f^n - g^n; the degree-n difference bracket. Antisymmetric, and for n = 3 it
// satisfies the identity a^3*br(b,c) + b^3*br(c,a) + c^3*br(a,b) = 0.
Poly bracket(const Poly& f, const Poly& g, unsigned n);

// f / g when the division is known to be exact (fraction-free elimination
// divides by previous pivots). Raises on inexact input.
Poly divide_exact(const Poly& f, const Poly& g);

std::string default_var_name(std::size_t i);

}  // namespace unexp
