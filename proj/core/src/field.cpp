#include "unexp/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace unexp {

namespace {

// ---------------------------------------------------------------------------
// 64-bit modular helpers

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::vector<unsigned> prime_factors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned q = 2; static_cast<unsigned long long>(q) * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

unsigned totient(unsigned n) {
  unsigned result = n;
  for (unsigned q : prime_factors(n)) result = result / q * (q - 1);
  return result;
}

// ---------------------------------------------------------------------------
// Integer univariate polynomials (coefficient index = power), used only to
// compute cyclotomic polynomials at construction time.

using ZPoly = std::vector<mpz_class>;

// f / g for monic g, division known to be exact.
ZPoly divide_exact_monic(ZPoly f, const ZPoly& g) {
  const std::size_t df = f.size() - 1;
  const std::size_t dg = g.size() - 1;
  ZPoly q(df - dg + 1);
  for (std::size_t k = df - dg + 1; k-- > 0;) {
    mpz_class c = f[k + dg];
    q[k] = c;
    if (c != 0) {
      for (std::size_t i = 0; i <= dg; ++i) f[k + i] -= c * g[i];
    }
  }
  return q;
}

ZPoly cyclotomic_poly_uncached(unsigned n);

ZPoly cyclotomic_poly(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, ZPoly> cache;
  const std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  const ZPoly f = cyclotomic_poly_uncached(n);
  cache.emplace(n, f);
  return f;
}

// x^n - 1 divided by Phi_d for every proper divisor d
ZPoly cyclotomic_poly_uncached(unsigned n) {
  ZPoly f(n + 1);
  f[0] = -1;
  f[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) f = divide_exact_monic(std::move(f), cyclotomic_poly_uncached(d));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Rational univariate polynomials, for inversion modulo Phi_n.

using QPoly = std::vector<mpq_class>;

int qdeg(const QPoly& f) {
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

// f -= q * x^shift * g
void submul_shifted(QPoly& f, const mpq_class& q, const QPoly& g, std::size_t shift) {
  const int dg = qdeg(g);
  if (dg < 0) return;
  if (f.size() < static_cast<std::size_t>(dg) + shift + 1)
    f.resize(static_cast<std::size_t>(dg) + shift + 1);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(dg); ++i) {
    if (g[i] != 0) f[i + shift] -= q * g[i];
  }
}

}  // namespace

FieldSpec cyclotomic(unsigned n) { return FieldSpec{FieldKind::cyclotomic_rational, n, 0}; }

FieldSpec modular(unsigned n, std::uint64_t p) { return FieldSpec{FieldKind::prime_modular, n, p}; }

bool is_prime_u64(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (v % q == 0) return v == q;
  }
  std::uint64_t d = v - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin base set for the full 64-bit range.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, v);
    if (x == 1 || x == v - 1) continue;
    bool witness = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, v);
      if (x == v - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t default_prime(unsigned n, unsigned index) {
  if (n == 0) raise(errc::invalid_order, "root-of-unity order must be positive");
  const std::uint64_t top = (1ULL << 61) - 1;
  std::uint64_t c = top - (top - 1) % n;  // largest c <= top with c = 1 mod n
  unsigned found = 0;
  for (; c > n; c -= n) {
    if (is_prime_u64(c)) {
      if (found == index) return c;
      ++found;
    }
  }
  raise(errc::internal, "prime search exhausted");
}

FieldHandle make_field(FieldSpec spec) { return std::make_shared<Field>(spec); }

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec_.n == 0) raise(errc::invalid_order, "root-of-unity order must be positive");
  if (spec_.kind == FieldKind::cyclotomic_rational) {
    phi_ = totient(spec_.n);
    const ZPoly phi_poly = cyclotomic_poly(spec_.n);
    cyclo_.assign(phi_poly.begin(), phi_poly.end());
    // x^(phi+k) reduced modulo Phi_n, enough to cover products of residues and
    // parsed powers w^k with k < n.
    const unsigned top = std::max(2 * phi_ >= 2 ? 2 * phi_ - 2 : 0, spec_.n >= 1 ? spec_.n - 1 : 0);
    if (top >= phi_) {
      std::vector<mpz_class> cur(phi_);
      for (unsigned t = 0; t < phi_; ++t) cur[t] = -cyclo_[t];  // x^phi
      xpow_red_.push_back(cur);
      for (unsigned k = phi_ + 1; k <= top; ++k) {
        std::vector<mpz_class> next(phi_);
        // multiply by x, fold the overflow term
        const mpz_class lead = cur[phi_ - 1];
        for (unsigned t = phi_ - 1; t > 0; --t) next[t] = cur[t - 1];
        next[0] = 0;
        if (lead != 0) {
          for (unsigned t = 0; t < phi_; ++t) next[t] -= lead * cyclo_[t];
        }
        xpow_red_.push_back(next);
        cur = std::move(next);
      }
    }
  } else {
    const std::uint64_t p = spec_.p;
    if (!is_prime_u64(p)) raise(errc::not_prime, "modulus " + std::to_string(p) + " is not prime");
    if (p >= (1ULL << 62))
      raise(errc::unsupported_parameters, "modulus must be below 2^62");
    if ((p - 1) % spec_.n != 0)
      raise(errc::no_root_of_unity,
            "p = " + std::to_string(p) + " is not 1 mod " + std::to_string(spec_.n));
    phi_ = 1;
    if (spec_.n == 1) {
      root_ = 1;
    } else {
      const auto factors = prime_factors(spec_.n);
      for (std::uint64_t x = 2;; ++x) {
        const std::uint64_t y = powmod(x, (p - 1) / spec_.n, p);
        if (y == 1) continue;
        bool exact = true;
        for (unsigned q : factors) {
          if (powmod(y, spec_.n / q, p) == 1) {
            exact = false;
            break;
          }
        }
        if (exact) {
          root_ = y;
          break;
        }
      }
    }
  }
}

void Field::check(const Scalar& a) const {
  if (spec_.kind == FieldKind::prime_modular) {
    if (!a.is_modular()) raise(errc::field_mismatch, "cyclotomic scalar passed to a prime field");
    if (a.mod() >= spec_.p) raise(errc::field_mismatch, "value exceeds the modulus");
  } else {
    if (a.is_modular()) raise(errc::field_mismatch, "prime-field scalar passed to a cyclotomic field");
    if (a.cyc().size() != phi_) raise(errc::field_mismatch, "coefficient length does not match phi(n)");
  }
}

CycValue Field::reduce(std::vector<mpq_class> raw) const {
  CycValue out(phi_);
  const std::size_t keep = std::min<std::size_t>(phi_, raw.size());
  for (std::size_t i = 0; i < keep; ++i) out[i] = raw[i];
  for (std::size_t k = phi_; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    const auto& row = xpow_red_.at(k - phi_);
    for (unsigned t = 0; t < phi_; ++t) {
      if (row[t] != 0) out[t] += raw[k] * row[t];
    }
  }
  return out;
}

Scalar Field::zero() const {
  if (spec_.kind == FieldKind::prime_modular) return Scalar::modular_value(0);
  return Scalar::cyclotomic_value(CycValue(phi_));
}

Scalar Field::one() const { return from_integer(1); }

Scalar Field::from_integer(long v) const {
  if (spec_.kind == FieldKind::prime_modular) {
    const std::uint64_t p = spec_.p;
    if (v >= 0) return Scalar::modular_value(static_cast<std::uint64_t>(v) % p);
    const std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) + 1;  // |v| without UB
    const std::uint64_t r = m % p;
    return Scalar::modular_value(r == 0 ? 0 : p - r);
  }
  CycValue c(phi_);
  c[0] = v;
  return Scalar::cyclotomic_value(std::move(c));
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (spec_.kind == FieldKind::prime_modular) {
    const std::uint64_t p = spec_.p;
    const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
    const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
    if (den == 0) raise(errc::division_by_zero, "denominator vanishes modulo p");
    return Scalar::modular_value(mulmod(num, powmod(den, p - 2, p), p));
  }
  CycValue c(phi_);
  c[0] = q;
  return Scalar::cyclotomic_value(std::move(c));
}

Scalar Field::primitive_root() const {
  if (spec_.kind == FieldKind::prime_modular) return Scalar::modular_value(root_);
  CycValue c(phi_);
  if (phi_ == 1) {
    // n = 1 or n = 2: zeta is 1 or -1.
    c[0] = (spec_.n == 1) ? 1 : -1;
  } else {
    c[1] = 1;
  }
  return Scalar::cyclotomic_value(std::move(c));
}

bool Field::is_zero(const Scalar& a) const {
  check(a);
  if (a.is_modular()) return a.mod() == 0;
  return std::all_of(a.cyc().begin(), a.cyc().end(), [](const mpq_class& q) { return q == 0; });
}

bool Field::is_one(const Scalar& a) const { return eq(a, one()); }

bool Field::eq(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  return a == b;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  Scalar r = a;
  add_assign(r, b);
  return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  Scalar r = a;
  sub_assign(r, b);
  return r;
}

void Field::add_assign(Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  if (a.is_modular()) {
    const std::uint64_t s = a.mod() + b.mod();
    a = Scalar::modular_value(s >= spec_.p ? s - spec_.p : s);
    return;
  }
  CycValue& c = a.cyc();
  const CycValue& d = b.cyc();
  for (unsigned i = 0; i < phi_; ++i) c[i] += d[i];
}

void Field::sub_assign(Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  if (a.is_modular()) {
    const std::uint64_t x = a.mod(), y = b.mod();
    a = Scalar::modular_value(x >= y ? x - y : x + spec_.p - y);
    return;
  }
  CycValue& c = a.cyc();
  const CycValue& d = b.cyc();
  for (unsigned i = 0; i < phi_; ++i) c[i] -= d[i];
}

Scalar Field::neg(const Scalar& a) const {
  check(a);
  if (a.is_modular()) {
    const std::uint64_t v = a.mod();
    return Scalar::modular_value(v == 0 ? 0 : spec_.p - v);
  }
  CycValue c = a.cyc();
  for (auto& q : c) q = -q;
  return Scalar::cyclotomic_value(std::move(c));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  check(a);
  check(b);
  if (a.is_modular()) return Scalar::modular_value(mulmod(a.mod(), b.mod(), spec_.p));
  const CycValue& c = a.cyc();
  const CycValue& d = b.cyc();
  if (phi_ == 1) {
    CycValue r(1);
    r[0] = c[0] * d[0];
    return Scalar::cyclotomic_value(std::move(r));
  }
  std::vector<mpq_class> tmp(2 * phi_ - 1);
  for (unsigned i = 0; i < phi_; ++i) {
    if (c[i] == 0) continue;
    for (unsigned j = 0; j < phi_; ++j) {
      if (d[j] != 0) tmp[i + j] += c[i] * d[j];
    }
  }
  return Scalar::cyclotomic_value(reduce(std::move(tmp)));
}

void Field::mul_assign(Scalar& a, const Scalar& b) const { a = mul(a, b); }

void Field::submul_assign(Scalar& a, const Scalar& f, const Scalar& x) const {
  check(a);
  check(f);
  check(x);
  if (a.is_modular()) {
    const std::uint64_t prod = mulmod(f.mod(), x.mod(), spec_.p);
    const std::uint64_t v = a.mod();
    a = Scalar::modular_value(v >= prod ? v - prod : v + spec_.p - prod);
    return;
  }
  sub_assign(a, mul(f, x));
}

Scalar Field::inv(const Scalar& a) const {
  check(a);
  if (is_zero(a)) raise(errc::division_by_zero, "inverse of zero");
  if (a.is_modular()) return Scalar::modular_value(powmod(a.mod(), spec_.p - 2, spec_.p));
  if (phi_ == 1) {
    CycValue r(1);
    r[0] = 1 / a.cyc()[0];
    return Scalar::cyclotomic_value(std::move(r));
  }
  // Extended Euclid in Q[x] against Phi_n; Phi_n is irreducible so any nonzero
  // residue is invertible.
  QPoly r0(cyclo_.size());
  for (std::size_t i = 0; i < cyclo_.size(); ++i) r0[i] = cyclo_[i];
  QPoly r1(a.cyc().begin(), a.cyc().end());
  QPoly s0, s1{mpq_class(1)};
  while (true) {
    const int d1 = qdeg(r1);
    if (d1 < 0) raise(errc::internal, "gcd with the cyclotomic modulus is non-trivial");
    if (d1 == 0) {
      // a * s1 = r1 (mod Phi_n) with r1 a nonzero constant.
      CycValue out(phi_);
      for (unsigned i = 0; i < phi_ && i < s1.size(); ++i) out[i] = s1[i] / r1[0];
      return Scalar::cyclotomic_value(std::move(out));
    }
    int d0 = qdeg(r0);
    while (d0 >= d1) {
      const mpq_class q = r0[d0] / r1[d1];
      submul_shifted(r0, q, r1, static_cast<std::size_t>(d0 - d1));
      submul_shifted(s0, q, s1, static_cast<std::size_t>(d0 - d1));
      d0 = qdeg(r0);
    }
    std::swap(r0, r1);
    std::swap(s0, s1);
  }
}

Scalar Field::div(const Scalar& a, const Scalar& b) const {
  if (is_zero(b)) raise(errc::division_by_zero, "division by zero");
  return mul(a, inv(b));
}

Scalar Field::pow(const Scalar& a, unsigned long e) const {
  check(a);
  if (a.is_modular()) return Scalar::modular_value(powmod(a.mod(), e, spec_.p));
  Scalar r = one();
  Scalar base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Scalar Field::random_scalar(RngState& rng, std::uint64_t bound) const {
  if (bound == 0) raise(errc::unsupported_parameters, "bound must be positive");
  if (spec_.kind == FieldKind::prime_modular)
    return Scalar::modular_value(rng.below(spec_.p));
  const std::int64_t b = static_cast<std::int64_t>(bound);
  return from_integer(rng.integer_in(-b, b));
}

// ---------------------------------------------------------------------------
// text format

namespace {

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) raise(errc::parse_error, "empty rational");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
      raise(errc::parse_error, "bad character in rational: '" + std::string(1, ch) + "'");
  }
  try {
    mpq_class q(text, 10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    raise(errc::parse_error, "malformed rational: " + text);
  }
}

}  // namespace

std::string Field::to_string(const Scalar& a) const {
  check(a);
  if (a.is_modular()) return std::to_string(a.mod());
  const CycValue& c = a.cyc();
  std::string out;
  for (unsigned i = 0; i < phi_; ++i) {
    if (c[i] == 0) continue;
    mpq_class v = c[i];
    std::string joiner;
    if (!out.empty()) {
      joiner = (sgn(v) < 0) ? " - " : " + ";
      if (sgn(v) < 0) v = -v;
    }
    std::string piece;
    if (i == 0) {
      piece = rational_to_string(v);
    } else {
      if (v == 1)
        piece = "";
      else if (v == -1)
        piece = "-";
      else
        piece = rational_to_string(v) + "*";
      piece += "w";
      if (i > 1) piece += "^" + std::to_string(i);
    }
    out += joiner + piece;
  }
  return out.empty() ? "0" : out;
}

Scalar Field::parse(std::string_view text) const {
  std::string s;
  s.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) raise(errc::parse_error, "empty scalar");
  if (spec_.kind == FieldKind::prime_modular) {
    try {
      mpz_class z(s, 10);
      const std::uint64_t r = mpz_fdiv_ui(z.get_mpz_t(), spec_.p);
      return Scalar::modular_value(r);
    } catch (const std::invalid_argument&) {
      raise(errc::parse_error, "malformed modular value: " + s);
    }
  }
  // split into signed terms at top-level +/-
  std::vector<mpq_class> raw(std::max<unsigned>(phi_, spec_.n));
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = (s[pos] == '-') ? -1 : 1;
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) raise(errc::parse_error, "empty term in scalar: " + s);
    mpq_class coeff;
    unsigned power = 0;
    const std::size_t w = term.find('w');
    if (w == std::string::npos) {
      coeff = parse_rational(term);
    } else {
      std::string pre = term.substr(0, w);
      if (!pre.empty()) {
        if (pre.back() != '*') raise(errc::parse_error, "expected '*' before w: " + s);
        pre.pop_back();
      }
      coeff = pre.empty() ? mpq_class(1) : parse_rational(pre);
      std::string post = term.substr(w + 1);
      if (post.empty()) {
        power = 1;
      } else {
        if (post[0] != '^') raise(errc::parse_error, "expected '^' after w: " + s);
        try {
          power = static_cast<unsigned>(std::stoul(post.substr(1)));
        } catch (...) {
          raise(errc::parse_error, "malformed power of w: " + s);
        }
      }
    }
    power %= spec_.n;  // zeta^n = 1
    if (sign < 0) coeff = -coeff;
    raw[power] += coeff;
    pos = end;
  }
  return Scalar::cyclotomic_value(reduce(std::move(raw)));
}

}  // namespace unexp
