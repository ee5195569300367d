#include "unexp/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace unexp {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::var(std::size_t nvars, std::size_t i, unsigned e) {
  if (i >= nvars) raise(errc::index_out_of_range, "variable index out of range");
  std::vector<unsigned> exps(nvars);
  exps[i] = e;
  return Monomial(std::move(exps));
}

unsigned Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::times(const Monomial& other) const {
  if (nvars() != other.nvars()) raise(errc::arity_mismatch, "monomial arity mismatch");
  std::vector<unsigned> exps(exps_);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] += other.exps_[i];
  return Monomial(std::move(exps));
}

bool Monomial::divides(const Monomial& other) const {
  if (nvars() != other.nvars()) raise(errc::arity_mismatch, "monomial arity mismatch");
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  if (!other.divides(*this)) raise(errc::internal, "inexact monomial division");
  std::vector<unsigned> exps(exps_);
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] -= other.exps_[i];
  return Monomial(std::move(exps));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) raise(errc::arity_mismatch, "monomial arity mismatch");
  std::vector<unsigned> exps(a.nvars());
  for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = std::min(a.exps_[i], b.exps_[i]);
  return Monomial(std::move(exps));
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.exps() > b.exps();  // lexicographic, x0 weighs most
}

namespace {

void emit_monomials(std::size_t nvars, std::size_t var, unsigned remaining,
                    std::vector<unsigned>& exps, std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    exps[var] = remaining;
    out.emplace_back(exps);
    exps[var] = 0;
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    exps[var] = e;
    emit_monomials(nvars, var + 1, remaining - e, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d) {
  if (nvars == 0) raise(errc::arity_mismatch, "need at least one variable");
  std::vector<Monomial> out;
  std::vector<unsigned> exps(nvars);
  emit_monomials(nvars, 0, d, exps, out);
  return out;
}

// ---------------------------------------------------------------------------
// ProjPoint

ProjPoint::ProjPoint(FieldHandle field, std::vector<Scalar> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.empty()) raise(errc::arity_mismatch, "a point needs coordinates");
  bool nonzero = false;
  for (const Scalar& c : coords_) {
    if (!field_->is_zero(c)) {
      nonzero = true;
      break;
    }
  }
  if (!nonzero) raise(errc::degenerate_point, "all homogeneous coordinates vanish");
}

ProjPoint ProjPoint::normalized() const {
  std::size_t lead = 0;
  while (field_->is_zero(coords_[lead])) ++lead;
  const Scalar s = field_->inv(coords_[lead]);
  std::vector<Scalar> out;
  out.reserve(coords_.size());
  for (const Scalar& c : coords_) out.push_back(field_->mul(c, s));
  return ProjPoint(field_, std::move(out));
}

bool ProjPoint::projectively_equal(const ProjPoint& other) const {
  if (size() != other.size() || !(field_->spec() == other.field_->spec())) return false;
  const ProjPoint a = normalized();
  const ProjPoint b = other.normalized();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!field_->eq(a[i], b[i])) return false;
  }
  return true;
}

std::string ProjPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += " : ";
    out += field_->to_string(coords_[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Poly

Poly Poly::constant(FieldHandle field, std::size_t nvars, const Scalar& c) {
  Poly p(field, nvars);
  p.add_term(Monomial::unit(nvars), c);
  return p;
}

Poly Poly::variable(FieldHandle field, std::size_t nvars, std::size_t i) {
  Poly p(field, nvars);
  p.add_term(Monomial::var(nvars, i), field->one());
  return p;
}

Poly Poly::term(FieldHandle field, Monomial m, const Scalar& c) {
  Poly p(field, m.nvars());
  p.add_term(m, c);
  return p;
}

unsigned Poly::total_degree() const {
  // grlex order: the leading term carries the total degree
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_) {
    if (m.degree() != d) return false;
  }
  return true;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (m.nvars() != nvars_) raise(errc::arity_mismatch, "monomial arity mismatch");
  if (field_->is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    field_->add_assign(it->second, c);
    if (field_->is_zero(it->second)) terms_.erase(it);
  }
}

Scalar Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_->zero() : it->second;
}

void Poly::check_compatible(const Poly& other) const {
  if (!field_ || !other.field_) raise(errc::field_mismatch, "uninitialized polynomial");
  if (nvars_ != other.nvars_) raise(errc::arity_mismatch, "polynomial arity mismatch");
  if (!(field_->spec() == other.field_->spec()))
    raise(errc::field_mismatch, "polynomials over different fields");
}

Poly Poly::operator+(const Poly& other) const {
  check_compatible(other);
  Poly out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& other) const {
  check_compatible(other);
  Poly out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, field_->neg(c));
  return out;
}

Poly Poly::operator-() const {
  Poly out(field_, nvars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, field_->neg(c));
  return out;
}

Poly Poly::operator*(const Poly& other) const {
  check_compatible(other);
  Poly out(field_, nvars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      out.add_term(ma.times(mb), field_->mul(ca, cb));
    }
  }
  return out;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly out(field_, nvars_);
  if (field_->is_zero(c)) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, field_->mul(v, c));
  return out;
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(field_, nvars_, field_->one());
  Poly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    if (e >>= 1) base = base * base;
  }
  return result;
}

bool Poly::equals(const Poly& other) const {
  check_compatible(other);
  if (terms_.size() != other.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first) || !(it->second == jt->second)) return false;
  }
  return true;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= nvars_) raise(errc::index_out_of_range, "derivative variable out of range");
  Poly out(field_, nvars_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m[var];
    if (e == 0) continue;
    std::vector<unsigned> exps = m.exps();
    exps[var] = e - 1;
    out.add_term(Monomial(std::move(exps)), field_->mul(c, field_->from_integer(e)));
  }
  return out;
}

Scalar Poly::evaluate(const ProjPoint& pt) const { return evaluate(pt.coords()); }

Scalar Poly::evaluate(std::span<const Scalar> coords) const {
  if (coords.size() != nvars_) raise(errc::arity_mismatch, "point arity mismatch");
  // power tables per variable, up to the largest exponent used
  std::vector<unsigned> max_exp(nvars_);
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < nvars_; ++i) max_exp[i] = std::max(max_exp[i], m[i]);
  }
  std::vector<std::vector<Scalar>> pows(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    pows[i].reserve(max_exp[i] + 1);
    pows[i].push_back(field_->one());
    for (unsigned e = 1; e <= max_exp[i]; ++e)
      pows[i].push_back(field_->mul(pows[i].back(), coords[i]));
  }
  Scalar acc = field_->zero();
  for (const auto& [m, c] : terms_) {
    Scalar v = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i]) field_->mul_assign(v, pows[i][m[i]]);
    }
    field_->add_assign(acc, v);
  }
  return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != nvars_) raise(errc::arity_mismatch, "one image per variable required");
  if (images.empty()) raise(errc::arity_mismatch, "need at least one variable");
  const std::size_t out_vars = images.front().nvars();
  for (const Poly& img : images) {
    if (img.nvars() != out_vars || !(img.field()->spec() == field_->spec()))
      raise(errc::field_mismatch, "images live in incompatible rings");
  }
  const FieldHandle& out_field = images.front().field();
  // cache per-variable powers across terms
  std::vector<std::vector<Poly>> pows(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    pows[i].push_back(Poly::constant(out_field, out_vars, out_field->one()));
  Poly out(out_field, out_vars);
  for (const auto& [m, c] : terms_) {
    Poly prod = Poly::constant(out_field, out_vars, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = m[i];
      while (pows[i].size() <= e) pows[i].push_back(pows[i].back() * images[i]);
      if (e) prod = prod * pows[i][e];
    }
    out = out + prod;
  }
  return out;
}

Poly bracket(const Poly& f, const Poly& g, unsigned n) {
  if (n == 0) raise(errc::unsupported_parameters, "bracket power must be positive");
  return f.pow(n) - g.pow(n);
}

Poly divide_exact(const Poly& f, const Poly& g) {
  if (g.is_zero()) raise(errc::division_by_zero, "polynomial division by zero");
  const FieldHandle& field = g.field();
  Poly quotient(field, g.nvars());
  Poly rem = f;
  const auto& lead_g = *g.terms().begin();
  while (!rem.is_zero()) {
    const auto& lead_r = *rem.terms().begin();
    if (!lead_g.first.divides(lead_r.first))
      raise(errc::internal, "inexact polynomial division");
    const Monomial m = lead_r.first.divided_by(lead_g.first);
    const Scalar c = field->div(lead_r.second, lead_g.second);
    quotient.add_term(m, c);
    for (const auto& [mg, cg] : g.terms()) {
      rem.add_term(m.times(mg), field->neg(field->mul(c, cg)));
    }
  }
  return quotient;
}

std::string default_var_name(std::size_t i) { return "x" + std::to_string(i); }

// ---------------------------------------------------------------------------
// text format

std::string Poly::to_string(std::span<const std::string> var_names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const unsigned e = m[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (i < var_names.size()) ? var_names[i] : default_var_name(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string coeff = field_->to_string(c);
    const bool composite = coeff.find(' ') != std::string::npos;
    std::string piece;
    if (mono.empty()) {
      piece = coeff;
    } else if (composite) {
      piece = "(" + coeff + ")*" + mono;
    } else if (coeff == "1") {
      piece = mono;
    } else if (coeff == "-1") {
      piece = "-" + mono;
    } else {
      piece = coeff + "*" + mono;
    }
    if (out.empty()) {
      out = piece;
    } else if (piece.front() == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

namespace {

// splits `s` at top-level occurrences of any of `seps` (paren depth zero)
std::vector<std::string> split_top_level(const std::string& s, std::string_view seps,
                                         bool keep_sign) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && seps.find(ch) != std::string_view::npos && !(i == 0 && keep_sign)) {
      out.push_back(cur);
      cur.clear();
      if (keep_sign) cur.push_back(ch);
      continue;
    }
    cur.push_back(ch);
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Poly Poly::parse(FieldHandle field, std::size_t nvars, std::string_view text,
                 std::span<const std::string> var_names) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) raise(errc::parse_error, "empty polynomial");
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i)
    names.push_back(i < var_names.size() ? var_names[i] : default_var_name(i));

  Poly out(field, nvars);
  for (std::string term : split_top_level(s, "+-", /*keep_sign=*/true)) {
    if (term.empty() || term == "+" || term == "-")
      raise(errc::parse_error, "dangling sign in polynomial");
    Scalar coeff = field->one();
    if (term.front() == '-') {
      coeff = field->neg(coeff);
      term.erase(term.begin());
    } else if (term.front() == '+') {
      term.erase(term.begin());
    }
    std::vector<unsigned> exps(nvars);
    for (const std::string& factor : split_top_level(term, "*", /*keep_sign=*/false)) {
      if (factor.empty()) raise(errc::parse_error, "empty factor in term: " + term);
      // variable factor?
      std::string base = factor;
      unsigned exp = 1;
      if (const std::size_t caret = factor.find('^'); caret != std::string::npos &&
                                                      factor.front() != '(') {
        base = factor.substr(0, caret);
        try {
          exp = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
        } catch (...) {
          raise(errc::parse_error, "malformed exponent in: " + factor);
        }
      }
      const auto var_it = std::find(names.begin(), names.end(), base);
      if (var_it != names.end() && base != "w") {
        exps[static_cast<std::size_t>(var_it - names.begin())] += exp;
        continue;
      }
      // otherwise a scalar factor, possibly parenthesized
      std::string scalar_text = factor;
      if (scalar_text.front() == '(') {
        if (scalar_text.back() != ')') raise(errc::parse_error, "unbalanced parens: " + factor);
        scalar_text = scalar_text.substr(1, scalar_text.size() - 2);
      }
      coeff = field->mul(coeff, field->parse(scalar_text));
    }
    out.add_term(Monomial(std::move(exps)), coeff);
  }
  return out;
}

}  // namespace unexp
