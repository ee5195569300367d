#include "unexp/reference_tables.hpp"

#include <array>

namespace unexp {

namespace {

constexpr std::array kMatrixP3 = {
    // clang-format off
    "0",     "0",     "-a1",   "0",     "-a2",   "0",     "a3",    "a3",
    "a1^2",  "a1^2",  "-a0^2", "0",     "0",     "0",     "0",     "0",
    "a2^2",  "0",     "0",     "0",     "a0^2",  "0",     "0",     "0",
    "0",     "-a3^2", "0",     "0",     "0",     "0",     "a0^2",  "a0^2",
    "a0",    "a0",    "0",     "0",     "0",     "-a2",   "-a3",   "0",
    "0",     "0",     "a2^2",  "a2^2",  "0",     "-a1^2", "0",     "0",
    "0",     "0",     "0",     "a3^2",  "0",     "0",     "a1^2",  "0",
    "-a0",   "0",     "a1",    "a1",    "0",     "0",     "0",     "-a3",
    "0",     "0",     "0",     "0",     "a3^2",  "a3^2",  "0",     "-a2^2",
    "0",     "-a0",   "0",     "-a1",   "a2",    "a2",    "0",     "0",
    // clang-format on
};

constexpr std::array kMatrixP5 = {
    // clang-format off
    "0","0","0","0",          "-a1","0","0","0",        "-a2","0","0","0",       "-a3","0","0","0",       "-a4","0","0","0",       "a5","a5","a5","a5",
    "a1^2","a1^2","a1^2","a1^2", "-a0^2","0","0","0",   "0","0","0","0",         "0","0","0","0",         "0","0","0","0",         "0","0","0","0",
    "a2^2","0","0","0",       "0","0","0","0",          "a0^2","0","0","0",      "0","0","0","0",         "0","0","0","0",         "0","0","0","0",
    "0","a3^2","0","0",       "0","0","0","0",          "0","0","0","0",         "a0^2","0","0","0",      "0","0","0","0",         "0","0","0","0",
    "0","0","a4^2","0",       "0","0","0","0",          "0","0","0","0",         "0","0","0","0",         "a0^2","0","0","0",      "0","0","0","0",
    "0","0","0","-a5^2",      "0","0","0","0",          "0","0","0","0",         "0","0","0","0",         "0","0","0","0",         "a0^2","a0^2","a0^2","a0^2",
    "a0","a0","a0","a0",      "0","0","0","0",          "0","-a2","0","0",       "0","-a3","0","0",       "0","-a4","0","0",       "-a5","0","0","0",
    "0","0","0","0",          "a2^2","a2^2","a2^2","a2^2", "0","-a1^2","0","0",  "0","0","0","0",         "0","0","0","0",         "0","0","0","0",
    "0","0","0","0",          "0","a3^2","0","0",       "0","0","0","0",         "0","a1^2","0","0",      "0","0","0","0",         "0","0","0","0",
    "0","0","0","0",          "0","0","a4^2","0",       "0","0","0","0",         "0","0","0","0",         "0","a1^2","0","0",      "0","0","0","0",
    "0","0","0","0",          "0","0","0","a5^2",       "0","0","0","0",         "0","0","0","0",         "0","0","0","0",         "a1^2","0","0","0",
    "-a0","0","0","0",        "a1","a1","a1","a1",      "0","0","0","0",         "0","0","-a3","0",       "0","0","-a4","0",       "0","-a5","0","0",
    "0","0","0","0",          "0","0","0","0",          "a3^2","a3^2","a3^2","a3^2", "0","0","-a2^2","0", "0","0","0","0",         "0","0","0","0",
    "0","0","0","0",          "0","0","0","0",          "0","0","a4^2","0",      "0","0","0","0",         "0","0","a2^2","0",      "0","0","0","0",
    "0","0","0","0",          "0","0","0","0",          "0","0","0","a5^2",      "0","0","0","0",         "0","0","0","0",         "0","a2^2","0","0",
    "0","-a0","0","0",        "0","-a1","0","0",        "a2","a2","a2","a2",     "0","0","0","0",         "0","0","0","-a4",       "0","0","-a5","0",
    "0","0","0","0",          "0","0","0","0",          "0","0","0","0",         "a4^2","a4^2","a4^2","a4^2", "0","0","0","-a3^2", "0","0","0","0",
    "0","0","0","0",          "0","0","0","0",          "0","0","0","0",         "0","0","0","a5^2",      "0","0","0","0",         "0","0","a3^2","0",
    "0","0","-a0","0",        "0","0","-a1","0",        "0","0","-a2","0",       "a3","a3","a3","a3",     "0","0","0","0",         "0","0","0","-a5",
    "0","0","0","0",          "0","0","0","0",          "0","0","0","0",         "0","0","0","0",         "a5^2","a5^2","a5^2","a5^2", "0","0","0","-a4^2",
    "0","0","0","-a0",        "0","0","0","-a1",        "0","0","0","-a2",       "0","0","0","-a3",       "a4","a4","a4","a4",     "0","0","0","0",
    // clang-format on
};

static_assert(kMatrixP3.size() == 10 * 8);
static_assert(kMatrixP5.size() == 21 * 24);

PolyMatrix build(FieldHandle field, unsigned nvars, std::size_t rows, std::size_t cols,
                 const char* const* cells) {
  std::vector<std::string> names;
  for (unsigned i = 0; i < nvars; ++i) names.push_back("a" + std::to_string(i));
  PolyMatrix m(field, nvars, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m.at(r, c) = Poly::parse(field, nvars, cells[r * cols + c], names);
    }
  }
  return m;
}

}  // namespace

PolyMatrix reference_interpolation_matrix(unsigned N, FieldHandle field) {
  if (N == 3) return build(std::move(field), 4, 10, 8, kMatrixP3.data());
  if (N == 5) return build(std::move(field), 6, 21, 24, kMatrixP5.data());
  raise(errc::unsupported_parameters, "reference matrices exist for N = 3 and N = 5");
}

bool rows_proportional(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    // find a column where both rows are nonzero to fix the factor
    std::size_t anchor = a.cols();
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const bool za = a.at(r, c).is_zero();
      const bool zb = b.at(r, c).is_zero();
      if (za != zb) return false;
      if (!za && anchor == a.cols()) anchor = c;
    }
    if (anchor == a.cols()) continue;  // zero row on both sides
    // cross-multiplication avoids dividing: a[c] * b[anchor] == b[c] * a[anchor]
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Poly lhs = a.at(r, c) * b.at(r, anchor);
      const Poly rhs = b.at(r, c) * a.at(r, anchor);
      if (!lhs.equals(rhs)) return false;
    }
  }
  return true;
}

}  // namespace unexp
