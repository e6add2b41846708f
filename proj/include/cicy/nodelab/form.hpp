#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cicy/nodelab/ext_field.hpp"
#include "cicy/nodelab/prime_field.hpp"

namespace cicy::nodelab {

/// Exponents of x, y, z.
using Monomial = std::array<int, 3>;

/// Number of degree-e monomials in three variables: (e+1)(e+2)/2.
int monomial_count(int e);

/// Degree-e monomials in the fixed column order used everywhere in the lab:
/// lexicographic on exponent triples, largest first
/// (x^e, x^(e-1) y, x^(e-1) z, x^(e-2) y^2, ...).
std::vector<Monomial> monomials(int e);

/// A homogeneous polynomial in x, y, z over F_p. Zero coefficients are never
/// stored; the zero form keeps its nominal degree.
class HomogeneousForm {
 public:
  using Terms = std::map<Monomial, std::uint32_t, std::greater<>>;

  HomogeneousForm(PrimeField fp, int degree);
  /// Throws NodeLabError(kBadInput) if a monomial has the wrong degree.
  HomogeneousForm(PrimeField fp, int degree, const Terms& terms);

  const PrimeField& field() const { return fp_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  std::uint32_t coefficient(const Monomial& m) const;
  void set(const Monomial& m, std::uint32_t value);

  /// Coefficients in the canonical column order, zeros included.
  std::vector<std::uint32_t> coefficient_vector() const;

  std::uint32_t evaluate(const std::array<std::uint32_t, 3>& point) const;
  Element evaluate(const FieldContext& ctx,
                   const std::array<Element, 3>& point) const;

  /// f(B v): substitutes each variable by a row of the 3x3 matrix B.
  HomogeneousForm substitute(
      const std::array<std::array<std::uint32_t, 3>, 3>& b) const;

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.fp_ == b.fp_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  PrimeField fp_;
  int degree_;
  Terms terms_;
};

HomogeneousForm operator+(const HomogeneousForm& a, const HomogeneousForm& b);
HomogeneousForm operator-(const HomogeneousForm& a, const HomogeneousForm& b);
HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b);
HomogeneousForm scale(const HomogeneousForm& a, std::uint32_t s);

/// The linear form x, y or z.
HomogeneousForm variable(PrimeField fp, int index);

/// Every coefficient drawn independently and uniformly from F_p; a pure
/// function of (p, degree, seed). Throws std::invalid_argument for degree < 0.
HomogeneousForm random_form(const PrimeField& fp, int degree, std::uint64_t seed);

/// Readable rendering, e.g. "3*x^2*z + 10006*y^3"; "0" for the zero form.
std::string format_form(const HomogeneousForm& form);

/// Text format: header "p=<prime> deg=<e>", then one "e1 e2 e3 coeff" line
/// per nonzero monomial in canonical order. Blank lines and lines starting
/// with '#' are ignored on input.
void write_form(const HomogeneousForm& form, std::ostream& out);
/// Throws NodeLabError(kBadInput) on malformed input.
HomogeneousForm read_form(std::istream& in);

}  // namespace cicy::nodelab
