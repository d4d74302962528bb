#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jetgeo {

/// Real univariate polynomial with coefficients stored in ascending power order.
///
/// Trailing exact zeros are dropped on construction, so the zero polynomial has an
/// empty coefficient list and `degree()` returns `std::nullopt`. All derived polynomials
/// (derivative, products, shifts) are computed at coefficient level.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);
  Polynomial(std::initializer_list<double> coeffs);

  static Polynomial constant(double c);
  static Polynomial monomial(int power, double c = 1.0);

  std::span<const double> coeffs() const { return coeffs_; }
  /// Coefficient of x^i, zero past the stored degree.
  double coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0.0; }
  double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }

  std::optional<int> degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Horner evaluation.
  double operator()(double x) const;
  /// Sum |c_i| |x|^i; the natural scale of the rounding error of `operator()` at x.
  double abs_eval(double x) const;

  Polynomial derivative() const;
  /// The polynomial t -> p(t + x0), by repeated synthetic division.
  Polynomial shifted(double x0) const;
  /// True when every odd coefficient is below 1e-12 * max|c_i| (or `rel_tol` if given).
  bool is_even(double rel_tol = 1e-12) const;
  double max_abs_coeff() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(double s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, double s) { return a *= s; }
  friend Polynomial operator*(double s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(Polynomial a, double c);
  friend Polynomial operator+(double c, Polynomial a) { return std::move(a) + c; }
  friend Polynomial operator-(Polynomial a, double c) { return std::move(a) + (-c); }
  friend Polynomial operator-(double c, const Polynomial& a) { return (-a) + c; }

  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

/// Coefficients of G = a + b F.
struct PencilPoint {
  double a = 0.0;
  double b = 1.0;
  bool operator==(const PencilPoint&) const = default;
};

/// Polynomial long division; `remainder` has degree < deg(divisor).
struct Division {
  Polynomial quotient;
  Polynomial remainder;
};
Division divide(const Polynomial& dividend, const Polynomial& divisor);

/// G = a + b F, coefficientwise.
Polynomial pencil_member(const Polynomial& F, PencilPoint pt);

/// x -> p(h x), i.e. c_i -> c_i h^i. Throws DomainError for h == 0.
Polynomial scale_argument(const Polynomial& p, double h);

/// 1 + max |c_i / c_n|; every real root lies in [-bound, bound].
double cauchy_bound(const Polynomial& p);
/// Fujiwara's bound 2 max |c_{n-i}/c_n|^{1/i} (last term halved); much tighter than the
/// Cauchy bound when the leading coefficient is tiny.
double fujiwara_bound(const Polynomial& p);

/// One line of space-separated ascending coefficients, each rendered with 17 significant
/// digits so that `parse_polynomial(to_text(p)) == p` exactly.
std::string to_text(const Polynomial& p);
/// Inverse of `to_text`. Accepts the Unicode minus sign U+2212 as well as '-'.
Polynomial parse_polynomial(std::string_view text);

}  // namespace jetgeo
