#include "jetgeo/poly/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "jetgeo/error.hpp"

namespace jetgeo {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(double c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int power, double c) {
  if (power < 0) throw DomainError("monomial: negative power");
  std::vector<double> v(static_cast<std::size_t>(power) + 1, 0.0);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

std::optional<int> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::abs_eval(double x) const {
  const double ax = std::abs(x);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<double> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::shifted(double x0) const {
  // Taylor shift: coefficient k of p(t + x0) is the k-th remainder of repeated
  // synthetic division by (x - x0).
  std::vector<double> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = n - 1; i > k; --i) c[i - 1] += x0 * c[i];
  }
  return Polynomial(std::move(c));
}

double Polynomial::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool Polynomial::is_even(double rel_tol) const {
  const double limit = rel_tol * max_abs_coeff();
  for (std::size_t i = 1; i < coeffs_.size(); i += 2) {
    if (std::abs(coeffs_[i]) >= limit && coeffs_[i] != 0.0) return false;
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (double& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(r));
}

Polynomial operator+(Polynomial a, double c) {
  if (a.coeffs_.empty()) a.coeffs_.push_back(0.0);
  a.coeffs_[0] += c;
  a.trim();
  return a;
}

Division divide(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw DomainError("divide: zero divisor");
  std::vector<double> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  const std::size_t m = divisor.coeffs().size();
  if (rem.size() < m) return {Polynomial{}, dividend};
  std::vector<double> quot(rem.size() - m + 1, 0.0);
  const double lead = divisor.leading();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const double q = rem[k + m - 1] / lead;
    quot[k] = q;
    for (std::size_t j = 0; j < m; ++j) rem[k + j] -= q * divisor.coeff(j);
    rem[k + m - 1] = 0.0;
  }
  rem.resize(m - 1);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial pencil_member(const Polynomial& F, PencilPoint pt) { return pt.b * F + pt.a; }

Polynomial scale_argument(const Polynomial& p, double h) {
  if (h == 0.0) throw DomainError("scale_argument: h must be nonzero");
  std::vector<double> c(p.coeffs().begin(), p.coeffs().end());
  double hp = 1.0;
  for (double& ci : c) {
    ci *= hp;
    hp *= h;
  }
  return Polynomial(std::move(c));
}

double cauchy_bound(const Polynomial& p) {
  if (p.is_constant()) return 1.0;
  const double lead = std::abs(p.leading());
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) m = std::max(m, std::abs(p.coeff(i)) / lead);
  return 1.0 + m;
}

double fujiwara_bound(const Polynomial& p) {
  if (p.is_constant()) return 1.0;
  const auto c = p.coeffs();
  const std::size_t n = c.size() - 1;
  const double lead = std::abs(c[n]);
  double m = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    double r = std::abs(c[n - i]) / lead;
    if (i == n) r *= 0.5;
    m = std::max(m, std::pow(r, 1.0 / static_cast<double>(i)));
  }
  return 2.0 * m;
}

std::string to_text(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  char buf[40];
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, p.coeff(i) + 0.0, std::chars_format::general, 17);
    if (i) out += ' ';
    out.append(buf, end);
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, kUnicodeMinus.size()) == kUnicodeMinus) {
      s += '-';
      i += kUnicodeMinus.size();
    } else {
      s += text[i] == ',' ? ' ' : text[i];
      ++i;
    }
  }
  std::vector<double> coeffs;
  const char* p = s.data();
  const char* end = s.data() + s.size();
  while (true) {
    while (p < end && std::isspace(static_cast<unsigned char>(*p))) ++p;
    if (p == end) break;
    if (*p == '+') ++p;
    double v = 0.0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{} || (next < end && !std::isspace(static_cast<unsigned char>(*next))))
      throw ParseError("malformed polynomial coefficient in \"" + std::string(text) + "\"");
    coeffs.push_back(v);
    p = next;
  }
  if (coeffs.empty()) throw ParseError("empty polynomial literal");
  return Polynomial(std::move(coeffs));
}

}  // namespace jetgeo
