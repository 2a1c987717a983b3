#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "twc/graph.hpp"
#include "twc/types.hpp"

namespace twc {

using Exponent = std::vector<std::uint16_t>;

BigInt factorial(int k);
/// K! = prod_i K(i)!
BigInt exponent_factorial(const Exponent& e);

/// Homogeneous polynomial with exact rational coefficients over a fixed
/// number of variables. Zero coefficients are never stored.
class SparsePoly {
 public:
  using Terms = std::map<Exponent, Rational>;

  SparsePoly(int nvars, int degree);

  static SparsePoly constant(int nvars, const Rational& c);
  static SparsePoly monomial(const Exponent& e, const Rational& c = 1);
  static SparsePoly variable(int nvars, int index);
  /// sum_j coeffs[j] x_j
  static SparsePoly linear(std::span<const Rational> coeffs);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// coe(x^e, *this)
  Rational coefficient(const Exponent& e) const;
  /// mon(*this), in exponent order.
  std::vector<Exponent> monomials() const;

  void add_term(const Exponent& e, const Rational& c);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const Rational& c);
  SparsePoly& operator*=(const SparsePoly& other);
  SparsePoly pow(int k) const;

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  std::complex<double> evaluate(std::span<const std::complex<double>> point) const;

 private:
  void check_compatible(const SparsePoly& other) const;

  int nvars_;
  int degree_;
  Terms terms_;
};

/// F_A = prod_rows sum_j a_ij x_j.
SparsePoly expand_F(const IntMatrix& a);
/// Q_E = prod_{ {i,j} in E, i<j } (x_i - x_j) over n vertex variables.
SparsePoly build_Q(int n, std::span<const Edge> edges);
/// H_E^K = prod_e (x_i + x_j)^{K(e)}.
SparsePoly build_H(int n, std::span<const Edge> edges, const EdgeVector& k);

/// coe(x^K, P_G) = per(C_G(K)) / K!. Requires total(K) == |E|.
Rational coefficient(const Graph& g, const EdgeVector& k);

/// <f, g> = sum_K K! coe(x^K, f) coe(x^K, g)
Rational ip_weighted(const SparsePoly& f, const SparsePoly& g);
/// (f, g) = sum_K coe(x^K, f) coe(x^K, g)
Rational ip_plain(const SparsePoly& f, const SparsePoly& g);
/// (f, g) by the torus average on a uniform grid with `grid` points per axis.
/// Exact up to rounding once grid exceeds the degree. At most 4 variables.
std::complex<double> ip_plain_quadrature(const SparsePoly& f, const SparsePoly& g, int grid);

/// One line per term: "coeff : e1 e2 ... en".
void write_poly(std::ostream& out, const SparsePoly& p);

}  // namespace twc
