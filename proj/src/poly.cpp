#include "twc/poly.hpp"

#include "twc/matrix.hpp"
#include "twc/permanent.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace twc {

BigInt factorial(int k) {
  BigInt out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

BigInt exponent_factorial(const Exponent& e) {
  BigInt out = 1;
  for (auto k : e) out *= factorial(k);
  return out;
}

namespace {

int exponent_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

SparsePoly::SparsePoly(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 0 || degree < 0) throw std::invalid_argument("SparsePoly: negative size");
}

SparsePoly SparsePoly::constant(int nvars, const Rational& c) {
  SparsePoly p(nvars, 0);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

SparsePoly SparsePoly::monomial(const Exponent& e, const Rational& c) {
  SparsePoly p(static_cast<int>(e.size()), exponent_degree(e));
  p.add_term(e, c);
  return p;
}

SparsePoly SparsePoly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::out_of_range("SparsePoly::variable");
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[index] = 1;
  return monomial(e);
}

SparsePoly SparsePoly::linear(std::span<const Rational> coeffs) {
  SparsePoly p(static_cast<int>(coeffs.size()), 1);
  Exponent e(coeffs.size(), 0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    e[j] = 1;
    p.add_term(e, coeffs[j]);
    e[j] = 0;
  }
  return p;
}

Rational SparsePoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Exponent> SparsePoly::monomials() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

void SparsePoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent arity mismatch");
  if (exponent_degree(e) != degree_) throw std::invalid_argument("term breaks homogeneity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePoly::check_compatible(const SparsePoly& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("variable count mismatch");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  check_compatible(other);
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  if (degree_ != other.degree_) throw std::invalid_argument("degree mismatch in sum");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  SparsePoly neg = other;
  neg *= Rational(-1);
  return *this += neg;
}

SparsePoly& SparsePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.check_compatible(b);
  SparsePoly out(a.nvars_, a.degree_ + b.degree_);
  Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& other) { return *this = *this * other; }

SparsePoly SparsePoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  SparsePoly out = constant(nvars_, 1);
  for (int i = 0; i < k; ++i) out *= *this;
  return out;
}

std::complex<double> SparsePoly::evaluate(std::span<const std::complex<double>> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluate: arity");
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = static_cast<double>(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i]) term *= std::pow(point[i], static_cast<int>(e[i]));
    }
    sum += term;
  }
  return sum;
}

SparsePoly expand_F(const IntMatrix& a) {
  const int n = static_cast<int>(a.cols());
  SparsePoly out = SparsePoly::constant(n, 1);
  std::vector<Rational> row(static_cast<std::size_t>(n));
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (int j = 0; j < n; ++j) row[j] = Rational(a(r, j));
    out *= SparsePoly::linear(row);
  }
  return out;
}

SparsePoly build_Q(int n, std::span<const Edge> edges) {
  SparsePoly out = SparsePoly::constant(n, 1);
  for (const auto& [i, j] : edges) {
    if (i < 1 || j > n || i >= j) throw std::invalid_argument("build_Q: edge must have i < j");
    out *= SparsePoly::variable(n, i - 1) - SparsePoly::variable(n, j - 1);
  }
  return out;
}

SparsePoly build_H(int n, std::span<const Edge> edges, const EdgeVector& k) {
  if (k.size() != edges.size()) throw std::invalid_argument("build_H: one exponent per edge");
  SparsePoly out = SparsePoly::constant(n, 1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [i, j] = edges[e];
    if (i < 1 || j > n || i >= j) throw std::invalid_argument("build_H: edge must have i < j");
    const SparsePoly factor = SparsePoly::variable(n, i - 1) + SparsePoly::variable(n, j - 1);
    for (int p = 0; p < k[e]; ++p) out *= factor;
  }
  return out;
}

Rational coefficient(const Graph& g, const EdgeVector& k) {
  if (k.size() != g.m()) throw std::invalid_argument("coefficient: one exponent per edge");
  if (k.total() != static_cast<long>(g.m())) {
    throw std::invalid_argument("coefficient: exponent total must equal the edge count");
  }
  BigInt kfact = 1;
  for (int v : k.values()) kfact *= factorial(v);
  return Rational(permanent_replicated(build_C(g), k)) / Rational(kfact);
}

namespace {

void check_pairable(const SparsePoly& f, const SparsePoly& g) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("inner product: variable sets differ");
  if (!f.is_zero() && !g.is_zero() && f.degree() != g.degree()) {
    throw std::invalid_argument("inner product: degree mismatch");
  }
}

template <bool Weighted>
Rational inner(const SparsePoly& f, const SparsePoly& g) {
  check_pairable(f, g);
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& large = f.size() <= g.size() ? g : f;
  Rational sum = 0;
  for (const auto& [e, c] : small.terms()) {
    auto it = large.terms().find(e);
    if (it == large.terms().end()) continue;
    if constexpr (Weighted) {
      sum += Rational(exponent_factorial(e)) * c * it->second;
    } else {
      sum += c * it->second;
    }
  }
  return sum;
}

}  // namespace

Rational ip_weighted(const SparsePoly& f, const SparsePoly& g) { return inner<true>(f, g); }

Rational ip_plain(const SparsePoly& f, const SparsePoly& g) { return inner<false>(f, g); }

std::complex<double> ip_plain_quadrature(const SparsePoly& f, const SparsePoly& g, int grid) {
  check_pairable(f, g);
  const int n = f.nvars();
  if (n > 4) throw std::domain_error("ip_plain_quadrature: at most 4 variables");
  if (grid < 1) throw std::invalid_argument("ip_plain_quadrature: grid must be positive");
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(grid));
  for (int k = 0; k < grid; ++k) {
    roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / grid);
  }
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  std::vector<std::complex<double>> point(static_cast<std::size_t>(n));
  std::complex<double> sum = 0;
  long points = 1;
  for (int i = 0; i < n; ++i) points *= grid;
  for (long p = 0; p < points; ++p) {
    long rest = p;
    for (int i = 0; i < n; ++i) {
      point[i] = roots[rest % grid];
      rest /= grid;
    }
    sum += f.evaluate(point) * std::conj(g.evaluate(point));
  }
  return sum / static_cast<double>(points);
}

void write_poly(std::ostream& out, const SparsePoly& p) {
  for (const auto& [e, c] : p.terms()) {
    out << c << " :";
    for (auto k : e) out << ' ' << k;
    out << '\n';
  }
}

}  // namespace twc
