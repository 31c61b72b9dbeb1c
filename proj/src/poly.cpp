#include "nilgraph/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilgraph {

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial Polynomial::variable(std::size_t index) {
  Monomial m(index + 1, 0);
  m[index] = 1;
  return monomial(std::move(m), 1);
}

Polynomial Polynomial::monomial(Monomial exponents, const Rational& coeff) {
  Polynomial p;
  p.add_term(trimmed(std::move(exponents)), coeff);
  return p;
}

Polynomial::Monomial Polynomial::trimmed(Monomial m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
  return m;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned Polynomial::total_degree() const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) {
    unsigned d = 0;
    for (auto e : m) d += e;
    best = std::max(best, d);
  }
  return best;
}

std::size_t Polynomial::variable_span() const {
  std::size_t span = 0;
  for (const auto& [m, c] : terms_) span = std::max(span, m.size());
  return span;
}

Rational Polynomial::coefficient(const Monomial& exponents) const {
  auto it = terms_.find(trimmed(exponents));
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() < variable_span()) throw std::invalid_argument("Polynomial::evaluate: point too short");
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (unsigned e = 0; e < m[i]; ++e) term *= point[i];
    }
    total += term;
  }
  return total;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> values) const {
  if (values.size() < variable_span()) throw std::invalid_argument("Polynomial::substitute: too few values");
  Polynomial total;
  for (const auto& [m, c] : terms_) {
    Polynomial term(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (unsigned e = 0; e < m[i]; ++e) term *= values[i];
    }
    total += term;
  }
  return total;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    unsigned dx = 0, dy = 0;
    for (auto e : x.first) dx += e;
    for (auto e : y.first) dy += e;
    return dx > dy;
  });
  for (const auto& [m, c] : ordered) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = m.empty();
    if (mag != 1 || constant) {
      os << mag.get_str();
      if (!constant) os << "*";
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!first_factor) os << "*";
      first_factor = false;
      if (i < names.size()) {
        os << names[i];
      } else {
        os << "x" << (i + 1);
      }
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

}  // namespace nilgraph
