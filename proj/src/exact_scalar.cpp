#include "wres/scalar/exact_scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace wres {

ExactScalar::ExactScalar(const GaussianRational& c, int pi_power, int omega_power) {
  if (pi_power < 0 || omega_power < 0) throw std::invalid_argument("negative grade in ExactScalar");
  add_term({pi_power, omega_power}, c);
}

void ExactScalar::add_term(const Grade& g, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussianRational ExactScalar::coefficient(int pi_power, int omega_power) const {
  auto it = terms_.find({pi_power, omega_power});
  return it == terms_.end() ? GaussianRational() : it->second;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  ExactScalar out;
  for (const auto& [ga, ca] : terms_)
    for (const auto& [gb, cb] : o.terms_) out.add_term({ga.first + gb.first, ga.second + gb.second}, ca * cb);
  return *this = std::move(out);
}

ExactScalar& ExactScalar::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, v] : terms_) v *= c;
  return *this;
}

std::complex<double> ExactScalar::to_complex() const {
  std::complex<double> sum = 0;
  for (const auto& [g, c] : terms_)
    sum += c.to_complex() * std::pow(std::numbers::pi, g.first) * std::pow(4.0 * std::numbers::pi, g.second);
  return sum;
}

std::string ExactScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string();
    if (g.first == 1) os << "·π";
    if (g.first > 1) os << "·π^" << g.first;
    if (g.second == 1) os << "·Ω3";
    if (g.second > 1) os << "·Ω3^" << g.second;
  }
  return os.str();
}

ExactScalar substitute_omega(const ExactScalar& s) {
  ExactScalar out;
  for (const auto& [g, c] : s.terms()) out += ExactScalar(c * GaussianRational(4).pow(g.second), g.first + g.second, 0);
  return out;
}

}  // namespace wres
