#include "injwords/class_function.hpp"

#include <algorithm>
#include <stdexcept>

#include "injwords/combinatorics.hpp"
#include "injwords/sn_character.hpp"

namespace injwords {

ClassFunction::ClassFunction(int n) : n_(n), conductor_(lcm_up_to(n)), classes_(partitions(n)) {
  values_.assign(classes_.size(), CyclotomicValue(conductor_));
}

ClassFunction ClassFunction::from_integers(int n, const std::vector<std::int64_t>& values) {
  ClassFunction f(n);
  if (values.size() != f.classes_.size()) throw std::invalid_argument("one value per class expected");
  for (std::size_t i = 0; i < values.size(); ++i) {
    f.values_[i] = CyclotomicValue::from_rational(Rational(static_cast<long>(values[i])), f.conductor_);
  }
  return f;
}

std::size_t ClassFunction::index_of(const Partition& cycle_type) const {
  // classes_ is sorted in decreasing order.
  auto it = std::lower_bound(classes_.begin(), classes_.end(), cycle_type, std::greater<>());
  if (it == classes_.end() || *it != cycle_type) throw std::invalid_argument("not a cycle type of S_n");
  return static_cast<std::size_t>(it - classes_.begin());
}

const CyclotomicValue& ClassFunction::value(const Partition& cycle_type) const { return values_[index_of(cycle_type)]; }

void ClassFunction::set(const Partition& cycle_type, CyclotomicValue v) {
  if (v.conductor() != conductor_) throw std::invalid_argument("value from a different cyclotomic field");
  values_[index_of(cycle_type)] = std::move(v);
}

bool ClassFunction::is_rational() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& v) { return v.is_rational(); });
}

bool ClassFunction::is_integral() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& v) {
    const auto q = v.rational_value();
    return q && q->get_den() == 1;
  });
}

std::vector<std::int64_t> ClassFunction::integer_values() const {
  if (!is_integral()) throw std::domain_error("class function is not integer-valued");
  std::vector<std::int64_t> out;
  for (const auto& v : values_) out.push_back(v.coefficients()[0].get_num().get_si());
  return out;
}

ClassFunction ClassFunction::sign_twisted() const {
  ClassFunction out = *this;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (class_sign(classes_[i]) < 0) out.values_[i] *= Rational(-1);
  }
  return out;
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (n_ != other.n_) throw std::invalid_argument("class functions on different groups");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  if (n_ != other.n_) throw std::invalid_argument("class functions on different groups");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& scalar) {
  for (auto& v : values_) v *= scalar;
  return *this;
}

ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }

CyclotomicValue inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("class functions on different groups");
  if (!b.is_rational()) throw std::invalid_argument("second argument of inner_product must be rational-valued");
  CyclotomicValue sum(a.conductor());
  for (std::size_t i = 0; i < a.classes().size(); ++i) {
    const Rational weight = Rational(static_cast<unsigned long>(class_size(a.classes()[i]))) * *b.values()[i].rational_value();
    sum += weight * a.values()[i];
  }
  sum *= Rational(1, static_cast<unsigned long>(factorial(a.degree())));
  return sum;
}

ClassFunction irreducible(const Partition& lambda) {
  const int n = lambda.size();
  std::vector<std::int64_t> values;
  for (const auto& mu : partitions(n)) values.push_back(irreducible_character(lambda, mu));
  return ClassFunction::from_integers(n, values);
}

void CycleIndexPolynomial::add_term(const Partition& cycle_type, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(cycle_type, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string CycleIndexPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    const auto& [type, c] = *it;
    const bool negative = c < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += injwords::to_string(Rational(abs(c)));
    for (int l = 1; l <= type.size(); ++l) {
      const int m = type.multiplicity(l);
      if (!m) continue;
      out += " a" + std::to_string(l);
      if (m > 1) out += "^" + std::to_string(m);
    }
  }
  return out;
}

CycleIndexPolynomial cycle_index(const ClassFunction& psi) {
  if (!psi.is_rational()) throw std::invalid_argument("cycle index needs a rational-valued class function");
  CycleIndexPolynomial z;
  const Rational inv_order(1, static_cast<unsigned long>(factorial(psi.degree())));
  for (std::size_t i = 0; i < psi.classes().size(); ++i) {
    const auto& mu = psi.classes()[i];
    z.add_term(mu, *psi.values()[i].rational_value() * static_cast<unsigned long>(class_size(mu)) * inv_order);
  }
  return z;
}

ClassFunction from_cycle_index(int n, const CycleIndexPolynomial& z) {
  ClassFunction f(n);
  const Rational order(static_cast<unsigned long>(factorial(n)));
  for (const auto& [mu, c] : z.terms()) {
    if (mu.size() != n) throw std::invalid_argument("cycle index term of the wrong degree");
    f.set(mu, CyclotomicValue::from_rational(c * order / static_cast<unsigned long>(class_size(mu)), f.conductor()));
  }
  return f;
}

}  // namespace injwords
