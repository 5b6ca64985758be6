#include "injwords/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace injwords {

namespace {

struct FieldData {
  std::vector<std::int64_t> phi;
  // powers[e] = x^e mod Φ_L, e = 0..L-1.
  std::vector<std::vector<Rational>> powers;
};

std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  // Both monic.
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quotient(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t q = num[i];
    quotient[i - dn] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= q * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return quotient;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::vector<std::int64_t> compute_phi(std::uint64_t order);

const std::vector<std::int64_t>& phi_locked(std::uint64_t order) {
  static std::map<std::uint64_t, std::vector<std::int64_t>> cache;
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_phi(order)).first;
  return it->second;
}

std::vector<std::int64_t> compute_phi(std::uint64_t order) {
  std::vector<std::int64_t> poly(order + 1, 0);
  poly[0] = -1;
  poly[order] = 1;
  for (std::uint64_t d = 1; d < order; ++d) {
    if (order % d == 0) poly = divide_exact(poly, phi_locked(d));
  }
  return poly;
}

const FieldData& field(std::uint64_t conductor) {
  static std::map<std::uint64_t, FieldData> cache;
  std::lock_guard lock(cache_mutex());
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  FieldData data;
  data.phi = phi_locked(conductor);
  const std::size_t deg = data.phi.size() - 1;
  std::vector<Rational> x(deg, Rational(0));
  x[0] = 1;
  for (std::uint64_t e = 0; e < conductor; ++e) {
    data.powers.push_back(x);
    // multiply by x, then reduce x^deg = -Σ phi_i x^i.
    Rational top = x[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i) x[i] = x[i - 1];
    x[0] = 0;
    if (top != 0) {
      for (std::size_t i = 0; i < deg; ++i) x[i] -= top * data.phi[i];
    }
  }
  return cache.emplace(conductor, std::move(data)).first->second;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t order) {
  if (order == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  std::lock_guard lock(cache_mutex());
  return phi_locked(order);
}

CyclotomicValue::CyclotomicValue(std::uint64_t conductor) : conductor_(conductor) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
  coeffs_.assign(field(conductor).phi.size() - 1, Rational(0));
}

CyclotomicValue CyclotomicValue::from_rational(const Rational& q, std::uint64_t conductor) {
  CyclotomicValue v(conductor);
  v.coeffs_[0] = q;
  return v;
}

CyclotomicValue CyclotomicValue::root_of_unity(std::int64_t t, std::uint64_t order, std::uint64_t conductor) {
  if (order == 0 || conductor % order != 0) throw std::invalid_argument("root order must divide the conductor");
  const auto L = static_cast<std::int64_t>(conductor);
  std::int64_t e = (t % static_cast<std::int64_t>(order)) * (L / static_cast<std::int64_t>(order));
  e = ((e % L) + L) % L;
  CyclotomicValue v(conductor);
  v.coeffs_ = field(conductor).powers[static_cast<std::size_t>(e)];
  return v;
}

bool CyclotomicValue::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicValue::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

std::optional<Rational> CyclotomicValue::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

std::string CyclotomicValue::to_string() const {
  if (is_rational()) return injwords::to_string(coeffs_[0]);
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || i == 0) out += injwords::to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += "z";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

void CyclotomicValue::require_same_field(const CyclotomicValue& other) const {
  if (conductor_ != other.conductor_) throw std::invalid_argument("cyclotomic values from different fields");
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

CyclotomicValue& CyclotomicValue::operator-=(const CyclotomicValue& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

CyclotomicValue& CyclotomicValue::operator*=(const CyclotomicValue& other) {
  require_same_field(other);
  const auto& data = field(conductor_);
  const std::size_t deg = coeffs_.size();
  std::vector<Rational> out(deg, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (other.coeffs_[j] == 0) continue;
      const Rational c = coeffs_[i] * other.coeffs_[j];
      const auto& power = data.powers[(i + j) % conductor_];
      for (std::size_t t = 0; t < deg; ++t) {
        if (power[t] != 0) out[t] += c * power[t];
      }
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

CyclotomicValue& CyclotomicValue::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) { return a += b; }
CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) { return a -= b; }
CyclotomicValue operator*(CyclotomicValue a, const CyclotomicValue& b) { return a *= b; }
CyclotomicValue operator*(const Rational& s, CyclotomicValue a) { return a *= s; }

CyclotomicValue CyclotomicValue::from_exponent_counts(const std::vector<Integer>& counts, std::uint64_t conductor) {
  if (counts.size() != conductor) throw std::invalid_argument("one count per exponent expected");
  const auto& data = field(conductor);
  CyclotomicValue out(conductor);
  for (std::size_t e = 0; e < counts.size(); ++e) {
    if (counts[e] == 0) continue;
    for (std::size_t t = 0; t < out.coeffs_.size(); ++t) {
      if (data.powers[e][t] != 0) out.coeffs_[t] += Rational(counts[e]) * data.powers[e][t];
    }
  }
  return out;
}

}  // namespace injwords
