#include "sigmaq/radical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sigmaq {

void RadicalScalar::check_same_field(const RadicalScalar& o) const {
  if (f_ != o.f_) throw std::invalid_argument("radical order mismatch");
}

void RadicalScalar::add_term(const RadKey& key, const Cyclotomic& c) {
  if (c.is_zero()) return;
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

RadicalScalar RadicalScalar::one(const CycloField& f) {
  RadicalScalar r(f);
  r.t_.emplace(RadKey{}, Cyclotomic::one(f));
  return r;
}

RadicalScalar RadicalScalar::from_cyclotomic(const Cyclotomic& c) {
  RadicalScalar r(c.field());
  if (!c.is_zero()) r.t_.emplace(RadKey{}, c);
  return r;
}

RadicalScalar RadicalScalar::from_rational(const CycloField& f,
                                           const Rational& v) {
  return from_cyclotomic(Cyclotomic::from_rational(f, v));
}

RadicalScalar RadicalScalar::radical(const CycloField& f, int n) {
  if (n < 1 || n > f.k() - 1)
    throw std::invalid_argument("radical index out of range");
  if (n == 1) return one(f);  // [1]_q = 1
  RadicalScalar r(f);
  r.t_.emplace(RadKey{n}, Cyclotomic::one(f));
  return r;
}

RadicalScalar RadicalScalar::sqrt_q_factorial(const CycloField& f, int n,
                                              bool conjugate) {
  if (n < 0 || n > f.k() - 1)
    throw std::invalid_argument("factorial index out of range");
  RadKey key;
  for (int j = 2; j <= n; ++j) key.push_back(j);
  RadicalScalar r(f);
  r.t_.emplace(key, Cyclotomic::one(f));
  return conjugate ? r.star() : r;
}

bool RadicalScalar::is_one() const {
  return t_.size() == 1 && t_.begin()->first.empty() &&
         t_.begin()->second.is_one();
}

bool RadicalScalar::is_cyclotomic() const {
  if (t_.empty()) return true;
  return t_.size() == 1 && t_.begin()->first.empty();
}

Cyclotomic RadicalScalar::cyclotomic_part() const {
  if (t_.empty()) return Cyclotomic::zero(*f_);
  if (!is_cyclotomic())
    throw std::domain_error("element carries radical symbols");
  return t_.begin()->second;
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar r(*f_);
  for (const auto& [key, c] : t_) r.t_.emplace(key, -c);
  return r;
}

RadicalScalar RadicalScalar::operator+(const RadicalScalar& o) const {
  check_same_field(o);
  RadicalScalar r = *this;
  for (const auto& [key, c] : o.t_) r.add_term(key, c);
  return r;
}

RadicalScalar RadicalScalar::operator-(const RadicalScalar& o) const {
  check_same_field(o);
  RadicalScalar r = *this;
  for (const auto& [key, c] : o.t_) r.add_term(key, -c);
  return r;
}

RadicalScalar RadicalScalar::operator*(const RadicalScalar& o) const {
  check_same_field(o);
  RadicalScalar r(*f_);
  int k = f_->k();
  for (const auto& [ka, ca] : t_) {
    for (const auto& [kb, cb] : o.t_) {
      // Radical exponents add mod 2: the symmetric difference survives,
      // each paired s_n contributes a factor [n]_q.
      RadKey key;
      Cyclotomic coef = ca * cb;
      size_t i = 0, j = 0;
      while (i < ka.size() || j < kb.size()) {
        if (j == kb.size() || (i < ka.size() && ka[i] < kb[j])) {
          key.push_back(ka[i++]);
        } else if (i == ka.size() || kb[j] < ka[i]) {
          key.push_back(kb[j++]);
        } else {
          coef *= q_number(k, ka[i]);
          ++i;
          ++j;
        }
      }
      r.add_term(key, coef);
    }
  }
  return r;
}

RadicalScalar RadicalScalar::scale(const Cyclotomic& c) const {
  RadicalScalar r(*f_);
  if (c.is_zero()) return r;
  for (const auto& [key, v] : t_) r.add_term(key, v * c);
  return r;
}

bool RadicalScalar::operator==(const RadicalScalar& o) const {
  return f_ == o.f_ && t_ == o.t_;
}

RadicalScalar RadicalScalar::invert_monomial() const {
  if (t_.size() != 1)
    throw std::domain_error("invert_monomial needs a single nonzero term");
  const auto& [key, c] = *t_.begin();
  // (c * prod s_n) * (d * prod s_n) = c * d * prod [n]_q = 1.
  Cyclotomic denom = c;
  for (int n : key) denom *= q_number(f_->k(), n);
  RadicalScalar r(*f_);
  r.t_.emplace(key, denom.inverse());
  return r;
}

RadicalScalar RadicalScalar::star() const {
  RadicalScalar r(*f_);
  for (const auto& [key, c] : t_) {
    long phase = 0;
    for (int n : key) phase += 2L * (n - 1);
    r.add_term(key, c.conj() * zeta_power(f_->k(), -phase));
  }
  return r;
}

std::complex<double> RadicalScalar::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [key, c] : t_) {
    std::complex<double> term = c.to_complex();
    for (int n : key) term *= std::sqrt(q_number(f_->k(), n).to_complex());
    acc += term;
  }
  return acc;
}

std::string RadicalScalar::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int n : key) os << "*s" << n;
  }
  return os.str();
}

}  // namespace sigmaq
