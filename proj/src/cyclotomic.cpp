#include "sigmaq/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace sigmaq {

namespace {

using Poly = std::vector<Rational>;  // dense, index = degree

int deg(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

void trim(Poly& p) { p.resize(static_cast<size_t>(deg(p) + 1)); }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Exact division, remainder must vanish.
Poly divexact(const Poly& a, const Poly& b) {
  Poly r = a;
  int db = deg(b);
  int dr = deg(r);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  Poly q(static_cast<size_t>(std::max(dr - db + 1, 0)), Rational(0));
  while (dr >= db) {
    Rational c = r[static_cast<size_t>(dr)] / b[static_cast<size_t>(db)];
    q[static_cast<size_t>(dr - db)] = c;
    for (int i = 0; i <= db; ++i)
      r[static_cast<size_t>(dr - db + i)] -= c * b[static_cast<size_t>(i)];
    dr = deg(r);
  }
  if (dr >= 0) throw std::logic_error("inexact cyclotomic division");
  trim(q);
  return q;
}

// Remainder of a modulo b (b monic here).
Poly mod(const Poly& a, const Poly& b) {
  Poly r = a;
  int db = deg(b);
  int dr = deg(r);
  while (dr >= db) {
    Rational c = r[static_cast<size_t>(dr)] / b[static_cast<size_t>(db)];
    for (int i = 0; i <= db; ++i)
      r[static_cast<size_t>(dr - db + i)] -= c * b[static_cast<size_t>(i)];
    dr = deg(r);
  }
  trim(r);
  return r;
}

// Phi_n via Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
Poly cyclotomic_poly(int n, std::map<int, Poly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Poly num(static_cast<size_t>(n + 1), Rational(0));
  num[0] = -1;
  num[static_cast<size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = divexact(num, cyclotomic_poly(d, memo));
  }
  memo[n] = num;
  return num;
}

}  // namespace

CycloField::CycloField(int k) : k_(k) {
  if (k < 2) throw std::invalid_argument("order k must be >= 2");
  std::map<int, Poly> memo;
  phi_ = cyclotomic_poly(4 * k, memo);
  degree_ = deg(phi_);

  // x^e mod Phi for e up to 2*degree-2 (largest exponent in a product of
  // two reduced elements).
  power_rows_.resize(static_cast<size_t>(2 * degree_ - 1));
  for (int e = 0; e < degree_; ++e) {
    Poly row(static_cast<size_t>(degree_), Rational(0));
    row[static_cast<size_t>(e)] = 1;
    power_rows_[static_cast<size_t>(e)] = row;
  }
  for (int e = degree_; e <= 2 * degree_ - 2; ++e) {
    // x * previous row, reduced with x^degree = -(low part of Phi).
    const Poly& prev = power_rows_[static_cast<size_t>(e - 1)];
    Poly row(static_cast<size_t>(degree_), Rational(0));
    Rational top = prev[static_cast<size_t>(degree_ - 1)];
    for (int i = degree_ - 1; i >= 1; --i)
      row[static_cast<size_t>(i)] = prev[static_cast<size_t>(i - 1)];
    if (top != 0)
      for (int i = 0; i < degree_; ++i)
        row[static_cast<size_t>(i)] -= top * phi_[static_cast<size_t>(i)];
    power_rows_[static_cast<size_t>(e)] = row;
  }

  zeta_rows_.resize(static_cast<size_t>(4 * k));
  Poly cur(static_cast<size_t>(degree_), Rational(0));
  cur[0] = 1;
  zeta_rows_[0] = cur;
  for (int j = 1; j < 4 * k; ++j) {
    Poly next(static_cast<size_t>(degree_), Rational(0));
    Rational top = cur[static_cast<size_t>(degree_ - 1)];
    for (int i = degree_ - 1; i >= 1; --i)
      next[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
    if (top != 0)
      for (int i = 0; i < degree_; ++i)
        next[static_cast<size_t>(i)] -= top * phi_[static_cast<size_t>(i)];
    zeta_rows_[static_cast<size_t>(j)] = next;
    cur = next;
  }
}

const CycloField& CycloField::get(int k) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<CycloField>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(k);
  if (it == cache.end())
    it = cache.emplace(k, std::unique_ptr<CycloField>(new CycloField(k))).first;
  return *it->second;
}

void Cyclotomic::check_same_field(const Cyclotomic& o) const {
  if (f_ != o.f_) throw std::invalid_argument("cyclotomic order mismatch");
}

Cyclotomic Cyclotomic::one(const CycloField& f) {
  Cyclotomic r(f);
  r.c_[0] = 1;
  return r;
}

Cyclotomic Cyclotomic::from_rational(const CycloField& f, const Rational& v) {
  Cyclotomic r(f);
  r.c_[0] = v;
  return r;
}

Cyclotomic Cyclotomic::zeta_pow(const CycloField& f, long j) {
  long m = 4L * f.k();
  long e = ((j % m) + m) % m;
  Cyclotomic r(f);
  r.c_ = f.zeta_row(static_cast<int>(e));
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*f_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  check_same_field(o);
  Cyclotomic r(*f_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  check_same_field(o);
  Cyclotomic r(*f_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  check_same_field(o);
  int d = f_->degree();
  std::vector<Rational> conv(static_cast<size_t>(2 * d - 1), Rational(0));
  for (int i = 0; i < d; ++i) {
    if (c_[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.c_[static_cast<size_t>(j)] == 0) continue;
      conv[static_cast<size_t>(i + j)] +=
          c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
    }
  }
  Cyclotomic r(*f_);
  for (int e = 0; e < 2 * d - 1; ++e) {
    if (conv[static_cast<size_t>(e)] == 0) continue;
    const auto& row = f_->power_row(e);
    for (int i = 0; i < d; ++i)
      r.c_[static_cast<size_t>(i)] +=
          conv[static_cast<size_t>(e)] * row[static_cast<size_t>(i)];
  }
  return r;
}

Cyclotomic Cyclotomic::operator*(const Rational& v) const {
  Cyclotomic r(*f_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * v;
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  if (f_ != o.f_) return false;
  return c_ == o.c_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  // Extended Euclid in Q[x] against the (irreducible) modulus.
  Poly r0 = f_->modulus();
  Poly r1 = c_;
  trim(r1);
  Poly s0 = {};            // coefficient of *this in r0
  Poly s1 = {Rational(1)};  // coefficient of *this in r1
  while (deg(r1) > 0) {
    // r0 = q*r1 + r2
    Poly q, r2 = r0;
    int d1 = deg(r1);
    q.assign(static_cast<size_t>(std::max(deg(r0) - d1 + 1, 1)), Rational(0));
    int dr = deg(r2);
    while (dr >= d1) {
      Rational c = r2[static_cast<size_t>(dr)] / r1[static_cast<size_t>(d1)];
      q[static_cast<size_t>(dr - d1)] = c;
      for (int i = 0; i <= d1; ++i)
        r2[static_cast<size_t>(dr - d1 + i)] -= c * r1[static_cast<size_t>(i)];
      dr = deg(r2);
    }
    trim(r2);
    Poly s2 = s0;
    {
      Poly qs = mul(q, s1);
      if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
      for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
      trim(s2);
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (deg(r1) != 0)
    throw std::logic_error("gcd with cyclotomic modulus not a unit");
  Rational unit = r1[0];
  Poly inv = mod(s1, f_->modulus());
  Cyclotomic out(*f_);
  for (size_t i = 0; i < inv.size(); ++i) out.c_[i] = inv[i] / unit;
  return out;
}

Cyclotomic Cyclotomic::conj() const {
  int m = f_->root_order();
  Cyclotomic r(*f_);
  for (int j = 0; j < f_->degree(); ++j) {
    const Rational& cj = c_[static_cast<size_t>(j)];
    if (cj == 0) continue;
    const auto& row = f_->zeta_row((m - j) % m);
    for (int i = 0; i < f_->degree(); ++i)
      r.c_[static_cast<size_t>(i)] += cj * row[static_cast<size_t>(i)];
  }
  return r;
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic base = *this;
  Cyclotomic acc = Cyclotomic::one(*f_);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::complex<double> Cyclotomic::to_complex() const {
  double theta = 2.0 * std::numbers::pi / f_->root_order();
  std::complex<double> zeta(std::cos(theta), std::sin(theta));
  std::complex<double> acc(0.0, 0.0);
  for (int i = f_->degree() - 1; i >= 0; --i)
    acc = acc * zeta +
          static_cast<double>(c_[static_cast<size_t>(i)].convert_to<double>());
  return acc;
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    Rational v = c_[j];
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (j == 0) {
      os << v.str();
    } else {
      if (v != 1) os << v.str() << "*";
      os << "z^" << j;
    }
  }
  if (first) return "0";
  return os.str();
}

Cyclotomic zeta_power(int k, long j) {
  return Cyclotomic::zeta_pow(CycloField::get(k), j);
}

Cyclotomic q_power(int k, long j) { return zeta_power(k, 4 * j); }

Cyclotomic q_half_power(int k, long j) { return zeta_power(k, 2 * j); }

Cyclotomic q_number(int k, long n, bool conjugate) {
  const CycloField& f = CycloField::get(k);
  Cyclotomic acc = Cyclotomic::zero(f);
  long step = conjugate ? -4 : 4;
  for (long j = 0; j < n; ++j) acc += Cyclotomic::zeta_pow(f, step * j);
  return acc;
}

Cyclotomic q_factorial(int k, long n, bool conjugate) {
  const CycloField& f = CycloField::get(k);
  Cyclotomic acc = Cyclotomic::one(f);
  for (long j = 1; j <= n; ++j) acc *= q_number(k, j, conjugate);
  return acc;
}

}  // namespace sigmaq
