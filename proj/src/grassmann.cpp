#include "sigmaq/grassmann.hpp"

#include <sstream>
#include <stdexcept>

namespace sigmaq {

namespace {

int alpha_numerator(CrossingPhase a) {
  switch (a) {
    case CrossingPhase::zero: return 0;
    case CrossingPhase::half: return 1;
    case CrossingPhase::one: return 2;
  }
  return 1;
}

}  // namespace

void GrassmannElement::add_term(int m, int n, const RadicalScalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(m, n);
  auto it = c_.find(key);
  if (it == c_.end()) {
    c_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) c_.erase(it);
}

GrassmannElement GrassmannElement::one(const CycloField& f) {
  return monomial(f, 0, 0, RadicalScalar::one(f));
}

GrassmannElement GrassmannElement::z(const CycloField& f) {
  return monomial(f, 0, 1, RadicalScalar::one(f));
}

GrassmannElement GrassmannElement::zbar(const CycloField& f) {
  return monomial(f, 1, 0, RadicalScalar::one(f));
}

GrassmannElement GrassmannElement::monomial(const CycloField& f, int m, int n,
                                            const RadicalScalar& c) {
  if (m < 0 || n < 0 || m >= f.k() || n >= f.k())
    throw std::out_of_range("Grassmann exponent out of range");
  GrassmannElement e(f);
  e.add_term(m, n, c);
  return e;
}

GrassmannElement GrassmannElement::scalar(const RadicalScalar& c) {
  GrassmannElement e(c.field());
  e.add_term(0, 0, c);
  return e;
}

RadicalScalar GrassmannElement::coefficient(int m, int n) const {
  auto it = c_.find(std::make_pair(m, n));
  if (it == c_.end()) return RadicalScalar::zero(*f_);
  return it->second;
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement r(*f_);
  for (const auto& [key, c] : c_) r.c_.emplace(key, -c);
  return r;
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
  if (f_ != o.f_) throw std::invalid_argument("Grassmann order mismatch");
  GrassmannElement r = *this;
  for (const auto& [key, c] : o.c_) r.add_term(key.first, key.second, c);
  return r;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const {
  return *this + (-o);
}

GrassmannElement GrassmannElement::operator*(const GrassmannElement& o) const {
  if (f_ != o.f_) throw std::invalid_argument("Grassmann order mismatch");
  int k = f_->k();
  GrassmannElement r(*f_);
  for (const auto& [ka, ca] : c_) {
    for (const auto& [kb, cb] : o.c_) {
      int m = ka.first + kb.first;
      int n = ka.second + kb.second;
      if (m >= k || n >= k) continue;
      // n_left z's cross m_right zbar's, one q^(1/2) each.
      long crossings = static_cast<long>(ka.second) * kb.first;
      RadicalScalar coef = (ca * cb).scale(q_half_power(k, crossings));
      r.add_term(m, n, coef);
    }
  }
  return r;
}

GrassmannElement GrassmannElement::scale(const RadicalScalar& s) const {
  GrassmannElement r(*f_);
  for (const auto& [key, c] : c_) r.add_term(key.first, key.second, c * s);
  return r;
}

GrassmannElement GrassmannElement::pow(int e) const {
  GrassmannElement acc = one(*f_);
  for (int i = 0; i < e; ++i) acc *= *this;
  return acc;
}

std::string GrassmannElement::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "[" << c.str() << "]";
    if (key.first > 0) os << "*zb^" << key.first;
    if (key.second > 0) os << "*z^" << key.second;
  }
  return os.str();
}

GrassmannElement d_z(const GrassmannElement& a, CrossingPhase alpha) {
  const CycloField& f = a.field();
  int k = f.k();
  int t = alpha_numerator(alpha);
  GrassmannElement r(f);
  for (const auto& [key, c] : a.c_) {
    auto [m, n] = key;
    if (n == 0) continue;
    Cyclotomic factor = q_half_power(k, static_cast<long>(t) * m);
    factor *= q_number(k, n);
    r.add_term(m, n - 1, c.scale(factor));
  }
  return r;
}

GrassmannElement d_zbar(const GrassmannElement& a) {
  const CycloField& f = a.field();
  int k = f.k();
  GrassmannElement r(f);
  for (const auto& [key, c] : a.c_) {
    auto [m, n] = key;
    if (m == 0) continue;
    r.add_term(m - 1, n, c.scale(q_number(k, m, true)));
  }
  return r;
}

GrassmannElement berezin_z(const GrassmannElement& a) {
  const CycloField& f = a.field();
  int k = f.k();
  GrassmannElement r(f);
  for (const auto& [key, c] : a.c_)
    if (key.second == k - 1) r.add_term(key.first, 0, c);
  return r;
}

GrassmannElement berezin_zbar(const GrassmannElement& a) {
  const CycloField& f = a.field();
  int k = f.k();
  GrassmannElement r(f);
  for (const auto& [key, c] : a.c_)
    if (key.first == k - 1) r.add_term(0, key.second, c);
  return r;
}

namespace {

int basis_index(int k, int m, int n) { return m * k + n; }

template <typename Op>
RadMatrix map_matrix(const CycloField& f, Op op) {
  int k = f.k();
  RadMatrix mat(f, k * k);
  for (int m = 0; m < k; ++m)
    for (int n = 0; n < k; ++n) {
      GrassmannElement img =
          op(GrassmannElement::monomial(f, m, n, RadicalScalar::one(f)));
      for (const auto& [key, c] : img.coeffs())
        mat.at(basis_index(k, key.first, key.second), basis_index(k, m, n)) = c;
    }
  return mat;
}

CheckResult compare_full(const std::string& label, const RadMatrix& lhs,
                         const RadMatrix& rhs) {
  CheckResult c;
  c.label = label;
  c.pass = (lhs == rhs);
  if (!c.pass) {
    auto w = lhs.first_mismatch(rhs);
    c.row = w->first;
    c.col = w->second;
    c.lhs = lhs.at(c.row, c.col).str();
    c.rhs = rhs.at(c.row, c.col).str();
  }
  return c;
}

// Compare only the columns spanned by the given basis indices.
CheckResult compare_columns(const std::string& label, const RadMatrix& lhs,
                            const RadMatrix& rhs,
                            const std::vector<int>& cols) {
  CheckResult c;
  c.label = label;
  c.pass = true;
  for (int col : cols)
    for (int row = 0; row < lhs.dim(); ++row)
      if (lhs.at(row, col) != rhs.at(row, col)) {
        c.pass = false;
        c.row = row;
        c.col = col;
        c.lhs = lhs.at(row, col).str();
        c.rhs = rhs.at(row, col).str();
        return c;
      }
  return c;
}

}  // namespace

RadMatrix left_mul_matrix(const GrassmannElement& a) {
  return map_matrix(a.field(),
                    [&](const GrassmannElement& x) { return a * x; });
}

RadMatrix d_z_matrix(int k, CrossingPhase alpha) {
  const CycloField& f = CycloField::get(k);
  return map_matrix(f,
                    [&](const GrassmannElement& x) { return d_z(x, alpha); });
}

RadMatrix d_zbar_matrix(int k) {
  const CycloField& f = CycloField::get(k);
  return map_matrix(f, [&](const GrassmannElement& x) { return d_zbar(x); });
}

Report realization_check(int k, CrossingPhase alpha) {
  const CycloField& f = CycloField::get(k);
  int dim = k * k;
  RadMatrix lz = left_mul_matrix(GrassmannElement::z(f));
  RadMatrix lzb = left_mul_matrix(GrassmannElement::zbar(f));
  RadMatrix dz = d_z_matrix(k, alpha);
  RadMatrix dzb = d_zbar_matrix(k);
  RadMatrix id = RadMatrix::identity(f, dim);
  RadMatrix zero(f, dim);
  Cyclotomic q = q_power(k, 1);
  Cyclotomic qbar = q_power(k, -1);

  Report rep;
  rep.k = k;

  // The derivatives are defined on one-variable functions; the q-sector
  // commutation identity is checked on the z-polynomial columns and its
  // conjugate on the zbar-polynomial columns.
  std::vector<int> z_cols, zbar_cols;
  for (int n = 0; n < k; ++n) z_cols.push_back(basis_index(k, 0, n));
  for (int m = 0; m < k; ++m) zbar_cols.push_back(basis_index(k, m, 0));
  rep.checks.push_back(compare_columns(
      "commutation.z: dz z - q z dz = 1 on f(z)", dz * lz - (lz * dz).scale(q), id,
      z_cols));
  rep.checks.push_back(compare_columns(
      "commutation.zbar: dzb zb - qbar zb dzb = 1 on g(zbar)",
      dzb * lzb - (lzb * dzb).scale(qbar), id, zbar_cols));

  // On mixed monomials the q-sector commutator is the zbar-degree grading
  // q^m, an exact identity that pins the crossing phase together with the
  // derivative exchange below.
  {
    RadMatrix graded(f, dim);
    for (int m = 0; m < k; ++m)
      for (int n = 0; n < k; ++n) {
        int i = basis_index(k, m, n);
        graded.at(i, i) = RadicalScalar::from_cyclotomic(q_power(k, m));
      }
    rep.checks.push_back(compare_full("commutation.z.graded: dz z - q z dz = q^deg(zbar)",
                                      dz * lz - (lz * dz).scale(q), graded));
  }

  rep.checks.push_back(compare_full("nilpotency: z^k = 0", lz.pow(k), zero));
  rep.checks.push_back(
      compare_full("nilpotency: zbar^k = 0", lzb.pow(k), zero));
  rep.checks.push_back(compare_full("nilpotency: dz^k = 0", dz.pow(k), zero));
  rep.checks.push_back(
      compare_full("nilpotency: dzb^k = 0", dzb.pow(k), zero));

  rep.checks.push_back(
      compare_full("exchange: dz dzb = qbar^(1/2) dzb dz", dz * dzb,
                   (dzb * dz).scale(q_half_power(k, -1))));
  rep.checks.push_back(compare_full("exchange: z zb = q^(1/2) zb z", lz * lzb,
                                    (lzb * lz).scale(q_half_power(k, 1))));
  return rep;
}

}  // namespace sigmaq
