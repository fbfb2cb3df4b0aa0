#include "sigmaq/fock.hpp"

#include <stdexcept>

namespace sigmaq {

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::a_minus: return "am";
    case Gen::a_plus: return "ap";
    case Gen::a_plus_dag: return "apd";
    case Gen::a_minus_dag: return "amd";
    case Gen::number: return "N";
  }
  return "?";
}

Gen gen_from_name(const std::string& s) {
  if (s == "am") return Gen::a_minus;
  if (s == "ap") return Gen::a_plus;
  if (s == "apd") return Gen::a_plus_dag;
  if (s == "amd") return Gen::a_minus_dag;
  if (s == "N") return Gen::number;
  throw std::invalid_argument("unknown generator name: " + s);
}

OpMatrix generator_matrix(int k, Gen g) {
  const CycloField& f = CycloField::get(k);
  OpMatrix m(f, k);
  switch (g) {
    case Gen::a_minus:   // a_-|n> = sqrt([n]_q) |n-1>
      for (int n = 1; n < k; ++n) m.at(n - 1, n) = RadicalScalar::radical(f, n);
      break;
    case Gen::a_plus_dag:  // a_+^+|n> = sqrt([n]_qbar) |n-1>
      for (int n = 1; n < k; ++n)
        m.at(n - 1, n) = RadicalScalar::radical(f, n).star();
      break;
    case Gen::a_plus:    // a_+|n> = sqrt([n+1]_q) |n+1>, a_+|k-1> = 0
      for (int n = 0; n + 1 < k; ++n)
        m.at(n + 1, n) = RadicalScalar::radical(f, n + 1);
      break;
    case Gen::a_minus_dag:  // a_-^+|n> = sqrt([n+1]_qbar) |n+1>
      for (int n = 0; n + 1 < k; ++n)
        m.at(n + 1, n) = RadicalScalar::radical(f, n + 1).star();
      break;
    case Gen::number:
      for (int n = 0; n < k; ++n)
        m.at(n, n) = RadicalScalar::from_rational(f, Rational(n));
      break;
  }
  return m;
}

FockVector FockVector::basis(int k, int n) {
  const CycloField& f = CycloField::get(k);
  if (n < 0 || n >= k) throw std::out_of_range("Fock index out of range");
  FockVector v(f);
  v.amp(n) = RadicalScalar::one(f);
  return v;
}

FockVector FockVector::apply(const OpMatrix& m) const {
  FockVector r(*f_);
  int k = f_->k();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const RadicalScalar& e = m.at(i, j);
      if (e.is_zero() || amps_[static_cast<size_t>(j)].is_zero()) continue;
      r.amps_[static_cast<size_t>(i)] += e * amps_[static_cast<size_t>(j)];
    }
  return r;
}

FockVector FockVector::scale(const RadicalScalar& s) const {
  FockVector r(*f_);
  for (int n = 0; n < f_->k(); ++n) r.amp(n) = amps_[static_cast<size_t>(n)] * s;
  return r;
}

namespace {

CheckResult compare(const std::string& label, const RadMatrix& lhs,
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

}  // namespace

Report verify_relations(int k) {
  const CycloField& f = CycloField::get(k);
  OpMatrix am = generator_matrix(k, Gen::a_minus);
  OpMatrix ap = generator_matrix(k, Gen::a_plus);
  OpMatrix apd = generator_matrix(k, Gen::a_plus_dag);
  OpMatrix amd = generator_matrix(k, Gen::a_minus_dag);
  OpMatrix num = generator_matrix(k, Gen::number);
  OpMatrix id = OpMatrix::identity(f, k);
  OpMatrix zero(f, k);
  Cyclotomic q = q_power(k, 1);
  Cyclotomic qbar = q_power(k, -1);

  Report rep;
  rep.k = k;
  rep.checks.push_back(compare("quon.q", am * ap - (ap * am).scale(q), id));
  rep.checks.push_back(
      compare("quon.qbar", apd * amd - (amd * apd).scale(qbar), id));
  rep.checks.push_back(compare("number.raise.q", num * ap - ap * num, ap));
  rep.checks.push_back(
      compare("number.lower.qbar", num * apd - apd * num, zero - apd));
  rep.checks.push_back(compare("number.lower.q", num * am - am * num, zero - am));
  rep.checks.push_back(compare("number.raise.qbar", num * amd - amd * num, amd));
  {
    CheckResult c1 = compare("nilpotency.q", ap.pow(k), zero);
    CheckResult c2 = compare("nilpotency.q", am.pow(k), zero);
    CheckResult c = c1.pass ? c2 : c1;
    c.label = "nilpotency.q";
    c.pass = c1.pass && c2.pass;
    rep.checks.push_back(c);
  }
  {
    CheckResult c1 = compare("nilpotency.qbar", apd.pow(k), zero);
    CheckResult c2 = compare("nilpotency.qbar", amd.pow(k), zero);
    CheckResult c = c1.pass ? c2 : c1;
    c.label = "nilpotency.qbar";
    c.pass = c1.pass && c2.pass;
    rep.checks.push_back(c);
  }
  rep.checks.push_back(
      compare("mixed.am_apd", am * apd, (apd * am).scale(q_half_power(k, -1))));
  rep.checks.push_back(
      compare("mixed.ap_amd", ap * amd, (amd * ap).scale(q_half_power(k, 1))));
  return rep;
}

FockVector build_state(int k, int n, BuildRoute route) {
  const CycloField& f = CycloField::get(k);
  if (n < 0 || n >= k) throw std::out_of_range("Fock index out of range");
  Gen g = route == BuildRoute::via_a_plus ? Gen::a_plus : Gen::a_minus_dag;
  bool conj = route == BuildRoute::via_a_minus_dag;
  OpMatrix raise = generator_matrix(k, g);
  FockVector v = FockVector::basis(k, 0);
  for (int i = 0; i < n; ++i) v = v.apply(raise);
  RadicalScalar norm = RadicalScalar::sqrt_q_factorial(f, n, conj);
  return v.scale(norm.invert_monomial());
}

Report adjoint_check(int k) {
  Report rep;
  rep.k = k;
  OpMatrix ap = generator_matrix(k, Gen::a_plus);
  OpMatrix am = generator_matrix(k, Gen::a_minus);
  rep.checks.push_back(compare("apd = star_transpose(ap)",
                               generator_matrix(k, Gen::a_plus_dag),
                               ap.star_transpose()));
  rep.checks.push_back(compare("amd = star_transpose(am)",
                               generator_matrix(k, Gen::a_minus_dag),
                               am.star_transpose()));
  return rep;
}

}  // namespace sigmaq
