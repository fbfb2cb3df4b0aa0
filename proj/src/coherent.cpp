#include "sigmaq/coherent.hpp"

#include <sstream>
#include <stdexcept>

namespace sigmaq {

namespace {

// 1 / sqrt([n]_p!) as a radical monomial.
RadicalScalar inv_sqrt_factorial(const CycloField& f, int n, bool conjugate) {
  return RadicalScalar::sqrt_q_factorial(f, n, conjugate).invert_monomial();
}

}  // namespace

CoherentKet ket(int k, Variant v) {
  const CycloField& f = CycloField::get(k);
  CoherentKet state{&f, v, {}};
  for (int n = 0; n < k; ++n) {
    bool conj = (v == Variant::zbar_type);
    RadicalScalar c = inv_sqrt_factorial(f, n, conj);
    state.amps.push_back(v == Variant::z_type
                             ? GrassmannElement::monomial(f, 0, n, c)
                             : GrassmannElement::monomial(f, n, 0, c));
  }
  return state;
}

CoherentBra bra(int k, Variant v) {
  const CycloField& f = CycloField::get(k);
  CoherentBra state{&f, v, {}};
  for (int n = 0; n < k; ++n) {
    // (z| carries zbar-powers with qbar-factorials and vice versa.
    bool conj = (v == Variant::z_type);
    RadicalScalar c = inv_sqrt_factorial(f, n, conj);
    state.amps.push_back(v == Variant::z_type
                             ? GrassmannElement::monomial(f, n, 0, c)
                             : GrassmannElement::monomial(f, 0, n, c));
  }
  return state;
}

Report eigenstate_check(int k) {
  const CycloField& f = CycloField::get(k);
  Report rep;
  rep.k = k;

  auto run = [&](const char* label, const CoherentKet& state,
                 const OpMatrix& op, const GrassmannElement& var) {
    CheckResult c;
    c.label = label;
    c.pass = true;
    for (int i = 0; i < k && c.pass; ++i) {
      // Operator acts on the Fock index; Grassmann coefficients stay as
      // left multipliers.
      GrassmannElement lhs = GrassmannElement::zero(f);
      for (int j = 0; j < k; ++j)
        lhs += state.amps[static_cast<size_t>(j)].scale(op.at(i, j));
      GrassmannElement rhs = var * state.amps[static_cast<size_t>(i)];
      if (lhs != rhs) {
        c.pass = false;
        c.row = i;
        c.lhs = lhs.str();
        c.rhs = rhs.str();
      }
    }
    rep.checks.push_back(c);
  };

  run("a_- |z) = z |z)", ket(k, Variant::z_type),
      generator_matrix(k, Gen::a_minus), GrassmannElement::z(f));
  run("a_+^+ |zbar) = zbar |zbar)", ket(k, Variant::zbar_type),
      generator_matrix(k, Gen::a_plus_dag), GrassmannElement::zbar(f));
  return rep;
}

GrassmannElement q_exponential(int k, const GrassmannElement& x,
                               bool conjugate) {
  const CycloField& f = CycloField::get(k);
  GrassmannElement acc = GrassmannElement::zero(f);
  GrassmannElement power = GrassmannElement::one(f);
  for (int n = 0; n < k; ++n) {
    if (n > 0) power *= x;
    Cyclotomic inv_fact = q_factorial(k, n, conjugate).inverse();
    acc += power.scale(RadicalScalar::from_cyclotomic(inv_fact));
  }
  return acc;
}

GrassmannElement overlap(const CoherentBra& b, const CoherentKet& a) {
  if (b.field != a.field) throw std::invalid_argument("order mismatch");
  const CycloField& f = *a.field;
  GrassmannElement acc = GrassmannElement::zero(f);
  for (size_t n = 0; n < a.amps.size(); ++n) acc += b.amps[n] * a.amps[n];
  return acc;
}

Measure measure_mu(int k) {
  const CycloField& f = CycloField::get(k);
  Measure mu{&f, GrassmannElement::zero(f), {}};
  for (int n = 0; n < k; ++n) {
    RadicalScalar m = RadicalScalar::sqrt_q_factorial(f, n);
    RadicalScalar w = m * m.star();
    if (!w.is_cyclotomic())
      throw std::logic_error("measure coefficient failed to reduce");
    mu.coeffs.push_back(w.cyclotomic_part());
    int p = k - 1 - n;
    // z^p zbar^p as written; normal ordering costs p^2 crossings.
    Cyclotomic phase = q_half_power(k, static_cast<long>(p) * p);
    mu.value += GrassmannElement::monomial(
        f, p, p, RadicalScalar::from_cyclotomic(mu.coeffs.back() * phase));
  }
  return mu;
}

GrassmannElement Measure::reordered() const {
  GrassmannElement r = GrassmannElement::zero(*field);
  int k = field->k();
  for (int n = 0; n < k; ++n) {
    int p = k - 1 - n;
    r += GrassmannElement::monomial(
        *field, p, p,
        RadicalScalar::from_cyclotomic(coeffs[static_cast<size_t>(n)]));
  }
  return r;
}

std::string convention_id(const Convention& c) {
  std::ostringstream os;
  os << (c.zbar_first ? "zbarfirst" : "zfirst") << "/"
     << (c.mu_canonical ? "mu-canonical" : "mu-written") << "/"
     << (c.bra_left ? "bra-left" : "bra-right") << "/"
     << (c.plain ? "plain" : "transport");
  return os.str();
}

std::vector<Convention> all_conventions() {
  std::vector<Convention> out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          out.push_back(Convention{a != 0, b != 0, c != 0, d != 0});
  return out;
}

std::optional<Convention> parse_convention(const std::string& id) {
  if (id == "classical-berezin") return default_convention();
  for (const Convention& c : all_conventions())
    if (convention_id(c) == id) return c;
  return std::nullopt;
}

Convention default_convention() {
  return Convention{false, false, false, false};
}

namespace {

// Double Berezin integral of the entry, honoring extraction order and the
// transport flag. For the z-display the differentials sit as dz [..] dzbar,
// so transported extraction moves the first block across the other one,
// braiding phase q^(-1/2) per crossing; in the zbar-display the canonical
// order already has each block adjacent to its differential, so transport
// and plain extraction coincide there.
RadicalScalar integrate_entry(const GrassmannElement& e, const Convention& c,
                              Display d) {
  const CycloField& f = e.field();
  int k = f.k();
  int top = k - 1;
  bool crossing = !c.plain && d == Display::z_display;
  if (!c.zbar_first) {
    // Extract the z top power first, then the zbar one.
    std::map<int, RadicalScalar> after;  // zbar exponent -> coefficient
    for (const auto& [key, v] : e.coeffs()) {
      if (key.second != top) continue;
      RadicalScalar w =
          crossing
              ? v.scale(q_half_power(k, -static_cast<long>(key.first) * top))
              : v;
      after.emplace(key.first, w);
    }
    auto it = after.find(top);
    return it == after.end() ? RadicalScalar::zero(f) : it->second;
  }
  // Extract the zbar top power first, then the z one.
  std::map<int, RadicalScalar> after;  // z exponent -> coefficient
  for (const auto& [key, v] : e.coeffs()) {
    if (key.first != top) continue;
    RadicalScalar w =
        crossing
            ? v.scale(q_half_power(k, -static_cast<long>(key.second) * top))
            : v;
    after.emplace(key.second, w);
  }
  auto it = after.find(top);
  return it == after.end() ? RadicalScalar::zero(f) : it->second;
}

}  // namespace

ResolveResult resolve_identity(int k, const Convention& c, Display d) {
  const CycloField& f = CycloField::get(k);
  Variant v = (d == Display::z_display) ? Variant::z_type : Variant::zbar_type;
  CoherentKet kt = ket(k, v);
  CoherentBra br = bra(k, v);
  Measure mu = measure_mu(k);
  GrassmannElement mu_elem =
      (d == Display::zbar_display)
          // mu(zbar, z) has the zbar block first; as written it is already
          // canonical, so both mu options coincide.
          ? mu.reordered()
          : (c.mu_canonical ? mu.reordered() : mu.value);

  ResolveResult res{convention_id(c), true, RadMatrix(f, k)};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      GrassmannElement entry =
          c.bra_left
              ? (br.amps[static_cast<size_t>(j)] *
                 kt.amps[static_cast<size_t>(i)]) *
                    mu_elem
              : (kt.amps[static_cast<size_t>(i)] * mu_elem) *
                    br.amps[static_cast<size_t>(j)];
      res.extracted.at(i, j) = integrate_entry(entry, c, d);
    }
  res.pass = (res.extracted == RadMatrix::identity(f, k));
  return res;
}

std::vector<ResolveResult> resolve_identity_sweep(int k, Display d) {
  std::vector<ResolveResult> out;
  for (const Convention& c : all_conventions())
    out.push_back(resolve_identity(k, c, d));
  return out;
}

}  // namespace sigmaq
