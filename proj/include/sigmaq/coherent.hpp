#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigmaq/fock.hpp"
#include "sigmaq/grassmann.hpp"

namespace sigmaq {

enum class Variant { z_type, zbar_type };

/// Coherent superposition of Fock states with Grassmann-valued amplitudes:
/// the z-type ket carries z^n / sqrt([n]_q!) on |n>, the zbar-type ket
/// zbar^n / sqrt([n]_qbar!).
struct CoherentKet {
  const CycloField* field;
  Variant variant;
  std::vector<GrassmannElement> amps;
};

/// Bras carry the conjugate powers: (z| has zbar^n with qbar-factorials,
/// (zbar| has z^n with q-factorials.
struct CoherentBra {
  const CycloField* field;
  Variant variant;
  std::vector<GrassmannElement> amps;
};

CoherentKet ket(int k, Variant v);
CoherentBra bra(int k, Variant v);

/// a_-|z) = z|z) and a_+^+|zbar) = zbar|zbar), exactly.
Report eigenstate_check(int k);

/// e_q(x) = sum_{n<k} x^n / [n]_q!; the sum is finite because x is
/// nilpotent of degree k.
GrassmannElement q_exponential(int k, const GrassmannElement& x,
                               bool conjugate = false);

/// Sum over n of (bra amplitude)*(ket amplitude), multiplied in written
/// order. Throws std::invalid_argument on mismatched orders.
GrassmannElement overlap(const CoherentBra& b, const CoherentKet& a);

/// mu(z, zbar) = sum_n ([n]_q! [n]_qbar!)^(1/2) z^(k-1-n) zbar^(k-1-n).
/// `value` holds the canonical normal-ordered form of that as-written
/// product; `coeffs[n]` is the scalar ([n]_q! [n]_qbar!)^(1/2), a star-real
/// pure cyclotomic obtained as sqrt([n]_q!) * star(sqrt([n]_q!)).
struct Measure {
  const CycloField* field;
  GrassmannElement value;
  std::vector<Cyclotomic> coeffs;

  /// The variant with the two variable blocks written in canonical order
  /// from the start (no reordering phase).
  GrassmannElement reordered() const;
};

Measure measure_mu(int k);

/// One choice for each ambiguity the overcompleteness display leaves open:
/// which top power is extracted first, whether mu enters as written or with
/// its factors pre-swapped into canonical order, which side of the product
/// the bra amplitude sits on, and whether the variable blocks are
/// transported to their differentials with braiding phases or the top
/// coefficient is read off the canonical form directly.
struct Convention {
  bool zbar_first = false;
  bool mu_canonical = false;
  bool bra_left = false;
  bool plain = false;  // false = transport
};

std::string convention_id(const Convention& c);
std::vector<Convention> all_conventions();
/// Parses an id as produced by convention_id; also accepts the alias
/// "classical-berezin". Returns nullopt for unknown ids.
std::optional<Convention> parse_convention(const std::string& id);
/// The frozen default: the as-written placement with transported
/// differentials, which resolves to the identity at every order.
Convention default_convention();

/// Which of the two overcompleteness integrals is evaluated:
/// dz |z) mu(z, zbar) (z| dzbar, or dzbar |zbar) mu(zbar, z) (zbar| dz.
enum class Display { z_display, zbar_display };

struct ResolveResult {
  std::string id;
  bool pass = false;
  RadMatrix extracted;  // k x k array after both Berezin extractions
};

ResolveResult resolve_identity(int k, const Convention& c,
                               Display d = Display::z_display);
std::vector<ResolveResult> resolve_identity_sweep(
    int k, Display d = Display::z_display);

}  // namespace sigmaq
