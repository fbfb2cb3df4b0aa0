#pragma once

#include <string>
#include <vector>

#include "sigmaq/matrix.hpp"
#include "sigmaq/report.hpp"

namespace sigmaq {

/// The five generators. a_minus and a_plus_dag lower, a_plus and
/// a_minus_dag raise, number is diagonal.
enum class Gen { a_minus, a_plus, a_plus_dag, a_minus_dag, number };

const char* gen_name(Gen g);          // "am", "ap", "apd", "amd", "N"
Gen gen_from_name(const std::string& s);  // throws std::invalid_argument

/// Operator on the k-dimensional Fock space as an exact k x k matrix.
using OpMatrix = RadMatrix;

OpMatrix generator_matrix(int k, Gen g);

/// State vector with exact radical amplitudes.
class FockVector {
 public:
  FockVector(const CycloField& f)
      : f_(&f), amps_(static_cast<size_t>(f.k()), RadicalScalar::zero(f)) {}

  static FockVector basis(int k, int n);

  const CycloField& field() const { return *f_; }
  RadicalScalar& amp(int n) { return amps_[static_cast<size_t>(n)]; }
  const RadicalScalar& amp(int n) const { return amps_[static_cast<size_t>(n)]; }

  FockVector apply(const OpMatrix& m) const;
  FockVector scale(const RadicalScalar& s) const;

  bool operator==(const FockVector& o) const {
    return f_ == o.f_ && amps_ == o.amps_;
  }

 private:
  const CycloField* f_;
  std::vector<RadicalScalar> amps_;
};

/// Evaluates the ten defining relations as exact matrix identities.
/// Failures are report content, not errors.
Report verify_relations(int k);

enum class BuildRoute { via_a_plus, via_a_minus_dag };

/// Builds |n> by applying the chosen raising operator n times to |0> and
/// dividing by the radical monomial sqrt of the matching factorial.
/// Throws std::out_of_range for n outside [0, k-1].
FockVector build_state(int k, int n, BuildRoute route);

/// Verifies that the dagger generators are the star-transposes of their
/// partners under the star convention of the scalar ring.
Report adjoint_check(int k);

}  // namespace sigmaq
