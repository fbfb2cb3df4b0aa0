#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sigmaq/radical.hpp"

namespace sigmaq {

/// Dense square matrix over the exact radical ring. Used both for operators
/// on the k-dimensional Fock space and for the k^2-dimensional linear maps
/// of the Grassmann realization.
class RadMatrix {
 public:
  RadMatrix(const CycloField& f, int dim)
      : f_(&f), dim_(dim),
        e_(static_cast<size_t>(dim) * static_cast<size_t>(dim),
           RadicalScalar::zero(f)) {}

  static RadMatrix identity(const CycloField& f, int dim) {
    RadMatrix m(f, dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = RadicalScalar::one(f);
    return m;
  }

  const CycloField& field() const { return *f_; }
  int dim() const { return dim_; }

  RadicalScalar& at(int r, int c) {
    return e_[static_cast<size_t>(r) * dim_ + static_cast<size_t>(c)];
  }
  const RadicalScalar& at(int r, int c) const {
    return e_[static_cast<size_t>(r) * dim_ + static_cast<size_t>(c)];
  }

  RadMatrix operator+(const RadMatrix& o) const {
    RadMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  RadMatrix operator-(const RadMatrix& o) const {
    RadMatrix r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }

  RadMatrix operator*(const RadMatrix& o) const {
    RadMatrix r(*f_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int l = 0; l < dim_; ++l) {
        const RadicalScalar& a = at(i, l);
        if (a.is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
          const RadicalScalar& b = o.at(l, j);
          if (b.is_zero()) continue;
          r.at(i, j) += a * b;
        }
      }
    return r;
  }

  RadMatrix scale(const RadicalScalar& s) const {
    RadMatrix r(*f_, dim_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
  }

  RadMatrix scale(const Cyclotomic& c) const {
    return scale(RadicalScalar::from_cyclotomic(c));
  }

  RadMatrix pow(int e) const {
    RadMatrix acc = identity(*f_, dim_);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
  }

  // Conjugate transpose in the formal ring (star on entries).
  RadMatrix star_transpose() const {
    RadMatrix r(*f_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) r.at(j, i) = at(i, j).star();
    return r;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const RadMatrix& o) const {
    return dim_ == o.dim_ && e_ == o.e_;
  }
  bool operator!=(const RadMatrix& o) const { return !(*this == o); }

  // First coordinate where the two matrices disagree, if any.
  std::optional<std::pair<int, int>> first_mismatch(const RadMatrix& o) const {
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        if (at(i, j) != o.at(i, j)) return std::make_pair(i, j);
    return std::nullopt;
  }

 private:
  const CycloField* f_;
  int dim_;
  std::vector<RadicalScalar> e_;
};

}  // namespace sigmaq
