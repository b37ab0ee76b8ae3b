/*
  Root-system data for the finite crystallographic Cartan types.

  Conventions, fixed once and used everywhere:

    - cartan(i, j) = <alpha_j, alpha_i^vee>  (0-based indices internally,
      1-based in every public word/subset interface);
    - roots are stored in simple-root coordinates, weights in
      fundamental-weight coordinates, so pairings and reflections are
      integer matrix-vector products with no denominators;
    - positive roots are listed by increasing height, ties broken so that
      the simple roots come out as alpha_1, ..., alpha_n.

  rho has all fundamental coordinates equal to 1. The dot action is
  w . lambda = w(lambda + rho) - rho.
*/

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "steinberg/errors.hpp"
#include "steinberg/intmat.hpp"

namespace steinberg {

using Int = std::int64_t;

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Series series;
  int rank;

  /// Parses strings like "A3", "G2", "E6". Throws InvalidTypeError for an
  /// unknown series letter or a rank outside the allowed range.
  static CartanType parse(const std::string& s);

  std::string to_string() const;

  friend bool operator==(const CartanType& a, const CartanType& b) {
    return a.series == b.series && a.rank == b.rank;
  }
  friend bool operator!=(const CartanType& a, const CartanType& b) { return !(a == b); }
};

/// A weight in fundamental-weight coordinates: coords[i] = <lambda, alpha_i^vee>.
struct Weight {
  std::vector<Int> coords;

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
};

/// A root in simple-root coordinates.
using RootVec = std::vector<int>;

class RootSystem {
 public:
  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }

  /// cartan(i, j) = <alpha_j, alpha_i^vee>, 0-based.
  int cartan(int i, int j) const { return cartan_.at(i, j); }
  const IntMat& cartan_matrix() const { return cartan_; }

  /// Positive roots in height order; the first rank() entries are the
  /// simple roots alpha_1, ..., alpha_n.
  const std::vector<RootVec>& positive_roots() const { return positive_; }

  const Weight& rho() const { return rho_; }

  /// Action of the simple reflection s_{i+1} on simple-root coordinates.
  const IntMat& simple_reflection_matrix(int i) const { return refl_[i]; }

 private:
  friend std::shared_ptr<const RootSystem> build_root_system(const CartanType&);
  RootSystem() = default;

  CartanType type_{Series::A, 1};
  int rank_ = 0;
  IntMat cartan_;
  std::vector<RootVec> positive_;
  Weight rho_;
  std::vector<IntMat> refl_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Builds the root system of a Cartan type. Deterministic: equal types give
/// structurally identical objects.
RootSystemPtr build_root_system(const CartanType& t);

inline RootSystemPtr build_root_system(const std::string& type_string) {
  return build_root_system(CartanType::parse(type_string));
}

/// <lambda, alpha_i^vee> for a 1-based simple-root index.
Int pairing(const RootSystem& rs, const Weight& lambda, int i);

/// True iff coords[i] >= 0 for every i in the 1-based index set `indices`.
/// With all indices this is membership in the dominant cone X_+.
bool is_dominant(const RootSystem& rs, const Weight& lambda, const std::vector<int>& indices);
bool is_dominant(const RootSystem& rs, const Weight& lambda);

/// The zero weight.
Weight zero_weight(const RootSystem& rs);

/// Classical number of positive roots of a type; used as a construction check.
int classical_positive_root_count(const CartanType& t);

}  // namespace steinberg
