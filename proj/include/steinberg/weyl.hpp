/*
  Weyl-group combinatorics: element arithmetic, length, descents, Bruhat
  order, supports, parabolic subgroups, minimal coset representatives,
  longest and Coxeter elements, and the maximal-parabolic assignment I(w).

  An element is stored in canonical form as the pair of integer matrices
  (action, inverse action) on the simple-root basis, plus its cached
  length. Equality, hashing and memo keys all use the action matrix.

  The canonical reduced word of an element is obtained by repeatedly
  stripping the smallest-index left descent; it is the word returned by
  to_word() and the tie-breaker in every sorted enumeration.

  Words are lists of 1-based simple indices; [a, b] denotes s_a s_b with
  operators composed right to left (the leftmost letter is applied last).

  Concurrency: all values are immutable after construction and every
  operation is a pure function. The Bruhat memo behind bruhat_leq is a
  process-wide insert-once map; concurrent queries are safe and results
  are independent of interleaving.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "steinberg/cartan.hpp"

namespace steinberg {

/// A subset of the simple roots, as a bitmask over 1-based indices.
struct SimpleSubset {
  std::uint16_t mask = 0;

  static SimpleSubset empty() { return SimpleSubset{0}; }
  static SimpleSubset full(int rank) {
    return SimpleSubset{static_cast<std::uint16_t>((1u << rank) - 1)};
  }
  /// From 1-based indices; throws IndexOutOfRangeError.
  static SimpleSubset of(const std::vector<int>& indices, int rank);

  bool contains(int i) const { return (mask >> (i - 1)) & 1u; }  // 1-based
  bool subset_of(SimpleSubset o) const { return (mask & ~o.mask) == 0; }
  bool is_empty() const { return mask == 0; }
  int size() const;
  SimpleSubset complement(int rank) const {
    return SimpleSubset{static_cast<std::uint16_t>(full(rank).mask & ~mask)};
  }
  SimpleSubset set_union(SimpleSubset o) const { return SimpleSubset{static_cast<std::uint16_t>(mask | o.mask)}; }
  SimpleSubset set_intersection(SimpleSubset o) const { return SimpleSubset{static_cast<std::uint16_t>(mask & o.mask)}; }

  /// Sorted 1-based indices.
  std::vector<int> indices() const;

  friend bool operator==(SimpleSubset a, SimpleSubset b) { return a.mask == b.mask; }
  friend bool operator!=(SimpleSubset a, SimpleSubset b) { return a.mask != b.mask; }
  friend bool operator<(SimpleSubset a, SimpleSubset b) { return a.mask < b.mask; }
};

/// All subsets S with lo <= S <= hi, in ascending bitmask order.
std::vector<SimpleSubset> subsets_between(SimpleSubset lo, SimpleSubset hi);

/// Guard against runaway element enumerations. The default limit is 10^6
/// elements, overridable through the STEINBERG_SIZE_GUARD environment
/// variable; unlimited() is the explicit opt-out.
struct SizeGuard {
  std::uint64_t limit;

  static SizeGuard defaults();
  static SizeGuard unlimited();
  void check(std::uint64_t count) const;
};

class WeylElem {
 public:
  static WeylElem identity(RootSystemPtr rs);
  /// s_i for a 1-based index.
  static WeylElem simple_reflection(RootSystemPtr rs, int i);

  const RootSystemPtr& root_system() const { return rs_; }
  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }

  /// Action on simple-root coordinates (column j = image of alpha_{j+1}).
  const IntMat& action() const { return fwd_; }
  const IntMat& inverse_action() const { return inv_; }

  friend bool operator==(const WeylElem& a, const WeylElem& b);
  friend bool operator!=(const WeylElem& a, const WeylElem& b) { return !(a == b); }

  std::size_t hash() const { return fwd_.hash(); }

 private:
  WeylElem(RootSystemPtr rs, IntMat fwd, IntMat inv, int len);
  friend WeylElem multiply(const WeylElem&, const WeylElem&);
  friend WeylElem inverse(const WeylElem&);
  friend WeylElem mul_gen_left(int, const WeylElem&);
  friend WeylElem mul_gen_right(const WeylElem&, int);

  RootSystemPtr rs_;
  IntMat fwd_, inv_;
  int len_;
};

WeylElem multiply(const WeylElem& x, const WeylElem& y);
WeylElem inverse(const WeylElem& x);

/// s_{i+? } -- i is 1-based; length is adjusted by +-1 via the descent test.
WeylElem mul_gen_left(int i, const WeylElem& w);
WeylElem mul_gen_right(const WeylElem& w, int i);

/// Product of simple reflections in word order; the word need not be reduced.
WeylElem from_word(RootSystemPtr rs, const std::vector<int>& word);

/// Canonical reduced word: repeatedly strip the smallest-index left descent.
std::vector<int> to_word(const WeylElem& w);

/// { i : l(s_i w) < l(w) } = { i : w^{-1}(alpha_i) < 0 }.
SimpleSubset left_descents(const WeylElem& w);
SimpleSubset right_descents(const WeylElem& w);

/// Bruhat order via the lifting recursion, memoized on canonical pairs.
bool bruhat_leq(const WeylElem& x, const WeylElem& y);

/// supp(w), computed as { i : s_i <= w }.
SimpleSubset support(const WeylElem& w);

/// I(w) = Delta \ left_descents(w): the unique maximal I with w in {}^I W.
SimpleSubset i_max(const WeylElem& w);

/// {}^I W: minimal-length representatives of the cosets W_I \ W, sorted by
/// (length, canonical word).
std::vector<WeylElem> min_coset_reps(const RootSystemPtr& rs, SimpleSubset I,
                                     const SizeGuard& guard = SizeGuard::defaults());

/// All of W, sorted by (length, canonical word).
std::vector<WeylElem> enumerate_group(const RootSystemPtr& rs,
                                      const SizeGuard& guard = SizeGuard::defaults());

/// The parabolic subgroup W_I, sorted by (length, canonical word).
std::vector<WeylElem> enumerate_parabolic(const RootSystemPtr& rs, SimpleSubset I,
                                          const SizeGuard& guard = SizeGuard::defaults());

/// Longest element of W_I; its length is |Phi_I^+|.
WeylElem longest_element(const RootSystemPtr& rs, SimpleSubset I);

/// Products of the simple reflections of I, one occurrence each, over all
/// orderings, deduplicated; every result has length |I| and support I.
std::vector<WeylElem> coxeter_elements(const RootSystemPtr& rs, SimpleSubset I);

/// |W^I_p| = #{ w : I(w) = I }, computed both by direct enumeration and by
/// the alternating coset-count formula; the two must agree.
Int parabolic_class_count(const RootSystemPtr& rs, SimpleSubset I,
                          const SizeGuard& guard = SizeGuard::defaults());

/// All z <= y in Bruhat order (subword closure along a reduced word of y),
/// sorted by (length, action matrix).
std::vector<WeylElem> bruhat_interval(const WeylElem& y);

/// w . lambda = w(lambda + rho) - rho in fundamental-weight coordinates.
Weight dot_action(const WeylElem& w, const Weight& lambda);

/// Throws MixedRootSystemsError unless both elements live in root systems
/// of the same Cartan type.
void check_same_system(const WeylElem& x, const WeylElem& y);

/// Deterministic (length, canonical word) comparison; the sort order of
/// every enumeration in this module.
bool elem_less(const WeylElem& a, const WeylElem& b);

}  // namespace steinberg
