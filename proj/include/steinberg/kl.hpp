/*
  Kazhdan-Lusztig polynomials P_{x,y} with a memoizing store, the mu
  function, and the multiplicity numbers built from them:

    m(x, y)                 = P_{x,y}(1) for x <= y, else 0
                              (composition multiplicity of L(y.lambda) in
                              the Verma module M(x.lambda), lambda dominant;
                              independent of lambda),
    [M_K(w.lambda) : L(y.lambda)]
                            = sum over u in W_K of (-1)^{l(u)} m(u w, y)
                              for w a minimal representative of W_K \ W.

  The recursion picks the smallest-index left descent s of y and splits on
  whether s is a left descent of x:

    s x < x:  P_{x,y} = P_{sx,sy} + q P_{x,sy} - correction,
    s x > x:  P_{x,y} = q P_{sx,sy} + P_{x,sy} - correction,

  with the correction sum over z with x <= z <= sy and sz < z of
  mu(z, sy) q^{(l(y)-l(z))/2} P_{x,z}. Every computed polynomial is checked
  against the defining bounds (constant term 1, degree at most
  (l(y)-l(x)-1)/2, nonnegative coefficients) before it is published.

  Coefficients are bounded 64-bit integers with mandatory overflow
  detection; an overflow raises CoefficientOverflowError rather than
  wrapping.

  Concurrency: KLStore is an insert-once concurrent map. Racing threads may
  compute the same key twice; determinism makes the published values
  identical, so the first publication wins and results are independent of
  interleaving.
*/

#pragma once

#include <cstdint>
#include <vector>

#include "steinberg/weyl.hpp"

namespace steinberg {

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Polynomial in q with integer coefficients, ascending degree, no trailing
/// zero. Outputs of kl_polynomial have nonnegative coefficients; signed
/// values occur only in intermediate arithmetic.
class KLPoly {
 public:
  KLPoly() = default;
  static KLPoly zero() { return KLPoly(); }
  static KLPoly one() { return KLPoly({1}); }
  explicit KLPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : 0; }
  Int eval_at_one() const;

  void add(const KLPoly& o);
  /// this -= scalar * q^shift * o
  void sub_scaled(Int scalar, int shift, const KLPoly& o);
  KLPoly times_q(int shift) const;

  friend bool operator==(const KLPoly& a, const KLPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const KLPoly& a, const KLPoly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Int> c_;
};

/// Memoizing store of computed P_{x,y}, keyed on canonical pairs (the pair
/// (x, y) and (x^{-1}, y^{-1}) share one entry). Only pairs with x <= y are
/// stored. Insert-once: a published value never changes.
class KLStore {
 public:
  explicit KLStore(RootSystemPtr rs);

  const RootSystemPtr& root_system() const { return rs_; }

  /// True and sets `out` if the canonical key of (x, y) is present.
  bool lookup(const WeylElem& x, const WeylElem& y, KLPoly& out) const;
  /// Publishes under the canonical key; a duplicate publication of a
  /// different value raises InternalInconsistencyError.
  void publish(const WeylElem& x, const WeylElem& y, const KLPoly& p);

  std::size_t entries() const;
  std::uint64_t hits() const;

  struct Entry {
    std::vector<int> x_word, y_word;
    std::vector<Int> coeffs;
  };
  /// Deterministically sorted copy of the contents, as canonical words.
  std::vector<Entry> snapshot() const;

  KLStore(const KLStore&) = delete;
  KLStore& operator=(const KLStore&) = delete;
  KLStore(KLStore&&) = default;
  KLStore& operator=(KLStore&&) = default;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  RootSystemPtr rs_;
};

/// P_{x,y}; the zero polynomial iff x is not below y in Bruhat order.
KLPoly kl_polynomial(const WeylElem& x, const WeylElem& y, KLStore& store);

/// Coefficient of q^{(l(y)-l(x)-1)/2} in P_{x,y} when x <= y with odd
/// length difference; 0 otherwise.
Int mu(const WeylElem& x, const WeylElem& y, KLStore& store);

/// m(x, y) = P_{x,y}(1) for x <= y, else 0.
Int verma_multiplicity(const WeylElem& x, const WeylElem& y, KLStore& store);

/// [M_K(w.lambda) : L(y.lambda)] for w in {}^K W; requires w to be a
/// minimal representative (NotMinimalRepresentativeError otherwise).
Int parabolic_verma_multiplicity(SimpleSubset K, const WeylElem& w, const WeylElem& y,
                                 KLStore& store,
                                 const SizeGuard& guard = SizeGuard::defaults());

}  // namespace steinberg
