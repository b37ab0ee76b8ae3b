/*
  Jordan-Hoelder factor multisets of locally analytic representations,
  assembled purely from Weyl-group labels and Kazhdan-Lusztig numbers.

  A factor label is a pair (w, J): w in W determines the maximal parabolic
  subset I = I(w) and the highest-weight label w . lambda; J subset of I
  picks the smooth part v^{P_I}_{P_J} (J = I trivial, J = empty the
  Steinberg representation of the Levi). Representations are never
  materialized; a Jordan-Hoelder series is exactly a multiset of such
  labels with positive multiplicities.

  Closed formula (Steinberg series of the Borel):

    [V_B(lambda) : (w, J)] = sum over w' in W_J with supp(w') = J of
                             (-1)^{l(w') + |J|} m(w', w).

  Induced series: [I_{P_K}(w . lambda)] carries the factor (y, J) with
  multiplicity [M_K(w.lambda) : L(y.lambda)] for every K <= J <= I(y).

  Generalized Steinberg series: Euler-characteristic alternating sum of
  induced series over I <= K <= I(w); exactness of the underlying
  resolution makes this the true multiset, and nonnegativity of every
  resulting multiplicity is enforced at runtime.
*/

#pragma once

#include <map>
#include <string>
#include <vector>

#include "steinberg/kl.hpp"

namespace steinberg {

struct JHFactor {
  WeylElem w;
  SimpleSubset I;  // i_max(w)
  SimpleSubset J;  // subset of I
  Weight highest_weight;  // dot_action(w, lambda); a label, never an input
  Int mult;
};

/// Finite multiset of factors with pairwise distinct (w, J) keys, sorted by
/// (l(w), canonical word of w, J ascending as bitmask).
class FactorMultiset {
 public:
  FactorMultiset() = default;
  explicit FactorMultiset(std::vector<JHFactor> factors);

  const std::vector<JHFactor>& factors() const { return factors_; }
  Int length() const;
  std::size_t distinct() const { return factors_.size(); }

  /// Equality of the underlying multisets: same (w, J, mult) triples.
  friend bool operator==(const FactorMultiset& a, const FactorMultiset& b);
  friend bool operator!=(const FactorMultiset& a, const FactorMultiset& b) { return !(a == b); }

 private:
  std::vector<JHFactor> factors_;
};

/// Integer-valued factor map for Euler-characteristic arithmetic;
/// intermediate coefficients may be negative.
class SignedFactorMap {
 public:
  void add(const WeylElem& w, SimpleSubset J, const Weight& highest_weight, Int count);
  void accumulate(const FactorMultiset& m, Int sign);
  bool all_nonnegative() const;
  /// Drops zeros; throws InternalInconsistencyError on a negative entry.
  FactorMultiset to_multiset() const;

 private:
  struct Key {
    int len;
    std::vector<int> word;
    std::uint16_t jmask;
    bool operator<(const Key& o) const;
  };
  struct Value {
    WeylElem w;
    SimpleSubset I, J;
    Weight highest_weight;
    Int count;
  };
  friend class FactorMultiset;
  std::vector<std::pair<Key, Value>> sorted() const;
  std::map<Key, Value> map_;
};

/// Multiplicity of the factor (w, J) in the Steinberg series of the Borel;
/// requires J subset of i_max(w) (InvalidJError otherwise). The result is
/// nonnegative and positive exactly when J subset of supp(w).
Int steinberg_multiplicity(const WeylElem& w, SimpleSubset J, KLStore& store,
                           const SizeGuard& guard = SizeGuard::defaults());

/// Jordan-Hoelder multiset of V_B(lambda) by the closed formula; lambda
/// must be dominant.
FactorMultiset jh_steinberg(const RootSystemPtr& rs, const Weight& lambda, KLStore& store,
                            const SizeGuard& guard = SizeGuard::defaults());

/// Jordan-Hoelder multiset of the induced representation I_{P_K}(w . lambda);
/// w must be a minimal representative for K, lambda dominant. With w = e
/// this is the series of I_{P_K}(lambda).
FactorMultiset jh_induced(SimpleSubset K, const WeylElem& w, const Weight& lambda, KLStore& store,
                          const SizeGuard& guard = SizeGuard::defaults());

/// Jordan-Hoelder multiset of the (twisted) generalized Steinberg
/// representation V_{P_I}(w . lambda), as the alternating sum of induced
/// series over I <= K <= i_max(w).
FactorMultiset jh_generalized_steinberg(SimpleSubset I, const WeylElem& w, const Weight& lambda,
                                        KLStore& store,
                                        const SizeGuard& guard = SizeGuard::defaults());

/// True iff some Coxeter element of W_I lies below w in Bruhat order;
/// equals I subset of supp(w).
bool coxeter_criterion(SimpleSubset I, const WeylElem& w);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> lines;       // per-term breakdown
  std::vector<std::string> violations;  // failed identities, empty when ok
};

/// Recomputes the generalized Steinberg series of V_{P_I}(lambda) as the
/// alternating sum over all I <= K <= Delta of induced series, reporting
/// each K's contribution; checks nonnegativity, and for I = empty equality
/// with the closed formula. Violations are reported, never thrown.
VerifyReport verify_tits_euler(const RootSystemPtr& rs, SimpleSubset I, const Weight& lambda,
                               KLStore& store, const SizeGuard& guard = SizeGuard::defaults());

/// Checks the Grothendieck-group identity of the smooth-complex resolution:
/// the single factor (e, I) equals the signed sum over w in {}^I W of
/// (-1)^{l(w)} [V_{P_I}(w . lambda)].
VerifyReport verify_smooth_complex(const RootSystemPtr& rs, SimpleSubset I, const Weight& lambda,
                                   KLStore& store, const SizeGuard& guard = SizeGuard::defaults());

}  // namespace steinberg
