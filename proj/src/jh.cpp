#include "steinberg/jh.hpp"

#include <algorithm>
#include <sstream>

namespace steinberg {

namespace {

std::string subset_str(SimpleSubset s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : s.indices()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << '.';
    os << 's' << word[k];
  }
  return os.str();
}

void require_dominant(const RootSystemPtr& rs, const Weight& lambda) {
  if (static_cast<int>(lambda.coords.size()) != rs->rank())
    throw ValidationError("weight has wrong rank");
  if (!is_dominant(*rs, lambda)) throw NotDominantError("lambda is not dominant");
}

}  // namespace

// ---- FactorMultiset / SignedFactorMap ----

FactorMultiset::FactorMultiset(std::vector<JHFactor> factors) : factors_(std::move(factors)) {}

Int FactorMultiset::length() const {
  Int total = 0;
  for (const JHFactor& f : factors_) total = checked_add(total, f.mult);
  return total;
}

bool operator==(const FactorMultiset& a, const FactorMultiset& b) {
  if (a.factors_.size() != b.factors_.size()) return false;
  for (std::size_t k = 0; k < a.factors_.size(); ++k) {
    const JHFactor &x = a.factors_[k], &y = b.factors_[k];
    if (!(x.w == y.w) || x.J != y.J || x.mult != y.mult) return false;
  }
  return true;
}

bool SignedFactorMap::Key::operator<(const Key& o) const {
  if (len != o.len) return len < o.len;
  if (word != o.word) return word < o.word;
  return jmask < o.jmask;
}

void SignedFactorMap::add(const WeylElem& w, SimpleSubset J, const Weight& highest_weight,
                          Int count) {
  if (count == 0) return;
  Key key{w.length(), to_word(w), J.mask};
  auto it = map_.find(key);
  if (it == map_.end()) {
    map_.emplace(std::move(key), Value{w, i_max(w), J, highest_weight, count});
    return;
  }
  // (w, J) determines the parabolic and the weight label; a clash here
  // would mean two genuinely different factors share a key.
  if (it->second.I != i_max(w) || it->second.highest_weight != highest_weight)
    throw InternalInconsistencyError("factor key (w, J) with conflicting labels");
  it->second.count = checked_add(it->second.count, count);
}

void SignedFactorMap::accumulate(const FactorMultiset& m, Int sign) {
  for (const JHFactor& f : m.factors()) add(f.w, f.J, f.highest_weight, checked_mul(sign, f.mult));
}

bool SignedFactorMap::all_nonnegative() const {
  for (const auto& [key, v] : map_)
    if (v.count < 0) return false;
  return true;
}

FactorMultiset SignedFactorMap::to_multiset() const {
  std::vector<JHFactor> out;
  for (const auto& [key, v] : map_) {
    if (v.count == 0) continue;
    if (v.count < 0)
      throw InternalInconsistencyError("negative multiplicity in a factor multiset");
    out.push_back(JHFactor{v.w, v.I, v.J, v.highest_weight, v.count});
  }
  return FactorMultiset(std::move(out));
}

// ---- multiplicities ----

Int steinberg_multiplicity(const WeylElem& w, SimpleSubset J, KLStore& store,
                           const SizeGuard& guard) {
  if (!J.subset_of(i_max(w)))
    throw InvalidJError("J is not contained in I(w)");
  const int jsize = J.size();
  Int total = 0;
  for (const WeylElem& u : enumerate_parabolic(w.root_system(), J, guard)) {
    if (support(u) != J) continue;
    Int m = verma_multiplicity(u, w, store);
    total = checked_add(total, (u.length() + jsize) % 2 == 0 ? m : -m);
  }
  if (total < 0) throw InternalInconsistencyError("negative Steinberg multiplicity");
  return total;
}

FactorMultiset jh_steinberg(const RootSystemPtr& rs, const Weight& lambda, KLStore& store,
                            const SizeGuard& guard) {
  require_dominant(rs, lambda);
  SignedFactorMap acc;
  for (const WeylElem& w : enumerate_group(rs, guard)) {
    SimpleSubset I = i_max(w);
    Weight hw = dot_action(w, lambda);
    for (SimpleSubset J : subsets_between(SimpleSubset::empty(), I))
      acc.add(w, J, hw, steinberg_multiplicity(w, J, store, guard));
  }
  return acc.to_multiset();
}

FactorMultiset jh_induced(SimpleSubset K, const WeylElem& w, const Weight& lambda, KLStore& store,
                          const SizeGuard& guard) {
  const RootSystemPtr& rs = w.root_system();
  require_dominant(rs, lambda);
  if (!left_descents(w).set_intersection(K).is_empty())
    throw NotMinimalRepresentativeError("twist w is not a minimal representative for K");
  SignedFactorMap acc;
  for (const WeylElem& y : enumerate_group(rs, guard)) {
    if (!bruhat_leq(w, y)) continue;  // every summand of the multiplicity vanishes otherwise
    Int c = parabolic_verma_multiplicity(K, w, y, store, guard);
    if (c == 0) continue;
    SimpleSubset I = i_max(y);
    if (!K.subset_of(I))
      throw InternalInconsistencyError("nonzero multiplicity outside the K-parabolic block");
    Weight hw = dot_action(y, lambda);
    for (SimpleSubset J : subsets_between(K, I)) acc.add(y, J, hw, c);
  }
  return acc.to_multiset();
}

FactorMultiset jh_generalized_steinberg(SimpleSubset I, const WeylElem& w, const Weight& lambda,
                                        KLStore& store, const SizeGuard& guard) {
  const RootSystemPtr& rs = w.root_system();
  require_dominant(rs, lambda);
  if (!left_descents(w).set_intersection(I).is_empty())
    throw NotMinimalRepresentativeError("twist w is not a minimal representative for I");
  SignedFactorMap acc;
  for (SimpleSubset K : subsets_between(I, i_max(w))) {
    Int sign = (K.size() - I.size()) % 2 == 0 ? 1 : -1;
    acc.accumulate(jh_induced(K, w, lambda, store, guard), sign);
  }
  return acc.to_multiset();
}

bool coxeter_criterion(SimpleSubset I, const WeylElem& w) {
  for (const WeylElem& c : coxeter_elements(w.root_system(), I))
    if (bruhat_leq(c, w)) return true;
  return false;
}

// ---- verifiers ----

VerifyReport verify_tits_euler(const RootSystemPtr& rs, SimpleSubset I, const Weight& lambda,
                               KLStore& store, const SizeGuard& guard) {
  VerifyReport report;
  require_dominant(rs, lambda);
  WeylElem e = WeylElem::identity(rs);
  SignedFactorMap acc;
  for (SimpleSubset K : subsets_between(I, SimpleSubset::full(rs->rank()))) {
    FactorMultiset term = jh_induced(K, e, lambda, store, guard);
    Int sign = (K.size() - I.size()) % 2 == 0 ? 1 : -1;
    acc.accumulate(term, sign);
    std::ostringstream os;
    os << "K=" << subset_str(K) << " sign=" << (sign > 0 ? '+' : '-')
       << " distinct=" << term.distinct() << " length=" << term.length();
    report.lines.push_back(os.str());
  }
  if (!acc.all_nonnegative()) {
    report.ok = false;
    report.violations.push_back("Euler sum has a negative multiplicity for I=" + subset_str(I));
    return report;
  }
  FactorMultiset total = acc.to_multiset();
  {
    std::ostringstream os;
    os << "euler sum: distinct=" << total.distinct() << " length=" << total.length();
    report.lines.push_back(os.str());
  }
  if (I.is_empty()) {
    FactorMultiset closed = jh_steinberg(rs, lambda, store, guard);
    if (!(total == closed)) {
      report.ok = false;
      report.violations.push_back("Euler sum for I={} differs from the closed Steinberg formula");
    }
  }
  return report;
}

VerifyReport verify_smooth_complex(const RootSystemPtr& rs, SimpleSubset I, const Weight& lambda,
                                   KLStore& store, const SizeGuard& guard) {
  VerifyReport report;
  require_dominant(rs, lambda);
  SignedFactorMap acc;
  try {
    for (const WeylElem& w : min_coset_reps(rs, I, guard)) {
      FactorMultiset term = jh_generalized_steinberg(I, w, lambda, store, guard);
      acc.accumulate(term, w.length() % 2 == 0 ? 1 : -1);
      std::ostringstream os;
      os << "w=" << word_str(to_word(w)) << " sign=" << (w.length() % 2 == 0 ? '+' : '-')
         << " distinct=" << term.distinct() << " length=" << term.length();
      report.lines.push_back(os.str());
    }
  } catch (const InternalInconsistencyError& err) {
    report.ok = false;
    report.violations.push_back(std::string("generalized Steinberg series failed: ") + err.what());
    return report;
  }

  SignedFactorMap expected;
  WeylElem e = WeylElem::identity(rs);
  expected.add(e, I, dot_action(e, lambda), 1);
  if (!acc.all_nonnegative() || !(acc.to_multiset() == expected.to_multiset())) {
    report.ok = false;
    report.violations.push_back("signed sum over {}^I W does not collapse to the factor (e, " +
                                subset_str(I) + ")");
  }
  return report;
}

}  // namespace steinberg
