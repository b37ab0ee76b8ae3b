#include "steinberg/weyl.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <unordered_set>

namespace steinberg {

namespace {

bool root_is_negative(const IntMat& m, int col, int n) {
  // Images of roots are roots, hence sign-definite coordinate vectors.
  for (int i = 0; i < n; ++i)
    if (m.at(i, col) > 0) return false;
  return true;
}

int inversion_count(const RootSystem& rs, const IntMat& fwd) {
  int n = rs.rank();
  int count = 0;
  for (const RootVec& beta : rs.positive_roots()) {
    bool negative = true;
    for (int i = 0; i < n && negative; ++i) {
      int acc = 0;
      for (int j = 0; j < n; ++j) acc += fwd.at(i, j) * beta[j];
      if (acc > 0) negative = false;
    }
    if (negative) ++count;
  }
  return count;
}

void check_index(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank())
    throw IndexOutOfRangeError("simple index " + std::to_string(i) + " out of range for rank " +
                               std::to_string(rs.rank()));
}

struct ElemHash {
  std::size_t operator()(const WeylElem& w) const { return w.hash(); }
};
struct ElemEq {
  bool operator()(const WeylElem& a, const WeylElem& b) const { return a == b; }
};

// ---- Bruhat memo: process-wide insert-once map on canonical pairs ----

struct PairKey {
  CartanType type;
  IntMat a, b;
  friend bool operator==(const PairKey& x, const PairKey& y) {
    return x.type == y.type && x.a == y.a && x.b == y.b;
  }
};
struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const {
    std::size_t h = k.a.hash() * 1000003u ^ k.b.hash();
    h = h * 31 + static_cast<std::size_t>(static_cast<char>(k.type.series));
    h = h * 31 + static_cast<std::size_t>(k.type.rank);
    return h;
  }
};

PairKey canonical_pair(const WeylElem& x, const WeylElem& y) {
  // x <= y iff x^{-1} <= y^{-1}; key on the lexicographically smaller pair.
  const IntMat &xf = x.action(), &yf = y.action();
  const IntMat &xi = x.inverse_action(), &yi = y.inverse_action();
  if (xi < xf || (xf == xi && yi < yf)) return PairKey{x.root_system()->type(), xi, yi};
  return PairKey{x.root_system()->type(), xf, yf};
}

class BruhatMemo {
 public:
  bool lookup(const PairKey& k, bool& out) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return false;
    out = it->second;
    return true;
  }
  void publish(const PairKey& k, bool v) {
    std::unique_lock lock(mu_);
    map_.emplace(k, v);  // idempotent: the value is a deterministic function of the key
  }

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<PairKey, bool, PairKeyHash> map_;
};

BruhatMemo& bruhat_memo() {
  static BruhatMemo memo;
  return memo;
}

bool bruhat_leq_impl(const WeylElem& x, const WeylElem& y) {
  if (x.is_identity()) return true;
  if (x.length() > y.length()) return false;
  if (x.length() == y.length()) return x == y;
  PairKey key = canonical_pair(x, y);
  bool cached;
  if (bruhat_memo().lookup(key, cached)) return cached;
  // Lifting: for s a left descent of y,
  //   x <= y  <=>  sx <= sy   if sx < x,
  //   x <= y  <=>  x <= sy    otherwise.
  SimpleSubset ld = left_descents(y);
  int s = ld.indices().front();
  WeylElem sy = mul_gen_left(s, y);
  bool result = left_descents(x).contains(s) ? bruhat_leq_impl(mul_gen_left(s, x), sy)
                                             : bruhat_leq_impl(x, sy);
  bruhat_memo().publish(key, result);
  return result;
}

}  // namespace

// ---- SimpleSubset ----

SimpleSubset SimpleSubset::of(const std::vector<int>& indices, int rank) {
  SimpleSubset s;
  for (int i : indices) {
    if (i < 1 || i > rank)
      throw IndexOutOfRangeError("subset index " + std::to_string(i) + " out of range for rank " +
                                 std::to_string(rank));
    s.mask |= static_cast<std::uint16_t>(1u << (i - 1));
  }
  return s;
}

int SimpleSubset::size() const { return std::popcount(static_cast<unsigned>(mask)); }

std::vector<int> SimpleSubset::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 16; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::vector<SimpleSubset> subsets_between(SimpleSubset lo, SimpleSubset hi) {
  std::vector<SimpleSubset> out;
  if (!lo.subset_of(hi)) return out;
  std::uint16_t var = static_cast<std::uint16_t>(hi.mask & ~lo.mask);
  // ascending submask enumeration
  for (std::uint16_t sub = 0;; sub = static_cast<std::uint16_t>((sub - var) & var)) {
    out.push_back(SimpleSubset{static_cast<std::uint16_t>(sub | lo.mask)});
    if (sub == var) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---- SizeGuard ----

SizeGuard SizeGuard::defaults() {
  if (const char* env = std::getenv("STEINBERG_SIZE_GUARD")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return SizeGuard{static_cast<std::uint64_t>(v)};
  }
  return SizeGuard{1000000};
}

SizeGuard SizeGuard::unlimited() { return SizeGuard{~std::uint64_t{0}}; }

void SizeGuard::check(std::uint64_t count) const {
  if (count > limit)
    throw SizeGuardExceededError("element enumeration exceeds the size guard of " +
                                 std::to_string(limit) +
                                 " (set STEINBERG_SIZE_GUARD or pass the override flag)");
}

// ---- WeylElem ----

WeylElem::WeylElem(RootSystemPtr rs, IntMat fwd, IntMat inv, int len)
    : rs_(std::move(rs)), fwd_(fwd), inv_(inv), len_(len) {}

WeylElem WeylElem::identity(RootSystemPtr rs) {
  IntMat id = IntMat::identity(rs->rank());
  return WeylElem(std::move(rs), id, id, 0);
}

WeylElem WeylElem::simple_reflection(RootSystemPtr rs, int i) {
  check_index(*rs, i);
  const IntMat& m = rs->simple_reflection_matrix(i - 1);
  return WeylElem(std::move(rs), m, m, 1);
}

bool operator==(const WeylElem& a, const WeylElem& b) {
  return a.rs_->type() == b.rs_->type() && a.fwd_ == b.fwd_;
}

void check_same_system(const WeylElem& x, const WeylElem& y) {
  if (x.root_system()->type() != y.root_system()->type())
    throw MixedRootSystemsError("elements of " + x.root_system()->type().to_string() + " and " +
                                y.root_system()->type().to_string() + " cannot be combined");
}

WeylElem multiply(const WeylElem& x, const WeylElem& y) {
  check_same_system(x, y);
  IntMat fwd = x.fwd_ * y.fwd_;
  IntMat inv = y.inv_ * x.inv_;
  return WeylElem(x.rs_, fwd, inv, inversion_count(*x.rs_, fwd));
}

WeylElem inverse(const WeylElem& x) { return WeylElem(x.rs_, x.inv_, x.fwd_, x.len_); }

WeylElem mul_gen_left(int i, const WeylElem& w) {
  const RootSystem& rs = *w.rs_;
  check_index(rs, i);
  const IntMat& s = rs.simple_reflection_matrix(i - 1);
  int len = w.len_ + (left_descents(w).contains(i) ? -1 : 1);
  return WeylElem(w.rs_, s * w.fwd_, w.inv_ * s, len);
}

WeylElem mul_gen_right(const WeylElem& w, int i) {
  const RootSystem& rs = *w.rs_;
  check_index(rs, i);
  const IntMat& s = rs.simple_reflection_matrix(i - 1);
  int len = w.len_ + (right_descents(w).contains(i) ? -1 : 1);
  return WeylElem(w.rs_, w.fwd_ * s, s * w.inv_, len);
}

WeylElem from_word(RootSystemPtr rs, const std::vector<int>& word) {
  WeylElem w = WeylElem::identity(std::move(rs));
  // [a, b] = s_a s_b applied right to left; building by right multiplication
  // in word order yields exactly that product.
  for (int i : word) w = mul_gen_right(w, i);
  return w;
}

std::vector<int> to_word(const WeylElem& w) {
  std::vector<int> word;
  WeylElem v = w;
  while (!v.is_identity()) {
    int s = left_descents(v).indices().front();
    word.push_back(s);
    v = mul_gen_left(s, v);
  }
  return word;
}

SimpleSubset left_descents(const WeylElem& w) {
  // i is a left descent iff w^{-1}(alpha_i) is negative: column i of inv.
  const RootSystem& rs = *w.root_system();
  SimpleSubset out;
  for (int i = 0; i < rs.rank(); ++i)
    if (root_is_negative(w.inverse_action(), i, rs.rank()))
      out.mask |= static_cast<std::uint16_t>(1u << i);
  return out;
}

SimpleSubset right_descents(const WeylElem& w) {
  const RootSystem& rs = *w.root_system();
  SimpleSubset out;
  for (int i = 0; i < rs.rank(); ++i)
    if (root_is_negative(w.action(), i, rs.rank()))
      out.mask |= static_cast<std::uint16_t>(1u << i);
  return out;
}

bool bruhat_leq(const WeylElem& x, const WeylElem& y) {
  check_same_system(x, y);
  return bruhat_leq_impl(x, y);
}

SimpleSubset support(const WeylElem& w) {
  const RootSystemPtr& rs = w.root_system();
  SimpleSubset out;
  for (int i = 1; i <= rs->rank(); ++i)
    if (bruhat_leq(WeylElem::simple_reflection(rs, i), w))
      out.mask |= static_cast<std::uint16_t>(1u << (i - 1));
  return out;
}

SimpleSubset i_max(const WeylElem& w) {
  return left_descents(w).complement(w.root_system()->rank());
}

bool elem_less(const WeylElem& a, const WeylElem& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return to_word(a) < to_word(b);
}

namespace {

void sort_canonically(std::vector<WeylElem>& elems) {
  std::vector<std::pair<std::vector<int>, std::size_t>> keys;
  keys.reserve(elems.size());
  for (std::size_t k = 0; k < elems.size(); ++k) keys.emplace_back(to_word(elems[k]), k);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<WeylElem> sorted;
  sorted.reserve(elems.size());
  for (auto& [word, k] : keys) sorted.push_back(std::move(elems[k]));
  elems = std::move(sorted);
}

// Breadth-first generation by right multiplication, one level per length.
// `admit` filters the elements kept and expanded.
template <typename Admit>
std::vector<WeylElem> generate(const RootSystemPtr& rs, SimpleSubset gens, Admit admit,
                               const SizeGuard& guard) {
  std::vector<WeylElem> out;
  std::unordered_set<WeylElem, ElemHash, ElemEq> seen;
  std::vector<WeylElem> frontier{WeylElem::identity(rs)};
  seen.insert(frontier.front());
  out.push_back(frontier.front());
  guard.check(out.size());
  while (!frontier.empty()) {
    std::vector<WeylElem> next;
    for (const WeylElem& v : frontier) {
      SimpleSubset asc = right_descents(v).complement(rs->rank()).set_intersection(gens);
      for (int i : asc.indices()) {
        WeylElem w = mul_gen_right(v, i);
        if (!admit(w)) continue;
        if (!seen.insert(w).second) continue;
        guard.check(out.size() + next.size() + 1);
        next.push_back(std::move(w));
      }
    }
    sort_canonically(next);
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<WeylElem> min_coset_reps(const RootSystemPtr& rs, SimpleSubset I,
                                     const SizeGuard& guard) {
  // {}^I W = { w : LD(w) cap I = empty }; closed under the right-multiplication
  // BFS because a right descent of a minimal representative is again one.
  return generate(
      rs, SimpleSubset::full(rs->rank()),
      [&](const WeylElem& w) { return left_descents(w).set_intersection(I).is_empty(); }, guard);
}

std::vector<WeylElem> enumerate_group(const RootSystemPtr& rs, const SizeGuard& guard) {
  return generate(rs, SimpleSubset::full(rs->rank()), [](const WeylElem&) { return true; }, guard);
}

std::vector<WeylElem> enumerate_parabolic(const RootSystemPtr& rs, SimpleSubset I,
                                          const SizeGuard& guard) {
  return generate(rs, I, [](const WeylElem&) { return true; }, guard);
}

WeylElem longest_element(const RootSystemPtr& rs, SimpleSubset I) {
  WeylElem w = WeylElem::identity(rs);
  for (;;) {
    SimpleSubset asc = right_descents(w).complement(rs->rank()).set_intersection(I);
    if (asc.is_empty()) return w;
    w = mul_gen_right(w, asc.indices().front());
  }
}

std::vector<WeylElem> coxeter_elements(const RootSystemPtr& rs, SimpleSubset I) {
  std::vector<int> order = I.indices();
  std::sort(order.begin(), order.end());
  std::vector<WeylElem> out;
  std::unordered_set<WeylElem, ElemHash, ElemEq> seen;
  do {
    WeylElem w = from_word(rs, order);
    if (seen.insert(w).second) out.push_back(std::move(w));
  } while (std::next_permutation(order.begin(), order.end()));
  sort_canonically(out);
  return out;
}

Int parabolic_class_count(const RootSystemPtr& rs, SimpleSubset I, const SizeGuard& guard) {
  Int direct = 0;
  for (const WeylElem& w : enumerate_group(rs, guard))
    if (i_max(w) == I) ++direct;

  Int formula = 0;
  SimpleSubset rest = I.complement(rs->rank());
  for (SimpleSubset J : subsets_between(SimpleSubset::empty(), rest)) {
    Int reps = static_cast<Int>(min_coset_reps(rs, I.set_union(J), guard).size());
    formula += (J.size() % 2 == 0 ? reps : -reps);
  }

  if (direct != formula)
    throw InternalInconsistencyError(
        "parabolic class count mismatch for I=" + std::to_string(I.mask) + ": enumeration " +
        std::to_string(direct) + " vs formula " + std::to_string(formula));
  return direct;
}

std::vector<WeylElem> bruhat_interval(const WeylElem& y) {
  // [e, v] = [e, sv] union s.[e, sv] for s a left descent of v, iterated
  // along the canonical reduced word of y.
  std::vector<int> word = to_word(y);
  std::unordered_set<WeylElem, ElemHash, ElemEq> set;
  set.insert(WeylElem::identity(y.root_system()));
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::vector<WeylElem> grown;
    for (const WeylElem& z : set) {
      WeylElem sz = mul_gen_left(*it, z);
      if (set.find(sz) == set.end()) grown.push_back(std::move(sz));
    }
    for (WeylElem& z : grown) set.insert(std::move(z));
  }
  std::vector<WeylElem> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), [](const WeylElem& a, const WeylElem& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.action() < b.action();
  });
  return out;
}

Weight dot_action(const WeylElem& w, const Weight& lambda) {
  const RootSystem& rs = *w.root_system();
  const int n = rs.rank();
  if (static_cast<int>(lambda.coords.size()) != n) throw ValidationError("weight has wrong rank");
  std::vector<Int> m(lambda.coords);
  for (int j = 0; j < n; ++j) m[j] += 1;  // lambda + rho
  std::vector<int> word = to_word(w);
  // apply s_i(m) = m - m_i * (column i of the Cartan matrix), rightmost first
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    int i = *it - 1;
    Int mi = m[i];
    for (int j = 0; j < n; ++j) m[j] -= mi * rs.cartan(j, i);
  }
  for (int j = 0; j < n; ++j) m[j] -= 1;
  return Weight{std::move(m)};
}

}  // namespace steinberg
