#include "steinberg/kl.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace steinberg {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw CoefficientOverflowError("integer overflow in coefficient arithmetic");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw CoefficientOverflowError("integer overflow in coefficient arithmetic");
  return r;
}

// ---- KLPoly ----

void KLPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int KLPoly::eval_at_one() const {
  Int s = 0;
  for (Int c : c_) s = checked_add(s, c);
  return s;
}

void KLPoly::add(const KLPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = checked_add(c_[k], o.c_[k]);
  trim();
}

void KLPoly::sub_scaled(Int scalar, int shift, const KLPoly& o) {
  if (o.is_zero() || scalar == 0) return;
  std::size_t need = o.c_.size() + static_cast<std::size_t>(shift);
  if (need > c_.size()) c_.resize(need, 0);
  for (std::size_t k = 0; k < o.c_.size(); ++k)
    c_[k + shift] = checked_add(c_[k + shift], -checked_mul(scalar, o.c_[k]));
  trim();
}

KLPoly KLPoly::times_q(int shift) const {
  if (is_zero()) return KLPoly();
  std::vector<Int> v(c_.size() + static_cast<std::size_t>(shift), 0);
  std::copy(c_.begin(), c_.end(), v.begin() + shift);
  return KLPoly(std::move(v));
}

// ---- KLStore ----

namespace {

struct MatPair {
  IntMat a, b;
  friend bool operator==(const MatPair& x, const MatPair& y) { return x.a == y.a && x.b == y.b; }
};
struct MatPairHash {
  std::size_t operator()(const MatPair& k) const { return k.a.hash() * 1000003u ^ k.b.hash(); }
};

// One entry per { (x,y), (x^{-1},y^{-1}) }; the stored elements are the
// representatives whose matrix pair is lexicographically smaller.
std::pair<WeylElem, WeylElem> canonical_kl_pair(const WeylElem& x, const WeylElem& y) {
  const IntMat &xf = x.action(), &xi = x.inverse_action();
  if (xi < xf) return {inverse(x), inverse(y)};
  if (xf < xi) return {x, y};
  return y.inverse_action() < y.action() ? std::make_pair(inverse(x), inverse(y))
                                         : std::make_pair(x, y);
}

struct StoredEntry {
  WeylElem x, y;
  KLPoly p;
};

}  // namespace

struct KLStore::Impl {
  mutable std::shared_mutex mu;
  std::unordered_map<MatPair, StoredEntry, MatPairHash> map;
  mutable std::atomic<std::uint64_t> hits{0};
};

KLStore::KLStore(RootSystemPtr rs) : impl_(std::make_shared<Impl>()), rs_(std::move(rs)) {}

bool KLStore::lookup(const WeylElem& x, const WeylElem& y, KLPoly& out) const {
  auto [cx, cy] = canonical_kl_pair(x, y);
  MatPair key{cx.action(), cy.action()};
  std::shared_lock lock(impl_->mu);
  auto it = impl_->map.find(key);
  if (it == impl_->map.end()) return false;
  out = it->second.p;
  impl_->hits.fetch_add(1, std::memory_order_relaxed);
  return true;
}

void KLStore::publish(const WeylElem& x, const WeylElem& y, const KLPoly& p) {
  auto [cx, cy] = canonical_kl_pair(x, y);
  MatPair key{cx.action(), cy.action()};
  std::unique_lock lock(impl_->mu);
  auto [it, inserted] = impl_->map.emplace(key, StoredEntry{cx, cy, p});
  if (!inserted && it->second.p != p)
    throw InternalInconsistencyError("conflicting publication of a Kazhdan-Lusztig polynomial");
}

std::size_t KLStore::entries() const {
  std::shared_lock lock(impl_->mu);
  return impl_->map.size();
}

std::uint64_t KLStore::hits() const { return impl_->hits.load(std::memory_order_relaxed); }

std::vector<KLStore::Entry> KLStore::snapshot() const {
  std::vector<Entry> out;
  {
    std::shared_lock lock(impl_->mu);
    out.reserve(impl_->map.size());
    for (const auto& [key, e] : impl_->map)
      out.push_back(Entry{to_word(e.x), to_word(e.y), e.p.coeffs()});
  }
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) {
    if (a.y_word.size() != b.y_word.size()) return a.y_word.size() < b.y_word.size();
    if (a.y_word != b.y_word) return a.y_word < b.y_word;
    if (a.x_word.size() != b.x_word.size()) return a.x_word.size() < b.x_word.size();
    return a.x_word < b.x_word;
  });
  return out;
}

// ---- recursion ----

namespace {

struct MatHash {
  std::size_t operator()(const IntMat& m) const { return m.hash(); }
};

// Transient state of one top-level computation: Bruhat intervals reused
// across the recursion tree, released when the call returns.
struct KLContext {
  KLStore& store;
  std::unordered_map<IntMat, std::shared_ptr<const std::vector<WeylElem>>, MatHash> intervals;

  const std::vector<WeylElem>& interval_below(const WeylElem& y) {
    auto it = intervals.find(y.action());
    if (it == intervals.end()) {
      auto vec = std::make_shared<const std::vector<WeylElem>>(bruhat_interval(y));
      it = intervals.emplace(y.action(), std::move(vec)).first;
    }
    return *it->second;
  }
};

KLPoly kl_rec(const WeylElem& x, const WeylElem& y, KLContext& ctx);

Int mu_rec(const WeylElem& x, const WeylElem& y, KLContext& ctx) {
  int d = y.length() - x.length();
  if (d <= 0 || d % 2 == 0) return 0;
  return kl_rec(x, y, ctx).coeff((d - 1) / 2);
}

void validate_result(const KLPoly& p, const WeylElem& x, const WeylElem& y) {
  bool ok = !p.is_zero() && p.coeff(0) == 1;
  if (ok && x.length() < y.length())
    ok = p.degree() <= (y.length() - x.length() - 1) / 2;
  if (ok)
    for (Int c : p.coeffs()) ok = ok && c >= 0;
  if (!ok)
    throw InternalInconsistencyError("computed Kazhdan-Lusztig polynomial violates its bounds");
}

KLPoly kl_rec(const WeylElem& x, const WeylElem& y, KLContext& ctx) {
  if (x == y) {
    KLPoly cached;
    if (!ctx.store.lookup(x, y, cached)) ctx.store.publish(x, y, KLPoly::one());
    return KLPoly::one();
  }
  if (!bruhat_leq(x, y)) return KLPoly::zero();
  KLPoly cached;
  if (ctx.store.lookup(x, y, cached)) return cached;

  int s = left_descents(y).indices().front();
  WeylElem sy = mul_gen_left(s, y);
  WeylElem sx = mul_gen_left(s, x);

  KLPoly p;
  if (left_descents(x).contains(s)) {
    p = kl_rec(sx, sy, ctx);
    p.add(kl_rec(x, sy, ctx).times_q(1));
  } else {
    p = kl_rec(sx, sy, ctx).times_q(1);
    p.add(kl_rec(x, sy, ctx));
  }
  for (const WeylElem& z : ctx.interval_below(sy)) {
    if (!left_descents(z).contains(s)) continue;
    if (!bruhat_leq(x, z)) continue;
    Int m = mu_rec(z, sy, ctx);
    if (m == 0) continue;
    p.sub_scaled(m, (y.length() - z.length()) / 2, kl_rec(x, z, ctx));
  }

  validate_result(p, x, y);
  ctx.store.publish(x, y, p);
  return p;
}

}  // namespace

KLPoly kl_polynomial(const WeylElem& x, const WeylElem& y, KLStore& store) {
  check_same_system(x, y);
  if (x.root_system()->type() != store.root_system()->type())
    throw MixedRootSystemsError("store belongs to a different root system");
  KLContext ctx{store, {}};
  return kl_rec(x, y, ctx);
}

Int mu(const WeylElem& x, const WeylElem& y, KLStore& store) {
  int d = y.length() - x.length();
  if (d <= 0 || d % 2 == 0) return 0;
  return kl_polynomial(x, y, store).coeff((d - 1) / 2);
}

Int verma_multiplicity(const WeylElem& x, const WeylElem& y, KLStore& store) {
  return kl_polynomial(x, y, store).eval_at_one();
}

Int parabolic_verma_multiplicity(SimpleSubset K, const WeylElem& w, const WeylElem& y,
                                 KLStore& store, const SizeGuard& guard) {
  check_same_system(w, y);
  if (!left_descents(w).set_intersection(K).is_empty())
    throw NotMinimalRepresentativeError("w is not a minimal coset representative for the subset");
  Int total = 0;
  for (const WeylElem& u : enumerate_parabolic(w.root_system(), K, guard)) {
    Int m = verma_multiplicity(multiply(u, w), y, store);
    total = checked_add(total, u.length() % 2 == 0 ? m : -m);
  }
  if (total < 0)
    throw InternalInconsistencyError("negative parabolic Verma multiplicity");
  return total;
}

}  // namespace steinberg
