#include "steinberg/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace steinberg {

namespace {

void check_rank(Series s, int n) {
  auto fail = [&](const std::string& msg) { throw InvalidTypeError(msg); };
  switch (s) {
    case Series::A:
      if (n < 1) fail("type A requires rank >= 1");
      break;
    case Series::B:
    case Series::C:
      if (n == 1) fail(std::string("rank-1 ") + char(s) + " is not accepted; use A1");
      if (n < 2) fail(std::string("type ") + char(s) + " requires rank >= 2");
      break;
    case Series::D:
      if (n < 4) fail("type D requires rank >= 4");
      break;
    case Series::E:
      if (n < 6 || n > 8) fail("type E requires rank in {6,7,8}");
      break;
    case Series::F:
      if (n != 4) fail("type F requires rank 4");
      break;
    case Series::G:
      if (n != 2) fail("type G requires rank 2");
      break;
  }
  if (n > kMaxRank) fail("rank exceeds the supported maximum of 8");
}

// cartan(i,j) = <alpha_j, alpha_i^vee>, Bourbaki numbering.
IntMat make_cartan(Series s, int n) {
  IntMat a(n);
  for (int i = 0; i < n; ++i) a.at(i, i) = 2;
  auto bond = [&](int i, int j) { a.at(i, j) = -1; a.at(j, i) = -1; };  // 0-based
  switch (s) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::B:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a.at(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case Series::C:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      a.at(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case Series::D:
      for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Series::E:
      // chain 1-3-4-5-...-n with node 2 attached to node 4
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Series::F:
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      a.at(2, 1) = -2;  // alpha_3, alpha_4 short
      break;
    case Series::G:
      a.at(0, 1) = -3;  // alpha_1 short
      a.at(1, 0) = -1;
      break;
  }
  return a;
}

int height(const RootVec& r) { return std::accumulate(r.begin(), r.end(), 0); }

bool is_nonnegative(const RootVec& r) {
  return std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
}

}  // namespace

CartanType CartanType::parse(const std::string& s) {
  if (s.size() < 2) throw InvalidTypeError("cannot parse Cartan type '" + s + "'");
  char c = s[0];
  static const std::string letters = "ABCDEFG";
  if (letters.find(c) == std::string::npos)
    throw InvalidTypeError("unknown series '" + std::string(1, c) + "'");
  int rank = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k] < '0' || s[k] > '9')
      throw InvalidTypeError("cannot parse Cartan type '" + s + "'");
    rank = rank * 10 + (s[k] - '0');
    if (rank > 1000) throw InvalidTypeError("rank out of range in '" + s + "'");
  }
  CartanType t{static_cast<Series>(c), rank};
  check_rank(t.series, t.rank);
  return t;
}

std::string CartanType::to_string() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

int classical_positive_root_count(const CartanType& t) {
  int n = t.rank;
  switch (t.series) {
    case Series::A: return n * (n + 1) / 2;
    case Series::B:
    case Series::C: return n * n;
    case Series::D: return n * (n - 1);
    case Series::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case Series::F: return 24;
    case Series::G: return 6;
  }
  return 0;
}

RootSystemPtr build_root_system(const CartanType& t) {
  check_rank(t.series, t.rank);
  auto rs = std::shared_ptr<RootSystem>(new RootSystem());
  const int n = t.rank;
  rs->type_ = t;
  rs->rank_ = n;
  rs->cartan_ = make_cartan(t.series, n);

  // s_i(alpha_j) = alpha_j - cartan(i,j) alpha_i: identity except row i.
  rs->refl_.resize(n);
  for (int i = 0; i < n; ++i) {
    IntMat m = IntMat::identity(n);
    for (int j = 0; j < n; ++j)
      m.at(i, j) = static_cast<std::int16_t>((i == j ? 1 : 0) - rs->cartan_.at(i, j));
    rs->refl_[i] = m;
  }

  // Close the simple roots under simple reflections, keeping positive images.
  std::set<RootVec> seen;
  std::vector<RootVec> work;
  for (int i = 0; i < n; ++i) {
    RootVec e(n, 0);
    e[i] = 1;
    seen.insert(e);
    work.push_back(e);
  }
  while (!work.empty()) {
    RootVec r = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < n; ++i) {
      int pair = 0;  // <r, alpha_i^vee>
      for (int j = 0; j < n; ++j) pair += rs->cartan_.at(i, j) * r[j];
      RootVec img = r;
      img[i] -= pair;
      if (is_nonnegative(img) && seen.insert(img).second) work.push_back(img);
    }
  }
  rs->positive_.assign(seen.begin(), seen.end());
  std::sort(rs->positive_.begin(), rs->positive_.end(), [](const RootVec& a, const RootVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;  // alpha_1 before alpha_2 among the simple roots
  });

  if (static_cast<int>(rs->positive_.size()) != classical_positive_root_count(t))
    throw InternalInconsistencyError("positive-root closure of " + t.to_string() +
                                     " has unexpected size " +
                                     std::to_string(rs->positive_.size()));

  rs->rho_.coords.assign(n, 1);
  return rs;
}

Int pairing(const RootSystem& rs, const Weight& lambda, int i) {
  if (i < 1 || i > rs.rank()) throw IndexOutOfRangeError("simple-root index " + std::to_string(i) + " out of range");
  if (static_cast<int>(lambda.coords.size()) != rs.rank())
    throw ValidationError("weight has wrong rank");
  return lambda.coords[i - 1];
}

bool is_dominant(const RootSystem& rs, const Weight& lambda, const std::vector<int>& indices) {
  for (int i : indices)
    if (pairing(rs, lambda, i) < 0) return false;
  return true;
}

bool is_dominant(const RootSystem& rs, const Weight& lambda) {
  std::vector<int> all(rs.rank());
  std::iota(all.begin(), all.end(), 1);
  return is_dominant(rs, lambda, all);
}

Weight zero_weight(const RootSystem& rs) { return Weight{std::vector<Int>(rs.rank(), 0)}; }

}  // namespace steinberg
