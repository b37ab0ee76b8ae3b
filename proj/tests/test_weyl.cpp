#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "steinberg/weyl.hpp"

using namespace steinberg;

namespace {

// Test-only oracle: x <= y iff some subsequence of a reduced word of y is a
// word for x of full length l(x). Independent of the lifting recursion.
bool subword_oracle(const WeylElem& x, const WeylElem& y) {
  std::vector<int> word = to_word(y);
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> bool {
    if (remaining == 0) return from_word(y.root_system(), chosen) == x;
    if (word.size() - pos < static_cast<std::size_t>(remaining)) return false;
    chosen.push_back(word[pos]);
    bool hit = self(self, pos + 1, remaining - 1);
    chosen.pop_back();
    return hit || self(self, pos + 1, remaining);
  };
  return rec(rec, 0, x.length());
}

// Test-only oracle: all reduced words of w, by peeling left descents.
void all_reduced_words_rec(const WeylElem& w, std::vector<int>& prefix,
                           std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int s : left_descents(w).indices()) {
    prefix.push_back(s);
    all_reduced_words_rec(mul_gen_left(s, w), prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> all_reduced_words(const WeylElem& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  all_reduced_words_rec(w, prefix, out);
  return out;
}

const std::vector<std::string> kSmallTypes = {"A1", "A2", "A3", "B2", "B3", "G2"};

}  // namespace

TEST_CASE("from_word basics and braid relations") {
  auto a2 = build_root_system("A2");
  CHECK(from_word(a2, {}).is_identity());
  CHECK(from_word(a2, {1, 2, 1}) == from_word(a2, {2, 1, 2}));
  CHECK(from_word(a2, {1, 1}).is_identity());

  auto a3 = build_root_system("A3");
  CHECK(from_word(a3, {2, 1, 3, 2}) == from_word(a3, {2, 3, 1, 2}));
  CHECK_THROWS_AS(from_word(a3, {0}), IndexOutOfRangeError);
  CHECK_THROWS_AS(from_word(a3, {4}), IndexOutOfRangeError);

  auto b2 = build_root_system("B2");
  CHECK(from_word(b2, {1, 2, 1, 2}) == from_word(b2, {2, 1, 2, 1}));
  CHECK(from_word(b2, {1, 2, 1}) != from_word(b2, {2, 1, 2}));
}

TEST_CASE("group arithmetic") {
  auto rs = build_root_system("B3");
  for (const WeylElem& x : enumerate_group(rs)) {
    CHECK(multiply(x, inverse(x)).is_identity());
    CHECK(inverse(x).length() == x.length());
    CHECK(from_word(rs, to_word(x)) == x);
    CHECK(static_cast<int>(to_word(x).size()) == x.length());
  }
}

TEST_CASE("mixed root systems are rejected") {
  auto a2 = build_root_system("A2");
  auto b2 = build_root_system("B2");
  WeylElem x = WeylElem::simple_reflection(a2, 1);
  WeylElem y = WeylElem::simple_reflection(b2, 1);
  CHECK_THROWS_AS(multiply(x, y), MixedRootSystemsError);
  CHECK_THROWS_AS((void)bruhat_leq(x, y), MixedRootSystemsError);
}

TEST_CASE("canonical word uses the smallest left descent") {
  auto a2 = build_root_system("A2");
  CHECK(to_word(from_word(a2, {2, 1, 2})) == std::vector<int>{1, 2, 1});
  CHECK(to_word(WeylElem::identity(a2)).empty());
}

TEST_CASE("left descents") {
  auto a3 = build_root_system("A3");
  CHECK(left_descents(WeylElem::identity(a3)).is_empty());
  WeylElem w0 = longest_element(a3, SimpleSubset::full(3));
  CHECK(left_descents(w0) == SimpleSubset::full(3));
  CHECK(left_descents(from_word(a3, {2, 1, 3, 2})).indices() == std::vector<int>{2});
  // the l(s_i w) < l(w) definition, exhaustively
  for (const WeylElem& w : enumerate_group(a3)) {
    for (int i = 1; i <= 3; ++i)
      CHECK(left_descents(w).contains(i) == (mul_gen_left(i, w).length() < w.length()));
  }
}

TEST_CASE("bruhat order agrees with the subword oracle") {
  for (const auto& name : kSmallTypes) {
    CAPTURE(name);
    auto rs = build_root_system(name);
    auto all = enumerate_group(rs);
    for (const WeylElem& x : all)
      for (const WeylElem& y : all) CHECK(bruhat_leq(x, y) == subword_oracle(x, y));
  }
}

TEST_CASE("bruhat order basics") {
  auto a2 = build_root_system("A2");
  WeylElem e = WeylElem::identity(a2);
  WeylElem s1 = from_word(a2, {1});
  WeylElem s12 = from_word(a2, {1, 2});
  WeylElem s21 = from_word(a2, {2, 1});
  for (const WeylElem& w : enumerate_group(a2)) CHECK(bruhat_leq(e, w));
  CHECK(bruhat_leq(s1, s21));
  CHECK_FALSE(bruhat_leq(s12, s21));
  CHECK_FALSE(bruhat_leq(s21, s12));
}

TEST_CASE("support matches the union of letters over all reduced words") {
  for (const auto& name : {"A2", "A3", "B3", "G2"}) {
    CAPTURE(name);
    auto rs = build_root_system(name);
    for (const WeylElem& w : enumerate_group(rs)) {
      std::set<int> letters;
      std::set<std::set<int>> letter_sets;
      for (const auto& word : all_reduced_words(w)) {
        letter_sets.insert(std::set<int>(word.begin(), word.end()));
        letters.insert(word.begin(), word.end());
      }
      // the same set of letters appears in every reduced word
      CHECK(letter_sets.size() == 1);
      auto supp = support(w).indices();
      CHECK(std::set<int>(supp.begin(), supp.end()) == letters);
    }
  }
}

TEST_CASE("support examples") {
  auto a3 = build_root_system("A3");
  CHECK(support(WeylElem::identity(a3)).is_empty());
  CHECK(support(from_word(a3, {1, 3})).indices() == std::vector<int>{1, 3});
  CHECK(support(longest_element(a3, SimpleSubset::full(3))) == SimpleSubset::full(3));
  // supp(w) in I iff w in W_I
  for (SimpleSubset I : subsets_between(SimpleSubset::empty(), SimpleSubset::full(3))) {
    std::set<std::vector<int>> parab;
    for (const WeylElem& u : enumerate_parabolic(a3, I)) parab.insert(to_word(u));
    for (const WeylElem& w : enumerate_group(a3))
      CHECK(support(w).subset_of(I) == (parab.count(to_word(w)) > 0));
  }
}

TEST_CASE("minimal coset representatives") {
  auto a2 = build_root_system("A2");
  auto full = min_coset_reps(a2, SimpleSubset::full(2));
  REQUIRE(full.size() == 1);
  CHECK(full[0].is_identity());
  CHECK(min_coset_reps(a2, SimpleSubset::empty()).size() == 6);

  auto reps = min_coset_reps(a2, SimpleSubset::of({1}, 2));
  REQUIRE(reps.size() == 3);
  CHECK(to_word(reps[0]) == std::vector<int>{});
  CHECK(to_word(reps[1]) == std::vector<int>{2});
  CHECK(to_word(reps[2]) == std::vector<int>{2, 1});

  for (const auto& name : kSmallTypes) {
    CAPTURE(name);
    auto rs = build_root_system(name);
    auto all = enumerate_group(rs);
    for (SimpleSubset I : subsets_between(SimpleSubset::empty(), SimpleSubset::full(rs->rank()))) {
      auto r = min_coset_reps(rs, I);
      // definition: left descents avoid I
      std::set<std::vector<int>> expected;
      for (const WeylElem& w : all)
        if (left_descents(w).set_intersection(I).is_empty()) expected.insert(to_word(w));
      std::set<std::vector<int>> got;
      for (const WeylElem& w : r) got.insert(to_word(w));
      CHECK(got == expected);
      // cardinality |W| / |W_I|
      CHECK(r.size() * enumerate_parabolic(rs, I).size() == all.size());
      CHECK(std::is_sorted(r.begin(), r.end(), elem_less));
    }
  }
}

TEST_CASE("length additivity of the parabolic decomposition") {
  for (const auto& name : {"A2", "A3", "B3"}) {
    CAPTURE(name);
    auto rs = build_root_system(name);
    auto all = enumerate_group(rs);
    for (SimpleSubset I : subsets_between(SimpleSubset::empty(), SimpleSubset::full(rs->rank()))) {
      auto parab = enumerate_parabolic(rs, I);
      auto reps = min_coset_reps(rs, I);
      std::map<std::vector<int>, int> factored;
      for (const WeylElem& u : parab)
        for (const WeylElem& v : reps) {
          WeylElem w = multiply(u, v);
          CHECK(w.length() == u.length() + v.length());
          ++factored[to_word(w)];
        }
      CHECK(factored.size() == all.size());                          // every w reached
      for (const auto& [word, count] : factored) CHECK(count == 1);  // uniquely
    }
  }
}

TEST_CASE("i_max") {
  auto a3 = build_root_system("A3");
  CHECK(i_max(WeylElem::identity(a3)) == SimpleSubset::full(3));
  CHECK(i_max(longest_element(a3, SimpleSubset::full(3))).is_empty());
  CHECK(i_max(from_word(a3, {1, 3, 2, 3, 1})).indices() == std::vector<int>{2});

  // I(w) is the maximal I with w among the minimal representatives
  for (const auto& name : {"A2", "A3", "B3"}) {
    auto rs = build_root_system(name);
    std::map<std::uint16_t, std::set<std::vector<int>>> reps_by_subset;
    for (SimpleSubset I : subsets_between(SimpleSubset::empty(), SimpleSubset::full(rs->rank())))
      for (const WeylElem& w : min_coset_reps(rs, I)) reps_by_subset[I.mask].insert(to_word(w));
    for (const WeylElem& w : enumerate_group(rs)) {
      SimpleSubset best = i_max(w);
      for (SimpleSubset I : subsets_between(SimpleSubset::empty(), SimpleSubset::full(rs->rank()))) {
        bool member = reps_by_subset[I.mask].count(to_word(w)) > 0;
        CHECK(member == I.subset_of(best));
      }
    }
  }
}

TEST_CASE("longest elements") {
  auto a2 = build_root_system("A2");
  CHECK(longest_element(a2, SimpleSubset::empty()).is_identity());
  CHECK(longest_element(a2, SimpleSubset::full(2)) == from_word(a2, {1, 2, 1}));

  auto a3 = build_root_system("A3");
  WeylElem w13 = longest_element(a3, SimpleSubset::of({1, 3}, 3));
  CHECK(w13 == from_word(a3, {1, 3}));
  CHECK(w13.length() == 2);

  // l(w_I) = |Phi_I^+|
  for (const auto& name : kSmallTypes) {
    auto rs = build_root_system(name);
    for (SimpleSubset I : subsets_between(SimpleSubset::empty(), SimpleSubset::full(rs->rank()))) {
      int roots_in_span = 0;
      for (const RootVec& beta : rs->positive_roots()) {
        bool inside = true;
        for (int j = 0; j < rs->rank(); ++j)
          if (beta[j] != 0 && !I.contains(j + 1)) inside = false;
        if (inside) ++roots_in_span;
      }
      CHECK(longest_element(rs, I).length() == roots_in_span);
      CHECK(I.subset_of(left_descents(longest_element(rs, I))));
    }
  }
}

TEST_CASE("coxeter elements") {
  auto a2 = build_root_system("A2");
  auto single = coxeter_elements(a2, SimpleSubset::of({2}, 2));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == from_word(a2, {2}));
  auto both = coxeter_elements(a2, SimpleSubset::full(2));
  REQUIRE(both.size() == 2);
  CHECK(both[0] == from_word(a2, {1, 2}));
  CHECK(both[1] == from_word(a2, {2, 1}));

  auto a3 = build_root_system("A3");
  CHECK(coxeter_elements(a3, SimpleSubset::full(3)).size() == 4);

  // Coxeter elements are exactly the full-support elements of length |I|
  for (const auto& name : {"A2", "A3", "B3", "G2"}) {
    CAPTURE(name);
    auto rs = build_root_system(name);
    auto all = enumerate_group(rs);
    for (SimpleSubset I : subsets_between(SimpleSubset::empty(), SimpleSubset::full(rs->rank()))) {
      std::set<std::vector<int>> expected;
      for (const WeylElem& w : all)
        if (w.length() == I.size() && support(w) == I) expected.insert(to_word(w));
      std::set<std::vector<int>> got;
      for (const WeylElem& c : coxeter_elements(rs, I)) {
        CHECK(c.length() == I.size());
        CHECK(support(c) == I);
        got.insert(to_word(c));
      }
      CHECK(got == expected);
    }
  }
}

TEST_CASE("group enumeration sizes") {
  CHECK(enumerate_group(build_root_system("A3")).size() == 24);
  CHECK(enumerate_group(build_root_system("G2")).size() == 12);
  CHECK(enumerate_group(build_root_system("B3")).size() == 48);
  CHECK(enumerate_group(build_root_system("C3")).size() == 48);
  CHECK(enumerate_group(build_root_system("D4")).size() == 192);
  CHECK(enumerate_group(build_root_system("F4")).size() == 1152);
}

TEST_CASE("enumeration is sorted and deterministic") {
  auto rs = build_root_system("B3");
  auto a = enumerate_group(rs);
  auto b = enumerate_group(rs);
  CHECK(std::is_sorted(a.begin(), a.end(), elem_less));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("size guard") {
  auto a3 = build_root_system("A3");
  CHECK_THROWS_AS(enumerate_group(a3, SizeGuard{10}), SizeGuardExceededError);
  CHECK(enumerate_group(a3, SizeGuard{24}).size() == 24);
  CHECK_THROWS_AS(min_coset_reps(a3, SimpleSubset::of({1}, 3), SizeGuard{5}),
                  SizeGuardExceededError);
}

TEST_CASE("parabolic class counts in A3") {
  auto a3 = build_root_system("A3");
  auto count = [&](std::vector<int> v) {
    return parabolic_class_count(a3, SimpleSubset::of(v, 3));
  };
  CHECK(count({1, 2}) == 3);
  CHECK(count({2, 3}) == 3);
  CHECK(count({1}) == 3);
  CHECK(count({3}) == 3);
  CHECK(count({1, 3}) == 5);
  CHECK(count({2}) == 5);
  CHECK(count({}) == 1);
  CHECK(count({1, 2, 3}) == 1);
}

TEST_CASE("parabolic class counts partition the group") {
  for (const auto& name : kSmallTypes) {
    CAPTURE(name);
    auto rs = build_root_system(name);
    Int total = 0;
    for (SimpleSubset I : subsets_between(SimpleSubset::empty(), SimpleSubset::full(rs->rank())))
      total += parabolic_class_count(rs, I);
    CHECK(total == static_cast<Int>(enumerate_group(rs).size()));
  }
}

TEST_CASE("bruhat interval matches a filter of the group") {
  for (const auto& name : {"A3", "B3"}) {
    auto rs = build_root_system(name);
    auto all = enumerate_group(rs);
    for (std::size_t k = 0; k < all.size(); k += 5) {
      const WeylElem& y = all[k];
      std::set<std::vector<int>> expected;
      for (const WeylElem& x : all)
        if (bruhat_leq(x, y)) expected.insert(to_word(x));
      std::set<std::vector<int>> got;
      for (const WeylElem& z : bruhat_interval(y)) got.insert(to_word(z));
      CHECK(got == expected);
    }
  }
}
