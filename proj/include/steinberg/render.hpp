/*
  Machine-readable (JSON) and human-readable (table) renderings of factor
  multisets and polynomials. Both renderings of one computation carry the
  same multiset, and rendering is deterministic.
*/

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "steinberg/jh.hpp"

namespace steinberg {

/// Inputs a multiset was computed from, echoed into the output header.
struct RenderContext {
  RootSystemPtr rs;
  Weight lambda;
  SimpleSubset parabolic;       // I
  std::vector<int> twist_word;  // w
};

/// "1" when J = I, otherwise v^{P_I}_{P_J} with sorted index lists and an
/// "(St)" annotation when J is empty.
std::string smooth_part_symbol(SimpleSubset I, SimpleSubset J);

/// "{1,3}", "{}"
std::string render_subset(SimpleSubset s);

/// "s2.s1.s3.s2", "e" for the empty word
std::string render_word(const std::vector<int>& word);

/// "1 + q + 2q^2"; "0" for the zero polynomial
std::string render_poly(const KLPoly& p);

nlohmann::ordered_json multiset_to_json(const RenderContext& ctx, const FactorMultiset& m);
std::string multiset_to_table(const RenderContext& ctx, const FactorMultiset& m);

/// Parses the factors of a JSON rendering back into a multiset (used by the
/// table/JSON agreement tests).
FactorMultiset multiset_from_json(const RootSystemPtr& rs, const nlohmann::ordered_json& doc);

}  // namespace steinberg
