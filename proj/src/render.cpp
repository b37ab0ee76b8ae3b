#include "steinberg/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace steinberg {

namespace {

std::string index_list(SimpleSubset s) {
  std::ostringstream os;
  bool first = true;
  for (int i : s.indices()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string render_subset(SimpleSubset s) { return "{" + index_list(s) + "}"; }

std::string render_word(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << '.';
    os << 's' << word[k];
  }
  return os.str();
}

std::string smooth_part_symbol(SimpleSubset I, SimpleSubset J) {
  if (J == I) return "1";
  std::string s = "v^{P_{" + index_list(I) + "}}_{P_{" + index_list(J) + "}}";
  if (J.is_empty()) s += " (St)";
  return s;
}

std::string render_poly(const KLPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    Int c = p.coeff(k);
    if (c == 0) continue;
    if (!first) os << " + ";
    if (k == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << 'q';
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

nlohmann::ordered_json multiset_to_json(const RenderContext& ctx, const FactorMultiset& m) {
  nlohmann::ordered_json doc;
  doc["type"] = ctx.rs->type().to_string();
  doc["rank"] = ctx.rs->rank();
  doc["lambda"] = ctx.lambda.coords;
  doc["parabolic"] = ctx.parabolic.indices();
  doc["twist"] = ctx.twist_word;
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (const JHFactor& f : m.factors()) {
    nlohmann::ordered_json jf;
    jf["w_word"] = to_word(f.w);
    jf["w_dot_lambda"] = f.highest_weight.coords;
    jf["I"] = f.I.indices();
    jf["J"] = f.J.indices();
    jf["smooth_part"] = smooth_part_symbol(f.I, f.J);
    jf["mult"] = f.mult;
    factors.push_back(std::move(jf));
  }
  doc["factors"] = std::move(factors);
  doc["length"] = m.length();
  doc["distinct"] = m.distinct();
  return doc;
}

std::string multiset_to_table(const RenderContext& ctx, const FactorMultiset& m) {
  std::ostringstream os;
  os << "# type=" << ctx.rs->type().to_string() << " lambda=(";
  for (std::size_t k = 0; k < ctx.lambda.coords.size(); ++k)
    os << (k ? "," : "") << ctx.lambda.coords[k];
  os << ") parabolic=" << render_subset(ctx.parabolic)
     << " twist=" << render_word(ctx.twist_word) << "\n";

  std::vector<std::array<std::string, 6>> rows;
  rows.push_back({"w", "w.lambda", "I", "J", "smooth_part", "mult"});
  for (const JHFactor& f : m.factors()) {
    std::ostringstream hw;
    hw << '(';
    for (std::size_t k = 0; k < f.highest_weight.coords.size(); ++k)
      hw << (k ? "," : "") << f.highest_weight.coords[k];
    hw << ')';
    rows.push_back({render_word(to_word(f.w)), hw.str(), render_subset(f.I), render_subset(f.J),
                    smooth_part_symbol(f.I, f.J), std::to_string(f.mult)});
  }
  std::array<std::size_t, 6> width{};
  for (const auto& row : rows)
    for (int c = 0; c < 6; ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    for (int c = 0; c < 6; ++c) {
      os << row[c];
      if (c < 5) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  }
  os << "length=" << m.length() << " distinct=" << m.distinct() << "\n";
  return os.str();
}

FactorMultiset multiset_from_json(const RootSystemPtr& rs, const nlohmann::ordered_json& doc) {
  std::vector<JHFactor> factors;
  for (const auto& jf : doc.at("factors")) {
    WeylElem w = from_word(rs, jf.at("w_word").get<std::vector<int>>());
    SimpleSubset J = SimpleSubset::of(jf.at("J").get<std::vector<int>>(), rs->rank());
    Weight hw{jf.at("w_dot_lambda").get<std::vector<Int>>()};
    factors.push_back(JHFactor{w, i_max(w), J, hw, jf.at("mult").get<Int>()});
  }
  return FactorMultiset(std::move(factors));
}

}  // namespace steinberg
