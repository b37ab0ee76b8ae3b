#include "steinberg/cache.hpp"

#include <fstream>
#include <set>

#include "json.hpp"

namespace steinberg {

namespace {

using json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

std::vector<int> word_from_json(const json& j, int rank) {
  if (!j.is_array()) throw FormatError("cache entry word is not an array");
  std::vector<int> word;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw FormatError("cache entry word has a non-integer letter");
    int i = v.get<int>();
    if (i < 1 || i > rank) throw FormatError("cache entry word letter out of range");
    word.push_back(i);
  }
  return word;
}

}  // namespace

void cache_save(const KLStore& store, const std::string& path) {
  json doc;
  doc["format_version"] = kFormatVersion;
  const CartanType& t = store.root_system()->type();
  doc["cartan"] = {{"series", std::string(1, static_cast<char>(t.series))}, {"rank", t.rank}};
  json entries = json::array();
  for (const KLStore::Entry& e : store.snapshot()) {
    json entry;
    entry["x"] = e.x_word;
    entry["y"] = e.y_word;
    entry["coeffs"] = e.coeffs;
    entries.push_back(std::move(entry));
  }
  doc["entries"] = std::move(entries);

  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << doc.dump(1) << '\n';
  if (!out) throw IoError("failed writing '" + path + "'");
}

KLStore cache_load(const std::string& path, const RootSystemPtr& rs) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw FormatError(std::string("cache is not valid JSON: ") + e.what());
  }

  if (!doc.is_object() || !doc.contains("format_version") ||
      !doc["format_version"].is_number_integer())
    throw FormatError("cache has no integer format_version");
  if (doc["format_version"].get<int>() != kFormatVersion)
    throw FormatError("unsupported cache format_version " + doc["format_version"].dump());
  if (!doc.contains("cartan") || !doc["cartan"].is_object())
    throw FormatError("cache has no cartan header");
  const json& cartan = doc["cartan"];
  if (!cartan.contains("series") || !cartan.contains("rank") ||
      !cartan["series"].is_string() || !cartan["rank"].is_number_integer())
    throw FormatError("cache cartan header is malformed");
  std::string header_type = cartan["series"].get<std::string>() +
                            std::to_string(cartan["rank"].get<int>());
  if (header_type != rs->type().to_string())
    throw FormatError("cache was written for " + header_type + ", requested " +
                      rs->type().to_string());
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw FormatError("cache has no entries array");

  KLStore store(rs);
  std::set<std::pair<IntMat, IntMat>> keys;
  for (const json& entry : doc["entries"]) {
    if (!entry.is_object() || !entry.contains("x") || !entry.contains("y") ||
        !entry.contains("coeffs"))
      throw FormatError("cache entry is malformed");
    WeylElem x = from_word(rs, word_from_json(entry["x"], rs->rank()));
    WeylElem y = from_word(rs, word_from_json(entry["y"], rs->rank()));
    if (!bruhat_leq(x, y)) throw FormatError("cache entry has x not below y");

    if (!entry["coeffs"].is_array() || entry["coeffs"].empty())
      throw FormatError("cache entry has no coefficients");
    std::vector<Int> coeffs;
    for (const auto& c : entry["coeffs"]) {
      if (!c.is_number_integer()) throw FormatError("cache entry has a non-integer coefficient");
      coeffs.push_back(c.get<Int>());
      if (coeffs.back() < 0) throw FormatError("cache entry has a negative coefficient");
    }
    if (coeffs.back() == 0) throw FormatError("cache entry has a trailing zero coefficient");
    if (coeffs.front() != 1) throw FormatError("cache entry has constant term != 1");
    if (x.length() < y.length() &&
        static_cast<int>(coeffs.size()) - 1 > (y.length() - x.length() - 1) / 2)
      throw FormatError("cache entry violates the degree bound");

    if (!keys.insert({x.action(), y.action()}).second)
      throw FormatError("cache has a duplicate (x, y) entry");
    KLPoly previous;
    if (store.lookup(x, y, previous)) {
      // same canonical key reached through the inverse pair
      if (previous != KLPoly(coeffs)) throw FormatError("cache has conflicting duplicate entries");
      continue;
    }
    store.publish(x, y, KLPoly(std::move(coeffs)));
  }
  return store;
}

}  // namespace steinberg
