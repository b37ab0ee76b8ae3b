/*
  Persistent Kazhdan-Lusztig cache: a versioned JSON text file.

    {
      "format_version": 1,
      "cartan": { "series": "A", "rank": 3 },
      "entries": [ { "x": [1,3], "y": [2,1,3,2], "coeffs": [1,1] }, ... ]
    }

  Words are canonical reduced words with 1-based letters. Loading validates
  every invariant (version, matching Cartan type, x <= y, coefficient
  bounds, no duplicate keys) and rejects a corrupt file outright; a cache
  is never partially loaded. Save/load round-trips are lossless.
*/

#pragma once

#include <string>

#include "steinberg/kl.hpp"

namespace steinberg {

void cache_save(const KLStore& store, const std::string& path);

KLStore cache_load(const std::string& path, const RootSystemPtr& rs);

}  // namespace steinberg
