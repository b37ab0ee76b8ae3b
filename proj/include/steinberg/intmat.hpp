/*
  Fixed-capacity integer matrix for rank <= 8 root systems.

  Entries of Weyl-group action matrices in the simple-root basis are root
  coordinates, so their magnitude never exceeds the largest coefficient of
  the highest root (6, reached in E8); int16_t storage is exact with room
  to spare. Products are accumulated in int before narrowing.
*/

#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>

namespace steinberg {

inline constexpr int kMaxRank = 8;

class IntMat {
 public:
  IntMat() : n_(0) { v_.fill(0); }
  explicit IntMat(int n) : n_(n) { v_.fill(0); }

  static IntMat identity(int n) {
    IntMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int size() const { return n_; }

  std::int16_t& at(int i, int j) { return v_[static_cast<std::size_t>(i) * kMaxRank + j]; }
  std::int16_t at(int i, int j) const { return v_[static_cast<std::size_t>(i) * kMaxRank + j]; }

  friend IntMat operator*(const IntMat& a, const IntMat& b) {
    IntMat c(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int j = 0; j < a.n_; ++j) {
        int acc = 0;
        for (int k = 0; k < a.n_; ++k) acc += int(a.at(i, k)) * int(b.at(k, j));
        c.at(i, j) = static_cast<std::int16_t>(acc);
      }
    return c;
  }

  friend bool operator==(const IntMat& a, const IntMat& b) {
    return a.n_ == b.n_ && a.v_ == b.v_;
  }
  friend bool operator!=(const IntMat& a, const IntMat& b) { return !(a == b); }

  // Deterministic total order, used for canonical memo keys.
  friend bool operator<(const IntMat& a, const IntMat& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.v_ < b.v_;
  }

  std::size_t hash() const {
    // FNV-1a over the used entries.
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(at(i, j)));
        h *= 1099511628211ull;
      }
    return h;
  }

 private:
  std::array<std::int16_t, kMaxRank * kMaxRank> v_;
  int n_;
};

}  // namespace steinberg
