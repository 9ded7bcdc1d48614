#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace chev {

constexpr int kMaxRank = 8;

// Integer vector in fundamental-weight coordinates.  Also reused as an
// exponent vector for the polynomial rings of the cohomology module.
struct Weight {
  std::array<int32_t, kMaxRank> c{};
  int32_t n = 0;

  Weight() = default;
  explicit Weight(int rank) : n(rank) {}
  Weight(std::initializer_list<int> xs) : n(static_cast<int32_t>(xs.size())) {
    int i = 0;
    for (int x : xs) c[i++] = x;
  }
  static Weight from(const std::vector<int>& xs);

  int rank() const { return n; }
  int32_t& operator[](int i) { return c[i]; }
  int32_t operator[](int i) const { return c[i]; }

  bool is_zero() const;
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight operator*(int k) const;
  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  bool divisible_by(int k) const;
  Weight divided_by(int k) const;

  std::vector<int> to_vector() const;
  std::string str() const;  // "2,-3"

  friend bool operator==(const Weight& a, const Weight& b) { return a.n == b.n && a.c == b.c; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.c < b.c;
  }
};

struct WeightHash {
  size_t operator()(const Weight& w) const {
    uint64_t h = 1469598103934665603ULL ^ static_cast<uint64_t>(w.n);
    for (int i = 0; i < w.n; ++i) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(w.c[i]));
      h *= 1099511628211ULL;
    }
    return static_cast<size_t>(h);
  }
};

Weight parse_weight(const std::string& s, int rank);

}  // namespace chev
