// coalition.hpp
// Coalitions as 64-bit player masks (player indices 0..n-1, bit i = player i).

#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tlab {

class Coalition {
public:
  constexpr Coalition() : bits_(0) {}
  constexpr explicit Coalition(uint64_t bits) : bits_(bits) {}

  static Coalition of(std::initializer_list<int> players) {
    uint64_t b = 0;
    for (int p : players) b |= (uint64_t{1} << p);
    return Coalition(b);
  }
  static Coalition full(int n) {
    return Coalition(n == 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1));
  }

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(int player) const { return (bits_ >> player) & 1u; }
  constexpr bool subset_of(const Coalition& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  Coalition with(int player) const { return Coalition(bits_ | (uint64_t{1} << player)); }
  Coalition without(int player) const { return Coalition(bits_ & ~(uint64_t{1} << player)); }
  Coalition unite(const Coalition& o) const { return Coalition(bits_ | o.bits_); }
  Coalition minus(const Coalition& o) const { return Coalition(bits_ & ~o.bits_); }
  Coalition intersect(const Coalition& o) const { return Coalition(bits_ & o.bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    uint64_t b = bits_;
    while (b) {
      out.push_back(std::countr_zero(b));
      b &= b - 1;
    }
    return out;
  }

  friend bool operator==(const Coalition& a, const Coalition& b) { return a.bits_ == b.bits_; }
  friend bool operator!=(const Coalition& a, const Coalition& b) { return a.bits_ != b.bits_; }
  friend bool operator<(const Coalition& a, const Coalition& b) { return a.bits_ < b.bits_; }

private:
  uint64_t bits_;
};

} // namespace tlab
