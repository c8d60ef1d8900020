#pragma once

#include <cstdint>
#include <vector>

namespace intorder {

/// Square boolean matrix with 64-bit packed rows; used for order relations
/// and reachability. Row operations are whole-word, which keeps the
/// Warshall-style closures cheap at the sizes this library targets.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

  int size() const { return n_; }
  int words_per_row() const { return words_; }

  bool test(int r, int c) const {
    return (bits_[static_cast<std::size_t>(r) * words_ + c / 64] >>
            (c % 64)) & 1u;
  }

  void set(int r, int c, bool value = true) {
    std::uint64_t& w = bits_[static_cast<std::size_t>(r) * words_ + c / 64];
    std::uint64_t mask = std::uint64_t(1) << (c % 64);
    if (value)
      w |= mask;
    else
      w &= ~mask;
  }

  const std::uint64_t* row(int r) const {
    return bits_.data() + static_cast<std::size_t>(r) * words_;
  }
  std::uint64_t* row(int r) {
    return bits_.data() + static_cast<std::size_t>(r) * words_;
  }

  void or_row_into(int src, int dst) {
    const std::uint64_t* s = row(src);
    std::uint64_t* d = row(dst);
    for (int w = 0; w < words_; ++w) d[w] |= s[w];
  }

  /// True when row `sub` is a subset of row `sup`.
  bool row_subset(int sub, int sup) const {
    const std::uint64_t* a = row(sub);
    const std::uint64_t* b = row(sup);
    for (int w = 0; w < words_; ++w)
      if (a[w] & ~b[w]) return false;
    return true;
  }

  bool rows_equal(int a, int b) const {
    const std::uint64_t* ra = row(a);
    const std::uint64_t* rb = row(b);
    for (int w = 0; w < words_; ++w)
      if (ra[w] != rb[w]) return false;
    return true;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace intorder
