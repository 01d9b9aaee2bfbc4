#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>

namespace schubert_ed {

/// Hard cap on the rank handled by the Weyl-group machinery. All nine
/// simple types treated here have rank <= 8 (E8); larger type-A ranks are
/// served by closed forms only.
inline constexpr int kMaxRank = 8;

/// Root coordinates in the simple-root basis. Entries beyond the rank are
/// kept at zero so that comparisons work on the raw bytes.
using RootVec = std::array<int8_t, kMaxRank>;

/// Dense rank x rank integer matrix with a fixed 8x8 footprint.
/// Entry (i, j) is the coefficient of alpha_i in the image of alpha_j.
/// Coefficients of roots never exceed 6 in absolute value (the E8 highest
/// root), so int8 storage is exact; products are accumulated in int.
struct Mat8 {
  alignas(8) std::array<int8_t, kMaxRank * kMaxRank> a{};

  int8_t& operator()(int i, int j) { return a[i * kMaxRank + j]; }
  int8_t operator()(int i, int j) const { return a[i * kMaxRank + j]; }

  bool operator==(const Mat8& o) const {
    return std::memcmp(a.data(), o.a.data(), a.size()) == 0;
  }
  bool operator<(const Mat8& o) const {
    return std::memcmp(a.data(), o.a.data(), a.size()) < 0;
  }

  static Mat8 identity(int rank) {
    Mat8 m;
    for (int i = 0; i < rank; ++i) m(i, i) = 1;
    return m;
  }
};

inline Mat8 multiply(const Mat8& lhs, const Mat8& rhs, int rank) {
  Mat8 out;
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      int s = 0;
      for (int k = 0; k < rank; ++k) s += int(lhs(i, k)) * int(rhs(k, j));
      out(i, j) = static_cast<int8_t>(s);
    }
  }
  return out;
}

/// Image of a root vector under the matrix.
inline RootVec apply(const Mat8& m, const RootVec& v, int rank) {
  RootVec out{};
  for (int i = 0; i < rank; ++i) {
    int s = 0;
    for (int k = 0; k < rank; ++k) s += int(m(i, k)) * int(v[k]);
    out[i] = static_cast<int8_t>(s);
  }
  return out;
}

/// Roots have uniformly signed coordinates; the first nonzero entry decides.
inline int root_sign(const RootVec& v, int rank) {
  for (int i = 0; i < rank; ++i) {
    if (v[i] > 0) return 1;
    if (v[i] < 0) return -1;
  }
  return 0;
}

struct Mat8Hash {
  size_t operator()(const Mat8& m) const {
    uint64_t h = 1469598103934665603ull;  // FNV-1a over eight 64-bit words
    const unsigned char* p = reinterpret_cast<const unsigned char*>(m.a.data());
    for (int w = 0; w < 8; ++w) {
      uint64_t x;
      std::memcpy(&x, p + 8 * w, 8);
      h = (h ^ x) * 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace schubert_ed
