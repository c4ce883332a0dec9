#pragma once

// Dense linear algebra over the prime field Z_p with byte-sized entries.
// Internal helper shared by the stabilizer and oracle translation units.

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qweight::detail {

using Row = std::vector<std::uint8_t>;
using Mat = std::vector<Row>;

inline int inv_mod(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::domain_error("division by zero mod p");
  int r = 1;
  for (int e = p - 2; e > 0; e >>= 1) {  // Fermat inverse, p prime
    if (e & 1) r = r * a % p;
    a = a * a % p;
  }
  return r;
}

// In-place reduced row echelon form. Returns the pivot column of each of the
// first `rank` rows; rows below are zero.
inline std::vector<int> rref(Mat& m, int p) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    const int inv = inv_mod(m[r][c], p);
    for (int j = c; j < cols; ++j) m[r][j] = static_cast<std::uint8_t>(m[r][j] * inv % p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const int f = m[i][c];
      for (int j = c; j < cols; ++j)
        m[i][j] = static_cast<std::uint8_t>(((m[i][j] - f * m[r][j]) % p + p) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(Mat m, int p) { return static_cast<int>(rref(m, p).size()); }

// Basis of { v : m v = 0 } via free-column back substitution on the rref.
inline Mat nullspace(Mat m, int p) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  const std::vector<int> pivots = rref(m, p);
  std::vector<int> pivot_of_col(cols, -1);
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i) pivot_of_col[pivots[i]] = i;
  Mat basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    Row v(cols, 0);
    v[c] = 1;
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
      v[pivots[i]] = static_cast<std::uint8_t>((p - m[i][c] % p) % p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Reduce v against rref rows with the given pivot columns; v becomes the
// canonical coset representative (zero iff v was in the row span).
inline void reduce_against(Row& v, const Mat& m, const std::vector<int>& pivots, int p) {
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i) {
    const int c = pivots[i];
    if (v[c] == 0) continue;
    const int f = v[c];
    for (int j = 0; j < static_cast<int>(v.size()); ++j)
      v[j] = static_cast<std::uint8_t>(((v[j] - f * m[i][j]) % p + p) % p);
  }
}

inline bool is_zero(const Row& v) {
  for (auto e : v)
    if (e != 0) return false;
  return true;
}

}  // namespace qweight::detail
