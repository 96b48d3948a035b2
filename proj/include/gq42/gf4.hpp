#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace gq42 {

/// An element of GF(4) = GF(2)[w]/(w^2 + w + 1), stored as a 2-bit tag:
/// 0, 1, 2 = w, 3 = w^2 = w + 1. Addition is XOR (characteristic 2);
/// multiplication goes through a precomputed table.
struct Gf4 {
  std::uint8_t v{0};

  constexpr Gf4() = default;
  constexpr explicit Gf4(int x) : v(static_cast<std::uint8_t>(x)) {}

  static constexpr Gf4 zero() { return Gf4(0); }
  static constexpr Gf4 one() { return Gf4(1); }
  static constexpr Gf4 omega() { return Gf4(2); }
  static constexpr Gf4 omega2() { return Gf4(3); }

  constexpr bool is_zero() const { return v == 0; }

  friend constexpr bool operator==(Gf4 a, Gf4 b) { return a.v == b.v; }
  friend constexpr bool operator!=(Gf4 a, Gf4 b) { return a.v != b.v; }
  friend constexpr bool operator<(Gf4 a, Gf4 b) { return a.v < b.v; }
};

namespace detail {
inline constexpr std::uint8_t kMul[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};
inline constexpr std::uint8_t kInv[4] = {0, 1, 3, 2};  // kInv[0] unused
}  // namespace detail

constexpr Gf4 operator+(Gf4 a, Gf4 b) { return Gf4(a.v ^ b.v); }
constexpr Gf4 operator*(Gf4 a, Gf4 b) { return Gf4(detail::kMul[a.v][b.v]); }

/// The Frobenius involution x -> x^2; fixes the subfield GF(2).
constexpr Gf4 conj(Gf4 a) { return a * a; }

constexpr Gf4 inverse(Gf4 a) {
  return Gf4(detail::kInv[a.v]);  // inverse(0) is undefined, returns 0
}

/// A length-4 coordinate vector over GF(4).
using Vec4 = std::array<Gf4, 4>;

constexpr Vec4 add(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

constexpr Vec4 scale(Gf4 c, const Vec4& a) {
  return {c * a[0], c * a[1], c * a[2], c * a[3]};
}

constexpr bool is_zero(const Vec4& a) {
  return a[0].is_zero() && a[1].is_zero() && a[2].is_zero() && a[3].is_zero();
}

/// Packs the four 2-bit tags into one byte (coordinate 0 in the low bits).
constexpr std::uint8_t pack(const Vec4& a) {
  return static_cast<std::uint8_t>(a[0].v | (a[1].v << 2) | (a[2].v << 4) |
                                   (a[3].v << 6));
}

constexpr Vec4 unpack(std::uint8_t p) {
  return {Gf4(p & 3), Gf4((p >> 2) & 3), Gf4((p >> 4) & 3), Gf4((p >> 6) & 3)};
}

/// Canonical projective representative: scales so that the first nonzero
/// coordinate becomes 1. Scalar multiples map to the same output.
inline Vec4 normalize(const Vec4& a) {
  for (int i = 0; i < 4; ++i) {
    if (!a[i].is_zero()) return scale(inverse(a[i]), a);
  }
  throw std::invalid_argument("normalize: zero vector has no projective point");
}

/// Rank of the span of the given vectors (Gaussian elimination).
inline int rank_of(std::span<const Vec4> vecs) {
  std::array<Vec4, 16> rows{};
  int n = 0;
  for (const auto& v : vecs) {
    if (n < 16) rows[n++] = v;
  }
  int rank = 0;
  for (int col = 0; col < 4 && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (!rows[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Vec4 p = scale(inverse(rows[rank][col]), rows[rank]);
    rows[rank] = p;
    for (int r = 0; r < n; ++r) {
      if (r != rank && !rows[r][col].is_zero()) {
        rows[r] = add(rows[r], scale(rows[r][col], p));
      }
    }
    ++rank;
  }
  return rank;
}

/// Solves sum_i coeff[i] * basis[i] = rhs for a 4x4 invertible basis.
/// Returns false when the basis is singular.
inline bool solve_in_basis(const std::array<Vec4, 4>& basis, const Vec4& rhs,
                           Vec4& coeff) {
  // Augmented matrix rows: (basis column j of vector i) | rhs.
  std::array<std::array<Gf4, 5>, 4> m{};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m[r][c] = basis[c][r];
    m[r][4] = rhs[r];
  }
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r) {
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(m[col], m[pivot]);
    Gf4 f = inverse(m[col][col]);
    for (int c = col; c < 5; ++c) m[col][c] = f * m[col][c];
    for (int r = 0; r < 4; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Gf4 g = m[r][col];
      for (int c = col; c < 5; ++c) m[r][c] = m[r][c] + g * m[col][c];
    }
  }
  for (int i = 0; i < 4; ++i) coeff[i] = m[i][4];
  return true;
}

/// One-dimensional null space of up to three independent row vectors:
/// a nonzero d with d . v = 0 for every row v. Throws when the rows do not
/// have rank 3.
inline Vec4 nullspace_of_rank3(std::span<const Vec4> rows) {
  std::array<Vec4, 16> m{};
  int n = 0;
  for (const auto& v : rows) {
    if (n < 16) m[n++] = v;
  }
  std::array<int, 4> pivot_col{-1, -1, -1, -1};
  int rank = 0;
  for (int col = 0; col < 4 && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    m[rank] = scale(inverse(m[rank][col]), m[rank]);
    for (int r = 0; r < n; ++r) {
      if (r != rank && !m[r][col].is_zero()) {
        m[r] = add(m[r], scale(m[r][col], m[rank]));
      }
    }
    pivot_col[rank] = col;
    ++rank;
  }
  if (rank != 3) throw std::invalid_argument("nullspace_of_rank3: rank != 3");
  int free_col = 0;
  for (int col = 0; col < 4; ++col) {
    bool is_pivot = false;
    for (int r = 0; r < 3; ++r) is_pivot |= (pivot_col[r] == col);
    if (!is_pivot) {
      free_col = col;
      break;
    }
  }
  Vec4 d{};
  d[free_col] = Gf4::one();
  for (int r = 0; r < 3; ++r) d[pivot_col[r]] = m[r][free_col];
  return d;
}

}  // namespace gq42
