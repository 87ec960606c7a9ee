#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "tamegen/polynomial.hpp"

namespace tamegen {

/// Polynomial map of 3-space given by the images of x, y, z.
struct PolyMap {
  std::array<Polynomial, 3> coords;

  static PolyMap identity() { return {{Polynomial::x(), Polynomial::y(), Polynomial::z()}}; }

  const Polynomial& operator[](Axis axis) const { return coords[index_of(axis)]; }
  Polynomial& operator[](Axis axis) { return coords[index_of(axis)]; }

  friend bool operator==(const PolyMap&, const PolyMap&) = default;
};

using Matrix3 = std::array<std::array<Rational, 3>, 3>;

inline Matrix3 identity_matrix() {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = i == j ? 1 : 0;
  return m;
}

inline Rational determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Adjugate over determinant.
inline Matrix3 inverse(const Matrix3& m) {
  Rational det = determinant(m);
  if (det == 0) throw Error("singular linear factor");
  Matrix3 out;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // Cofactor of (j, i).
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      std::size_t c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      out[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
    }
  }
  return out;
}

/// The map that adds g to one coordinate; g must not involve that coordinate.
class Elementary {
 public:
  Elementary(Axis axis, Polynomial g) : axis_(axis), g_(std::move(g)) {
    if (g_.involves(axis_)) throw Error("factor polynomial uses its own axis");
  }

  Axis axis() const { return axis_; }
  const Polynomial& g() const { return g_; }

  friend bool operator==(const Elementary&, const Elementary&) = default;

 private:
  Axis axis_;
  Polynomial g_;
};

/// Invertible linear map; row i gives the image of the i-th coordinate.
class Linear {
 public:
  explicit Linear(Matrix3 matrix) : matrix_(std::move(matrix)) {
    if (tamegen::determinant(matrix_) == 0) throw Error("singular linear factor");
  }

  const Matrix3& matrix() const { return matrix_; }
  Rational determinant() const { return tamegen::determinant(matrix_); }

  friend bool operator==(const Linear&, const Linear&) = default;

 private:
  Matrix3 matrix_;
};

using Factor = std::variant<Elementary, Linear>;

/// Factors in application order: [f1, ..., fn] denotes fn o ... o f1.
struct TameWord {
  std::vector<Factor> factors;

  bool empty() const { return factors.empty(); }
  std::size_t size() const { return factors.size(); }

  friend bool operator==(const TameWord&, const TameWord&) = default;
};

inline TameWord concat(TameWord first, const TameWord& second) {
  first.factors.insert(first.factors.end(), second.factors.begin(), second.factors.end());
  return first;
}

inline PolyMap expand_factor(const Factor& factor) {
  return std::visit(
      [](const auto& f) -> PolyMap {
        using T = std::decay_t<decltype(f)>;
        PolyMap out = PolyMap::identity();
        if constexpr (std::is_same_v<T, Elementary>) {
          out[f.axis()] += f.g();
        } else {
          for (std::size_t i = 0; i < 3; ++i) {
            Polynomial row;
            for (std::size_t j = 0; j < 3; ++j) row += Polynomial(f.matrix()[i][j]) * Polynomial::variable(kAxes[j]);
            out.coords[i] = std::move(row);
          }
        }
        return out;
      },
      factor);
}

/// outer o inner: each coordinate of outer with inner's coordinates substituted.
inline PolyMap compose_maps(const PolyMap& outer, const PolyMap& inner) {
  PolyMap out;
  for (std::size_t i = 0; i < 3; ++i)
    out.coords[i] = substitute(outer.coords[i], inner.coords[0], inner.coords[1], inner.coords[2]);
  return out;
}

/// factor o current, without expanding the factor into a full map first.
inline PolyMap apply_factor(const Factor& factor, const PolyMap& current) {
  if (const auto* e = std::get_if<Elementary>(&factor)) {
    PolyMap out = current;
    out[e->axis()] += substitute(e->g(), current.coords[0], current.coords[1], current.coords[2]);
    return out;
  }
  return compose_maps(expand_factor(factor), current);
}

inline PolyMap expand_word(const TameWord& word) {
  PolyMap current = PolyMap::identity();
  for (const auto& factor : word.factors) current = apply_factor(factor, current);
  return current;
}

inline Factor invert_factor(const Factor& factor) {
  if (const auto* e = std::get_if<Elementary>(&factor)) return Elementary(e->axis(), -e->g());
  return Linear(inverse(std::get<Linear>(factor).matrix()));
}

inline TameWord invert_word(const TameWord& word) {
  TameWord out;
  out.factors.reserve(word.size());
  for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) out.factors.push_back(invert_factor(*it));
  return out;
}

using Multidegree = std::array<std::int64_t, 3>;

inline Multidegree multidegree(const PolyMap& map) {
  Multidegree out{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (map.coords[i].is_zero()) throw Error("coordinate is the zero polynomial; no multidegree");
    out[i] = map.coords[i].total_degree().value();
  }
  return out;
}

inline Polynomial jacobian_det(const PolyMap& map) {
  std::array<std::array<Polynomial, 3>, 3> j;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) j[r][c] = partial(map.coords[r], kAxes[c]);
  return j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) - j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
         j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
}

/// Compares F and G at pseudo-random rational points drawn from `seed`.
/// A false result is definitive; a true result is only evidence.
inline bool maps_equal_probabilistic(const PolyMap& lhs, const PolyMap& rhs, unsigned trials, std::uint64_t seed) {
  if (trials == 0) throw Error("trials must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> numerator(-1000, 1000);
  std::uniform_int_distribution<long> denominator(1, 97);
  for (unsigned t = 0; t < trials; ++t) {
    Point point;
    for (auto& coordinate : point) coordinate = make_rational(numerator(rng), denominator(rng));
    for (std::size_t i = 0; i < 3; ++i)
      if (evaluate(lhs.coords[i], point) != evaluate(rhs.coords[i], point)) return false;
  }
  return true;
}

}  // namespace tamegen
