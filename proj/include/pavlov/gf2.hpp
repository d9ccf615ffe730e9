#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pavlov/dynamics.hpp"
#include "pavlov/graph.hpp"

namespace pavlov {

using BigInt = boost::multiprecision::cpp_int;

/// Square matrix over GF(2) with bit-packed rows.
///
/// Configurations act as row vectors: `apply(M, x)` is x·M. Since every
/// single-edge update matrix is symmetric this agrees with the column form
/// for one step, and it makes the product of a schedule read in schedule
/// order (earliest edge leftmost).
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  explicit Gf2Matrix(std::size_t n) : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

  static Gf2Matrix identity(std::size_t n);

  std::size_t order() const { return n_; }
  bool get(std::size_t i, std::size_t j) const { return (row(i)[j >> 6] >> (j & 63)) & 1U; }
  void set(std::size_t i, std::size_t j, bool b);
  void flip(std::size_t i, std::size_t j) { row(i)[j >> 6] ^= std::uint64_t{1} << (j & 63); }
  bool is_zero() const;

  Gf2Matrix transpose() const;
  friend Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b);
  friend Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b);
  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

  /// Rows of '0'/'1', newline separated.
  std::string to_string() const;

 private:
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * stride_; }
  const std::uint64_t* row(std::size_t i) const { return bits_.data() + i * stride_; }

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// x·M over GF(2).
Configuration apply(const Gf2Matrix& m, const Configuration& x);

/// Square integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), cells_(n * n) {}

  static IntMatrix identity(std::size_t n);

  std::size_t order() const { return n_; }
  const BigInt& at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
  BigInt& at(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }

  Gf2Matrix mod2() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Rows of space-separated decimals.
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> cells_;
};

/// Single 1 at (i, j).
Gf2Matrix delta(std::size_t i, std::size_t j, std::size_t n);
IntMatrix delta_int(std::size_t i, std::size_t j, std::size_t n);

/// I + Delta(i,j) + Delta(j,i).
Gf2Matrix update_matrix(Edge e, std::size_t n);

/// Product of the update matrices of `order`, earliest edge leftmost, so
/// that apply(schedule_matrix(g, s), x) runs s from x.
Gf2Matrix schedule_matrix(const Graph& g, std::span<const EdgeId> order);

/// M^n == 0, via repeated squaring.
bool is_nilpotent(const Gf2Matrix& m);

/// A labeling assigns 1..m to the edges (labeling[e] is the label of edge
/// e); the matching order lists the edges by increasing label.
std::vector<EdgeId> order_from_labeling(std::span<const std::uint32_t> labeling);
std::vector<std::uint32_t> labeling_from_order(std::span<const EdgeId> order);

/// c(i,j) = number of walks from i to j in the doubled digraph whose edge
/// labels strictly increase. Counted by explicit enumeration.
IntMatrix path_count_matrix(const Graph& g, std::span<const std::uint32_t> labeling);

/// Integer product of (I + P(e)) over the edges in label order.
IntMatrix integer_schedule_matrix(const Graph& g, std::span<const std::uint32_t> labeling);

BigInt determinant(const IntMatrix& m);
/// Sum of all p x p principal minors, exactly.
BigInt principal_minor_sum(const IntMatrix& m, std::size_t p);
int principal_minor_parity(const IntMatrix& m, std::size_t p);

/// B^k where B is the all-ones lower triangle, by repeated multiplication.
IntMatrix lower_triangular_power(std::size_t n, std::size_t k);

BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace pavlov
