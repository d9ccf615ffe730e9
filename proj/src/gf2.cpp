#include "pavlov/gf2.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace pavlov {

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void Gf2Matrix::set(std::size_t i, std::size_t j, bool b) {
  const std::uint64_t mask = std::uint64_t{1} << (j & 63);
  auto& w = row(i)[j >> 6];
  w = b ? (w | mask) : (w & ~mask);
}

bool Gf2Matrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

Gf2Matrix operator*(const Gf2Matrix& a, const Gf2Matrix& b) {
  require(a.n_ == b.n_, "matrix orders differ");
  Gf2Matrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    std::uint64_t* out = c.row(i);
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (!a.get(i, k)) continue;
      const std::uint64_t* src = b.row(k);
      for (std::size_t w = 0; w < a.stride_; ++w) out[w] ^= src[w];
    }
  }
  return c;
}

Gf2Matrix operator+(const Gf2Matrix& a, const Gf2Matrix& b) {
  require(a.n_ == b.n_, "matrix orders differ");
  Gf2Matrix c = a;
  for (std::size_t i = 0; i < c.bits_.size(); ++i) c.bits_[i] ^= b.bits_[i];
  return c;
}

std::string Gf2Matrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) s.push_back(get(i, j) ? '1' : '0');
    s.push_back('\n');
  }
  return s;
}

Configuration apply(const Gf2Matrix& m, const Configuration& x) {
  require(m.order() == x.size(), "matrix order does not match configuration length");
  Configuration y(x.size());
  for (std::size_t i = 0; i < m.order(); ++i) {
    if (!x.get(static_cast<Vertex>(i))) continue;
    for (std::size_t j = 0; j < m.order(); ++j)
      if (m.get(i, j)) y.set(static_cast<Vertex>(j), !y.get(static_cast<Vertex>(j)));
  }
  return y;
}

// ---------------------------------------------------------------------------

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Gf2Matrix IntMatrix::mod2() const {
  Gf2Matrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (boost::multiprecision::bit_test(abs(at(i, j)), 0)) m.set(i, j, true);
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  require(a.n_ == b.n_, "matrix orders differ");
  IntMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const BigInt& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  require(a.n_ == b.n_, "matrix orders differ");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.cells_.size(); ++i) c.cells_[i] += b.cells_[i];
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out << (j ? " " : "") << at(i, j);
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

Gf2Matrix delta(std::size_t i, std::size_t j, std::size_t n) {
  require(i < n && j < n, "delta: index out of range");
  Gf2Matrix m(n);
  m.set(i, j, true);
  return m;
}

IntMatrix delta_int(std::size_t i, std::size_t j, std::size_t n) {
  require(i < n && j < n, "delta: index out of range");
  IntMatrix m(n);
  m.at(i, j) = 1;
  return m;
}

Gf2Matrix update_matrix(Edge e, std::size_t n) {
  require(e.u != e.v, "update_matrix: i must differ from j");
  require(e.u < n && e.v < n, "update_matrix: index out of range");
  Gf2Matrix m = Gf2Matrix::identity(n);
  m.set(e.u, e.v, true);
  m.set(e.v, e.u, true);
  return m;
}

Gf2Matrix schedule_matrix(const Graph& g, std::span<const EdgeId> order) {
  const std::size_t n = g.vertex_count();
  Gf2Matrix m = Gf2Matrix::identity(n);
  for (EdgeId e : order) {
    require(e < g.edge_count(), "schedule_matrix: edge index out of range");
    // right-multiplying by A(u,v) xors columns u and v into each other
    const Vertex u = g.edge(e).u, v = g.edge(e).v;
    for (std::size_t i = 0; i < n; ++i) {
      const bool b = m.get(i, u) != m.get(i, v);
      m.set(i, u, b);
      m.set(i, v, b);
    }
  }
  return m;
}

bool is_nilpotent(const Gf2Matrix& m) {
  if (m.order() == 0) return true;
  Gf2Matrix p = m;
  for (std::size_t e = 1; e < m.order(); e *= 2) p = p * p;
  return p.is_zero();
}

std::vector<EdgeId> order_from_labeling(std::span<const std::uint32_t> labeling) {
  const std::size_t m = labeling.size();
  std::vector<EdgeId> order(m, ~EdgeId{0});
  for (EdgeId e = 0; e < m; ++e) {
    const auto l = labeling[e];
    if (l < 1 || l > m || order[l - 1] != ~EdgeId{0})
      fail(ErrorCode::kInvalidArgument, "labeling is not a bijection onto 1..m");
    order[l - 1] = e;
  }
  return order;
}

std::vector<std::uint32_t> labeling_from_order(std::span<const EdgeId> order) {
  std::vector<std::uint32_t> labeling(order.size(), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= order.size() || labeling[order[k]] != 0)
      fail(ErrorCode::kInvalidArgument, "order is not a permutation of the edges");
    labeling[order[k]] = static_cast<std::uint32_t>(k + 1);
  }
  return labeling;
}

IntMatrix path_count_matrix(const Graph& g, std::span<const std::uint32_t> labeling) {
  require(labeling.size() == g.edge_count(), "labeling must cover every edge");
  (void)order_from_labeling(labeling);  // validates bijectivity
  const std::size_t n = g.vertex_count();
  IntMatrix c(n);
  std::function<void(Vertex, Vertex, std::uint32_t)> walk = [&](Vertex start, Vertex at, std::uint32_t last) {
    const auto nb = g.neighbors(at);
    const auto ids = g.incident_edges(at);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const std::uint32_t l = labeling[ids[i]];
      if (l <= last) continue;
      c.at(start, nb[i]) += 1;
      walk(start, nb[i], l);
    }
  };
  for (Vertex s = 0; s < n; ++s) walk(s, s, 0);
  return c;
}

IntMatrix integer_schedule_matrix(const Graph& g, std::span<const std::uint32_t> labeling) {
  require(labeling.size() == g.edge_count(), "labeling must cover every edge");
  const auto order = order_from_labeling(labeling);
  const std::size_t n = g.vertex_count();
  IntMatrix m = IntMatrix::identity(n);
  for (EdgeId e : order) {
    IntMatrix factor = IntMatrix::identity(n);
    factor.at(g.edge(e).u, g.edge(e).v) = 1;
    factor.at(g.edge(e).v, g.edge(e).u) = 1;
    m = m * factor;
  }
  return m;
}

BigInt determinant(const IntMatrix& m) {
  const std::size_t n = m.order();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  // Bareiss fraction-free elimination
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

BigInt principal_minor_sum(const IntMatrix& m, std::size_t p) {
  const std::size_t n = m.order();
  require(p >= 1 && p <= n, "principal minor order out of range");
  BigInt total = 0;
  std::vector<std::size_t> idx(p);
  for (std::size_t i = 0; i < p; ++i) idx[i] = i;
  while (true) {
    IntMatrix sub(p);
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t c = 0; c < p; ++c) sub.at(r, c) = m.at(idx[r], idx[c]);
    total += determinant(sub);
    std::size_t i = p;
    while (i > 0 && idx[i - 1] == n - p + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

int principal_minor_parity(const IntMatrix& m, std::size_t p) {
  return boost::multiprecision::bit_test(abs(principal_minor_sum(m, p)), 0) ? 1 : 0;
}

IntMatrix lower_triangular_power(std::size_t n, std::size_t k) {
  require(n >= 1 && k >= 1, "lower_triangular_power needs n, k >= 1");
  IntMatrix b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) b.at(i, j) = 1;
  IntMatrix p = b;
  for (std::size_t e = 1; e < k; ++e) p = p * b;
  return p;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace pavlov
