#pragma once

// Dense reference matrices built without the sparse engine. Used as the
// independent side of cross-checks in the unit and acceptance tests.

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qanyon/sparse_operator.hpp"

namespace oracle {

using Complex = std::complex<double>;

struct Dense {
  std::size_t n = 0;
  std::vector<Complex> a;

  explicit Dense(std::size_t dim = 0) : n(dim), a(dim * dim) {}
  Complex& operator()(std::size_t r, std::size_t c) { return a[r * n + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return a[r * n + c]; }

  static Dense identity(std::size_t dim) {
    Dense d(dim);
    for (std::size_t i = 0; i < dim; ++i) d(i, i) = 1.0;
    return d;
  }
};

inline Dense mul(const Dense& x, const Dense& y) {
  Dense out(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      const Complex v = x(i, k);
      if (v == Complex{}) continue;
      for (std::size_t j = 0; j < x.n; ++j) out(i, j) += v * y(k, j);
    }
  return out;
}

inline Dense add(const Dense& x, const Dense& y, Complex f = 1.0) {
  Dense out(x.n);
  for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.a[i] + f * y.a[i];
  return out;
}

inline Dense dagger(const Dense& x) {
  Dense out(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j) out(j, i) = std::conj(x(i, j));
  return out;
}

inline Dense kron(const Dense& x, const Dense& y) {
  Dense out(x.n * y.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j)
      for (std::size_t k = 0; k < y.n; ++k)
        for (std::size_t l = 0; l < y.n; ++l) out(i * y.n + k, j * y.n + l) = x(i, j) * y(k, l);
  return out;
}

inline double max_abs(const Dense& x) {
  double m = 0.0;
  for (const auto& v : x.a) m = std::max(m, std::abs(v));
  return m;
}

inline Dense to_dense(const qanyon::SparseOperator& s) {
  Dense d(s.dimension());
  for (const auto& t : s.triplets()) d(t.row, t.col) = t.value;
  return d;
}

inline double distance(const Dense& x, const qanyon::SparseOperator& s) { return max_abs(add(x, to_dense(s), -1.0)); }

/// Jordan-Wigner annihilator for mode m of `modes` modes, as a Kronecker chain:
/// identities on higher modes, |0><1| on mode m, Pauli Z on every lower mode.
/// Mode 0 is the least significant bit of the basis index.
inline Dense jw_annihilator(std::size_t modes, std::size_t m) {
  Dense lowering(2), z(2), id = Dense::identity(2);
  lowering(0, 1) = 1.0;
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  Dense out = Dense::identity(1);
  for (std::size_t k = modes; k-- > 0;) out = kron(out, k > m ? id : (k == m ? lowering : z));
  return out;
}

/// Diagonal matrix exp(i phase(b)) over basis indices b.
template <class PhaseFn>
Dense phase_diagonal(std::size_t dim, PhaseFn&& phase) {
  Dense d(dim);
  for (std::size_t b = 0; b < dim; ++b) d(b, b) = std::polar(1.0, phase(static_cast<std::uint64_t>(b)));
  return d;
}

/// Random sparse operator with roughly `density` filled entries.
inline qanyon::SparseOperator random_sparse(std::size_t dim, double density, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::bernoulli_distribution fill(density);
  std::vector<qanyon::Triplet> t;
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (fill(rng)) t.push_back({r, c, {u(rng), u(rng)}});
  return qanyon::SparseOperator::from_triplets(dim, std::move(t));
}

}  // namespace oracle
