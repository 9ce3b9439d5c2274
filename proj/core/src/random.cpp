#include "histkit/random.hpp"

#include <cmath>

namespace histkit {

Complex random_complex_gaussian(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double re = gauss(rng);
  const double im = gauss(rng);
  return Complex(re, im);
}

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_complex_gaussian(rng);
  return m;
}

HermitianOperator random_hermitian(Rng& rng, std::size_t dim, double scale) {
  const ComplexMatrix g = random_matrix(rng, dim, dim);
  return HermitianOperator(Complex(0.5 * scale) * (g + g.adjoint()));
}

ComplexMatrix random_unitary(Rng& rng, std::size_t dim) {
  // Modified Gram-Schmidt on Gaussian columns; re-draws a column in the
  // (measure-zero) event it degenerates.
  ComplexMatrix u(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    while (true) {
      std::vector<Complex> col(dim);
      for (auto& z : col) z = random_complex_gaussian(rng);
      for (std::size_t j = 0; j < k; ++j) {
        Complex proj = 0.0;
        for (std::size_t i = 0; i < dim; ++i) proj += std::conj(u(i, j)) * col[i];
        for (std::size_t i = 0; i < dim; ++i) col[i] -= proj * u(i, j);
      }
      const double n = norm2(col);
      if (n > 1e-8) {
        for (std::size_t i = 0; i < dim; ++i) u(i, k) = col[i] / n;
        break;
      }
    }
  }
  return u;
}

State random_pure_state(Rng& rng, std::size_t dim) {
  std::vector<Complex> psi(dim);
  for (auto& z : psi) z = random_complex_gaussian(rng);
  const double n = norm2(psi);
  for (auto& z : psi) z /= n;
  return State::pure(std::move(psi));
}

State random_density_state(Rng& rng, std::size_t dim) {
  const ComplexMatrix g = random_matrix(rng, dim, dim);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return State::density(rho);
}

Projection random_projection(Rng& rng, std::size_t dim, std::size_t rank) {
  if (rank > dim) throw PreconditionFailure("random_projection: rank exceeds dimension");
  const ComplexMatrix u = random_unitary(rng, dim);
  ComplexMatrix p(dim, dim);
  for (std::size_t k = 0; k < rank; ++k)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) p(i, j) += u(i, k) * std::conj(u(j, k));
  return Projection(std::move(p));
}

std::array<double, 3> random_axis(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  while (true) {
    std::array<double, 3> v{gauss(rng), gauss(rng), gauss(rng)};
    const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    if (n > 1e-6) {
      for (auto& x : v) x /= n;
      return v;
    }
  }
}

std::vector<ComplexMatrix> random_kraus_channel(Rng& rng, std::size_t dim, std::size_t n_ops) {
  if (n_ops == 0) throw PreconditionFailure("random_kraus_channel: need at least one operator");
  // Draw raw blocks, then normalize by S^{-1/2} where S = sum G†G, so the
  // operator-sum is exactly trace-preserving.
  std::vector<ComplexMatrix> raw;
  raw.reserve(n_ops);
  ComplexMatrix s(dim, dim);
  for (std::size_t k = 0; k < n_ops; ++k) {
    raw.push_back(random_matrix(rng, dim, dim));
    s += raw.back().adjoint() * raw.back();
  }
  const EigenSystem es = jacobi_eigensystem(s);
  ComplexMatrix inv_sqrt(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const double w = 1.0 / std::sqrt(es.values[k]);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        inv_sqrt(i, j) += Complex(w) * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(n_ops);
  for (const auto& g : raw) kraus.push_back(g * inv_sqrt);
  return kraus;
}

}  // namespace histkit
