#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "histkit/matrix.hpp"
#include "histkit/operators.hpp"

namespace histkit {

/// Single deterministic generator; every sampler below draws from it in a
/// fixed order, so a seed pins down an entire run.
using Rng = std::mt19937_64;

Complex random_complex_gaussian(Rng& rng);

/// Entries iid standard complex Gaussian.
ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);

HermitianOperator random_hermitian(Rng& rng, std::size_t dim, double scale = 1.0);

/// Haar-ish unitary via Gram-Schmidt on a Gaussian matrix.
ComplexMatrix random_unitary(Rng& rng, std::size_t dim);

State random_pure_state(Rng& rng, std::size_t dim);
State random_density_state(Rng& rng, std::size_t dim);

/// Rank-r projection spanned by the first r columns of a random unitary.
Projection random_projection(Rng& rng, std::size_t dim, std::size_t rank);

/// Uniform direction on the unit sphere.
std::array<double, 3> random_axis(Rng& rng);

/// Trace-preserving operator-sum channel with n_ops Kraus operators.
std::vector<ComplexMatrix> random_kraus_channel(Rng& rng, std::size_t dim, std::size_t n_ops);

}  // namespace histkit
