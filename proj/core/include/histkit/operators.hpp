#pragma once

#include <vector>

#include "histkit/eig.hpp"
#include "histkit/matrix.hpp"

namespace histkit {

namespace tol {
inline constexpr double kHermiticity = 1e-12;
inline constexpr double kProjection = 1e-10;
inline constexpr double kStateNorm = 1e-12;
inline constexpr double kStatePositivity = 1e-10;
inline constexpr double kCluster = 1e-9;
inline constexpr double kUnitarity = 1e-10;
}  // namespace tol

/// Selfadjoint operator. Construction requires ||A - A†||_max <= 1e-12 and
/// stores the symmetrized (A + A†)/2.
class HermitianOperator {
public:
  explicit HermitianOperator(const ComplexMatrix& a);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

private:
  ComplexMatrix matrix_;
};

/// Orthogonal projection: Hermitian and idempotent within 1e-10 in operator
/// norm.
class Projection {
public:
  explicit Projection(ComplexMatrix p);

  static Projection identity(std::size_t dim);
  static Projection zero(std::size_t dim);
  /// Rank-one projection |v><v| onto a unit vector.
  static Projection onto_unit_vector(const std::vector<Complex>& v);

  Projection complement() const;

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

private:
  ComplexMatrix matrix_;
};

/// State of a finite-dimensional system: a unit vector or a density matrix.
class State {
public:
  enum class Kind { PureVector, DensityMatrix };

  static State pure(std::vector<Complex> psi);
  static State density(const ComplexMatrix& rho);

  Kind kind() const noexcept { return kind_; }
  bool is_pure() const noexcept { return kind_ == Kind::PureVector; }
  std::size_t dim() const noexcept;

  const std::vector<Complex>& vector() const;
  /// Density matrix; materializes |psi><psi| for pure states.
  ComplexMatrix density_matrix() const;

  /// omega(a) = <psi|a|psi> or tr(rho a).
  Complex expectation(const ComplexMatrix& a) const;

private:
  State() = default;
  Kind kind_ = Kind::PureVector;
  std::vector<Complex> psi_;
  ComplexMatrix rho_;
};

/// Spectral resolution of a Hermitian operator. Near-degenerate eigenvalues
/// (within the clustering tolerance) are merged into a single eigenprojection.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // one per cluster, ascending
  std::vector<Projection> eigenprojections;
};

struct EigOptions {
  std::size_t dim_cap = 64;
  double tol_cluster = tol::kCluster;
  int max_sweeps = 100;
};

SpectralDecomposition eig_hermitian(const HermitianOperator& a, const EigOptions& opts = {});

/// Spectral projection P_a([lo,hi]): sum of eigenprojections with eigenvalue
/// in the closed interval. The zero projection if the interval misses the
/// spectrum.
Projection spectral_projection(const HermitianOperator& a, double lo, double hi,
                               const EigOptions& opts = {});

/// Bipartite partial trace. `keep` selects the factor (1 or 2) kept.
ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t d1, std::size_t d2, int keep);

struct UncertaintyResult {
  double lhs = 0.0;  // omega(a^2) * omega(b^2)
  double rhs = 0.0;  // |omega([a,b])|^2 / 4
  bool holds = false;
};

/// omega(a^2) omega(b^2) >= |omega([a,b])|^2 / 4.
UncertaintyResult uncertainty_check(const State& state, const HermitianOperator& a,
                                    const HermitianOperator& b);

/// U† P U: builds the time-t event from a propagator U.
Projection heisenberg_evolve(const Projection& p, const ComplexMatrix& u);
ComplexMatrix heisenberg_evolve(const ComplexMatrix& a, const ComplexMatrix& u);

}  // namespace histkit
