#include "histkit/operators.hpp"

#include <cmath>
#include <string>

namespace histkit {

namespace {

// Cheap-first norm test: the Frobenius norm dominates the operator norm, so a
// pass there settles it without an eigensolve.
bool op_norm_within(const ComplexMatrix& a, double tol) {
  if (a.frobenius_norm() <= tol) return true;
  return op_norm(a) <= tol;
}

}  // namespace

HermitianOperator::HermitianOperator(const ComplexMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("HermitianOperator: matrix not square");
  const ComplexMatrix adj = a.adjoint();
  const double asym = (a - adj).max_abs();
  if (asym > tol::kHermiticity) {
    throw InvariantViolation("HermitianOperator: ||A - A†||_max = " + std::to_string(asym) +
                             " exceeds 1e-12");
  }
  matrix_ = Complex(0.5) * (a + adj);
}

Projection::Projection(ComplexMatrix p) : matrix_(std::move(p)) {
  if (!matrix_.is_square()) throw DimensionMismatch("Projection: matrix not square");
  if (!op_norm_within(matrix_ - matrix_.adjoint(), tol::kProjection)) {
    throw InvariantViolation("Projection: not Hermitian within 1e-10");
  }
  if (!op_norm_within(matrix_ * matrix_ - matrix_, tol::kProjection)) {
    throw InvariantViolation("Projection: not idempotent within 1e-10");
  }
}

Projection Projection::identity(std::size_t dim) {
  return Projection(ComplexMatrix::identity(dim));
}

Projection Projection::zero(std::size_t dim) { return Projection(ComplexMatrix::zero(dim, dim)); }

Projection Projection::onto_unit_vector(const std::vector<Complex>& v) {
  const double n = norm2(v);
  if (std::abs(n - 1.0) > tol::kStateNorm) {
    throw InvariantViolation("Projection::onto_unit_vector: vector norm " + std::to_string(n));
  }
  ComplexMatrix p(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) p(i, j) = v[i] * std::conj(v[j]);
  return Projection(std::move(p));
}

Projection Projection::complement() const {
  return Projection(ComplexMatrix::identity(dim()) - matrix_);
}

State State::pure(std::vector<Complex> psi) {
  const double n = norm2(psi);
  if (std::abs(n - 1.0) > tol::kStateNorm) {
    throw InvariantViolation("State::pure: ||psi|| = " + std::to_string(n) +
                             " not 1 within 1e-12");
  }
  State s;
  s.kind_ = Kind::PureVector;
  s.psi_ = std::move(psi);
  return s;
}

State State::density(const ComplexMatrix& rho) {
  if (!rho.is_square()) throw DimensionMismatch("State::density: matrix not square");
  if ((rho - rho.adjoint()).max_abs() > tol::kStateNorm) {
    throw InvariantViolation("State::density: rho not Hermitian within 1e-12");
  }
  const double tr = rho.trace().real();
  if (std::abs(tr - 1.0) > tol::kStateNorm) {
    throw InvariantViolation("State::density: trace " + std::to_string(tr) +
                             " not 1 within 1e-12");
  }
  const EigenSystem es = jacobi_eigensystem(rho);
  if (!es.values.empty() && es.values.front() < -tol::kStatePositivity) {
    throw InvariantViolation("State::density: eigenvalue " + std::to_string(es.values.front()) +
                             " below -1e-10");
  }
  State s;
  s.kind_ = Kind::DensityMatrix;
  s.rho_ = Complex(0.5) * (rho + rho.adjoint());
  return s;
}

std::size_t State::dim() const noexcept {
  return kind_ == Kind::PureVector ? psi_.size() : rho_.rows();
}

const std::vector<Complex>& State::vector() const {
  if (kind_ != Kind::PureVector) throw PreconditionFailure("State::vector: not a pure state");
  return psi_;
}

ComplexMatrix State::density_matrix() const {
  if (kind_ == Kind::DensityMatrix) return rho_;
  ComplexMatrix rho(psi_.size(), psi_.size());
  for (std::size_t i = 0; i < psi_.size(); ++i)
    for (std::size_t j = 0; j < psi_.size(); ++j) rho(i, j) = psi_[i] * std::conj(psi_[j]);
  return rho;
}

Complex State::expectation(const ComplexMatrix& a) const {
  if (a.rows() != dim() || a.cols() != dim()) {
    throw DimensionMismatch("State::expectation: operator dim " + std::to_string(a.rows()) +
                            " vs state dim " + std::to_string(dim()));
  }
  if (kind_ == Kind::PureVector) {
    return inner_product(psi_, a * psi_);
  }
  return (rho_ * a).trace();
}

SpectralDecomposition eig_hermitian(const HermitianOperator& a, const EigOptions& opts) {
  const std::size_t n = a.dim();
  if (n > opts.dim_cap) {
    throw PreconditionFailure("eig_hermitian: dimension " + std::to_string(n) +
                              " exceeds cap " + std::to_string(opts.dim_cap));
  }
  JacobiOptions jopts;
  jopts.max_sweeps = opts.max_sweeps;
  const EigenSystem es = jacobi_eigensystem(a.matrix(), jopts);

  SpectralDecomposition out;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && es.values[end] - es.values[end - 1] <= opts.tol_cluster) ++end;

    double mean = 0.0;
    ComplexMatrix proj(n, n);
    for (std::size_t k = start; k < end; ++k) {
      mean += es.values[k];
      for (std::size_t i = 0; i < n; ++i) {
        const Complex vik = es.vectors(i, k);
        if (vik == Complex(0.0, 0.0)) continue;
        for (std::size_t j = 0; j < n; ++j) proj(i, j) += vik * std::conj(es.vectors(j, k));
      }
    }
    out.eigenvalues.push_back(mean / static_cast<double>(end - start));
    out.eigenprojections.emplace_back(std::move(proj));
    start = end;
  }
  return out;
}

Projection spectral_projection(const HermitianOperator& a, double lo, double hi,
                               const EigOptions& opts) {
  if (lo > hi) throw PreconditionFailure("spectral_projection: lo > hi");
  const SpectralDecomposition sd = eig_hermitian(a, opts);
  ComplexMatrix sum(a.dim(), a.dim());
  for (std::size_t k = 0; k < sd.eigenvalues.size(); ++k) {
    if (sd.eigenvalues[k] >= lo && sd.eigenvalues[k] <= hi) sum += sd.eigenprojections[k].matrix();
  }
  return Projection(std::move(sum));
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, std::size_t d1, std::size_t d2, int keep) {
  if (!rho.is_square() || rho.rows() != d1 * d2) {
    throw DimensionMismatch("partial_trace: matrix dim " + std::to_string(rho.rows()) +
                            " is not " + std::to_string(d1) + "*" + std::to_string(d2));
  }
  if (keep != 1 && keep != 2) throw PreconditionFailure("partial_trace: keep must be 1 or 2");

  if (keep == 1) {
    ComplexMatrix out(d1, d1);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t ip = 0; ip < d1; ++ip) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < d2; ++j) s += rho(i * d2 + j, ip * d2 + j);
        out(i, ip) = s;
      }
    return out;
  }
  ComplexMatrix out(d2, d2);
  for (std::size_t j = 0; j < d2; ++j)
    for (std::size_t jp = 0; jp < d2; ++jp) {
      Complex s = 0.0;
      for (std::size_t i = 0; i < d1; ++i) s += rho(i * d2 + j, i * d2 + jp);
      out(j, jp) = s;
    }
  return out;
}

UncertaintyResult uncertainty_check(const State& state, const HermitianOperator& a,
                                    const HermitianOperator& b) {
  if (a.dim() != state.dim() || b.dim() != state.dim()) {
    throw DimensionMismatch("uncertainty_check: operator/state dimension mismatch");
  }
  const double wa2 = state.expectation(a.matrix() * a.matrix()).real();
  const double wb2 = state.expectation(b.matrix() * b.matrix()).real();
  const Complex comm = state.expectation(commutator(a.matrix(), b.matrix()));
  UncertaintyResult r;
  r.lhs = wa2 * wb2;
  r.rhs = 0.25 * std::norm(comm);
  r.holds = r.lhs >= r.rhs - 1e-10;
  return r;
}

ComplexMatrix heisenberg_evolve(const ComplexMatrix& a, const ComplexMatrix& u) {
  if (!u.is_square() || u.rows() != a.rows()) {
    throw DimensionMismatch("heisenberg_evolve: propagator dimension mismatch");
  }
  if ((u.adjoint() * u - ComplexMatrix::identity(u.rows())).max_abs() > tol::kUnitarity) {
    throw InvariantViolation("heisenberg_evolve: propagator not unitary within 1e-10");
  }
  return u.adjoint() * a * u;
}

Projection heisenberg_evolve(const Projection& p, const ComplexMatrix& u) {
  return Projection(heisenberg_evolve(p.matrix(), u));
}

}  // namespace histkit
