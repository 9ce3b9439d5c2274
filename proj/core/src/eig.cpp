#include "histkit/eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace histkit {

namespace {

double max_off_diagonal(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t p = 0; p + 1 < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q) m = std::max(m, std::abs(a(p, q)));
  return m;
}

// One unitary plane rotation annihilating A(p,q). The rotation is the
// composition of a phase on coordinate p and a real Jacobi rotation in the
// (p,q) plane: G e_p = c*u*e_p - s*e_q, G e_q = s*u*e_p + c*e_q, with
// u = A(p,q)/|A(p,q)|.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double abs_apq = std::abs(apq);
  if (abs_apq == 0.0) return;

  const Complex u = apq / abs_apq;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * abs_apq);
  double t;
  if (tau >= 0.0) {
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  } else {
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  const Complex cu = c * u;
  const Complex su = s * u;

  // A <- A G (columns p and q).
  for (std::size_t i = 0; i < n; ++i) {
    const Complex aip = a(i, p);
    const Complex aiq = a(i, q);
    a(i, p) = cu * aip - s * aiq;
    a(i, q) = su * aip + c * aiq;
  }
  // A <- G† A (rows p and q).
  const Complex cu_conj = std::conj(cu);
  const Complex su_conj = std::conj(su);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex apj = a(p, j);
    const Complex aqj = a(q, j);
    a(p, j) = cu_conj * apj - s * aqj;
    a(q, j) = su_conj * apj + c * aqj;
  }
  // Clean up what the rotation drove to zero analytically.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  // V <- V G.
  for (std::size_t i = 0; i < n; ++i) {
    const Complex vip = v(i, p);
    const Complex viq = v(i, q);
    v(i, p) = cu * vip - s * viq;
    v(i, q) = su * vip + c * viq;
  }
}

}  // namespace

EigenSystem jacobi_eigensystem(const ComplexMatrix& hermitian, const JacobiOptions& opts) {
  if (!hermitian.is_square()) throw DimensionMismatch("jacobi_eigensystem: matrix not square");
  const std::size_t n = hermitian.rows();

  // Symmetrize once; the iteration preserves hermiticity exactly afterwards.
  ComplexMatrix a = Complex(0.5) * (hermitian + hermitian.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);

  EigenSystem out;
  out.values.assign(n, 0.0);
  out.vectors = ComplexMatrix::identity(n);
  if (n == 0) return out;

  const double scale = std::max(a.max_abs(), std::numeric_limits<double>::min());
  const double tol = (opts.rel_tol > 0.0 ? opts.rel_tol : 4.0 * static_cast<double>(n) *
                                                              std::numeric_limits<double>::epsilon()) *
                     scale;

  bool converged = max_off_diagonal(a) <= tol;
  for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > tol * 1e-2) rotate(a, v, p, q);
    converged = max_off_diagonal(a) <= tol;
  }
  if (!converged) {
    const double residual = max_off_diagonal(a);
    throw SolverFailure("jacobi_eigensystem: no convergence after " +
                            std::to_string(opts.max_sweeps) +
                            " sweeps; off-diagonal residual " + std::to_string(residual),
                        residual);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

double op_norm(const ComplexMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  const ComplexMatrix gram = a.adjoint() * a;
  const EigenSystem es = jacobi_eigensystem(gram);
  const double top = es.values.empty() ? 0.0 : es.values.back();
  return std::sqrt(std::max(top, 0.0));
}

double trace_norm_hermitian(const ComplexMatrix& hermitian) {
  const EigenSystem es = jacobi_eigensystem(hermitian);
  double s = 0.0;
  for (double lambda : es.values) s += std::abs(lambda);
  return s;
}

}  // namespace histkit
