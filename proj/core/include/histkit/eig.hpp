#pragma once

#include <vector>

#include "histkit/matrix.hpp"

namespace histkit {

struct JacobiOptions {
  /// Cyclic sweeps before giving up.
  int max_sweeps = 100;
  /// Off-diagonal threshold relative to the matrix scale; 0 picks a
  /// machine-precision default.
  double rel_tol = 0.0;
};

/// Raw dense eigensystem of a Hermitian matrix.
struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // unitary, columns are eigenvectors
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. The input is
/// symmetrized as (A + A†)/2 before iterating. Throws SolverFailure with the
/// remaining off-diagonal norm if the sweep cap is exhausted.
EigenSystem jacobi_eigensystem(const ComplexMatrix& hermitian, const JacobiOptions& opts = {});

/// Largest singular value, computed via the eigensystem of A†A.
double op_norm(const ComplexMatrix& a);

/// Sum of |eigenvalue| over the spectrum of a Hermitian matrix.
double trace_norm_hermitian(const ComplexMatrix& hermitian);

}  // namespace histkit
