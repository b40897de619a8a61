// Copyright 2026 The ihgmm Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ihgmm/numeric/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "ihgmm/error.hpp"
#include "ihgmm/numeric/rng.hpp"

namespace ihgmm {
namespace {

// Indices of `values` ordered by the selection criterion, best first. Ties on
// the criterion are broken by larger signed value, then lower index.
std::vector<Index> ranked_indices(const Vector& values, EigenSelection selection) {
  std::vector<Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Index{0});
  auto key = [&](Index i) {
    return selection == EigenSelection::kAlgebraic ? values(i)
                                                   : std::abs(values(i));
  };
  std::stable_sort(order.begin(), order.end(), [&](Index lhs, Index rhs) {
    if (key(lhs) != key(rhs)) return key(lhs) > key(rhs);
    return values(lhs) > values(rhs);
  });
  return order;
}

EigenPairs dense_top_k(const Matrix& a, Index k, EigenSelection selection) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kConvergenceFailure,
                "dense symmetric eigensolver did not converge");
  }
  const auto order = ranked_indices(solver.eigenvalues(), selection);
  EigenPairs out{Vector(k), Matrix(a.rows(), k)};
  for (Index j = 0; j < k; ++j) {
    out.values(j) = solver.eigenvalues()(order[static_cast<std::size_t>(j)]);
    out.vectors.col(j) = solver.eigenvectors().col(order[static_cast<std::size_t>(j)]);
  }
  return out;
}

// Makes `block` orthonormal and orthogonal to basis.leftCols(used). Columns
// that collapse (the Krylov space became invariant) are replaced with random
// directions.
void orthonormalize_block(const Matrix& basis, Index used, Matrix& block, Rng& rng) {
  const Index n = block.rows();
  for (Index c = 0; c < block.cols(); ++c) {
    Vector v = block.col(c);
    for (int attempt = 0;; ++attempt) {
      const double original = v.norm();
      for (int pass = 0; pass < 2; ++pass) {
        if (used > 0) {
          const Vector coeff = basis.leftCols(used).transpose() * v;
          v.noalias() -= basis.leftCols(used) * coeff;
        }
        if (c > 0) {
          const Vector coeff = block.leftCols(c).transpose() * v;
          v.noalias() -= block.leftCols(c) * coeff;
        }
      }
      const double remaining = v.norm();
      if (original > 0.0 && remaining > 1e-8 * original) {
        v /= remaining;
        break;
      }
      if (attempt >= 8) {
        throw Error(ErrorCode::kConvergenceFailure,
                    "cannot extend Krylov basis with a new direction");
      }
      for (Index i = 0; i < n; ++i) v(i) = rng.normal();
    }
    block.col(c) = v;
  }
}

EigenPairs lanczos_top_k(const Matrix& a, Index k, const EigenOptions& options) {
  const Index n = a.rows();
  const Index block_size = std::min<Index>(n, k + 2);
  const Index max_basis = std::min<Index>(n, std::max<Index>(200, 2 * k + 8 * block_size));
  const Index keep = std::min<Index>(max_basis - block_size,
                                     std::max<Index>(k + block_size, max_basis / 2));
  const double threshold = options.tolerance * std::max(1.0, a.norm());

  Rng rng(0x1A2C05ULL, static_cast<std::uint64_t>(n));
  Matrix basis(n, max_basis);
  Matrix image(n, max_basis);  // a * basis
  Matrix projected = Matrix::Zero(max_basis, max_basis);

  Matrix block(n, block_size);
  for (Index j = 0; j < block_size; ++j)
    for (Index i = 0; i < n; ++i) block(i, j) = rng.normal();
  orthonormalize_block(basis, 0, block, rng);

  Index used = 0;
  for (int step = 0; step < options.max_block_steps; ++step) {
    basis.middleCols(used, block_size) = block;
    image.middleCols(used, block_size).noalias() = a * block;
    const Index grown = used + block_size;
    const Matrix coupling =
        basis.leftCols(grown).transpose() * image.middleCols(used, block_size);
    projected.block(0, used, grown, block_size) = coupling;
    projected.block(used, 0, block_size, grown) = coupling.transpose();
    const Matrix diag_block = projected.block(used, used, block_size, block_size);
    projected.block(used, used, block_size, block_size) =
        0.5 * (diag_block + diag_block.transpose());
    used = grown;

    Eigen::SelfAdjointEigenSolver<Matrix> ritz(projected.topLeftCorner(used, used));
    if (ritz.info() != Eigen::Success) {
      throw Error(ErrorCode::kConvergenceFailure, "Rayleigh-Ritz step failed");
    }
    const auto order = ranked_indices(ritz.eigenvalues(), options.selection);

    Matrix selected_coeffs(used, k);
    Vector selected_values(k);
    for (Index j = 0; j < k; ++j) {
      selected_coeffs.col(j) = ritz.eigenvectors().col(order[static_cast<std::size_t>(j)]);
      selected_values(j) = ritz.eigenvalues()(order[static_cast<std::size_t>(j)]);
    }
    Matrix vectors = basis.leftCols(used) * selected_coeffs;
    Matrix residual = image.leftCols(used) * selected_coeffs -
                      vectors * selected_values.asDiagonal();
    bool converged = true;
    for (Index j = 0; j < k; ++j) {
      if (residual.col(j).norm() > 0.5 * threshold) converged = false;
    }
    if (converged) {
      // Confirm against a fresh product; the projected residual can drift
      // from the true one after many restarts.
      const Matrix check = a * vectors - vectors * selected_values.asDiagonal();
      bool confirmed = true;
      for (Index j = 0; j < k; ++j) {
        if (check.col(j).norm() > threshold) confirmed = false;
      }
      if (confirmed) return EigenPairs{selected_values, vectors};
    }

    if (used + block_size > max_basis) {
      const Index kept = std::min<Index>(keep, used);
      Matrix coeffs(used, kept);
      Vector values(kept);
      for (Index j = 0; j < kept; ++j) {
        coeffs.col(j) = ritz.eigenvectors().col(order[static_cast<std::size_t>(j)]);
        values(j) = ritz.eigenvalues()(order[static_cast<std::size_t>(j)]);
      }
      const Matrix new_basis = basis.leftCols(used) * coeffs;
      const Matrix new_image = image.leftCols(used) * coeffs;
      basis.leftCols(kept) = new_basis;
      image.leftCols(kept) = new_image;
      projected.setZero();
      projected.topLeftCorner(kept, kept) = values.asDiagonal();
      used = kept;
      block = new_image.leftCols(block_size) -
              new_basis.leftCols(block_size) * values.head(block_size).asDiagonal();
    } else {
      block = image.middleCols(used - block_size, block_size);
    }
    orthonormalize_block(basis, used, block, rng);
  }
  std::ostringstream msg;
  msg << "block Lanczos did not reach residual " << threshold << " within "
      << options.max_block_steps << " block steps (n=" << n << ", k=" << k << ")";
  throw Error(ErrorCode::kConvergenceFailure, msg.str());
}

// Extends the first `valid` orthonormal columns of `columns` to a full
// orthonormal set using coordinate directions.
void complete_orthonormal(Matrix& columns, Index valid) {
  const Index rows = columns.rows();
  Index next_axis = 0;
  for (Index c = valid; c < columns.cols(); ++c) {
    while (true) {
      if (next_axis >= rows) {
        throw Error(ErrorCode::kRankDeficient, "cannot complete orthonormal basis");
      }
      Vector v = Vector::Unit(rows, next_axis++);
      for (int pass = 0; pass < 2; ++pass) {
        const Vector coeff = columns.leftCols(c).transpose() * v;
        v.noalias() -= columns.leftCols(c) * coeff;
      }
      const double norm = v.norm();
      if (norm > 1e-6) {
        columns.col(c) = v / norm;
        break;
      }
    }
  }
}

}  // namespace

double max_asymmetry(const Matrix& a) {
  double worst = 0.0;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = j + 1; i < a.rows(); ++i)
      worst = std::max(worst, std::abs(a(i, j) - a(j, i)));
  return worst;
}

void canonicalize_signs(Matrix& columns) {
  for (Index j = 0; j < columns.cols(); ++j) {
    Index best = 0;
    double best_abs = -1.0;
    for (Index i = 0; i < columns.rows(); ++i) {
      const double v = std::abs(columns(i, j));
      if (v > best_abs) {
        best_abs = v;
        best = i;
      }
    }
    if (columns(best, j) < 0.0) columns.col(j) *= -1.0;
  }
}

Matrix gram(const Matrix& a) {
  Matrix g = Matrix::Zero(a.cols(), a.cols());
  g.selfadjointView<Eigen::Lower>().rankUpdate(a.transpose());
  g.triangularView<Eigen::StrictlyUpper>() = g.transpose();
  return g;
}

Matrix qr_orthonormal_columns(const Matrix& m) {
  const Index p = m.rows();
  const Index k = m.cols();
  if (k < 1 || p < k) {
    throw Error(ErrorCode::kInvalidArgument, "qr_orthonormal_columns needs p >= K >= 1");
  }
  Eigen::HouseholderQR<Matrix> qr(m);
  const Matrix& packed = qr.matrixQR();
  for (Index j = 0; j < k; ++j) {
    const double column_norm = m.col(j).norm();
    if (column_norm == 0.0 || std::abs(packed(j, j)) < 1e-12 * column_norm) {
      throw Error(ErrorCode::kRankDeficient,
                  "column " + std::to_string(j) + " is linearly dependent");
    }
  }
  Matrix q = qr.householderQ() * Matrix::Identity(p, k);
  canonicalize_signs(q);
  return q;
}

EigenPairs sym_top_k_eigs(const Matrix& a, Index k, const EigenOptions& options) {
  const Index n = a.rows();
  if (n != a.cols() || n < 1) {
    throw Error(ErrorCode::kInvalidArgument, "sym_top_k_eigs needs a square matrix");
  }
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kInvalidArgument, "sym_top_k_eigs needs 1 <= k <= n");
  }
  if (!a.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "matrix has non-finite entries");
  }
  if (max_asymmetry(a) > 1e-10 * a.cwiseAbs().maxCoeff()) {
    throw Error(ErrorCode::kNotSymmetric, "input matrix is not symmetric");
  }

  const Index block_size = std::min<Index>(n, k + 2);
  EigenPairs pairs = (n <= options.dense_threshold || n < 4 * (k + block_size))
                         ? dense_top_k(a, k, options.selection)
                         : lanczos_top_k(a, k, options);
  canonicalize_signs(pairs.vectors);
  return pairs;
}

SvdFactors thin_svd(const Matrix& a, Index k) {
  const Index p = a.rows();
  const Index n = a.cols();
  if (k < 1 || k > std::min(p, n)) {
    throw Error(ErrorCode::kInvalidArgument, "thin_svd needs 1 <= k <= min(p, n)");
  }
  const bool wide = p <= n;
  const Matrix small_gram = wide ? gram(a.transpose()) : gram(a);
  const EigenPairs pairs = sym_top_k_eigs(small_gram, k);

  SvdFactors out;
  out.singulars = pairs.values.cwiseMax(0.0).cwiseSqrt();
  Matrix derived = wide ? Matrix(a.transpose() * pairs.vectors)
                        : Matrix(a * pairs.vectors);
  const double cutoff = 1e-12 * std::max(out.singulars(0), 0.0);
  Index valid = 0;
  for (Index j = 0; j < k; ++j) {
    if (out.singulars(j) > cutoff && out.singulars(j) > 0.0) {
      derived.col(j) /= out.singulars(j);
      valid = j + 1;
    } else {
      out.singulars(j) = 0.0;
    }
  }
  complete_orthonormal(derived, valid);
  if (wide) {
    out.left = pairs.vectors;
    out.right = std::move(derived);
  } else {
    out.left = std::move(derived);
    out.right = pairs.vectors;
  }
  return out;
}

}  // namespace ihgmm
