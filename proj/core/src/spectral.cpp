// Copyright 2026 The qlinbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlin/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qlin/error.hpp"
#include "qlin/linalg.hpp"
#include "qlin/random.hpp"
#include "serialize.hpp"

namespace qlin {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiTol = 1e-12;
constexpr double kDensitySlack = 0.1;
constexpr int kMaxDensityRedraws = 256;

double hermiticity_error(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

void check_density(double density) {
  if (!(density >= 0.0 && density <= 1.0)) {
    throw ArgumentError("density must lie in [0, 1]");
  }
}

// Phases every column so its largest-magnitude entry is real and positive.
void canonicalize_columns(Matrix& v) {
  for (Eigen::Index c = 0; c < v.cols(); ++c) {
    Eigen::Index best = 0;
    double mag = -1.0;
    for (Eigen::Index r = 0; r < v.rows(); ++r) {
      // Strict comparison with a small margin keeps the first of near-ties.
      if (std::abs(v(r, c)) > mag + 1e-12) {
        mag = std::abs(v(r, c));
        best = r;
      }
    }
    if (mag > 0.0) {
      const Complex z = v(best, c);
      v.col(c) *= std::conj(z) / std::abs(z);
    }
  }
}

}  // namespace

HermitianMatrix HermitianMatrix::from_matrix(Matrix m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw DimensionError("Hermitian matrix must be square and non-empty");
  }
  if (!m.allFinite()) {
    throw ArgumentError("matrix has non-finite entries");
  }
  if (hermiticity_error(m) > tol) {
    throw HermiticityError("matrix is not Hermitian");
  }
  // Symmetrize away rounding so downstream code sees exact conjugate pairs.
  Matrix sym = 0.5 * (m + m.adjoint());
  return HermitianMatrix(std::move(sym));
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> entries) {
  if (entries.empty()) throw DimensionError("empty diagonal");
  const auto n = static_cast<Eigen::Index>(entries.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::zero(int dim) {
  if (dim < 1) throw DimensionError("dimension must be positive");
  return HermitianMatrix(Matrix::Zero(dim, dim));
}

bool HermitianMatrix::is_diagonal(double tol) const {
  for (Eigen::Index r = 0; r < m_.rows(); ++r) {
    for (Eigen::Index c = 0; c < m_.cols(); ++c) {
      if (r != c && std::abs(m_(r, c)) > tol) return false;
    }
  }
  return true;
}

HermitianMatrix hermitize(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DimensionError("hermitize needs a non-empty square matrix");
  }
  return HermitianMatrix::from_matrix(a + a.adjoint());
}

double achieved_density(const Matrix& m) {
  const auto total = static_cast<double>(m.size());
  if (total == 0.0) return 0.0;
  Eigen::Index nz = 0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (std::abs(m(r, c)) > 0.0) ++nz;
    }
  }
  return static_cast<double>(nz) / total;
}

HermitianMatrix random_sparse_hermitian(const SparsitySpec& spec) {
  check_density(spec.density);
  if (spec.dim < 1) throw DimensionError("dimension must be positive");
  const Eigen::Index n = spec.dim;
  const double d = spec.density;
  const double pair_p = 1.0 - std::sqrt(1.0 - d);

  Rng rng(hash64({spec.seed, static_cast<std::uint64_t>(n),
                  static_cast<std::uint64_t>(std::llround(d * 1e9))}));
  Matrix best;
  double best_gap = 2.0;
  for (int attempt = 0; attempt < kMaxDensityRedraws; ++attempt) {
    Matrix a = Matrix::Zero(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index c = 0; c < n; ++c) {
        const double p = (r == c) ? d : pair_p;
        // Always consume the same number of variates per entry.
        const double gate = rng.uniform();
        const double re = rng.uniform(-1.0, 1.0);
        const double im = rng.uniform(-1.0, 1.0);
        if (gate < p) a(r, c) = (r == c) ? Complex(re, 0.0) : Complex(re, im);
      }
    }
    Matrix b = 0.5 * (a + a.adjoint());
    const double gap = std::abs(achieved_density(b) - d);
    if (gap < best_gap) {
      best_gap = gap;
      best = std::move(b);
    }
    if (best_gap <= kDensitySlack + 1e-12) break;
  }
  return HermitianMatrix::from_matrix(std::move(best));
}

HermitianMatrix random_diagonal(int dim, std::uint64_t seed, double lo, double hi) {
  if (dim < 1) throw DimensionError("dimension must be positive");
  Rng rng(hash64({seed, 0xd1a9ULL, static_cast<std::uint64_t>(dim)}));
  std::vector<double> d(static_cast<std::size_t>(dim));
  for (double& x : d) x = rng.uniform(lo, hi);
  return HermitianMatrix::diagonal(d);
}

HermitianMatrix random_coupled(int dim, std::uint64_t seed, double lo, double hi) {
  const HermitianMatrix diag = random_diagonal(dim, seed, lo, hi);
  Matrix m = diag.matrix();
  Rng rng(hash64({seed, 0xc0b1ULL, static_cast<std::uint64_t>(dim)}));
  // Couplings are bounded so every Gershgorin disc stays right of lo / 2.
  const double cap = dim > 1 ? 0.5 * lo / (dim - 1) : 0.0;
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = r + 1; c < dim; ++c) {
      const double w = rng.uniform(0.5 * cap, cap);
      m(r, c) = w;
      m(c, r) = w;
    }
  }
  return HermitianMatrix::from_matrix(std::move(m));
}

SpectralDecomposition eigendecompose(const HermitianMatrix& m) {
  Matrix a = m.matrix();
  if (hermiticity_error(a) > 1e-12) {
    throw HermiticityError("eigendecompose needs a Hermitian matrix");
  }
  const Eigen::Index n = a.rows();
  Matrix v = Matrix::Identity(n, n);
  const double scale = std::max(1.0, a.norm());

  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = 0; q < n; ++q) {
        if (p != q) off += std::norm(a(p, q));
      }
    }
    if (std::sqrt(off) <= kJacobiTol * scale) break;

    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r == 0.0) continue;
        const Complex e = a(p, q) / r;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // G = diag(1, e^{-i phi}) * [[c, s], [-s, c]] restricted to (p, q).
        const Complex g_pp = c;
        const Complex g_pq = s;
        const Complex g_qp = -s * std::conj(e);
        const Complex g_qq = c * std::conj(e);

        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * g_pp + akq * g_qp;
          a(k, q) = akp * g_pq + akq * g_qq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * g_pp + vkq * g_qp;
          v(k, q) = vkp * g_pq + vkq * g_qq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&a](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });
  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues[k] = a(src, src).real();
    out.eigenvectors.col(k) = v.col(src);
  }
  canonicalize_columns(out.eigenvectors);
  return out;
}

double condition_number(const SpectralDecomposition& d) {
  if (d.eigenvalues.size() == 0) throw DimensionError("empty spectrum");
  const double hi = d.eigenvalues.cwiseAbs().maxCoeff();
  const double lo = d.eigenvalues.cwiseAbs().minCoeff();
  if (lo <= 1e-12 * std::max(1.0, hi)) {
    throw SingularError("matrix has a zero eigenvalue");
  }
  return hi / lo;
}

double gershgorin_bound(const HermitianMatrix& m) {
  double bound = 0.0;
  const Matrix& a = m.matrix();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    double radius = 0.0;
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      if (c != r) radius += std::abs(a(r, c));
    }
    bound = std::max(bound, std::abs(a(r, r).real()) + radius);
  }
  return bound;
}

StateVector classical_solve(const HermitianMatrix& m, std::span<const Complex> b) {
  if (static_cast<int>(b.size()) != m.dim()) {
    throw DimensionError("right-hand side length does not match the matrix");
  }
  Eigen::VectorXcd rhs(m.dim());
  bool nonzero = false;
  for (int i = 0; i < m.dim(); ++i) {
    rhs[i] = b[static_cast<std::size_t>(i)];
    if (std::abs(rhs[i]) > 0.0) nonzero = true;
  }
  if (!nonzero) throw ZeroVector("right-hand side is zero");
  const Eigen::VectorXcd x = solve_pivoted<Complex>(m.matrix(), rhs);
  return normalize(std::span<const Complex>(x.data(), static_cast<std::size_t>(x.size())));
}

UnitaryMatrix evolution_unitary(const SpectralDecomposition& d, double t) {
  const Eigen::Index n = d.eigenvalues.size();
  Eigen::VectorXcd phases(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    phases[j] = std::exp(Complex(0.0, d.eigenvalues[j] * t));
  }
  Matrix u = d.eigenvectors * phases.asDiagonal() * d.eigenvectors.adjoint();
  return UnitaryMatrix::from_matrix(std::move(u));
}

UnitaryMatrix evolution_unitary(const HermitianMatrix& m, double t) {
  return evolution_unitary(eigendecompose(m), t);
}

std::string to_json(const HermitianMatrix& m) { return detail::matrix_json(m.matrix()).dump(); }

}  // namespace qlin
