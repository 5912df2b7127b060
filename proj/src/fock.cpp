#include "latwalk/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latwalk {

namespace {

// ---------------------------------------------------------------------------
// Double-precision Sturm bisection for the scaled Hermite Jacobi matrix
// (zero diagonal, off-diagonals beta_k = c sqrt(k+1)). The matrix norm is
// only O(c sqrt(dim)), so double seeds are accurate; MPFR Newton polishing
// follows.
// ---------------------------------------------------------------------------

int sturm_count_double(const std::vector<double>& beta, double x) {
  // number of eigenvalues < x via the LDL^T recurrence
  int n = static_cast<int>(beta.size()) + 1;
  int count = 0;
  double q = -x;
  if (q < 0) ++count;
  for (int i = 1; i < n; ++i) {
    double b2 = beta[i - 1] * beta[i - 1];
    double denom = (q == 0.0) ? 1e-300 : q;
    q = -x - b2 / denom;
    if (q < 0) ++count;
  }
  return count;
}

std::vector<double> hermite_nodes_double(const std::vector<double>& beta) {
  int n = static_cast<int>(beta.size()) + 1;
  double radius = 0;
  for (double b : beta) radius = std::max(radius, 2.05 * std::abs(b));
  std::vector<double> nodes(n);
  for (int k = 0; k < n; ++k) {
    double lo = -radius, hi = radius;
    for (int iter = 0; iter < 120; ++iter) {
      double mid = 0.5 * (lo + hi);
      if (sturm_count_double(beta, mid) <= k)
        lo = mid;
      else
        hi = mid;
    }
    nodes[k] = 0.5 * (lo + hi);
  }
  return nodes;
}

// p_n(lambda) and its derivative from the orthonormal recurrence
// beta_k p_{k+1} = lambda p_k - beta_{k-1} p_{k-1}.
void charpoly_and_derivative(const std::vector<Real>& beta, const Real& lambda, Real& pn,
                             Real& dpn) {
  int n = static_cast<int>(beta.size()) + 1;
  Real pkm1(0L), pk(1L), dkm1(0L), dk(0L);
  for (int k = 0; k < n; ++k) {
    Real pnext = lambda * pk;
    if (k > 0) pnext -= beta[k - 1] * pkm1;
    pnext /= beta.size() > static_cast<std::size_t>(k) ? beta[k] : Real(1L);
    Real dnext = pk + lambda * dk;
    if (k > 0) dnext -= beta[k - 1] * dkm1;
    dnext /= beta.size() > static_cast<std::size_t>(k) ? beta[k] : Real(1L);
    pkm1 = pk;
    pk = pnext;
    dkm1 = dk;
    dk = dnext;
  }
  pn = pk;
  dpn = dk;
}

// Sturm count in MPFR for a real symmetric tridiagonal (diag d, offdiag e).
int sturm_count(const std::vector<Real>& d, const std::vector<Real>& e, const Real& x) {
  int n = static_cast<int>(d.size());
  int count = 0;
  Real tiny = pow(Real(2L), Real(-default_precision_bits() * 4L));
  Real q = d[0] - x;
  if (q.sign() < 0) ++count;
  for (int i = 1; i < n; ++i) {
    Real denom = q;
    if (denom.is_zero()) denom = tiny;
    q = d[i] - x - e[i - 1] * e[i - 1] / denom;
    if (q.sign() < 0) ++count;
  }
  return count;
}

// k-th smallest eigenvalue (0-based) of a tridiagonal by bisection on [lo, hi].
Real bisect_eigenvalue(const std::vector<Real>& d, const std::vector<Real>& e, int k, Real lo,
                       Real hi, const Real& tol) {
  while (hi - lo > tol) {
    Real mid = (lo + hi) / Real(2L);
    if (sturm_count(d, e, mid) <= k)
      lo = mid;
    else
      hi = mid;
    if ((hi - lo) <= tol) break;
  }
  return (lo + hi) / Real(2L);
}

// Householder reduction of a dense real symmetric matrix to tridiagonal form
// (eigenvalues only; the matrix is destroyed).
void householder_tridiag(std::vector<std::vector<Real>>& a, std::vector<Real>& d,
                         std::vector<Real>& e) {
  int n = static_cast<int>(a.size());
  d.assign(n, Real(0L));
  e.assign(n, Real(0L));
  for (int i = n - 1; i >= 1; --i) {
    int l = i - 1;
    Real h(0L), scale(0L);
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += abs(a[i][k]);
      if (scale.is_zero()) {
        e[i] = a[i][l];
      } else {
        for (int k = 0; k <= l; ++k) {
          a[i][k] /= scale;
          h.add_mul(a[i][k], a[i][k]);
        }
        Real f = a[i][l];
        Real g = f.sign() >= 0 ? -sqrt(h) : sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        a[i][l] = f - g;
        f = Real(0L);
        for (int j = 0; j <= l; ++j) {
          g = Real(0L);
          for (int k = 0; k <= j; ++k) g.add_mul(a[j][k], a[i][k]);
          for (int k = j + 1; k <= l; ++k) g.add_mul(a[k][j], a[i][k]);
          e[j] = g / h;
          f.add_mul(e[j], a[i][j]);
        }
        Real hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = a[i][j];
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) a[j][k] -= f * e[k] + g * a[i][k];
        }
      }
    } else {
      e[i] = a[i][l];
    }
    d[i] = h;
  }
  for (int i = 0; i < n; ++i) d[i] = a[i][i];
}

std::vector<Real> lowest_eigenvalues(std::vector<std::vector<Real>> m, int count) {
  int n = static_cast<int>(m.size());
  if (n == 0) return {};
  std::vector<Real> d, e;
  householder_tridiag(m, d, e);
  std::vector<Real> off(n > 1 ? n - 1 : 0, Real(0L));
  for (int i = 1; i < n; ++i) off[i - 1] = e[i];
  // Positive operator: 0 is a valid lower bound; Gershgorin for the top.
  Real hi(0L);
  for (int i = 0; i < n; ++i) {
    Real row = abs(d[i]);
    if (i > 0) row += abs(off[i - 1]);
    if (i + 1 < n) row += abs(off[i]);
    if (row > hi) hi = row;
  }
  Real tol = pow(Real(2L), Real(-(default_precision_bits() / 2L)));
  std::vector<Real> out;
  for (int k = 0; k < std::min(count, n); ++k)
    out.push_back(bisect_eigenvalue(d, off, k, Real(0L), hi, tol));
  return out;
}

} // namespace

int fock_required_bits(double hbar, int dim) {
  double c = std::sqrt(hbar / 2.0);
  double lambda_max = 2.0 * c * std::sqrt(static_cast<double>(dim) + 1.0);
  return static_cast<int>(lambda_max * 1.4427) + 128;
}

std::vector<Real> fock_lowest_energies(const Real& hbar, const Real& r2, int count, int dim,
                                       bool even_only) {
  if (dim < 8) throw std::invalid_argument("fock_lowest_energies: dim too small");
  Real c = sqrt(hbar / Real(2L));

  // x-matrix off-diagonals and double-precision node seeds
  std::vector<Real> beta(dim - 1);
  std::vector<double> beta_d(dim - 1);
  for (int k = 0; k < dim - 1; ++k) {
    beta[k] = c * sqrt(Real(static_cast<long>(k + 1)));
    beta_d[k] = beta[k].to_double();
  }
  std::vector<double> seeds = hermite_nodes_double(beta_d);

  // Newton polish in working precision
  std::vector<Real> nodes(dim);
  for (int i = 0; i < dim; ++i) {
    Real x(seeds[i]);
    for (int iter = 0; iter < 8; ++iter) {
      Real pn, dpn;
      charpoly_and_derivative(beta, x, pn, dpn);
      if (dpn.is_zero()) break;
      Real step = pn / dpn;
      x -= step;
      if (abs(step) < pow(Real(2L), Real(-(default_precision_bits() - 8L)))) break;
    }
    nodes[i] = x;
  }

  // Rows of sqrt(w_i) * (normalized eigenvector i); w_i = 2 cosh(lambda_i).
  std::vector<std::vector<Real>> w(dim, std::vector<Real>(dim, Real(0L)));
  for (int i = 0; i < dim; ++i) {
    std::vector<Real> p(dim);
    p[0] = Real(1L);
    if (dim > 1) p[1] = nodes[i] / beta[0];
    for (int k = 2; k < dim; ++k)
      p[k] = (nodes[i] * p[k - 1] - beta[k - 2] * p[k - 2]) / beta[k - 1];
    Real norm2(0L);
    for (int k = 0; k < dim; ++k) norm2.add_mul(p[k], p[k]);
    Real scale = sqrt((Real(2L) * cosh(nodes[i])) / norm2);
    for (int k = 0; k < dim; ++k) w[i][k] = p[k] * scale;
  }

  // Assemble per-sector matrices of H = C + R2 * F C F^dagger with
  // C = 2cosh(x) and F = diag(i^n): entries C_mn (1 + R2 (-1)^((m-n)/2)) on
  // same-parity pairs. At R2 = 1 the even/odd sectors split further mod 4.
  bool quarter = (r2 == Real(1L));
  std::vector<std::vector<int>> classes;
  if (quarter) {
    classes.assign(4, {});
    for (int k = 0; k < dim; ++k) classes[k % 4].push_back(k);
  } else {
    classes.assign(2, {});
    for (int k = 0; k < dim; ++k) classes[k % 2].push_back(k);
  }
  if (even_only) {
    std::vector<std::vector<int>> evens;
    for (const auto& cls : classes)
      if (!cls.empty() && cls[0] % 2 == 0) evens.push_back(cls);
    classes = std::move(evens);
  }

  std::vector<Real> found;
  for (const auto& cls : classes) {
    int m = static_cast<int>(cls.size());
    if (m == 0) continue;
    std::vector<std::vector<Real>> h(m, std::vector<Real>(m, Real(0L)));
    for (int aidx = 0; aidx < m; ++aidx) {
      for (int bidx = 0; bidx <= aidx; ++bidx) {
        int ma = cls[aidx], mb = cls[bidx];
        Real cval(0L);
        for (int i = 0; i < dim; ++i) cval.add_mul(w[i][ma], w[i][mb]);
        Real factor;
        if (quarter) {
          factor = Real(2L); // same class mod 4 always gets 1 + (-1)^0
        } else {
          factor = (((ma - mb) / 2) % 2 == 0) ? Real(1L) + r2 : Real(1L) - r2;
        }
        h[aidx][bidx] = cval * factor;
        h[bidx][aidx] = h[aidx][bidx];
      }
    }
    auto eigs = lowest_eigenvalues(std::move(h), count);
    found.insert(found.end(), eigs.begin(), eigs.end());
  }
  std::sort(found.begin(), found.end());
  if (static_cast<int>(found.size()) > count) found.resize(count);
  return found;
}

} // namespace latwalk
