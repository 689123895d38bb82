#include "dunkl/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dunkl {

namespace {

double pythag(double a, double b) { return std::hypot(a, b); }

void check_shape(const SymTridiag &t) {
  if (t.diag.empty()) throw std::invalid_argument("empty tridiagonal matrix");
  if (t.off.size() + 1 != t.diag.size())
    throw std::invalid_argument("tridiagonal shape mismatch: off must have diag-1 entries");
}

} // namespace

// Implicit-shift QL, EISPACK tql2 lineage.
TridiagEigen eig_tridiag(const SymTridiag &t) {
  check_shape(t);
  const int n = static_cast<int>(t.diag.size());
  std::vector<double> d = t.diag;
  std::vector<double> e(t.off);
  e.push_back(0.0);

  // z[k][j]: component k of eigenvector j, accumulated from the identity.
  std::vector<std::vector<double>> z(static_cast<size_t>(n),
                                     std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) z[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0;

  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw std::runtime_error("tridiagonal QL failed to converge at index " +
                                   std::to_string(l) + " of " + std::to_string(n));
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = pythag(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = pythag(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            auto &row = z[static_cast<size_t>(k)];
            f = row[static_cast<size_t>(i + 1)];
            row[static_cast<size_t>(i + 1)] = s * row[static_cast<size_t>(i)] + c * f;
            row[static_cast<size_t>(i)] = c * row[static_cast<size_t>(i)] - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&d](int i, int j) { return d[i] < d[j]; });

  TridiagEigen out;
  out.values.resize(static_cast<size_t>(n));
  out.vectors.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int j = 0; j < n; ++j) {
    int src = order[static_cast<size_t>(j)];
    out.values[static_cast<size_t>(j)] = d[src];
    for (int k = 0; k < n; ++k)
      out.vectors[static_cast<size_t>(j)][static_cast<size_t>(k)] =
          z[static_cast<size_t>(k)][static_cast<size_t>(src)];
  }
  return out;
}

int sturm_count_below(const SymTridiag &t, double x) {
  check_shape(t);
  const double tiny = 1e-300;
  int count = 0;
  double q = t.diag[0] - x;
  if (q < 0.0) ++count;
  for (size_t i = 1; i < t.diag.size(); ++i) {
    double denom = (q == 0.0) ? tiny : q;
    q = t.diag[i] - x - t.off[i - 1] * t.off[i - 1] / denom;
    if (q < 0.0) ++count;
  }
  return count;
}

std::vector<double> eig_tridiag_bisect(const SymTridiag &t, int count) {
  check_shape(t);
  const int n = static_cast<int>(t.diag.size());
  if (count < 1 || count > n)
    throw std::invalid_argument("eig_tridiag_bisect: invalid eigenvalue count");

  double lo = t.diag[0], hi = t.diag[0];
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::fabs(t.off[static_cast<size_t>(i - 1)]);
    if (i < n - 1) r += std::fabs(t.off[static_cast<size_t>(i)]);
    lo = std::min(lo, t.diag[static_cast<size_t>(i)] - r);
    hi = std::max(hi, t.diag[static_cast<size_t>(i)] + r);
  }
  const double scale = std::max({std::fabs(lo), std::fabs(hi), 1.0});

  std::vector<double> vals(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    double a = lo, b = hi;
    for (int it = 0; it < 128 && (b - a) > 4.0 * std::numeric_limits<double>::epsilon() * scale;
         ++it) {
      double mid = 0.5 * (a + b);
      if (sturm_count_below(t, mid) >= k + 1)
        b = mid;
      else
        a = mid;
    }
    vals[static_cast<size_t>(k)] = 0.5 * (a + b);
  }
  return vals;
}

std::vector<double> inverse_iteration(const SymTridiag &t, double lambda) {
  check_shape(t);
  const int n = static_cast<int>(t.diag.size());
  double scale = 0.0;
  for (double d : t.diag) scale = std::max(scale, std::fabs(d));
  for (double o : t.off) scale = std::max(scale, std::fabs(o));
  // Tiny shift keeps the factorization from going exactly singular.
  const double shift = lambda + std::max(scale, 1.0) * 1e-13;

  std::vector<double> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    v[static_cast<size_t>(i)] = 1.0 / std::sqrt(static_cast<double>(n)) *
                                (1.0 + 1e-3 * std::sin(0.7 * static_cast<double>(i) + 0.3));

  // Partial-pivot LU of (T - shift I); band structure gives a second superdiagonal.
  for (int sweep = 0; sweep < 3; ++sweep) {
    std::vector<double> a(static_cast<size_t>(n)), b(static_cast<size_t>(n), 0.0),
        c(static_cast<size_t>(n), 0.0), rhs = v;
    for (int i = 0; i < n; ++i) a[static_cast<size_t>(i)] = t.diag[static_cast<size_t>(i)] - shift;
    for (int i = 0; i < n - 1; ++i) b[static_cast<size_t>(i)] = t.off[static_cast<size_t>(i)];

    // Forward elimination with row swaps; b = superdiag, c = second superdiag.
    std::vector<double> sub(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n - 1; ++i) sub[static_cast<size_t>(i + 1)] = t.off[static_cast<size_t>(i)];
    for (int i = 0; i < n - 1; ++i) {
      size_t ui = static_cast<size_t>(i);
      double piv = a[ui], low = sub[ui + 1];
      if (std::fabs(low) > std::fabs(piv)) {
        std::swap(a[ui], sub[ui + 1]);
        std::swap(b[ui], a[ui + 1]);
        std::swap(c[ui], b[ui + 1]);
        std::swap(rhs[ui], rhs[ui + 1]);
        piv = a[ui];
      }
      if (piv == 0.0) piv = a[ui] = scale * 1e-290;
      double m = sub[ui + 1] / piv;
      a[ui + 1] -= m * b[ui];
      b[ui + 1] -= m * c[ui];
      rhs[ui + 1] -= m * rhs[ui];
    }
    if (a[static_cast<size_t>(n - 1)] == 0.0) a[static_cast<size_t>(n - 1)] = scale * 1e-290;

    for (int i = n - 1; i >= 0; --i) {
      size_t ui = static_cast<size_t>(i);
      double s = rhs[ui];
      if (i + 1 < n) s -= b[ui] * v[ui + 1];
      if (i + 2 < n) s -= c[ui] * v[ui + 2];
      v[ui] = s / a[ui];
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) throw std::runtime_error("inverse iteration produced a zero vector");
    for (double &x : v) x /= norm;
  }
  return v;
}

} // namespace dunkl
