#include <gkw/opmatrix.hpp>

#include <gkw/binom.hpp>
#include <gkw/errors.hpp>
#include <gkw/zeta.hpp>

#include <algorithm>

namespace gkw {

BigFloat OperatorMatrix::trace() const {
  BigFloat t(0, prec);
  for (int i = 0; i < dim; ++i) t += entries[static_cast<size_t>(i)][static_cast<size_t>(i)];
  return t;
}

OperatorMatrix operator_matrix(int dim, long prec) {
  if (dim < 8) throw DomainError("operator_matrix: dim must be >= 8");
  // The alternating binomial sums cancel by up to ~2^(2*dim); assemble with
  // that much headroom, then round entries to prec.
  long wp = prec + 2 * dim + 32;
  std::vector<BigFloat> zm1;
  zm1.reserve(static_cast<size_t>(2 * dim));
  for (int q = 2; q <= 2 * dim; ++q) zm1.push_back(zeta_minus_one(q, wp));

  OperatorMatrix m;
  m.dim = dim;
  m.prec = prec;
  m.entries.assign(static_cast<size_t>(dim), {});
  for (int k = 0; k < dim; ++k) {
    auto& row = m.entries[static_cast<size_t>(k)];
    row.reserve(static_cast<size_t>(dim));
    for (int l = 0; l < dim; ++l) {
      BigFloat acc(0, wp);
      for (int r = 0; r <= l; ++r) {
        BigInt c = int_binom(l, r) * int_binom(k + r + 1, k);
        BigFloat term = BigFloat(c, wp) * zm1[static_cast<size_t>(r + k)];
        if ((l - r) % 2) term = -term;
        acc += term;
      }
      if (k % 2) acc = -acc;
      row.push_back(acc.with_precision(prec));
    }
  }
  return m;
}

namespace {

BigFloat sign_like(const BigFloat& mag, const BigFloat& s) {
  return s.sign() >= 0 ? mag.abs() : -mag.abs();
}

// Stabilized elimination to upper Hessenberg form (similarity transform).
void to_hessenberg(std::vector<std::vector<BigFloat>>& a, long wp) {
  const int n = static_cast<int>(a.size());
  for (int m = 1; m < n - 1; ++m) {
    BigFloat x(0, wp);
    int i = m;
    for (int j = m; j < n; ++j) {
      if (a[static_cast<size_t>(j)][static_cast<size_t>(m - 1)].abs() > x.abs()) {
        x = a[static_cast<size_t>(j)][static_cast<size_t>(m - 1)];
        i = j;
      }
    }
    if (i != m) {
      for (int j = m - 1; j < n; ++j)
        std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(j)],
                  a[static_cast<size_t>(m)][static_cast<size_t>(j)]);
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<size_t>(j)][static_cast<size_t>(i)],
                  a[static_cast<size_t>(j)][static_cast<size_t>(m)]);
    }
    if (!x.is_zero()) {
      for (int r = m + 1; r < n; ++r) {
        BigFloat y = a[static_cast<size_t>(r)][static_cast<size_t>(m - 1)];
        if (y.is_zero()) continue;
        y = y / x;
        a[static_cast<size_t>(r)][static_cast<size_t>(m - 1)] = BigFloat(0, wp);
        for (int j = m; j < n; ++j)
          a[static_cast<size_t>(r)][static_cast<size_t>(j)] -=
              y * a[static_cast<size_t>(m)][static_cast<size_t>(j)];
        for (int j = 0; j < n; ++j)
          a[static_cast<size_t>(j)][static_cast<size_t>(m)] +=
              y * a[static_cast<size_t>(j)][static_cast<size_t>(r)];
      }
    }
  }
  for (int r = 2; r < n; ++r)
    for (int c = 0; c < r - 1; ++c) a[static_cast<size_t>(r)][static_cast<size_t>(c)] = BigFloat(0, wp);
}

// Francis double-shift QR on an upper Hessenberg matrix; eigenvalues only.
std::vector<BigComplex> hqr_eigenvalues(std::vector<std::vector<BigFloat>> a, long wp) {
  const int n = static_cast<int>(a.size());
  auto A = [&](int i, int j) -> BigFloat& {
    return a[static_cast<size_t>(i)][static_cast<size_t>(j)];
  };
  std::vector<BigComplex> eig(static_cast<size_t>(n), BigComplex(wp));
  const BigFloat eps = BigFloat::pow2(-(wp - 24), wp);
  const int max_its = 120;

  BigFloat anorm(0, wp);
  for (int i = 0; i < n; ++i)
    for (int j = std::max(i - 1, 0); j < n; ++j) anorm += A(i, j).abs();

  int nn = n - 1;
  BigFloat t(0, wp);
  while (nn >= 0) {
    int its = 0;
    int l;
    for (;;) {
      for (l = nn; l >= 1; --l) {
        BigFloat s = A(l - 1, l - 1).abs() + A(l, l).abs();
        if (s.is_zero()) s = anorm;
        if (A(l, l - 1).abs() <= eps * s) {
          A(l, l - 1) = BigFloat(0, wp);
          break;
        }
      }
      BigFloat x = A(nn, nn);
      if (l == nn) {  // one real eigenvalue
        eig[static_cast<size_t>(nn)] = BigComplex(x + t, BigFloat(0, wp));
        --nn;
        break;
      }
      BigFloat y = A(nn - 1, nn - 1);
      BigFloat w = A(nn, nn - 1) * A(nn - 1, nn);
      if (l == nn - 1) {  // a 2x2 block
        BigFloat p = (y - x) * BigFloat(BigRational(1, 2), wp);
        BigFloat q = p * p + w;
        BigFloat z = q.abs().sqrt();
        x = x + t;
        if (q.sign() >= 0) {
          z = p + sign_like(z, p);
          eig[static_cast<size_t>(nn - 1)] = BigComplex(x + z, BigFloat(0, wp));
          eig[static_cast<size_t>(nn)] =
              BigComplex(z.is_zero() ? x + z : x - w / z, BigFloat(0, wp));
        } else {
          eig[static_cast<size_t>(nn - 1)] = BigComplex(x + p, z);
          eig[static_cast<size_t>(nn)] = BigComplex(x + p, -z);
        }
        nn -= 2;
        break;
      }
      if (its == max_its)
        throw ConvergenceFailure("hqr: iteration cap reached at block " + std::to_string(nn));
      BigFloat p(0, wp), q(0, wp), r(0, wp), z(0, wp), s(0, wp);
      if (its % 20 == 10) {  // exceptional shift
        t += x;
        for (int i = 0; i <= nn; ++i) A(i, i) -= x;
        s = A(nn, nn - 1).abs() + A(nn - 1, nn - 2).abs();
        x = s * BigFloat(BigRational(3, 4), wp);
        y = x;
        w = -s * s * BigFloat(BigRational(7, 16), wp);
      }
      ++its;
      int m;
      for (m = nn - 2; m >= l; --m) {
        z = A(m, m);
        r = x - z;
        s = y - z;
        p = (r * s - w) / A(m + 1, m) + A(m, m + 1);
        q = A(m + 1, m + 1) - z - r - s;
        r = A(m + 2, m + 1);
        s = p.abs() + q.abs() + r.abs();
        p /= s;
        q /= s;
        r /= s;
        if (m == l) break;
        BigFloat u = A(m, m - 1).abs() * (q.abs() + r.abs());
        BigFloat v = p.abs() * (A(m - 1, m - 1).abs() + z.abs() + A(m + 1, m + 1).abs());
        if (u <= eps * v) break;
      }
      for (int i = m + 2; i <= nn; ++i) {
        A(i, i - 2) = BigFloat(0, wp);
        if (i != m + 2) A(i, i - 3) = BigFloat(0, wp);
      }
      for (int k = m; k <= nn - 1; ++k) {
        if (k != m) {
          p = A(k, k - 1);
          q = A(k + 1, k - 1);
          r = BigFloat(0, wp);
          if (k != nn - 1) r = A(k + 2, k - 1);
          x = p.abs() + q.abs() + r.abs();
          if (!x.is_zero()) {
            p /= x;
            q /= x;
            r /= x;
          }
        }
        BigFloat sq = (p * p + q * q + r * r).sqrt();
        s = sign_like(sq, p);
        if (s.is_zero()) continue;
        if (k == m) {
          if (l != m) A(k, k - 1) = -A(k, k - 1);
        } else {
          A(k, k - 1) = -s * x;
        }
        p += s;
        x = p / s;
        y = q / s;
        z = r / s;
        q /= p;
        r /= p;
        for (int j = k; j <= nn; ++j) {  // row modification
          BigFloat pp = A(k, j) + q * A(k + 1, j);
          if (k != nn - 1) {
            pp += r * A(k + 2, j);
            A(k + 2, j) -= pp * z;
          }
          A(k + 1, j) -= pp * y;
          A(k, j) -= pp * x;
        }
        int mmin = nn < k + 3 ? nn : k + 3;
        for (int i = l; i <= mmin; ++i) {  // column modification
          BigFloat pp = x * A(i, k) + y * A(i, k + 1);
          if (k != nn - 1) {
            pp += z * A(i, k + 2);
            A(i, k + 2) -= pp * r;
          }
          A(i, k + 1) -= pp * q;
          A(i, k) -= pp;
        }
      }
    }
  }
  std::sort(eig.begin(), eig.end(), [](const BigComplex& u, const BigComplex& v) {
    return u.abs() > v.abs();
  });
  return eig;
}

}  // namespace

std::vector<BigComplex> real_matrix_eigenvalues(const OperatorMatrix& m) {
  long wp = m.prec + 32;
  std::vector<std::vector<BigFloat>> a(static_cast<size_t>(m.dim));
  for (int i = 0; i < m.dim; ++i) {
    a[static_cast<size_t>(i)].reserve(static_cast<size_t>(m.dim));
    for (int j = 0; j < m.dim; ++j)
      a[static_cast<size_t>(i)].push_back(
          m.entries[static_cast<size_t>(i)][static_cast<size_t>(j)].with_precision(wp));
  }
  to_hessenberg(a, wp);
  return hqr_eigenvalues(std::move(a), wp);
}

std::vector<BigFloat> gkw_eigenvalues(int dim, long prec, int count) {
  if (count > dim) throw DomainError("gkw_eigenvalues: count > dim");
  OperatorMatrix m = operator_matrix(dim, prec);
  auto eig = real_matrix_eigenvalues(m);
  BigFloat imag_tol = BigFloat::pow2(-(prec / 2), prec);
  std::vector<BigFloat> reals;
  for (const auto& e : eig) {
    if (e.im.abs() <= imag_tol * (BigFloat(1, prec) + e.re.abs()))
      reals.push_back(e.re.with_precision(prec));
    if (static_cast<int>(reals.size()) == count) break;
  }
  if (static_cast<int>(reals.size()) < count)
    throw ConvergenceFailure("gkw_eigenvalues: fewer real eigenvalues than requested");
  return reals;
}

}  // namespace gkw
