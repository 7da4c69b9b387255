#include "conic/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace conic {

namespace {

struct SnfState {
  IntMatrix M, U, Uinv, V;

  explicit SnfState(const IntMatrix& m)
      : M(m),
        U(IntMatrix::identity(m.rows())),
        Uinv(IntMatrix::identity(m.rows())),
        V(IntMatrix::identity(m.cols())) {}

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < M.cols(); ++c) std::swap(M.at(i, c), M.at(j, c));
    for (int c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(j, c));
    for (int r = 0; r < Uinv.rows(); ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < M.rows(); ++r) std::swap(M.at(r, i), M.at(r, j));
    for (int r = 0; r < V.rows(); ++r) std::swap(V.at(r, i), V.at(r, j));
  }

  // row j += q * row i
  void add_row(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < M.cols(); ++c) M.at(j, c) += q * M.at(i, c);
    for (int c = 0; c < U.cols(); ++c) U.at(j, c) += q * U.at(i, c);
    for (int r = 0; r < Uinv.rows(); ++r) Uinv.at(r, i) -= q * Uinv.at(r, j);
  }

  // col j += q * col i
  void add_col(int i, int j, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < M.rows(); ++r) M.at(r, j) += q * M.at(r, i);
    for (int r = 0; r < V.rows(); ++r) V.at(r, j) += q * V.at(r, i);
  }

  void negate_row(int i) {
    for (int c = 0; c < M.cols(); ++c) M.at(i, c) = -M.at(i, c);
    for (int c = 0; c < U.cols(); ++c) U.at(i, c) = -U.at(i, c);
    for (int r = 0; r < Uinv.rows(); ++r) Uinv.at(r, i) = -Uinv.at(r, i);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& M) {
  SnfState s(M);
  const int m = M.rows(), n = M.cols();
  const int t = std::min(m, n);

  for (int k = 0; k < t; ++k) {
    // Find a nonzero pivot of smallest absolute value in the trailing block.
    int pi = -1, pj = -1;
    Int best = 0;
    for (int i = k; i < m; ++i)
      for (int j = k; j < n; ++j) {
        const Int& x = s.M.at(i, j);
        if (x == 0) continue;
        Int ax = x < 0 ? Int(-x) : x;
        if (pi < 0 || ax < best) {
          best = ax;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;  // trailing block is zero
    s.swap_rows(k, pi);
    s.swap_cols(k, pj);

    for (;;) {
      bool clean = true;
      for (int i = k + 1; i < m; ++i) {
        Int q = s.M.at(i, k) / s.M.at(k, k);
        s.add_row(k, i, -q);
        if (s.M.at(i, k) != 0) {
          s.swap_rows(k, i);  // remainder is strictly smaller, keep reducing
          clean = false;
        }
      }
      for (int j = k + 1; j < n; ++j) {
        Int q = s.M.at(k, j) / s.M.at(k, k);
        s.add_col(k, j, -q);
        if (s.M.at(k, j) != 0) {
          s.swap_cols(k, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Row and column k are clear. Enforce divisibility of the whole
      // trailing block by the pivot.
      bool fixed = false;
      for (int i = k + 1; i < m && !fixed; ++i)
        for (int j = k + 1; j < n && !fixed; ++j)
          if (s.M.at(i, j) % s.M.at(k, k) != 0) {
            s.add_row(i, k, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (s.M.at(k, k) < 0) s.negate_row(k);
  }

  SmithDecomposition out;
  out.U = std::move(s.U);
  out.Uinv = std::move(s.Uinv);
  out.V = std::move(s.V);
  out.D = std::move(s.M);
  return out;
}

int rank(const IntMatrix& M) {
  IntMatrix a = M;
  const int m = a.rows(), n = a.cols();
  int r = 0;
  Int prev = 1;
  for (int col = 0; col < n && r < m; ++col) {
    int piv = -1;
    for (int i = r; i < m; ++i)
      if (a.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(r, j));
    for (int i = r + 1; i < m; ++i) {
      for (int j = col + 1; j < n; ++j)
        a.at(i, j) = (a.at(r, col) * a.at(i, j) - a.at(i, col) * a.at(r, j)) / prev;
      a.at(i, col) = 0;
    }
    prev = a.at(r, col);
    ++r;
  }
  return r;
}

Int determinant(const IntMatrix& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant: matrix not square");
  IntMatrix a = M;
  const int n = a.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::optional<IntVec> integer_solve(const IntMatrix& A, const IntVec& b) {
  if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("integer_solve: size mismatch");
  SmithDecomposition s = smith_normal_form(A);
  const int m = A.rows(), n = A.cols();
  IntVec c = s.U * b;
  IntVec y(n, 0);
  const int t = std::min(m, n);
  for (int i = 0; i < t; ++i) {
    const Int& d = s.D.at(i, i);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    }
  }
  for (int i = t; i < m; ++i)
    if (c[i] != 0) return std::nullopt;
  return s.V * y;
}

IntMatrix hermite_column_basis(const IntMatrix& M) {
  IntMatrix a = M;
  const int m = a.rows(), n = a.cols();
  int piv_col = 0;
  std::vector<int> pivot_rows;
  for (int row = 0; row < m && piv_col < n; ++row) {
    // Column gcd sweep on row `row`, using columns >= piv_col.
    for (;;) {
      int j0 = -1;
      Int best = 0;
      for (int j = piv_col; j < n; ++j) {
        const Int& x = a.at(row, j);
        if (x == 0) continue;
        Int ax = x < 0 ? Int(-x) : x;
        if (j0 < 0 || ax < best) {
          best = ax;
          j0 = j;
        }
      }
      if (j0 < 0) break;  // row is zero beyond piv_col
      if (j0 != piv_col)
        for (int r = 0; r < m; ++r) std::swap(a.at(r, j0), a.at(r, piv_col));
      bool clean = true;
      for (int j = piv_col + 1; j < n; ++j) {
        Int q = a.at(row, j) / a.at(row, piv_col);
        if (q != 0)
          for (int r = 0; r < m; ++r) a.at(r, j) -= q * a.at(r, piv_col);
        if (a.at(row, j) != 0) clean = false;
      }
      if (clean) {
        if (a.at(row, piv_col) < 0)
          for (int r = 0; r < m; ++r) a.at(r, piv_col) = -a.at(r, piv_col);
        // Reduce earlier pivot columns against this one.
        for (std::size_t p = 0; p < pivot_rows.size(); ++p) {
          int pj = static_cast<int>(p);
          Int q = a.at(row, pj) / a.at(row, piv_col);
          if (a.at(row, pj) % a.at(row, piv_col) < 0) --q;  // keep residue in [0, pivot)
          if (q != 0)
            for (int r = 0; r < m; ++r) a.at(r, pj) -= q * a.at(r, piv_col);
        }
        pivot_rows.push_back(row);
        ++piv_col;
        break;
      }
    }
  }
  IntMatrix h(m, piv_col);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j < piv_col; ++j) h.at(r, j) = a.at(r, j);
  return h;
}

IntVec reduce_mod_lattice(IntVec v, const IntMatrix& H) {
  const int m = H.rows(), n = H.cols();
  if (static_cast<int>(v.size()) != m) throw std::invalid_argument("reduce_mod_lattice: size mismatch");
  int col = 0;
  for (int row = 0; row < m && col < n; ++row) {
    if (H.at(row, col) == 0) continue;
    const Int& p = H.at(row, col);
    Int q = v[row] / p;
    if (v[row] % p < 0) --q;
    if (q != 0)
      for (int r = 0; r < m; ++r) v[r] -= q * H.at(r, col);
    ++col;
  }
  return v;
}

}  // namespace conic
