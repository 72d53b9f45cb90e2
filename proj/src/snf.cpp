#include "snf.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace jensen {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_int_rows(const std::vector<std::vector<std::int32_t>>& rows,
                             std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged row in matrix input");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::multiply(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += v * rhs.at(k, j);
      }
    }
  }
  return out;
}

std::string Matrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ' ';
      out += at(i, j).str();
    }
    out += '\n';
  }
  return out;
}

Matrix SnfResult::s_matrix(std::size_t rows, std::size_t cols) const {
  Matrix s(rows, cols);
  for (std::size_t i = 0; i < diagonal.size(); ++i) s.at(i, i) = diagonal[i];
  return s;
}

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  for (const Int& d : diagonal) {
    if (d != 0) ++r;
  }
  return r;
}

namespace {

// Quotient with a symmetric remainder: |a - q*b| <= |b|/2.
Int nearest_quotient(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (2 * abs(r) > abs(b)) {
    q += ((r > 0) == (b > 0)) ? 1 : -1;
  }
  return q;
}

// g = gcd(a, b) > 0 with x*a + y*b = g (a, b not both zero).
Int extended_gcd(Int a, Int b, Int& x, Int& y) {
  Int old_r = std::move(a), r = std::move(b);
  Int old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = std::exchange(r, std::move(tmp));
    tmp = old_s - q * s;
    old_s = std::exchange(s, std::move(tmp));
    tmp = old_t - q * t;
    old_t = std::exchange(t, std::move(tmp));
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

}  // namespace

SnfResult smith_normal_form(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Matrix s = a;
  SnfResult res;
  res.u = Matrix::identity(m);
  res.v = Matrix::identity(n);
  res.v_inv = Matrix::identity(n);

  // Row op S <- E*S is matched by U <- U*E^-1, column op S <- S*F by
  // V <- F^-1*V and V_inv <- V_inv*F, keeping A = U*S*V throughout.
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(s.at(i, c), s.at(j, c));
    for (std::size_t r = 0; r < m; ++r) std::swap(res.u.at(r, i), res.u.at(r, j));
    res.det_u = -res.det_u;
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(s.at(r, i), s.at(r, j));
    for (std::size_t c = 0; c < n; ++c) std::swap(res.v.at(i, c), res.v.at(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(res.v_inv.at(r, i), res.v_inv.at(r, j));
    res.det_v = -res.det_v;
  };
  auto negate_row = [&](std::size_t i) {
    for (std::size_t c = 0; c < n; ++c) s.at(i, c) = -s.at(i, c);
    for (std::size_t r = 0; r < m; ++r) res.u.at(r, i) = -res.u.at(r, i);
    res.det_u = -res.det_u;
  };
  // row i -= q * row t
  auto row_axpy = [&](std::size_t i, std::size_t t, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < n; ++c) {
      if (s.at(t, c) != 0) s.at(i, c) -= q * s.at(t, c);
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (res.u.at(r, i) != 0) res.u.at(r, t) += q * res.u.at(r, i);
    }
  };
  // col j -= q * col t
  auto col_axpy = [&](std::size_t j, std::size_t t, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m; ++r) {
      if (s.at(r, t) != 0) s.at(r, j) -= q * s.at(r, t);
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (res.v.at(j, c) != 0) res.v.at(t, c) += q * res.v.at(j, c);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (res.v_inv.at(r, t) != 0) res.v_inv.at(r, j) -= q * res.v_inv.at(r, t);
    }
  };

  const std::size_t bound = std::min(m, n);
  for (std::size_t t = 0; t < bound; ++t) {
    // Minimal-absolute-value pivot, ties by lowest (row, col).
    auto find_pivot = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      Int best_abs = 0;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (s.at(i, j) == 0) continue;
          Int v = abs(s.at(i, j));
          if (!best || v < best_abs) {
            best = {i, j};
            best_abs = std::move(v);
          }
        }
      }
      return best;
    };

    auto pivot = find_pivot();
    if (!pivot) break;

    while (true) {
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);

      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (s.at(i, t) == 0) continue;
        row_axpy(i, t, nearest_quotient(s.at(i, t), s.at(t, t)));
        if (s.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (s.at(t, j) == 0) continue;
        col_axpy(j, t, nearest_quotient(s.at(t, j), s.at(t, t)));
        if (s.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        pivot = find_pivot();
        continue;
      }

      // The pivot must divide every remaining entry; fold an offending row
      // into row t and keep reducing.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i) {
        for (std::size_t j = t + 1; j < n && divisible; ++j) {
          if (s.at(i, j) % s.at(t, t) != 0) {
            row_axpy(t, i, Int(-1));
            divisible = false;
          }
        }
      }
      if (divisible) break;
      pivot = {{t, t}};
    }
  }

  for (std::size_t t = 0; t < bound; ++t) {
    if (s.at(t, t) < 0) negate_row(t);
  }

  res.diagonal.resize(bound);
  for (std::size_t t = 0; t < bound; ++t) res.diagonal[t] = s.at(t, t);

  for (std::size_t t = 0; t + 1 < bound; ++t) {
    if (res.diagonal[t + 1] != 0 && res.diagonal[t] == 0) {
      throw std::logic_error("smith normal form: zero before nonzero on the diagonal");
    }
    if (res.diagonal[t] != 0 && res.diagonal[t + 1] % res.diagonal[t] != 0) {
      throw std::logic_error("smith normal form: diagonal divisibility chain broken");
    }
  }
  if (!(res.u.multiply(res.s_matrix(m, n)).multiply(res.v) == a)) {
    throw std::logic_error("smith normal form: U*S*V does not reproduce the input");
  }
  if (!(res.v.multiply(res.v_inv) == Matrix::identity(n))) {
    throw std::logic_error("smith normal form: V_inv is not the inverse of V");
  }
  return res;
}

Matrix row_module_basis(const Matrix& a) {
  const std::size_t n = a.cols();
  std::vector<std::optional<std::vector<Int>>> basis(n);

  for (std::size_t ri = 0; ri < a.rows(); ++ri) {
    std::vector<Int> row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = a.at(ri, j);

    while (true) {
      std::size_t lead = 0;
      while (lead < n && row[lead] == 0) ++lead;
      if (lead == n) break;

      if (!basis[lead]) {
        if (row[lead] < 0) {
          for (Int& v : row) v = -v;
        }
        basis[lead] = std::move(row);
        break;
      }

      std::vector<Int>& b = *basis[lead];
      if (row[lead] % b[lead] == 0) {
        const Int q = row[lead] / b[lead];
        for (std::size_t j = lead; j < n; ++j) {
          if (b[j] != 0) row[j] -= q * b[j];
        }
      } else {
        // Replace (b, row) by a unimodular combination whose first row has
        // the gcd as leading entry; the second loses its leading entry.
        Int x, y;
        const Int g = extended_gcd(b[lead], row[lead], x, y);
        const Int bs = b[lead] / g;
        const Int rs = row[lead] / g;
        std::vector<Int> nb(n), nr(n);
        for (std::size_t j = lead; j < n; ++j) {
          nb[j] = x * b[j] + y * row[j];
          nr[j] = bs * row[j] - rs * b[j];
        }
        *basis[lead] = std::move(nb);
        row = std::move(nr);
      }
    }
  }

  std::vector<std::vector<Int>> rows;
  for (std::size_t j = 0; j < n; ++j) {
    if (basis[j]) rows.push_back(std::move(*basis[j]));
  }
  Matrix out(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = std::move(rows[i][j]);
  }
  return out;
}

}  // namespace jensen
