#include "syz/rational_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "syz/error.hpp"

namespace syz {

namespace {

using Row = RationalMatrix::Row;

std::string index_message(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) {
  return "entry (" + std::to_string(r) + ", " + std::to_string(c) + ") outside a " +
         std::to_string(rows) + "x" + std::to_string(cols) + " matrix";
}

// a - factor * b, both sorted by column.
Row axpy(const Row& a, const Rational& factor, const Row& b) {
  Row out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, -factor * b[j].value});
      ++j;
    } else {
      Rational v = a[i].value - factor * b[j].value;
      if (v != 0) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Incremental row echelon form. Every stored pivot row starts with a 1 in its
// pivot column.
class Echelon {
 public:
  explicit Echelon(std::size_t cols) : pivot_of_col_(cols, kNone) {}

  void insert(Row row) {
    while (!row.empty()) {
      const std::size_t lead = row.front().col;
      const std::size_t p = pivot_of_col_[lead];
      if (p == kNone) {
        const Rational inv = 1 / row.front().value;
        if (inv != 1) {
          for (auto& e : row) e.value *= inv;
        }
        pivot_of_col_[lead] = pivots_.size();
        pivots_.push_back(std::move(row));
        return;
      }
      const Rational factor = row.front().value;
      row = axpy(row, factor, pivots_[p]);
    }
  }

  std::size_t rank() const { return pivots_.size(); }

  // Reduced row echelon form: pivot rows in increasing pivot column, with all
  // other pivot columns cleared.
  std::vector<Row> reduced() const {
    std::vector<std::size_t> order(pivots_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return pivots_[a].front().col < pivots_[b].front().col;
    });
    std::vector<Row> rows(pivots_.size());
    std::vector<std::size_t> slot_of(pivots_.size());
    for (std::size_t k = 0; k < order.size(); ++k) slot_of[order[k]] = k;
    for (std::size_t k = order.size(); k-- > 0;) {
      Row r = pivots_[order[k]];
      const std::size_t own = r.front().col;
      for (std::size_t idx = 1; idx < r.size();) {
        const std::size_t c = r[idx].col;
        const std::size_t p = pivot_of_col_[c];
        if (p == kNone || c == own) {
          ++idx;
          continue;
        }
        const Rational factor = r[idx].value;
        r = axpy(r, factor, rows[slot_of[p]]);
        // entries left of idx are untouched; re-scan from the same position
      }
      rows[k] = std::move(r);
    }
    return rows;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> pivot_of_col_;
  std::vector<Row> pivots_;
};

Echelon eliminate(const RationalMatrix& m) {
  std::vector<std::size_t> order(m.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.row(a).size() < m.row(b).size();
  });
  Echelon ech(m.cols());
  for (std::size_t r : order) {
    if (!m.row(r).empty()) ech.insert(m.row(r));
  }
  return ech;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

RationalMatrix RationalMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                             std::vector<Triplet> triplets) {
  RationalMatrix m(rows, cols);
  for (const auto& t : triplets) {
    if (t.row >= rows || t.col >= cols) {
      throw RangeError(index_message(t.row, t.col, rows, cols));
    }
  }
  std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t i = 0; i < triplets.size();) {
    std::size_t j = i;
    Rational sum = 0;
    while (j < triplets.size() && triplets[j].row == triplets[i].row &&
           triplets[j].col == triplets[i].col) {
      sum += triplets[j].value;
      ++j;
    }
    if (sum != 0) m.data_[triplets[i].row].push_back({triplets[i].col, std::move(sum)});
    i = j;
  }
  return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& dense) {
  const std::size_t rows = dense.size();
  const std::size_t cols = rows == 0 ? 0 : dense.front().size();
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (dense[r].size() != cols) throw RangeError("ragged dense matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      if (dense[r][c] != 0) m.data_[r].push_back({c, dense[r][c]});
    }
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({i, Rational(1)});
  return m;
}

std::size_t RationalMatrix::nnz() const noexcept {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Rational RationalMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw RangeError(index_message(r, c, rows_, cols_));
  const Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return 0;
}

void RationalMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) throw RangeError(index_message(r, c, rows_, cols_));
  Row& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  const bool present = it != row.end() && it->col == c;
  if (value == 0) {
    if (present) row.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    row.insert(it, Entry{c, value});
  }
}

std::vector<Triplet> RationalMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out.push_back({r, e.col, e.value});
  }
  return out;
}

std::vector<std::vector<Rational>> RationalMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_, Rational(0)));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) out[r][e.col] = e.value;
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (const auto& e : data_[r]) t.data_[e.col].push_back({r, e.value});
  }
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw RangeError("shape mismatch in product: " + std::to_string(a.rows_) + "x" +
                     std::to_string(a.cols_) + " times " + std::to_string(b.rows_) + "x" +
                     std::to_string(b.cols_));
  }
  RationalMatrix out(a.rows_, b.cols_);
  std::vector<Rational> acc(b.cols_);
  std::vector<char> touched(b.cols_, 0);
  std::vector<std::size_t> cols_seen;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    cols_seen.clear();
    for (const auto& ea : a.data_[r]) {
      for (const auto& eb : b.data_[ea.col]) {
        if (!touched[eb.col]) {
          touched[eb.col] = 1;
          acc[eb.col] = 0;
          cols_seen.push_back(eb.col);
        }
        acc[eb.col] += ea.value * eb.value;
      }
    }
    std::sort(cols_seen.begin(), cols_seen.end());
    for (std::size_t c : cols_seen) {
      touched[c] = 0;
      if (acc[c] != 0) out.data_[r].push_back({c, acc[c]});
    }
  }
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    const auto& x = a.data_[r];
    const auto& y = b.data_[r];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].col != y[i].col || x[i].value != y[i].value) return false;
    }
  }
  return true;
}

std::vector<Rational> apply(const RationalMatrix& m, const std::vector<Rational>& v) {
  if (v.size() != m.cols()) throw RangeError("vector length does not match matrix columns");
  std::vector<Rational> out(m.rows(), Rational(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& e : m.row(r)) out[r] += e.value * v[e.col];
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) { return eliminate(m).rank(); }

std::size_t kernel_dim(const RationalMatrix& m) { return m.cols() - rank(m); }

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  const auto rref = eliminate(m).reduced();
  std::vector<char> is_pivot(m.cols(), 0);
  for (const auto& r : rref) is_pivot[r.front().col] = 1;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (const auto& r : rref) {
      auto it = std::lower_bound(r.begin(), r.end(), f, [](const RationalMatrix::Entry& e,
                                                          std::size_t col) { return e.col < col; });
      if (it != r.end() && it->col == f) v[r.front().col] = -it->value;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace syz
