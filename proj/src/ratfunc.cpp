#include "ramond/ratfunc.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace ramond {

RatFunc::RatFunc(const ScalarPoly& num, const ScalarPoly& den) : num_(num), den_(den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = ScalarPoly::one();
    return;
  }
  // The polynomial gcd only matters when both sides have positive degree;
  // the common constant/constant case needs just a numeric normalization.
  if (num_.degree() > 0 && den_.degree() > 0) {
    ScalarPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = poly_divmod(num_, g).first;
      den_ = poly_divmod(den_, g).first;
    }
  }
  const Rational lead = den_.leading_coeff();
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

namespace {
bool is_one(const ScalarPoly& p) { return p.degree() == 0 && p.leading_coeff() == 1; }
}  // namespace

RatFunc RatFunc::operator+(const RatFunc& other) const {
  if (is_one(den_) && is_one(other.den_)) return RatFunc(num_ + other.num_);
  return RatFunc(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RatFunc RatFunc::operator-(const RatFunc& other) const {
  if (is_one(den_) && is_one(other.den_)) return RatFunc(num_ - other.num_);
  return RatFunc(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

RatFunc RatFunc::operator*(const RatFunc& other) const {
  if (is_one(den_) && is_one(other.den_)) return RatFunc(num_ * other.num_);
  return RatFunc(num_ * other.num_, den_ * other.den_);
}

RatFunc RatFunc::operator/(const RatFunc& other) const {
  if (other.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(num_ * other.den_, den_ * other.num_);
}

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

namespace {

using SparseRow = std::map<std::size_t, RatFunc>;

// Nullspace of one set of rows over a column set of size `cols`. Gaussian
// elimination with pivot selection that prefers entries of polynomial degree
// zero and sparse rows: dividing through by a pivot that depends on c spreads
// polynomial denominators everywhere and the intermediate degrees explode,
// while constant pivots keep the elimination essentially over Q.
std::vector<std::vector<RatFunc>> nullspace_block(std::vector<SparseRow> rows,
                                                  std::size_t cols) {
  auto entry_weight = [](const RatFunc& v) {
    return std::max(v.num().degree(), v.den().degree());
  };
  // Pivot rows in selection order; each pivot column has been eliminated
  // from every row still active and from no earlier pivot row.
  std::vector<std::pair<std::size_t, SparseRow>> pivots;
  while (true) {
    // Select the pivot: lowest entry degree first, then sparsest row.
    std::size_t best_row = rows.size();
    std::size_t best_col = 0;
    int best_deg = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].empty()) continue;
      for (const auto& [col, v] : rows[i]) {
        const int d = entry_weight(v);
        if (best_row == rows.size() || d < best_deg ||
            (d == best_deg && rows[i].size() < rows[best_row].size())) {
          best_row = i;
          best_col = col;
          best_deg = d;
          if (d == 0) break;  // within a row a constant entry is good enough
        }
      }
    }
    if (best_row == rows.size()) break;
    SparseRow prow = std::move(rows[best_row]);
    rows[best_row].clear();
    const RatFunc inv = RatFunc(ScalarPoly::one()) / prow.at(best_col);
    prow.erase(best_col);
    for (auto& [col, v] : prow) v = v * inv;
    for (auto& row : rows) {
      auto hit = row.find(best_col);
      if (hit == row.end()) continue;
      const RatFunc factor = hit->second;
      row.erase(hit);
      for (const auto& [col, v] : prow) {
        auto rit = row.find(col);
        if (rit == row.end()) {
          row.emplace(col, -(factor * v));
        } else {
          rit->second = rit->second - factor * v;
          if (rit->second.is_zero()) row.erase(rit);
        }
      }
    }
    pivots.emplace_back(best_col, std::move(prow));
  }
  std::vector<bool> is_pivot(cols, false);
  for (const auto& [col, row] : pivots) is_pivot[col] = true;
  std::vector<std::vector<RatFunc>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<RatFunc> vec(cols);
    vec[free_col] = RatFunc(ScalarPoly::one());
    // Back-substitute in reverse selection order: a pivot row never contains
    // the columns of earlier pivots, so x_p = -(sum row[j] * x_j) is resolved
    // once all later pivots are known (the pivot entry itself is 1).
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
      const auto& [pcol, prow] = *it;
      RatFunc acc;
      for (const auto& [col, v] : prow) {
        const RatFunc& x = vec[col];
        if (!x.is_zero()) acc = acc + v * x;
      }
      if (!acc.is_zero()) vec[pcol] = -acc;
    }
    basis.push_back(std::move(vec));
  }
  return basis;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace

std::vector<std::vector<RatFunc>> nullspace(std::vector<std::vector<RatFunc>> matrix,
                                            std::size_t cols) {
  // The constraint matrices here decompose into independent column blocks
  // (e.g. parity sectors), so split the columns into connected components of
  // the row/column incidence graph and solve each block separately.
  std::vector<SparseRow> rows;
  rows.reserve(matrix.size());
  for (auto& dense : matrix) {
    if (dense.size() != cols) throw std::invalid_argument("ragged matrix");
    SparseRow row;
    for (std::size_t j = 0; j < cols; ++j)
      if (!dense[j].is_zero()) row.emplace(j, dense[j]);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  matrix.clear();
  std::vector<std::size_t> parent(cols);
  for (std::size_t j = 0; j < cols; ++j) parent[j] = j;
  for (const auto& row : rows) {
    const std::size_t root = find_root(parent, row.begin()->first);
    for (const auto& [col, v] : row) parent[find_root(parent, col)] = root;
  }
  // Component -> its columns, in ascending order.
  std::map<std::size_t, std::vector<std::size_t>> comp_cols;
  for (std::size_t j = 0; j < cols; ++j) comp_cols[find_root(parent, j)].push_back(j);
  std::map<std::size_t, std::vector<SparseRow>> comp_rows;
  for (auto& row : rows) comp_rows[find_root(parent, row.begin()->first)].push_back(std::move(row));
  std::vector<std::vector<RatFunc>> basis;
  if (std::getenv("RAMOND_NULLSPACE_DEBUG")) {
    std::fprintf(stderr, "nullspace: %zu cols, %zu rows, %zu components:", cols, rows.size(),
                 comp_cols.size());
    for (const auto& [root, sub_cols] : comp_cols) std::fprintf(stderr, " %zu", sub_cols.size());
    std::fprintf(stderr, "\n");
  }
  for (const auto& [root, sub_cols] : comp_cols) {
    std::map<std::size_t, std::size_t> col_index;
    for (std::size_t k = 0; k < sub_cols.size(); ++k) col_index.emplace(sub_cols[k], k);
    std::vector<SparseRow> sub_rows;
    auto rit = comp_rows.find(root);
    if (rit != comp_rows.end()) {
      for (auto& row : rit->second) {
        SparseRow remapped;
        for (auto& [col, v] : row) remapped.emplace(col_index.at(col), std::move(v));
        sub_rows.push_back(std::move(remapped));
      }
    }
    for (auto& sub_vec : nullspace_block(std::move(sub_rows), sub_cols.size())) {
      std::vector<RatFunc> vec(cols);
      for (std::size_t k = 0; k < sub_cols.size(); ++k)
        if (!sub_vec[k].is_zero()) vec[sub_cols[k]] = std::move(sub_vec[k]);
      basis.push_back(std::move(vec));
    }
  }
  return basis;
}

}  // namespace ramond
