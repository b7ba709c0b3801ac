#include "cmprob/contmat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cmprob {

namespace {

// Entry of m on line `line` at position `pos` along the given axis.
int along(const ContingencyMatrix& m, Axis axis, std::size_t line,
          std::size_t pos) {
  return axis == Axis::Horizontal ? m.at(pos, line) : m.at(line, pos);
}

std::size_t across(const ContingencyMatrix& m, Axis axis) {
  return axis == Axis::Horizontal ? m.rows() : m.cols();
}

void check_index(std::size_t k, std::size_t hi, const char* what) {
  if (k < 1 || k > hi)
    throw IndexOutOfRange(std::string(what) + " index " + std::to_string(k) +
                          " outside 1.." + std::to_string(hi));
}

// Builds a matrix from line vectors taken along `axis`.
ContingencyMatrix from_lines(Axis axis, std::size_t n_across,
                             const std::vector<std::vector<int>>& lines) {
  std::size_t n_lines = lines.size();
  std::size_t r = axis == Axis::Horizontal ? n_across : n_lines;
  std::size_t c = axis == Axis::Horizontal ? n_lines : n_across;
  std::vector<int> e(r * c);
  for (std::size_t l = 0; l < n_lines; ++l)
    for (std::size_t p = 0; p < n_across; ++p) {
      if (axis == Axis::Horizontal)
        e[p * c + l] = lines[l][p];
      else
        e[l * c + p] = lines[l][p];
    }
  return ContingencyMatrix::unchecked(r, c, std::move(e));
}

std::vector<int> line(const ContingencyMatrix& m, Axis axis, std::size_t l) {
  std::vector<int> v(across(m, axis));
  for (std::size_t p = 0; p < v.size(); ++p) v[p] = along(m, axis, l, p);
  return v;
}

bool has_zero_line(const std::vector<int>& e, std::size_t r, std::size_t c) {
  for (std::size_t i = 0; i < r; ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < c; ++j) nz = nz || e[i * c + j] != 0;
    if (!nz) return true;
  }
  for (std::size_t j = 0; j < c; ++j) {
    bool nz = false;
    for (std::size_t i = 0; i < r; ++i) nz = nz || e[i * c + j] != 0;
    if (!nz) return true;
  }
  return false;
}

// All nonnegative r x c tables (row-major) with the given margins.
void tables_rec(const std::vector<int>& rs, std::vector<int>& cs,
                std::size_t cell, std::vector<int>& cur, int row_left,
                std::vector<std::vector<int>>& out) {
  std::size_t c = cs.size();
  std::size_t r = rs.size();
  if (cell == r * c) {
    out.push_back(cur);
    return;
  }
  std::size_t i = cell / c, j = cell % c;
  if (j == 0) row_left = rs[i];
  if (j == c - 1) {
    if (row_left > cs[j]) return;
    if (i == r - 1 && row_left != cs[j]) return;
    cur[cell] = row_left;
    cs[j] -= row_left;
    tables_rec(rs, cs, cell + 1, cur, 0, out);
    cs[j] += row_left;
    return;
  }
  int hi = std::min(row_left, cs[j]);
  int lo = 0;
  if (i == r - 1) lo = hi = cs[j];
  if (lo > row_left) return;
  for (int v = lo; v <= hi; ++v) {
    cur[cell] = v;
    cs[j] -= v;
    tables_rec(rs, cs, cell + 1, cur, row_left - v, out);
    cs[j] += v;
  }
}

std::vector<std::vector<int>> tables_with_margins(const std::vector<int>& rs,
                                                  std::vector<int> cs) {
  std::vector<std::vector<int>> out;
  if (rs.empty() || cs.empty()) {
    out.emplace_back();
    return out;
  }
  std::vector<int> cur(rs.size() * cs.size());
  tables_rec(rs, cs, 0, cur, 0, out);
  return out;
}

// Greedy grouping of the totals `fine` into consecutive blocks with totals
// `coarse`.
std::optional<std::vector<std::size_t>> group_totals(
    const std::vector<int>& coarse, const std::vector<int>& fine) {
  std::vector<std::size_t> blocks;
  std::size_t pos = 0;
  for (int target : coarse) {
    int acc = 0;
    std::size_t len = 0;
    while (acc < target && pos < fine.size()) {
      acc += fine[pos++];
      ++len;
    }
    if (acc != target || len == 0) return std::nullopt;
    blocks.push_back(len);
  }
  if (pos != fine.size()) return std::nullopt;
  return blocks;
}

std::vector<int> line_totals(const ContingencyMatrix& m, Axis axis) {
  return axis == Axis::Horizontal ? m.col_sums() : m.row_sums();
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<int> ContingencyMatrix::row_sums() const {
  std::vector<int> s(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s[i] += at(i, j);
  return s;
}

std::vector<int> ContingencyMatrix::col_sums() const {
  std::vector<int> s(cols_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) s[j] += at(i, j);
  return s;
}

Grid ContingencyMatrix::grid() const {
  Grid g(rows_, std::vector<long>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) g[i][j] = at(i, j);
  return g;
}

std::string ContingencyMatrix::key() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) s += ',';
    s += '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) s += ',';
      s += std::to_string(at(i, j));
    }
    s += ']';
  }
  return s + "]";
}

ContingencyMatrix ContingencyMatrix::transpose() const {
  std::vector<int> e(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) e[j * rows_ + i] = at(i, j);
  return unchecked(cols_, rows_, std::move(e));
}

std::strong_ordering operator<=>(const ContingencyMatrix& a,
                                 const ContingencyMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  return a.entries_ <=> b.entries_;
}

ContingencyMatrix ContingencyMatrix::unchecked(std::size_t rows,
                                               std::size_t cols,
                                               std::vector<int> entries) {
  ContingencyMatrix m;
  if (rows == 0 || cols == 0) return m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.entries_ = std::move(entries);
  m.weight_ = std::accumulate(m.entries_.begin(), m.entries_.end(), 0);
  return m;
}

int IntegerPartition::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

ContingencyMatrix validate(const Grid& g) {
  std::size_t r = g.size();
  std::size_t c = r ? g[0].size() : 0;
  for (const auto& row : g)
    if (row.size() != c) throw ParseError("ragged grid");
  if (r == 0 || c == 0) {
    if (r != 0) throw ZeroLine(Axis::Vertical, 1);
    return ContingencyMatrix{};
  }
  std::vector<int> e(r * c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (g[i][j] < 0)
        throw NegativeEntry("negative entry at (" + std::to_string(i + 1) +
                            "," + std::to_string(j + 1) + ")");
      e[i * c + j] = static_cast<int>(g[i][j]);
    }
  for (std::size_t i = 0; i < r; ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < c; ++j) nz = nz || e[i * c + j];
    if (!nz) throw ZeroLine(Axis::Vertical, i + 1);
  }
  for (std::size_t j = 0; j < c; ++j) {
    bool nz = false;
    for (std::size_t i = 0; i < r; ++i) nz = nz || e[i * c + j];
    if (!nz) throw ZeroLine(Axis::Horizontal, j + 1);
  }
  return ContingencyMatrix::unchecked(r, c, std::move(e));
}

ContingencyMatrix contract(const ContingencyMatrix& m, Axis axis,
                           std::size_t k) {
  std::size_t n = m.lines(axis);
  check_index(k, n == 0 ? 0 : n - 1, "contraction");
  std::vector<std::vector<int>> ls;
  for (std::size_t l = 0; l < n; ++l) {
    if (l == k) {
      auto extra = line(m, axis, l);
      for (std::size_t p = 0; p < extra.size(); ++p) ls.back()[p] += extra[p];
    } else {
      ls.push_back(line(m, axis, l));
    }
  }
  return from_lines(axis, across(m, axis), ls);
}

std::vector<ContingencyMatrix> expansions(const ContingencyMatrix& m,
                                          Axis axis, std::size_t k) {
  std::size_t n = m.lines(axis);
  check_index(k, n, "expansion");
  std::vector<std::vector<int>> ls;
  for (std::size_t l = 0; l < n; ++l) ls.push_back(line(m, axis, l));
  const std::vector<int> split = ls[k - 1];
  std::vector<ContingencyMatrix> out;
  std::vector<int> a(split.size(), 0);
  // Odometer over 0 <= a_p <= split_p.
  while (true) {
    std::vector<int> b(split.size());
    bool a_nz = false, b_nz = false;
    for (std::size_t p = 0; p < split.size(); ++p) {
      b[p] = split[p] - a[p];
      a_nz = a_nz || a[p];
      b_nz = b_nz || b[p];
    }
    if (a_nz && b_nz) {
      auto ls2 = ls;
      ls2[k - 1] = a;
      ls2.insert(ls2.begin() + static_cast<std::ptrdiff_t>(k), b);
      out.push_back(from_lines(axis, split.size(), ls2));
    }
    std::size_t p = 0;
    while (p < a.size() && a[p] == split[p]) a[p++] = 0;
    if (p == a.size()) break;
    ++a[p];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<std::size_t>> grouping(const ContingencyMatrix& m,
                                                 const ContingencyMatrix& n,
                                                 Axis axis) {
  if (m.weight() != n.weight()) return std::nullopt;
  if (m.empty()) return std::vector<std::size_t>{};
  if (across(m, axis) != across(n, axis)) return std::nullopt;
  auto blocks = group_totals(line_totals(m, axis), line_totals(n, axis));
  if (!blocks) return std::nullopt;
  std::size_t pos = 0;
  for (std::size_t l = 0; l < blocks->size(); ++l) {
    for (std::size_t p = 0; p < across(m, axis); ++p) {
      int acc = 0;
      for (std::size_t t = 0; t < (*blocks)[l]; ++t)
        acc += along(n, axis, pos + t, p);
      if (acc != along(m, axis, l, p)) return std::nullopt;
    }
    pos += (*blocks)[l];
  }
  return blocks;
}

bool leq(const ContingencyMatrix& m, const ContingencyMatrix& n, Axis axis) {
  return grouping(m, n, axis).has_value();
}

bool is_anodyne_step(const ContingencyMatrix& n, Axis axis, std::size_t k) {
  std::size_t len = n.lines(axis);
  check_index(k, len == 0 ? 0 : len - 1, "contraction");
  for (std::size_t p = 0; p < across(n, axis); ++p)
    if (along(n, axis, k - 1, p) != 0 && along(n, axis, k, p) != 0)
      return false;
  return true;
}

bool is_anodyne_leq(const ContingencyMatrix& m, const ContingencyMatrix& n,
                    Axis axis) {
  if (!leq(m, n, axis)) throw NotComparable(m.key() + " vs " + n.key());
  std::set<ContingencyMatrix> seen{n};
  std::deque<ContingencyMatrix> todo{n};
  while (!todo.empty()) {
    ContingencyMatrix x = todo.front();
    todo.pop_front();
    if (x == m) return true;
    for (std::size_t k = 1; k < x.lines(axis); ++k) {
      if (!is_anodyne_step(x, axis, k)) continue;
      ContingencyMatrix y = contract(x, axis, k);
      if (!leq(m, y, axis) || !seen.insert(y).second) continue;
      todo.push_back(y);
    }
  }
  return false;
}

std::vector<ContingencyMatrix> down_set(const ContingencyMatrix& n, Axis axis) {
  std::set<ContingencyMatrix> seen{n};
  std::deque<ContingencyMatrix> todo{n};
  while (!todo.empty()) {
    ContingencyMatrix x = todo.front();
    todo.pop_front();
    for (std::size_t k = 1; k < x.lines(axis); ++k) {
      ContingencyMatrix y = contract(x, axis, k);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<ContingencyMatrix> up_set(const ContingencyMatrix& m, Axis axis) {
  std::set<ContingencyMatrix> seen{m};
  std::deque<ContingencyMatrix> todo{m};
  while (!todo.empty()) {
    ContingencyMatrix x = todo.front();
    todo.pop_front();
    if (x.empty()) continue;
    for (std::size_t k = 1; k <= x.lines(axis); ++k)
      for (auto& y : expansions(x, axis, k))
        if (seen.insert(y).second) todo.push_back(std::move(y));
  }
  return {seen.begin(), seen.end()};
}

namespace {

void chains_rec(const ContingencyMatrix& m, const ContingencyMatrix& x,
                Axis axis, std::vector<ContingencyMatrix>& mats,
                std::vector<std::size_t>& ks,
                std::vector<ContractionChain>& out) {
  if (x == m) {
    ContractionChain c{axis, {mats.rbegin(), mats.rend()},
                       {ks.rbegin(), ks.rend()}};
    out.push_back(std::move(c));
    return;
  }
  for (std::size_t k = 1; k < x.lines(axis); ++k) {
    ContingencyMatrix y = contract(x, axis, k);
    if (!leq(m, y, axis)) continue;
    mats.push_back(y);
    ks.push_back(k);
    chains_rec(m, y, axis, mats, ks, out);
    mats.pop_back();
    ks.pop_back();
  }
}

}  // namespace

std::vector<ContractionChain> contraction_chains(const ContingencyMatrix& m,
                                                 const ContingencyMatrix& n,
                                                 Axis axis) {
  if (!leq(m, n, axis)) throw NotComparable(m.key() + " vs " + n.key());
  std::vector<ContractionChain> out;
  std::vector<ContingencyMatrix> mats{n};
  std::vector<std::size_t> ks;
  chains_rec(m, n, axis, mats, ks, out);
  return out;
}

ContractionChain canonical_chain(const ContingencyMatrix& m,
                                 const ContingencyMatrix& n, Axis axis) {
  auto blocks = grouping(m, n, axis);
  if (!blocks) throw NotComparable(m.key() + " vs " + n.key());
  std::vector<ContingencyMatrix> down{n};
  std::vector<std::size_t> ks;
  ContingencyMatrix x = n;
  std::size_t start = 1;  // 1-based index of the current block's first line
  for (std::size_t b : *blocks) {
    for (std::size_t t = 1; t < b; ++t) {
      x = contract(x, axis, start);
      down.push_back(x);
      ks.push_back(start);
    }
    ++start;
  }
  return ContractionChain{axis, {down.rbegin(), down.rend()},
                          {ks.rbegin(), ks.rend()}};
}

namespace {

void compositions_rec(std::size_t total, std::size_t parts,
                      std::vector<std::size_t>& cur,
                      std::vector<std::vector<std::size_t>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(cur);
    return;
  }
  for (std::size_t v = 1; v + (parts - 1) <= total; ++v) {
    cur.push_back(v);
    compositions_rec(total - v, parts - 1, cur, out);
    cur.pop_back();
  }
}

ContingencyMatrix merge_blocks(const ContingencyMatrix& m, Axis axis,
                               const std::vector<std::size_t>& blocks) {
  std::vector<std::vector<int>> ls;
  std::size_t pos = 0;
  for (std::size_t b : blocks) {
    std::vector<int> acc(across(m, axis), 0);
    for (std::size_t t = 0; t < b; ++t)
      for (std::size_t p = 0; p < acc.size(); ++p)
        acc[p] += along(m, axis, pos + t, p);
    pos += b;
    ls.push_back(std::move(acc));
  }
  return from_lines(axis, across(m, axis), ls);
}

}  // namespace

std::optional<ContingencyMatrix> meet(const ContingencyMatrix& m,
                                      const ContingencyMatrix& l) {
  if (m.weight() != l.weight()) return std::nullopt;
  if (m.empty()) return ContingencyMatrix{};
  if (l.rows() > m.rows() || m.cols() > l.cols()) return std::nullopt;
  std::vector<std::vector<std::size_t>> comps;
  std::vector<std::size_t> cur;
  compositions_rec(m.rows(), l.rows(), cur, comps);
  std::optional<ContingencyMatrix> found;
  for (const auto& c : comps) {
    ContingencyMatrix cand = merge_blocks(m, Axis::Vertical, c);
    if (!leq(cand, l, Axis::Horizontal)) continue;
    if (found && *found != cand)
      throw NonUniqueMeet(m.key() + " and " + l.key());
    found = cand;
  }
  return found;
}

std::vector<ContingencyMatrix> sup_set(const ContingencyMatrix& m,
                                       const ContingencyMatrix& l) {
  auto n = meet(m, l);
  if (!n) throw NoMeet(m.key() + " and " + l.key());
  if (m.empty()) return {ContingencyMatrix{}};
  auto row_blocks = *grouping(*n, m, Axis::Vertical);
  auto col_blocks = *grouping(*n, l, Axis::Horizontal);
  std::vector<std::size_t> row_start{0}, col_start{0};
  for (auto b : row_blocks) row_start.push_back(row_start.back() + b);
  for (auto b : col_blocks) col_start.push_back(col_start.back() + b);

  std::size_t r = m.rows(), c = l.cols();
  // One list of candidate tables per block.
  std::vector<std::vector<std::vector<int>>> block_tables;
  for (std::size_t a = 0; a < row_blocks.size(); ++a)
    for (std::size_t b = 0; b < col_blocks.size(); ++b) {
      std::vector<int> rs, cs;
      for (std::size_t i = row_start[a]; i < row_start[a + 1]; ++i)
        rs.push_back(m.at(i, b));
      for (std::size_t j = col_start[b]; j < col_start[b + 1]; ++j)
        cs.push_back(l.at(a, j));
      block_tables.push_back(tables_with_margins(rs, cs));
    }

  std::vector<ContingencyMatrix> out;
  std::vector<std::size_t> pick(block_tables.size(), 0);
  while (true) {
    std::vector<int> e(r * c, 0);
    std::size_t idx = 0;
    for (std::size_t a = 0; a < row_blocks.size(); ++a)
      for (std::size_t b = 0; b < col_blocks.size(); ++b, ++idx) {
        const auto& t = block_tables[idx][pick[idx]];
        std::size_t bc = col_blocks[b];
        for (std::size_t i = 0; i < row_blocks[a]; ++i)
          for (std::size_t j = 0; j < bc; ++j)
            e[(row_start[a] + i) * c + col_start[b] + j] = t[i * bc + j];
      }
    if (!has_zero_line(e, r, c))
      out.push_back(ContingencyMatrix::unchecked(r, c, std::move(e)));
    std::size_t p = 0;
    while (p < pick.size() && pick[p] + 1 == block_tables[p].size())
      pick[p++] = 0;
    if (p == pick.size()) break;
    ++pick[p];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ContingencyMatrix direct_sum(const ContingencyMatrix& m,
                             const ContingencyMatrix& n) {
  if (m.empty()) return n;
  if (n.empty()) return m;
  std::size_t r = m.rows() + n.rows(), c = m.cols() + n.cols();
  std::vector<int> e(r * c, 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e[i * c + j] = m.at(i, j);
  for (std::size_t i = 0; i < n.rows(); ++i)
    for (std::size_t j = 0; j < n.cols(); ++j)
      e[(m.rows() + i) * c + m.cols() + j] = n.at(i, j);
  return ContingencyMatrix::unchecked(r, c, std::move(e));
}

bool lines_disjoint(const ContingencyMatrix& m, Axis axis, std::size_t k) {
  return is_anodyne_step(m, axis, k);
}

ContingencyMatrix exchange(const ContingencyMatrix& m, Axis axis,
                           std::size_t k) {
  if (!lines_disjoint(m, axis, k))
    throw NotDisjoint(std::string(axis == Axis::Horizontal ? "columns "
                                                           : "rows ") +
                      std::to_string(k) + "," + std::to_string(k + 1) +
                      " of " + m.key());
  std::vector<std::vector<int>> ls;
  for (std::size_t l = 0; l < m.lines(axis); ++l) ls.push_back(line(m, axis, l));
  std::swap(ls[k - 1], ls[k]);
  return from_lines(axis, across(m, axis), ls);
}

namespace {

// Row-major fill with pruning on the weight still needed to make every row
// and column nonzero.
void enum_rec(std::size_t r, std::size_t c, std::size_t cell, int left,
              std::vector<int>& e, std::vector<int>& col_acc,
              std::size_t zero_cols, bool row_nz,
              std::vector<ContingencyMatrix>& out) {
  if (cell == r * c) {
    if (left == 0 && zero_cols == 0) out.push_back(
        ContingencyMatrix::unchecked(r, c, e));
    return;
  }
  std::size_t i = cell / c, j = cell % c;
  if (j == 0) row_nz = false;
  std::size_t rows_after = r - i - 1;
  for (int v = 0; v <= left; ++v) {
    bool nz = row_nz || v > 0;
    if (j == c - 1 && !nz) continue;
    std::size_t zc = zero_cols - ((col_acc[j] == 0 && v > 0) ? 1 : 0);
    int rest = left - v;
    // Rows still to come each need one unit; so does the current row if it
    // is still zero.
    std::size_t need_rows = rows_after + (nz ? 0 : 1);
    if (static_cast<std::size_t>(rest) < need_rows) break;
    // Zero columns left of or at j can only be filled from later rows.
    if (rows_after == 0) {
      std::size_t later_zero = 0;
      for (std::size_t jj = j + 1; jj < c; ++jj) later_zero += col_acc[jj] == 0;
      if (zc != later_zero) continue;
      if (static_cast<std::size_t>(rest) < later_zero) break;
    } else if (static_cast<std::size_t>(rest) < zc) {
      break;
    }
    e[cell] = v;
    col_acc[j] += v;
    enum_rec(r, c, cell + 1, rest, e, col_acc, zc, nz, out);
    col_acc[j] -= v;
  }
  e[cell] = 0;
}

}  // namespace

std::vector<ContingencyMatrix> enumerate(
    int n, std::optional<std::pair<std::size_t, std::size_t>> shape) {
  if (n < 0) throw InvalidParameter("negative weight");
  std::vector<ContingencyMatrix> out;
  if (n == 0) {
    if (!shape || (shape->first == 0 && shape->second == 0))
      out.emplace_back();
    return out;
  }
  auto nn = static_cast<std::size_t>(n);
  for (std::size_t r = 1; r <= nn; ++r)
    for (std::size_t c = 1; c <= nn; ++c) {
      if (shape && (shape->first != r || shape->second != c)) continue;
      if (r > nn || c > nn) continue;
      std::vector<int> e(r * c, 0), col_acc(c, 0);
      enum_rec(r, c, 0, n, e, col_acc, c, false, out);
    }
  std::sort(out.begin(), out.end());
  return out;
}

IntegerPartition entry_partition(const ContingencyMatrix& m) {
  IntegerPartition p;
  for (int v : m.entries())
    if (v) p.parts.push_back(v);
  std::sort(p.parts.begin(), p.parts.end(), std::greater<>());
  return p;
}

std::vector<std::vector<ContingencyMatrix>> anodyne_classes(int n) {
  auto all = enumerate(n);
  std::unordered_map<ContingencyMatrix, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
  std::vector<std::size_t> parent(all.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < all.size(); ++i)
    for (Axis axis : {Axis::Horizontal, Axis::Vertical})
      for (std::size_t k = 1; k < all[i].lines(axis); ++k)
        if (is_anodyne_step(all[i], axis, k)) {
          std::size_t a = find(i), b = find(index.at(contract(all[i], axis, k)));
          if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
  std::map<std::size_t, std::vector<ContingencyMatrix>> groups;
  for (std::size_t i = 0; i < all.size(); ++i)
    groups[find(i)].push_back(all[i]);
  std::vector<std::vector<ContingencyMatrix>> out;
  for (auto& [root, cls] : groups) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

std::vector<IntegerPartition> partitions(int n) {
  std::vector<IntegerPartition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max_part) -> void {
    if (left == 0) {
      out.push_back({cur});
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

ContingencyMatrix diagonal(const std::vector<int>& diag) {
  ContingencyMatrix m;
  for (int v : diag) m = direct_sum(m, validate({{v}}));
  return m;
}

ContingencyMatrix row_vector(const std::vector<int>& v) {
  return validate({std::vector<long>(v.begin(), v.end())});
}

ContingencyMatrix column_vector(const std::vector<int>& v) {
  return row_vector(v).transpose();
}

std::string poset_dot(int n, Axis axis) {
  auto all = enumerate(n);
  std::unordered_map<ContingencyMatrix, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index[all[i]] = i;
  std::ostringstream os;
  os << "digraph " << (axis == Axis::Horizontal ? "horizontal" : "vertical")
     << "_w" << n << " {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::string label;
    for (std::size_t r = 0; r < all[i].rows(); ++r) {
      if (r) label += '|';
      for (std::size_t c = 0; c < all[i].cols(); ++c) {
        if (c) label += ' ';
        label += std::to_string(all[i].at(r, c));
      }
    }
    os << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t k = 1; k < all[i].lines(axis); ++k) {
      std::size_t j = index.at(contract(all[i], axis, k));
      os << "  n" << i << " -> n" << j << " [style="
         << (is_anodyne_step(all[i], axis, k) ? "dashed" : "solid") << "];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace cmprob

std::size_t std::hash<cmprob::ContingencyMatrix>::operator()(
    const cmprob::ContingencyMatrix& m) const noexcept {
  std::size_t h = m.rows() * 1000003u ^ m.cols();
  for (int v : m.entries()) h = h * 31 + static_cast<std::size_t>(v);
  return h;
}
