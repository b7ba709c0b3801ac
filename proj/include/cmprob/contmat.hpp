#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmprob/axis.hpp"
#include "cmprob/errors.hpp"

namespace cmprob {

using Grid = std::vector<std::vector<long>>;

// Nonnegative integer matrix without zero rows or columns. The 0x0 matrix
// is the unique object of weight zero.
class ContingencyMatrix {
 public:
  ContingencyMatrix() = default;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }
  int weight() const { return weight_; }

  // 0-based access.
  int at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const std::vector<int>& entries() const { return entries_; }

  // Number of lines along an axis: columns for Horizontal, rows for Vertical.
  std::size_t lines(Axis a) const {
    return a == Axis::Horizontal ? cols_ : rows_;
  }

  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;

  Grid grid() const;
  // Compact text such as "[[1,0],[0,1]]"; the empty matrix is "[]".
  std::string key() const;

  ContingencyMatrix transpose() const;

  friend bool operator==(const ContingencyMatrix&,
                         const ContingencyMatrix&) = default;
  friend std::strong_ordering operator<=>(const ContingencyMatrix& a,
                                          const ContingencyMatrix& b);

  // Builds without validation; callers guarantee the invariants.
  static ContingencyMatrix unchecked(std::size_t rows, std::size_t cols,
                                     std::vector<int> entries);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int weight_ = 0;
  std::vector<int> entries_;
};

struct IntegerPartition {
  std::vector<int> parts;  // non-increasing, positive

  int total() const;
  friend bool operator==(const IntegerPartition&,
                         const IntegerPartition&) = default;
  friend auto operator<=>(const IntegerPartition&,
                          const IntegerPartition&) = default;
};

ContingencyMatrix validate(const Grid& entries);

ContingencyMatrix contract(const ContingencyMatrix& m, Axis axis, std::size_t k);

// Every N with contract(N, axis, k) == m, in canonical order.
std::vector<ContingencyMatrix> expansions(const ContingencyMatrix& m, Axis axis,
                                          std::size_t k);

// Block sizes b_1..b_t such that consecutive groups of n's lines sum to the
// lines of m; absent when m is not a contraction of n along the axis.
std::optional<std::vector<std::size_t>> grouping(const ContingencyMatrix& m,
                                                 const ContingencyMatrix& n,
                                                 Axis axis);

bool leq(const ContingencyMatrix& m, const ContingencyMatrix& n, Axis axis);

bool is_anodyne_step(const ContingencyMatrix& n, Axis axis, std::size_t k);
bool is_anodyne_leq(const ContingencyMatrix& m, const ContingencyMatrix& n,
                    Axis axis);

// A chain of elementary contractions. mats.front() is the smaller matrix,
// mats.back() the larger, and mats[i] == contract(mats[i+1], axis, ks[i]).
struct ContractionChain {
  Axis axis = Axis::Horizontal;
  std::vector<ContingencyMatrix> mats;
  std::vector<std::size_t> ks;
};

// Every M with leq(M, n, axis), including n, sorted.
std::vector<ContingencyMatrix> down_set(const ContingencyMatrix& n, Axis axis);
// Every N with leq(m, N, axis), including m, sorted.
std::vector<ContingencyMatrix> up_set(const ContingencyMatrix& m, Axis axis);

// All chains from n down to m.
std::vector<ContractionChain> contraction_chains(const ContingencyMatrix& m,
                                                 const ContingencyMatrix& n,
                                                 Axis axis);
// The chain that always merges the first mergeable pair of n first.
ContractionChain canonical_chain(const ContingencyMatrix& m,
                                 const ContingencyMatrix& n, Axis axis);

// The N with leq(N, m, Vertical) and leq(N, l, Horizontal).
std::optional<ContingencyMatrix> meet(const ContingencyMatrix& m,
                                      const ContingencyMatrix& l);

// All O with leq(m, O, Horizontal) and leq(l, O, Vertical).
std::vector<ContingencyMatrix> sup_set(const ContingencyMatrix& m,
                                       const ContingencyMatrix& l);

ContingencyMatrix direct_sum(const ContingencyMatrix& m,
                             const ContingencyMatrix& n);

bool lines_disjoint(const ContingencyMatrix& m, Axis axis, std::size_t k);
ContingencyMatrix exchange(const ContingencyMatrix& m, Axis axis, std::size_t k);

std::vector<ContingencyMatrix> enumerate(
    int n, std::optional<std::pair<std::size_t, std::size_t>> shape = {});

IntegerPartition entry_partition(const ContingencyMatrix& m);

// Classes of the zigzag relation generated by anodyne contractions. Each
// class is sorted, and classes are ordered by their first member.
std::vector<std::vector<ContingencyMatrix>> anodyne_classes(int n);

std::vector<IntegerPartition> partitions(int n);

// Diagonal matrix with the given diagonal.
ContingencyMatrix diagonal(const std::vector<int>& diag);
ContingencyMatrix row_vector(const std::vector<int>& v);
ContingencyMatrix column_vector(const std::vector<int>& v);

// Graphviz digraph of the elementary contractions along one axis.
std::string poset_dot(int n, Axis axis);

}  // namespace cmprob

template <>
struct std::hash<cmprob::ContingencyMatrix> {
  std::size_t operator()(const cmprob::ContingencyMatrix& m) const noexcept;
};
