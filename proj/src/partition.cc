// Copyright 2026 The maxconv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "maxconv/errors.hpp"
#include "maxconv/spectra.hpp"

namespace maxconv {

std::vector<std::vector<std::size_t>> blocks_of(
    const std::vector<std::size_t>& labels) {
  std::map<std::size_t, std::vector<std::size_t>> by_label;
  for (std::size_t p = 0; p < labels.size(); ++p) {
    by_label[labels[p]].push_back(p + 1);
  }
  std::vector<std::vector<std::size_t>> blocks;
  blocks.reserve(by_label.size());
  for (auto& [label, block] : by_label) blocks.push_back(std::move(block));
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

namespace {

// Depth-first search over sorted positions. At each position an unused
// column from the current tie group is placed together with one of its
// argmax rows; (used columns, rows so far) states are visited once.
class PartitionSearch {
 public:
  PartitionSearch(const MaxMatrix& m, std::size_t cap) : m_(m), cap_(cap) {
    const std::size_t n = m.cols();
    if (n > 64) throw CapExceeded("max-column partitions limited to 64 columns");
    maxima_ = column_maxima(m);
    argmax_rows_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m(i, j) == maxima_[j]) argmax_rows_[j].push_back(i);
      }
    }
    sorted_cols_.resize(n);
    std::iota(sorted_cols_.begin(), sorted_cols_.end(), std::size_t{0});
    std::stable_sort(sorted_cols_.begin(), sorted_cols_.end(),
                     [&](std::size_t x, std::size_t y) { return maxima_[x] < maxima_[y]; });
    group_begin_.resize(n);
    for (std::size_t p = 0; p < n; ++p) {
      const bool tie = p > 0 && maxima_[sorted_cols_[p]] == maxima_[sorted_cols_[p - 1]];
      group_begin_[p] = tie ? group_begin_[p - 1] : p;
    }
    order_.resize(n);
    rows_.resize(n);
  }

  PartitionSet run() {
    if (m_.cols() > 0 && m_.rows() == 0) return {};
    dfs(0, 0);
    PartitionSet out;
    out.truncated = truncated_;
    for (auto& [blocks, partition] : found_) out.partitions.push_back(std::move(partition));
    return out;
  }

 private:
  void dfs(std::size_t pos, std::uint64_t used) {
    if (truncated_) return;
    const std::size_t n = m_.cols();
    if (pos == n) {
      auto blocks = blocks_of(rows_);
      if (found_.count(blocks)) return;
      if (found_.size() == cap_) {
        truncated_ = true;
        return;
      }
      found_.emplace(blocks, ColumnPartition{blocks, order_, rows_});
      return;
    }
    if (!visited_.emplace(used, std::vector<std::size_t>(rows_.begin(), rows_.begin() + pos)).second) {
      return;
    }
    std::size_t group_end = group_begin_[pos];
    while (group_end < n && group_begin_[group_end] == group_begin_[pos]) ++group_end;
    for (std::size_t q = group_begin_[pos]; q < group_end; ++q) {
      const std::size_t col = sorted_cols_[q];
      if (used & (std::uint64_t{1} << col)) continue;
      order_[pos] = col;
      for (std::size_t row : argmax_rows_[col]) {
        rows_[pos] = row;
        dfs(pos + 1, used | (std::uint64_t{1} << col));
        if (truncated_) return;
      }
    }
  }

  const MaxMatrix& m_;
  std::size_t cap_;
  std::vector<MaxScalar> maxima_;
  std::vector<std::vector<std::size_t>> argmax_rows_;
  std::vector<std::size_t> sorted_cols_;
  std::vector<std::size_t> group_begin_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> rows_;
  std::set<std::pair<std::uint64_t, std::vector<std::size_t>>> visited_;
  std::map<std::vector<std::vector<std::size_t>>, ColumnPartition> found_;
  bool truncated_ = false;
};

}  // namespace

PartitionSet max_column_partitions(const MaxMatrix& m, std::size_t cap) {
  if (cap == 0) throw DomainError("partition cap must be at least 1");
  return PartitionSearch(m, cap).run();
}

std::optional<SharedPartition> shared_partition(const MaxMatrix& a,
                                                const MaxMatrix& b,
                                                std::size_t cap) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DomainError("shared_partition needs square matrices of equal order");
  }
  const auto pa = max_column_partitions(transpose(a), cap);
  const auto pb = max_column_partitions(b, cap);
  for (const auto& x : pa.partitions) {
    for (const auto& y : pb.partitions) {
      if (x.same_blocks(y)) return SharedPartition{x, y};
    }
  }
  return std::nullopt;
}

std::string to_string(const std::vector<std::vector<std::size_t>>& blocks) {
  std::string out = "[";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += ", ";
    out += '[';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(blocks[b][i]);
    }
    out += ']';
  }
  return out + "]";
}

}  // namespace maxconv
