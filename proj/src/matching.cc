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

// Maximum-weight matchings of every cardinality by successive shortest
// augmenting paths (min-cost flow on the bipartite graph, Dijkstra with
// Johnson potentials). After k augmentations the matching is optimal among
// all matchings of cardinality k, so one run yields the whole profile.

#include <cstdint>

#include "maxconv/matrix.hpp"

namespace maxconv {
namespace {

constexpr std::size_t kNone = SIZE_MAX;

class KAssignment {
 public:
  explicit KAssignment(const MaxMatrix& a)
      : rows_(a.rows()),
        cols_(a.cols()),
        finite_(rows_ * cols_, false),
        cost_(rows_ * cols_),
        match_row_(rows_, kNone),
        match_col_(cols_, kNone),
        node_count_(rows_ + cols_ + 2),
        pi_(node_count_),
        alive_(node_count_, true) {
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (a(i, j).is_epsilon()) continue;
        finite_[i * cols_ + j] = true;
        cost_[i * cols_ + j] = -a(i, j).value();
      }
    }
    // Initial potentials are exact shortest distances in the (acyclic)
    // initial residual graph; columns without finite entries are dead.
    bool any_col = false;
    for (std::size_t j = 0; j < cols_; ++j) {
      bool seen = false;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!finite_[i * cols_ + j]) continue;
        if (!seen || cost_[i * cols_ + j] < pi_[col_node(j)]) {
          pi_[col_node(j)] = cost_[i * cols_ + j];
        }
        seen = true;
      }
      alive_[col_node(j)] = seen;
      if (!seen) continue;
      if (!any_col || pi_[col_node(j)] < pi_[sink()]) pi_[sink()] = pi_[col_node(j)];
      any_col = true;
    }
    alive_[sink()] = any_col;
  }

  /// Runs one augmentation. Returns false when no augmenting path exists;
  /// otherwise adds the path's (min-cost) length to `total_cost`.
  bool augment(Rational& total_cost) {
    if (!alive_[sink()]) return false;
    std::vector<Rational> dist(node_count_);
    std::vector<char> reached(node_count_, 0);
    std::vector<char> done(node_count_, 0);
    std::vector<std::size_t> parent(node_count_, kNone);
    dist[source()] = 0;
    reached[source()] = 1;

    auto relax = [&](std::size_t u, std::size_t v, const Rational& cost) {
      if (!alive_[v] || done[v]) return;
      Rational d = dist[u] + cost + pi_[u] - pi_[v];
      if (!reached[v] || d < dist[v]) {
        dist[v] = std::move(d);
        reached[v] = 1;
        parent[v] = u;
      }
    };
    const Rational zero(0);

    while (true) {
      std::size_t u = kNone;
      for (std::size_t v = 0; v < node_count_; ++v) {
        if (reached[v] && !done[v] && (u == kNone || dist[v] < dist[u])) u = v;
      }
      if (u == kNone) break;
      done[u] = 1;
      if (u == source()) {
        for (std::size_t i = 0; i < rows_; ++i) {
          if (match_row_[i] == kNone) relax(u, row_node(i), zero);
        }
      } else if (u < 1 + rows_) {
        const std::size_t i = u - 1;
        for (std::size_t j = 0; j < cols_; ++j) {
          if (finite_[i * cols_ + j] && match_row_[i] != j) {
            relax(u, col_node(j), cost_[i * cols_ + j]);
          }
        }
      } else if (u < sink()) {
        const std::size_t j = u - 1 - rows_;
        if (match_col_[j] == kNone) {
          relax(u, sink(), zero);
        } else {
          const std::size_t i = match_col_[j];
          relax(u, row_node(i), Rational(-cost_[i * cols_ + j]));
        }
      }
    }

    for (std::size_t v = 0; v < node_count_; ++v) {
      if (done[v]) {
        pi_[v] += dist[v];
      } else {
        alive_[v] = false;
      }
    }
    if (!done[sink()]) return false;
    total_cost += pi_[sink()] - pi_[source()];

    std::size_t col = parent[sink()];
    while (true) {
      const std::size_t row = parent[col];
      const std::size_t prev = parent[row];
      match_col_[col - 1 - rows_] = row - 1;
      match_row_[row - 1] = col - 1 - rows_;
      if (prev == source()) break;
      col = prev;
    }
    return true;
  }

 private:
  static constexpr std::size_t source() { return 0; }
  std::size_t sink() const { return node_count_ - 1; }
  std::size_t row_node(std::size_t i) const { return 1 + i; }
  std::size_t col_node(std::size_t j) const { return 1 + rows_ + j; }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<bool> finite_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> match_row_;
  std::vector<std::size_t> match_col_;
  std::size_t node_count_;
  std::vector<Rational> pi_;
  std::vector<bool> alive_;
};

}  // namespace

std::vector<MaxScalar> assignment_profile(const MaxMatrix& a) {
  const std::size_t kmax = std::min(a.rows(), a.cols());
  std::vector<MaxScalar> profile(kmax + 1);
  profile[0] = MaxScalar::one();
  KAssignment solver(a);
  Rational total(0);
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (!solver.augment(total)) break;
    profile[k] = MaxScalar(Rational(-total));
  }
  return profile;
}

}  // namespace maxconv
