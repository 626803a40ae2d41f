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

#include "maxconv/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "maxconv/errors.hpp"

namespace maxconv {

MaxMatrix::MaxMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

MaxMatrix::MaxMatrix(std::size_t rows, std::size_t cols,
                     std::vector<MaxScalar> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw DomainError("matrix data length " + std::to_string(data_.size()) +
                      " does not match " + std::to_string(rows_) + "x" +
                      std::to_string(cols_));
  }
}

MaxMatrix MaxMatrix::from_rows(const std::vector<std::vector<MaxScalar>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  std::vector<MaxScalar> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DomainError("ragged matrix rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return MaxMatrix(r, c, std::move(data));
}

MaxMatrix MaxMatrix::identity(std::size_t n) {
  MaxMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = MaxScalar::one();
  return m;
}

MaxMatrix MaxMatrix::zeros(std::size_t rows, std::size_t cols) {
  return MaxMatrix(rows, cols, std::vector<MaxScalar>(rows * cols, MaxScalar::one()));
}

MaxMatrix MaxMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
  MaxMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      out(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
  }
  return out;
}

Permutation::Permutation(std::vector<std::size_t> map) : map_(std::move(map)) {
  std::vector<bool> seen(map_.size(), false);
  for (auto v : map_) {
    if (v >= map_.size() || seen[v]) throw DomainError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  return Permutation(std::move(map));
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& map) {
  std::vector<std::size_t> zero_based;
  zero_based.reserve(map.size());
  for (auto v : map) {
    if (v == 0) throw DomainError("one-based permutation contains 0");
    zero_based.push_back(v - 1);
  }
  return Permutation(std::move(zero_based));
}

Permutation Permutation::from_matrix(const MaxMatrix& m) {
  if (!m.is_square()) throw DomainError("permutation matrix must be square");
  std::vector<std::size_t> map(m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_epsilon()) continue;
      if (m(i, j) != MaxScalar::one() || map[i] != m.rows()) {
        throw DomainError("not a max-plus permutation matrix");
      }
      map[i] = j;
    }
  }
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

MaxMatrix Permutation::to_matrix() const {
  MaxMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) m(i, map_[i]) = MaxScalar::one();
  return m;
}

bool Permutation::next() {
  return std::next_permutation(map_.begin(), map_.end());
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(p[i] + 1);
  }
  return out + "]";
}

namespace {

void require_same_shape(const MaxMatrix& a, const MaxMatrix& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError(std::string(what) + ": shape mismatch " +
                      std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                      " vs " + std::to_string(b.rows()) + "x" +
                      std::to_string(b.cols()));
  }
}

}  // namespace

MaxMatrix mat_add(const MaxMatrix& a, const MaxMatrix& b) {
  require_same_shape(a, b, "mat_add");
  std::vector<MaxScalar> data(a.data().size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    data[i] = oplus(a.data()[i], b.data()[i]);
  }
  return MaxMatrix(a.rows(), a.cols(), std::move(data));
}

MaxMatrix mat_mul(const MaxMatrix& a, const MaxMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DomainError("mat_mul: inner dimensions " + std::to_string(a.cols()) +
                      " and " + std::to_string(b.rows()) + " differ");
  }
  MaxMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_epsilon()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_epsilon()) continue;
        MaxScalar term = odot(a(i, k), b(k, j));
        if (c(i, j) < term) c(i, j) = std::move(term);
      }
    }
  }
  return c;
}

MaxMatrix transpose(const MaxMatrix& a) {
  MaxMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

MaxMatrix mat_hadamard(const MaxMatrix& a, const MaxMatrix& b) {
  require_same_shape(a, b, "mat_hadamard");
  std::vector<MaxScalar> data(a.data().size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    data[i] = odot(a.data()[i], b.data()[i]);
  }
  return MaxMatrix(a.rows(), a.cols(), std::move(data));
}

MaxMatrix mat_hpow(const MaxMatrix& a, const Rational& t) {
  std::vector<MaxScalar> data(a.data().size());
  for (std::size_t i = 0; i < data.size(); ++i) data[i] = scale(a.data()[i], t);
  return MaxMatrix(a.rows(), a.cols(), std::move(data));
}

MaxMatrix permute_rows(const MaxMatrix& b, const Permutation& p) {
  if (p.size() != b.rows()) throw DomainError("permute_rows: size mismatch");
  MaxMatrix out(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = b(p[i], j);
  }
  return out;
}

MaxMatrix permute_cols(const MaxMatrix& m, const Permutation& q) {
  if (q.size() != m.cols()) throw DomainError("permute_cols: size mismatch");
  MaxMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, q[j]) = m(i, j);
  }
  return out;
}

MaxScalar permanent(const MaxMatrix& a) {
  if (!a.is_square()) throw DomainError("permanent of a non-square matrix");
  return assignment_profile(a).back();
}

MaxScalar eta(const MaxMatrix& a, std::size_t k) {
  if (!a.is_square()) throw DomainError("eta of a non-square matrix");
  if (k > a.rows()) throw DomainError("eta: order out of range");
  return assignment_profile(a)[k];
}

std::vector<MaxScalar> delta_profile(const MaxMatrix& a, std::size_t cap) {
  if (!a.is_square()) throw DomainError("delta of a non-square matrix");
  const std::size_t n = a.rows();
  if (n > cap) {
    throw CapExceeded("principal-minor enumeration limited to n <= " +
                      std::to_string(cap) + " (got n = " + std::to_string(n) + ")");
  }
  std::vector<MaxScalar> best(n + 1);
  best[0] = MaxScalar::one();
  std::vector<std::size_t> idx;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    idx.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ul << i)) idx.push_back(i);
    }
    auto value = permanent(a.submatrix(idx, idx));
    if (best[idx.size()] < value) best[idx.size()] = std::move(value);
  }
  return best;
}

MaxScalar delta(const MaxMatrix& a, std::size_t k, std::size_t cap) {
  if (!a.is_square()) throw DomainError("delta of a non-square matrix");
  if (k > a.rows()) throw DomainError("delta: order out of range");
  return delta_profile(a, cap)[k];
}

MaxScalar norm(const MaxMatrix& a) {
  MaxScalar best;
  for (const auto& v : a.data()) {
    if (best < v) best = v;
  }
  return best;
}

std::string format_matrix(const MaxMatrix& a) {
  std::ostringstream out;
  out << "{\n  \"rows\": " << a.rows() << ",\n  \"cols\": " << a.cols()
      << ",\n  \"data\": [";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out << (i ? ",\n    [" : "\n    [");
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ", ";
      out << '"' << to_string(a(i, j)) << '"';
    }
    out << ']';
  }
  out << (a.rows() ? "\n  ]\n}\n" : "]\n}\n");
  return out.str();
}

namespace {

MaxScalar scalar_from_json(const nlohmann::json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return MaxScalar(v.get<long>());
  throw ParseError("matrix entries must be scalar tokens or integers");
}

MaxMatrix parse_structured(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed matrix document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("data") || !doc["data"].is_array()) {
    throw ParseError("matrix document needs a \"data\" array");
  }
  std::vector<std::vector<MaxScalar>> rows;
  for (const auto& row : doc["data"]) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    auto& out = rows.emplace_back();
    for (const auto& v : row) out.push_back(scalar_from_json(v));
  }
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw ParseError("ragged matrix rows");
  }
  auto dim = [&](const char* key, std::size_t actual) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_number_unsigned() || doc[key].get<std::size_t>() != actual) {
      throw ParseError(std::string("\"") + key + "\" does not match data");
    }
  };
  dim("rows", r);
  dim("cols", c);
  return MaxMatrix::from_rows(rows);
}

MaxMatrix parse_grid(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::vector<MaxScalar>> rows;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream tokens(line);
    std::string token;
    auto& row = rows.emplace_back();
    while (tokens >> token) row.push_back(parse_scalar(token));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  for (const auto& row : rows) {
    if (row.size() != rows.front().size()) throw ParseError("ragged matrix rows");
  }
  return MaxMatrix::from_rows(rows);
}

}  // namespace

MaxMatrix parse_matrix(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty matrix");
  if (text[first] == '{') return parse_structured(text);
  return parse_grid(text);
}

std::ostream& operator<<(std::ostream& os, const MaxMatrix& a) {
  return os << format_matrix(a);
}

}  // namespace maxconv
