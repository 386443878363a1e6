#include "kgraph/matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kgraph {

namespace {

void require_same_shape(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shapes differ");
}

// Merge two sorted columns with a sign on the second.
std::vector<SparseMatrix::Entry> merge(const std::vector<SparseMatrix::Entry>& a,
                                       const std::vector<SparseMatrix::Entry>& b, std::int64_t sign) {
  std::vector<SparseMatrix::Entry> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign * b[j].second);
      ++j;
    } else {
      std::int64_t v = a[i].second + sign * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace_back(i, 1);
  return m;
}

std::int64_t SparseMatrix::at(std::size_t r, std::size_t c) const {
  const auto& col = cols_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), Entry{r, 0},
                             [](const Entry& a, const Entry& b) { return a.first < b.first; });
  return it != col.end() && it->first == r ? it->second : 0;
}

void SparseMatrix::add(std::size_t r, std::size_t c, std::int64_t v) {
  if (r >= rows_ || c >= cols_.size()) throw std::out_of_range("matrix index out of range");
  if (v == 0) return;
  auto& col = cols_[c];
  auto it = std::lower_bound(col.begin(), col.end(), Entry{r, 0},
                             [](const Entry& a, const Entry& b) { return a.first < b.first; });
  if (it != col.end() && it->first == r) {
    it->second += v;
    if (it->second == 0) col.erase(it);
  } else {
    col.insert(it, Entry{r, v});
  }
}

bool SparseMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

SparseMatrix SparseMatrix::adjoint() const {
  SparseMatrix t(cols(), rows());
  for (std::size_t c = 0; c < cols_.size(); ++c)
    for (auto [r, v] : cols_[c]) t.cols_[r].emplace_back(c, v);  // c ascends, so columns stay sorted
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols() != o.rows()) throw std::invalid_argument("matrix shapes do not compose");
  SparseMatrix out(rows_, o.cols());
  std::map<std::size_t, std::int64_t> acc;
  for (std::size_t c = 0; c < o.cols(); ++c) {
    acc.clear();
    for (auto [k, v] : o.cols_[c])
      for (auto [r, w] : cols_[k]) acc[r] += w * v;
    for (auto [r, v] : acc)
      if (v != 0) out.cols_[c].emplace_back(r, v);
  }
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  require_same_shape(*this, o);
  SparseMatrix out(rows_, cols());
  for (std::size_t c = 0; c < cols_.size(); ++c) out.cols_[c] = merge(cols_[c], o.cols_[c], 1);
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  require_same_shape(*this, o);
  SparseMatrix out(rows_, cols());
  for (std::size_t c = 0; c < cols_.size(); ++c) out.cols_[c] = merge(cols_[c], o.cols_[c], -1);
  return out;
}

bool SparseMatrix::is_partial_permutation() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) {
    return c.empty() || (c.size() == 1 && c.front().second == 1);
  });
}

bool SparseMatrix::is_diagonal_projection() const {
  if (rows_ != cols_.size()) return false;
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    const auto& col = cols_[c];
    if (col.empty()) continue;
    if (col.size() != 1 || col.front().first != c || col.front().second != 1) return false;
  }
  return true;
}

}  // namespace kgraph
