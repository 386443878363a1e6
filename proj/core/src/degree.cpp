#include "kgraph/degree.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kgraph {

std::uint32_t Degree::length() const {
  return std::accumulate(coords_.begin(), coords_.end(), std::uint32_t{0});
}

bool Degree::leq(const Degree& other) const {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

Degree Degree::join(const Degree& other) const {
  Degree out(rank());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out.coords_[i] = std::max(coords_[i], other.coords_[i]);
  return out;
}

Degree Degree::meet(const Degree& other) const {
  Degree out(rank());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out.coords_[i] = std::min(coords_[i], other.coords_[i]);
  return out;
}

Degree Degree::operator+(const Degree& other) const {
  Degree out(rank());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out.coords_[i] = coords_[i] + other.coords_[i];
  return out;
}

Degree Degree::operator-(const Degree& other) const {
  if (!other.leq(*this)) throw std::invalid_argument("Degree subtraction below zero");
  Degree out(rank());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out.coords_[i] = coords_[i] - other.coords_[i];
  return out;
}

std::vector<std::size_t> Degree::sorted_colors() const {
  std::vector<std::size_t> out;
  out.reserve(length());
  for (std::size_t i = 0; i < coords_.size(); ++i)
    out.insert(out.end(), coords_[i], i);
  return out;
}

std::string Degree::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

std::vector<Degree> degrees_below(const Degree& bound) {
  std::vector<Degree> out;
  Degree cur(bound.rank());
  for (;;) {
    out.push_back(cur);
    std::size_t i = bound.rank();
    for (;;) {
      if (i == 0) return out;
      --i;
      if (cur[i] < bound[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
    }
  }
}

std::vector<Degree> degrees_of_length(std::size_t k, std::uint32_t total) {
  std::vector<Degree> out;
  if (k == 0) {
    if (total == 0) out.emplace_back(0);
    return out;
  }
  Degree cur(k);
  auto fill = [&](auto&& self, std::size_t i, std::uint32_t remaining) -> void {
    if (i + 1 == k) {
      cur[i] = remaining;
      out.push_back(cur);
      return;
    }
    for (std::uint32_t v = 0; v <= remaining; ++v) {
      cur[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  fill(fill, 0, total);
  return out;
}

}  // namespace kgraph
