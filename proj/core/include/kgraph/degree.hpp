#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kgraph {

/// An element of N^k. Colours are 0-based internally (colour i <-> e_{i+1}).
class Degree {
 public:
  Degree() = default;
  explicit Degree(std::size_t k) : coords_(k, 0) {}
  Degree(std::initializer_list<std::uint32_t> coords) : coords_(coords) {}
  explicit Degree(std::vector<std::uint32_t> coords) : coords_(std::move(coords)) {}

  static Degree unit(std::size_t k, std::size_t color) {
    Degree d(k);
    d.coords_[color] = 1;
    return d;
  }

  std::size_t rank() const { return coords_.size(); }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }
  std::uint32_t& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<std::uint32_t>& coords() const { return coords_; }

  /// |n| = n_1 + ... + n_k
  std::uint32_t length() const;
  bool is_zero() const { return length() == 0; }

  /// Componentwise order.
  bool leq(const Degree& other) const;

  Degree join(const Degree& other) const;  // coordinatewise max
  Degree meet(const Degree& other) const;  // coordinatewise min

  Degree operator+(const Degree& other) const;
  /// Requires other.leq(*this).
  Degree operator-(const Degree& other) const;

  /// The colour sequence of the colour-sorted word of this degree,
  /// e.g. (2,1) -> [0,0,1].
  std::vector<std::size_t> sorted_colors() const;

  std::string to_string() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend auto operator<=>(const Degree&, const Degree&) = default;

 private:
  std::vector<std::uint32_t> coords_;
};

/// All n with n <= bound, in lexicographic order.
std::vector<Degree> degrees_below(const Degree& bound);

/// All n in N^k with |n| == total, in lexicographic order.
std::vector<Degree> degrees_of_length(std::size_t k, std::uint32_t total);

}  // namespace kgraph
