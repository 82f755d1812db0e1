#pragma once

// Coefficient rings: F2[U] polynomials and multivariable F2 monomial sums.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace unogrid {

/// Polynomial in one variable U over F2, stored as a bitset of exponents.
class PolyF2U {
 public:
  PolyF2U() = default;

  static PolyF2U zero() { return {}; }
  static PolyF2U one() { return monomial(0); }
  static PolyF2U monomial(int k);
  static PolyF2U from_exponents(std::initializer_list<int> ks);

  bool is_zero() const noexcept { return words_.empty(); }
  bool is_monomial() const noexcept;
  bool coeff(int k) const noexcept;
  void toggle(int k);

  /// Highest exponent present, -1 for the zero polynomial.
  int degree() const noexcept;
  /// Lowest exponent present, -1 for the zero polynomial.
  int min_degree() const noexcept;
  std::vector<int> exponents() const;
  std::size_t term_count() const noexcept;

  PolyF2U& operator+=(const PolyF2U& other);
  PolyF2U& operator*=(const PolyF2U& other) { return *this = *this * other; }
  friend PolyF2U operator+(PolyF2U a, const PolyF2U& b) { return a += b; }
  friend PolyF2U operator*(const PolyF2U& a, const PolyF2U& b);

  /// Multiplication by U^k.
  PolyF2U shifted(int k) const;
  /// Exact division by U^k; terms below U^k are dropped.
  PolyF2U unshifted(int k) const;
  /// Reduction modulo U^k.
  PolyF2U truncated(int k) const;

  friend bool operator==(const PolyF2U&, const PolyF2U&) = default;

  std::string to_string() const;
  std::size_t hash() const noexcept;

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

/// Exponent of each marking variable in a monomial; dense over `size()` variables.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t variables) : exps_(variables, 0) {}
  ExponentVector(std::initializer_list<int> exps);

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int value) { exps_[i] = static_cast<std::uint16_t>(value); }
  void bump(std::size_t i, int by = 1) { exps_[i] = static_cast<std::uint16_t>(exps_[i] + by); }
  int total() const noexcept;

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  std::string to_string() const;  // comma separated exponents

 private:
  std::vector<std::uint16_t> exps_;
};

/// Element of F2[U_0..U_{m-1}]: a set of monomials, addition is symmetric difference.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(ExponentVector term) { terms_.push_back(std::move(term)); }

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<ExponentVector>& terms() const noexcept { return terms_; }
  void toggle(const ExponentVector& term);

  MultiPoly& operator+=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  std::string to_string() const;

 private:
  std::vector<ExponentVector> terms_;  // sorted, unique
};

}  // namespace unogrid
