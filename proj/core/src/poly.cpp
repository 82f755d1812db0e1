#include "unogrid/poly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace unogrid {

PolyF2U PolyF2U::monomial(int k) {
  PolyF2U p;
  p.toggle(k);
  return p;
}

PolyF2U PolyF2U::from_exponents(std::initializer_list<int> ks) {
  PolyF2U p;
  for (int k : ks) p.toggle(k);
  return p;
}

bool PolyF2U::is_monomial() const noexcept { return term_count() == 1; }

bool PolyF2U::coeff(int k) const noexcept {
  if (k < 0) return false;
  auto w = static_cast<std::size_t>(k) / 64;
  if (w >= words_.size()) return false;
  return (words_[w] >> (k % 64)) & 1u;
}

void PolyF2U::toggle(int k) {
  if (k < 0) throw std::invalid_argument("PolyF2U: negative exponent");
  auto w = static_cast<std::size_t>(k) / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= std::uint64_t{1} << (k % 64);
  trim();
}

int PolyF2U::degree() const noexcept {
  if (words_.empty()) return -1;
  auto top = words_.back();
  return static_cast<int>((words_.size() - 1) * 64 + 63 - std::countl_zero(top));
}

int PolyF2U::min_degree() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
  return -1;
}

std::vector<int> PolyF2U::exponents() const {
  std::vector<int> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(static_cast<int>(w * 64) + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t PolyF2U::term_count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

PolyF2U& PolyF2U::operator+=(const PolyF2U& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

PolyF2U operator*(const PolyF2U& a, const PolyF2U& b) {
  PolyF2U out;
  if (a.is_zero() || b.is_zero()) return out;
  // Shift-and-add over the sparser factor.
  const PolyF2U& sparse = a.term_count() <= b.term_count() ? a : b;
  const PolyF2U& dense = &sparse == &a ? b : a;
  for (int k : sparse.exponents()) out += dense.shifted(k);
  return out;
}

PolyF2U PolyF2U::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("PolyF2U: negative shift");
  if (is_zero() || k == 0) return *this;
  PolyF2U out;
  const std::size_t word_shift = static_cast<std::size_t>(k) / 64;
  const int bit_shift = k % 64;
  out.words_.assign(words_.size() + word_shift + 1, 0);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i + word_shift] |= words_[i] << bit_shift;
    if (bit_shift) out.words_[i + word_shift + 1] |= words_[i] >> (64 - bit_shift);
  }
  out.trim();
  return out;
}

PolyF2U PolyF2U::unshifted(int k) const {
  if (k < 0) throw std::invalid_argument("PolyF2U: negative shift");
  PolyF2U out;
  for (int e : exponents())
    if (e >= k) out.toggle(e - k);
  return out;
}

PolyF2U PolyF2U::truncated(int k) const {
  PolyF2U out;
  for (int e : exponents())
    if (e < k) out.toggle(e);
  return out;
}

std::string PolyF2U::to_string() const {
  if (is_zero()) return "0";
  auto ks = exponents();
  std::ostringstream os;
  for (auto it = ks.rbegin(); it != ks.rend(); ++it) {
    if (it != ks.rbegin()) os << "+";
    if (*it == 0)
      os << "1";
    else if (*it == 1)
      os << "U";
    else
      os << "U^" << *it;
  }
  return os.str();
}

std::size_t PolyF2U::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ull;
  return h;
}

void PolyF2U::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

ExponentVector::ExponentVector(std::initializer_list<int> exps) {
  for (int e : exps) exps_.push_back(static_cast<std::uint16_t>(e));
}

int ExponentVector::total() const noexcept {
  int t = 0;
  for (auto e : exps_) t += e;
  return t;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("ExponentVector: size mismatch");
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] + b.exps_[i]);
  return out;
}

std::string ExponentVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i) os << ",";
    os << exps_[i];
  }
  return os.str();
}

void MultiPoly::toggle(const ExponentVector& term) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), term);
  if (it != terms_.end() && *it == term)
    terms_.erase(it);
  else
    terms_.insert(it, term);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  std::vector<ExponentVector> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                std::back_inserter(merged));
  terms_ = std::move(merged);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  std::vector<ExponentVector> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) products.push_back(s + t);
  std::sort(products.begin(), products.end());
  MultiPoly out;
  // Equal monomials cancel in pairs.
  for (std::size_t i = 0; i < products.size();) {
    std::size_t j = i;
    while (j < products.size() && products[j] == products[i]) ++j;
    if ((j - i) % 2 == 1) out.terms_.push_back(products[i]);
    i = j;
  }
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    if (t) os << " + ";
    bool any = false;
    for (std::size_t i = 0; i < terms_[t].size(); ++i) {
      int e = terms_[t][i];
      if (!e) continue;
      if (any) os << "*";
      os << "U" << i;
      if (e > 1) os << "^" << e;
      any = true;
    }
    if (!any) os << "1";
  }
  return os.str();
}

}  // namespace unogrid
