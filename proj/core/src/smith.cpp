#include "unogrid/smith.hpp"

#include <optional>
#include <sstream>

#include "unogrid/error.hpp"

namespace unogrid {

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = PolyF2U::one();
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("PolyMatrix: size mismatch");
  PolyMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

std::string PolyMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
    os << '\n';
  }
  return os.str();
}

namespace {

// Row/column weights with exponent(i,j) = a_i + b_j, found by propagation over
// the bipartite graph of nonzero entries.
void check_homogeneous(const PolyMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<std::optional<long>> a(r), b(c);
  for (std::size_t start = 0; start < r; ++start) {
    if (a[start]) continue;
    a[start] = 0;
    std::vector<std::pair<bool, std::size_t>> stack{{true, start}};
    while (!stack.empty()) {
      auto [is_row, k] = stack.back();
      stack.pop_back();
      for (std::size_t o = 0; o < (is_row ? c : r); ++o) {
        const auto& e = is_row ? m.at(k, o) : m.at(o, k);
        if (e.is_zero()) continue;
        if (!e.is_monomial()) throw Error(ErrorCode::NonHomogeneousEntry, "entry " + e.to_string() + " is not a monomial");
        const long k_exp = e.degree();
        auto& mine = is_row ? a[k] : b[k];
        auto& other = is_row ? b[o] : a[o];
        if (!other) {
          other = k_exp - *mine;
          stack.emplace_back(!is_row, o);
        } else if (*other + *mine != k_exp) {
          throw Error(ErrorCode::NonHomogeneousEntry, "exponents admit no consistent grading");
        }
      }
    }
  }
}

void swap_rows(PolyMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(i, k), m.at(j, k));
}

void swap_cols(PolyMatrix& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < m.rows(); ++k) std::swap(m.at(k, i), m.at(k, j));
}

// row dst += f * row src
void add_row(PolyMatrix& m, std::size_t dst, std::size_t src, const PolyF2U& f) {
  for (std::size_t k = 0; k < m.cols(); ++k)
    if (!m.at(src, k).is_zero()) m.at(dst, k) += f * m.at(src, k);
}

// col dst += f * col src
void add_col(PolyMatrix& m, std::size_t dst, std::size_t src, const PolyF2U& f) {
  for (std::size_t k = 0; k < m.rows(); ++k)
    if (!m.at(k, src).is_zero()) m.at(k, dst) += f * m.at(k, src);
}

}  // namespace

SmithForm smith_reduce(const PolyMatrix& m) {
  check_homogeneous(m);
  const std::size_t r = m.rows(), c = m.cols();
  SmithForm s;
  s.d = m;
  s.p = s.p_inv = PolyMatrix::identity(r);
  s.q = s.q_inv = PolyMatrix::identity(c);
  auto& d = s.d;
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    int best = -1;
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (const auto& e = d.at(i, j); !e.is_zero() && (best < 0 || e.degree() < best)) {
          best = e.degree();
          bi = i;
          bj = j;
        }
    if (best < 0) break;
    // D = P M Q: row ops act on P from the left, column ops on Q from the right.
    swap_rows(d, t, bi);
    swap_rows(s.p, t, bi);
    swap_cols(s.p_inv, t, bi);
    swap_cols(d, t, bj);
    swap_cols(s.q, t, bj);
    swap_rows(s.q_inv, t, bj);
    for (std::size_t i = t + 1; i < r; ++i)
      if (!d.at(i, t).is_zero()) {
        const auto f = d.at(i, t).unshifted(best);
        add_row(d, i, t, f);
        add_row(s.p, i, t, f);
        add_col(s.p_inv, t, i, f);  // elementary ops are involutions over F2
      }
    for (std::size_t j = t + 1; j < c; ++j)
      if (!d.at(t, j).is_zero()) {
        const auto f = d.at(t, j).unshifted(best);
        add_col(d, j, t, f);
        add_col(s.q, j, t, f);
        add_row(s.q_inv, t, j, f);
      }
    s.diagonal.push_back(best);
  }
  return s;
}

}  // namespace unogrid
