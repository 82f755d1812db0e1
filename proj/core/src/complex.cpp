#include "unogrid/complex.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "unogrid/error.hpp"

namespace unogrid {

namespace {

// Dense scratch row for sparse column accumulation.
template <class T>
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : values_(n), seen_(n, 0) {}

  T& at(Index i) {
    if (!seen_[i]) {
      seen_[i] = 1;
      touched_.push_back(i);
    }
    return values_[i];
  }

  template <class Pred>
  std::vector<std::pair<Index, T>> drain(Pred nonzero) {
    std::sort(touched_.begin(), touched_.end());
    std::vector<std::pair<Index, T>> out;
    for (Index i : touched_) {
      if (nonzero(values_[i])) out.emplace_back(i, std::move(values_[i]));
      values_[i] = T{};
      seen_[i] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<T> values_;
  std::vector<char> seen_;
  std::vector<Index> touched_;
};

}  // namespace

MonomialComplex specialize(const MonomialComplex& c, const SpecializePolicy& policy) {
  const bool keep = policy.kind == SpecializePolicy::Kind::KeepPair;
  if (keep) {
    const auto v = static_cast<int>(c.variables);
    if (policy.keep_i < 0 || policy.keep_j < 0 || policy.keep_i >= v || policy.keep_j >= v ||
        policy.keep_i == policy.keep_j)
      throw Error(ErrorCode::BadPolicy, "keep indices must be two distinct variables");
  }
  MonomialComplex out;
  out.basis = c.basis;
  out.variables = keep ? 3 : 1;
  out.boundary.resize(c.size());
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (const auto& [y, coeff] : c.boundary[x]) {
      MultiPoly image;
      for (const auto& term : coeff.terms()) {
        ExponentVector e(out.variables);
        if (!keep) {
          e.set(0, term.total());
        } else {
          const auto i = static_cast<std::size_t>(policy.keep_i), j = static_cast<std::size_t>(policy.keep_j);
          e.set(0, term.total() - term[i] - term[j]);
          e.set(1, term[i]);
          e.set(2, term[j]);
        }
        image.toggle(e);
      }
      if (!image.is_zero()) out.boundary[x].emplace_back(y, std::move(image));
    }
  }
  return out;
}

MonomialComplex relabel_variables(const MonomialComplex& c, const std::vector<int>& perm) {
  if (perm.size() != c.variables) throw Error(ErrorCode::BadPermutation, "permutation length mismatch");
  std::vector<char> hit(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= static_cast<int>(perm.size()) || hit[static_cast<std::size_t>(p)])
      throw Error(ErrorCode::BadPermutation, "not a permutation of marking indices");
    hit[static_cast<std::size_t>(p)] = 1;
  }
  MonomialComplex out = c;
  for (auto& col : out.boundary)
    for (auto& [y, coeff] : col) {
      MultiPoly image;
      for (const auto& term : coeff.terms()) {
        ExponentVector e(c.variables);
        for (std::size_t v = 0; v < c.variables; ++v) e.set(static_cast<std::size_t>(perm[v]), term[v]);
        image.toggle(e);
      }
      coeff = std::move(image);
    }
  return out;
}

MultiMatrix multiply(const MultiMatrix& left, const MultiMatrix& right, std::size_t rows) {
  MultiMatrix out(right.size());
  Accumulator<MultiPoly> acc(rows);
  for (std::size_t x = 0; x < right.size(); ++x) {
    for (const auto& [y, p] : right[x])
      for (const auto& [z, q] : left[y]) acc.at(z) += p * q;
    out[x] = acc.drain([](const MultiPoly& m) { return !m.is_zero(); });
  }
  return out;
}

MultiMatrix boundary_squared(const MonomialComplex& c) { return multiply(c.boundary, c.boundary, c.size()); }

bool is_zero(const MultiMatrix& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& col) { return col.empty(); });
}

std::size_t UComplex::entry_count() const noexcept {
  std::size_t n = 0;
  for (const auto& col : boundary) n += col.size();
  return n;
}

void UComplex::check_homogeneous() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (const auto& e : boundary[x]) {
      const int gap = basis.gradings[x] - basis.gradings[e.target];
      if (e.exponent < 0 || gap != 2 - 2 * e.exponent) {
        std::ostringstream os;
        os << "entry " << x << " -> " << e.target << " has U^" << e.exponent << " across doubled grading gap "
           << gap;
        throw Error(ErrorCode::NotHomogeneous, os.str());
      }
    }
}

void UComplex::check_square_zero() const {
  const auto d = UMap::from_differential(*this);
  if (!d.after(d).is_zero()) throw Error(ErrorCode::NotAComplex, "boundary does not square to zero");
}

UComplex UComplex::from_entries(GradedBasis basis, const std::vector<std::tuple<Index, Index, int>>& entries) {
  UComplex c;
  c.boundary.resize(basis.size());
  c.basis = std::move(basis);
  std::vector<std::map<Index, int>> cols(c.size());
  for (auto [src, tgt, k] : entries) {
    auto& col = cols.at(src);
    if (auto it = col.find(tgt); it != col.end()) {
      if (it->second != k) throw Error(ErrorCode::NonHomogeneousEntry, "two powers of U in one entry");
      col.erase(it);
    } else {
      col.emplace(tgt, k);
    }
  }
  for (std::size_t x = 0; x < c.size(); ++x)
    for (auto [y, k] : cols[x]) c.boundary[x].push_back({y, k});
  return c;
}

UComplex to_ucomplex(const MonomialComplex& c) {
  if (c.variables != 1) throw Error(ErrorCode::NonHomogeneousEntry, "complex is not specialized to F2[U]");
  UComplex out;
  out.basis = c.basis;
  out.boundary.resize(c.size());
  for (std::size_t x = 0; x < c.size(); ++x)
    for (const auto& [y, coeff] : c.boundary[x]) {
      if (coeff.terms().size() != 1)
        throw Error(ErrorCode::NonHomogeneousEntry,
                    "entry " + std::to_string(x) + " -> " + std::to_string(y) + " is " + coeff.to_string());
      out.boundary[x].push_back({y, coeff.terms()[0][0]});
    }
  return out;
}

UComplex tensor_rank2(const UComplex& c, int first_offset, int second_offset, const std::string& first_label,
                      const std::string& second_label) {
  UComplex out;
  const auto n = static_cast<Index>(c.size());
  out.boundary.resize(2 * c.size());
  for (int half = 0; half < 2; ++half) {
    const int offset = half == 0 ? first_offset : second_offset;
    const auto& label = half == 0 ? first_label : second_label;
    for (Index x = 0; x < n; ++x) out.basis.push(c.basis.labels[x] + "*" + label, c.basis.gradings[x] + offset);
  }
  for (Index x = 0; x < n; ++x)
    for (const auto& e : c.boundary[x]) {
      out.boundary[x].push_back(e);
      out.boundary[x + n].push_back({e.target + n, e.exponent});
    }
  return out;
}

UMap UMap::scalar(std::size_t n, const PolyF2U& p) {
  UMap m(n, n);
  if (!p.is_zero())
    for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace_back(static_cast<Index>(i), p);
  return m;
}

UMap UMap::from_differential(const UComplex& c) {
  UMap m(c.size(), c.size());
  for (std::size_t x = 0; x < c.size(); ++x)
    for (const auto& e : c.boundary[x]) m.cols_[x].emplace_back(e.target, PolyF2U::monomial(e.exponent));
  return m;
}

PolyF2U UMap::at(Index tgt, Index src) const {
  const auto& col = cols_.at(src);
  auto it = std::lower_bound(col.begin(), col.end(), tgt, [](const auto& e, Index t) { return e.first < t; });
  return it != col.end() && it->first == tgt ? it->second : PolyF2U{};
}

void UMap::add(Index tgt, Index src, const PolyF2U& p) {
  if (tgt >= target_size_) throw std::out_of_range("UMap::add target");
  auto& col = cols_.at(src);
  auto it = std::lower_bound(col.begin(), col.end(), tgt, [](const auto& e, Index t) { return e.first < t; });
  if (it != col.end() && it->first == tgt) {
    it->second += p;
    if (it->second.is_zero()) col.erase(it);
  } else if (!p.is_zero()) {
    col.insert(it, {tgt, p});
  }
}

SparseVector UMap::apply(const SparseVector& v) const {
  std::map<Index, PolyF2U> acc;
  for (const auto& [i, c] : v)
    for (const auto& [t, p] : cols_.at(i)) acc[t] += c * p;
  SparseVector out;
  for (auto& [t, p] : acc)
    if (!p.is_zero()) out.emplace_back(t, std::move(p));
  return out;
}

UMap UMap::after(const UMap& right) const {
  if (right.target_size() != source_size()) throw std::invalid_argument("UMap::after: size mismatch");
  UMap out(right.source_size(), target_size_);
  Accumulator<PolyF2U> acc(target_size_);
  for (std::size_t x = 0; x < right.source_size(); ++x) {
    for (const auto& [y, p] : right.cols_[x])
      for (const auto& [z, q] : cols_[y]) acc.at(z) += p * q;
    out.cols_[x] = acc.drain([](const PolyF2U& m) { return !m.is_zero(); });
  }
  return out;
}

UMap& UMap::operator+=(const UMap& other) {
  if (other.source_size() != source_size() || other.target_size_ != target_size_)
    throw std::invalid_argument("UMap::+=: size mismatch");
  for (std::size_t x = 0; x < cols_.size(); ++x)
    for (const auto& [t, p] : other.cols_[x]) add(t, static_cast<Index>(x), p);
  return *this;
}

bool UMap::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const auto& c) { return c.empty(); });
}

bool UMap::is_chain_map(const UComplex& source, const UComplex& target) const {
  if (source.size() != source_size() || target.size() != target_size_) return false;
  const auto ds = from_differential(source), dt = from_differential(target);
  return dt.after(*this) == after(ds);
}

std::optional<int> UMap::degree(const UComplex& source, const UComplex& target) const {
  std::optional<int> deg;
  for (std::size_t x = 0; x < cols_.size(); ++x)
    for (const auto& [t, p] : cols_[x])
      for (int k : p.exponents()) {
        int d = target.basis.gradings[t] - 2 * k - source.basis.gradings[x];
        if (deg && *deg != d) return std::nullopt;
        deg = d;
      }
  return deg;
}

std::string UMap::to_string(const GradedBasis* src, const GradedBasis* tgt) const {
  std::ostringstream os;
  for (std::size_t x = 0; x < cols_.size(); ++x) {
    os << (src ? src->labels[x] : std::to_string(x)) << " ->";
    if (cols_[x].empty()) os << " 0";
    for (std::size_t i = 0; i < cols_[x].size(); ++i) {
      const auto& [t, p] = cols_[x][i];
      os << (i ? " + " : " ") << "(" << p.to_string() << ")" << (tgt ? tgt->labels[t] : std::to_string(t));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace unogrid
