#include "unogrid/gc_complex.hpp"

#include <algorithm>
#include <exception>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "unogrid/error.hpp"

namespace unogrid {

namespace {

Index factorial(int n) {
  Index f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<Index>(i);
  return f;
}

void check_cap(int n, int cap) {
  // 12! is the last factorial that fits an Index.
  if (n > cap || n > 12)
    throw Error(ErrorCode::CapExceeded,
                "grid size " + std::to_string(n) + " exceeds state cap " + std::to_string(std::min(cap, 12)));
}

// Doubled coordinates: lattice points (2i, 2j), cell centres (2i+1, 2j+1).
using Point = std::pair<int, int>;

int quadrant_count(const std::vector<Point>& p, const std::vector<Point>& q) {
  int count = 0;
  for (auto [px, py] : p)
    for (auto [qx, qy] : q)
      if (qx > px && qy > py) ++count;
  return count;
}

int j_self(const std::vector<Point>& x, const std::vector<Point>& m) {
  return quadrant_count(x, x) - quadrant_count(x, m) - quadrant_count(m, x) + quadrant_count(m, m);
}

Rectangle make_rectangle(const GridDiagram& g, std::span<const int> x, int i, int j, bool wraps) {
  const int n = g.size();
  Rectangle r;
  if (!wraps) {
    r.c1 = i, r.c2 = j, r.width = j - i;
  } else {
    r.c1 = j, r.c2 = i, r.width = n - (j - i);
  }
  r.r1 = x[static_cast<std::size_t>(r.c1)];
  r.r2 = x[static_cast<std::size_t>(r.c2)];
  r.height = g.wrap(r.r2 - r.r1);
  r.weight = ExponentVector(static_cast<std::size_t>(g.marking_count()));
  for (int t = 0; t < r.width; ++t) {
    const int col = g.wrap(r.c1 + t);
    if (t > 0) {
      const int off = g.wrap(x[static_cast<std::size_t>(col)] - r.r1);
      if (off > 0 && off < r.height) ++r.interior_points;
    }
    const int o = g.o_row_in_col(col), xr = g.x_row_in_col(col);
    if (g.wrap(o - r.r1) < r.height) r.weight.bump(static_cast<std::size_t>(o));
    if (g.wrap(xr - r.r1) < r.height) r.weight.bump(static_cast<std::size_t>(n + xr));
  }
  return r;
}

template <class Body>
void parallel_for(Index count, int threads, Body body) {
  const auto workers = static_cast<Index>(std::max(1, threads));
  if (workers == 1 || count < 2 * workers) {
    for (Index i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (Index w = 0; w < workers; ++w)
    pool.emplace_back([=, &body, &errors] {
      try {
        for (Index i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<int> compute_gradings(const GridDiagram& g, int threads) {
  const Index count = factorial(g.size());
  std::vector<int> gradings(count);
  parallel_for(count, threads, [&](Index r) { gradings[r] = delta_grading(g, state_unrank(r, g.size())); });
  return gradings;
}

GradedBasis make_basis(const GridDiagram& g, int threads) {
  GradedBasis b;
  b.gradings = compute_gradings(g, threads);
  b.labels.reserve(b.gradings.size());
  for (Index r = 0; r < b.gradings.size(); ++r) b.labels.push_back(state_label(state_unrank(r, g.size())));
  return b;
}

// Calls visit(target_rank, rectangle) for every empty rectangle out of x.
template <class Visit>
void for_each_empty_rectangle(const GridDiagram& g, std::vector<int>& x, Visit visit) {
  const int n = g.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto a = std::span<const int>(x);
      Rectangle inner = make_rectangle(g, a, i, j, false);
      Rectangle outer = make_rectangle(g, a, i, j, true);
      if (!inner.is_empty() && !outer.is_empty()) continue;
      std::swap(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]);
      const Index y = state_rank(x);
      std::swap(x[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(j)]);
      if (inner.is_empty()) visit(y, inner);
      if (outer.is_empty()) visit(y, outer);
    }
}

}  // namespace

Index state_rank(std::span<const int> perm) {
  const int n = static_cast<int>(perm.size());
  Index rank = 0;
  for (int i = 0; i < n; ++i) {
    Index smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(i)]) ++smaller;
    rank = rank * static_cast<Index>(n - i) + smaller;
  }
  return rank;
}

GridState state_unrank(Index rank, int n) {
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const auto base = static_cast<Index>(n - i);
    digits[static_cast<std::size_t>(i)] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  GridState x;
  x.perm.reserve(static_cast<std::size_t>(n));
  for (int d : digits) {
    x.perm.push_back(pool[static_cast<std::size_t>(d)]);
    pool.erase(pool.begin() + d);
  }
  return x;
}

std::string state_label(const GridState& x) {
  std::string out;
  for (std::size_t i = 0; i < x.perm.size(); ++i) {
    if (x.size() > 9 && i > 0) out += ',';
    out += std::to_string(x.perm[i] + 1);
  }
  return out;
}

std::vector<GridState> enumerate_states(int n, int cap) {
  check_cap(n, cap);
  std::vector<GridState> out;
  out.reserve(factorial(n));
  GridState x;
  x.perm.resize(static_cast<std::size_t>(n));
  std::iota(x.perm.begin(), x.perm.end(), 0);
  do out.push_back(x);
  while (std::next_permutation(x.perm.begin(), x.perm.end()));
  return out;
}

std::vector<Rectangle> candidate_rectangles(const GridDiagram& g, const GridState& x, const GridState& y) {
  if (x.size() != g.size() || y.size() != g.size()) throw std::invalid_argument("state size differs from grid");
  std::vector<int> diff;
  for (int i = 0; i < g.size(); ++i)
    if (x.perm[static_cast<std::size_t>(i)] != y.perm[static_cast<std::size_t>(i)]) diff.push_back(i);
  if (diff.size() != 2) return {};
  const int i = diff[0], j = diff[1];
  if (x.perm[static_cast<std::size_t>(i)] != y.perm[static_cast<std::size_t>(j)]) return {};
  return {make_rectangle(g, x.perm, i, j, false), make_rectangle(g, x.perm, i, j, true)};
}

std::vector<Rectangle> rectangles(const GridDiagram& g, const GridState& x, const GridState& y) {
  auto all = candidate_rectangles(g, x, y);
  std::erase_if(all, [](const Rectangle& r) { return !r.is_empty(); });
  return all;
}

int delta_grading(const GridDiagram& g, const GridState& x) {
  const int n = g.size();
  std::vector<Point> pts, os, xs;
  for (int i = 0; i < n; ++i) {
    pts.emplace_back(2 * i, 2 * x.perm[static_cast<std::size_t>(i)]);
    os.emplace_back(2 * g.o_col()[static_cast<std::size_t>(i)] + 1, 2 * i + 1);
    xs.emplace_back(2 * g.x_col()[static_cast<std::size_t>(i)] + 1, 2 * i + 1);
  }
  const int l = link_topology(g).component_count;
  return j_self(pts, os) + j_self(pts, xs) + n - l + 2;
}

MultiPoly curvature(const GridDiagram& g) {
  const auto topo = link_topology(g);
  const auto m = static_cast<std::size_t>(g.marking_count());
  MultiPoly sum;
  for (const auto& cyc : topo.cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      ExponentVector e(m);
      e.bump(static_cast<std::size_t>(cyc[k]));
      e.bump(static_cast<std::size_t>(cyc[(k + 1) % cyc.size()]));
      sum.toggle(e);
    }
  return sum;
}

bool matches_curvature(const GridDiagram& g, const MonomialComplex& c) {
  const auto expected = curvature(g);
  const auto sq = boundary_squared(c);
  for (std::size_t x = 0; x < sq.size(); ++x) {
    if (expected.is_zero()) {
      if (!sq[x].empty()) return false;
      continue;
    }
    if (sq[x].size() != 1 || sq[x][0].first != x || !(sq[x][0].second == expected)) return false;
  }
  return true;
}

MonomialComplex build_complex(const GridDiagram& g, const BuildOptions& options) {
  check_cap(g.size(), options.cap);
  MonomialComplex c;
  c.basis = make_basis(g, options.threads);
  c.variables = static_cast<std::size_t>(g.marking_count());
  c.boundary.resize(c.size());
  parallel_for(static_cast<Index>(c.size()), options.threads, [&](Index r) {
    auto x = state_unrank(r, g.size()).perm;
    std::map<Index, MultiPoly> col;
    for_each_empty_rectangle(g, x, [&](Index y, const Rectangle& rect) {
      col[y].toggle(rect.weight);
    });
    for (auto& [y, p] : col)
      if (!p.is_zero()) c.boundary[r].emplace_back(y, std::move(p));
  });
  return c;
}

UComplex build_unoriented(const GridDiagram& g, const BuildOptions& options) {
  check_cap(g.size(), options.cap);
  UComplex c;
  c.basis = make_basis(g, options.threads);
  c.boundary.resize(c.size());
  parallel_for(static_cast<Index>(c.size()), options.threads, [&](Index r) {
    auto x = state_unrank(r, g.size()).perm;
    std::map<Index, int> col;
    for_each_empty_rectangle(g, x, [&](Index y, const Rectangle& rect) {
      const int k = rect.weight.total();
      auto [it, inserted] = col.try_emplace(y, k);
      if (inserted) return;
      if (it->second != k) throw Error(ErrorCode::NonHomogeneousEntry, "rectangle pair with unequal weights");
      col.erase(it);
    });
    for (auto [y, k] : col) c.boundary[r].push_back({y, k});
  });
  return c;
}

void write_complex_dump(std::ostream& os, int n, const MonomialComplex& c) {
  os << "n " << n << "\nvariables " << c.variables << "\ngradings";
  for (int g : c.basis.gradings) os << ' ' << g;
  os << '\n';
  for (std::size_t x = 0; x < c.size(); ++x)
    for (const auto& [y, p] : c.boundary[x])
      for (const auto& term : p.terms()) os << x << ' ' << y << ' ' << term.to_string() << '\n';
}

ComplexDump read_complex_dump(std::istream& is) {
  ComplexDump out;
  auto& c = out.complex;
  std::string line;
  int lineno = 0;
  bool have_n = false, have_vars = false, have_gradings = false;
  std::vector<std::map<Index, MultiPoly>> cols;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (!have_n) {
      std::string key;
      if (!(ls >> key >> out.n) || key != "n") fail("expected `n <size>`");
      have_n = true;
    } else if (!have_vars) {
      std::string key;
      if (!(ls >> key >> c.variables) || key != "variables") fail("expected `variables <count>`");
      have_vars = true;
    } else if (!have_gradings) {
      std::string key;
      if (!(ls >> key) || key != "gradings") fail("expected `gradings ...`");
      for (int g; ls >> g;) c.basis.push(std::to_string(c.basis.size()), g);
      if (!ls.eof()) fail("bad grading value");
      std::size_t states = 1;
      for (int k = 2; k <= out.n; ++k) states *= static_cast<std::size_t>(k);
      if (out.n < 1 || out.n > 12 || c.size() != states) fail("expected n! gradings");
      cols.resize(c.size());
      have_gradings = true;
    } else {
      Index src = 0, tgt = 0;
      std::string exps;
      if (!(ls >> src >> tgt >> exps)) fail("expected `src tgt e0,e1,...`");
      if (src >= c.size() || tgt >= c.size()) fail("state index out of range");
      ExponentVector e(c.variables);
      std::size_t v = 0;
      std::istringstream es(exps);
      for (std::string tok; std::getline(es, tok, ',');) {
        if (v >= c.variables) fail("too many exponents");
        try {
          e.set(v++, std::stoi(tok));
        } catch (const std::exception&) {
          fail("bad exponent `" + tok + "`");
        }
      }
      if (v != c.variables) fail("expected " + std::to_string(c.variables) + " exponents");
      cols[src][tgt].toggle(e);
    }
  }
  if (!have_gradings) fail("missing header");
  c.boundary.resize(c.size());
  for (std::size_t x = 0; x < c.size(); ++x)
    for (auto& [y, p] : cols[x])
      if (!p.is_zero()) c.boundary[x].emplace_back(y, std::move(p));
  return out;
}

}  // namespace unogrid
