#include "tork/graded_module.hpp"

#include "tork/random.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace tork {

namespace {

void append_monomials(int num_vars, int var, unsigned remaining, Exponent& current,
                      std::vector<Exponent>& out) {
  if (var == num_vars - 1) {
    current[static_cast<std::size_t>(var)] = remaining;
    out.push_back(current);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    current[static_cast<std::size_t>(var)] = e;
    append_monomials(num_vars, var + 1, remaining - e, current, out);
  }
}

FaceMask support_of(const Exponent& e) {
  FaceMask mask = 0;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] != 0) mask |= FaceMask{1} << k;
  }
  return mask;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

// Quotient of S(m) truncated at t_max whose surviving monomials are those
// accepted by `keep`; `keep` must be closed under taking divisors.
GradedModule order_ideal_module(int num_vars, std::size_t t_max,
                                const std::function<bool(const Exponent&)>& keep) {
  std::vector<std::vector<Exponent>> basis(t_max + 1);
  std::vector<std::map<Exponent, std::size_t>> index(t_max + 1);
  std::vector<std::size_t> dims(t_max + 1);
  for (std::size_t t = 0; t <= t_max; ++t) {
    for (auto& e : monomials_of_degree(num_vars, static_cast<unsigned>(t))) {
      if (!keep(e)) continue;
      index[t].emplace(e, basis[t].size());
      basis[t].push_back(std::move(e));
    }
    dims[t] = basis[t].size();
  }
  std::vector<std::vector<SparseMatrix>> mult(static_cast<std::size_t>(num_vars));
  for (int i = 0; i < num_vars; ++i) {
    for (std::size_t t = 0; t < t_max; ++t) {
      std::vector<MatrixEntry> entries;
      for (std::size_t c = 0; c < basis[t].size(); ++c) {
        Exponent product = basis[t][c];
        ++product[static_cast<std::size_t>(i)];
        auto it = index[t + 1].find(product);
        if (it != index[t + 1].end()) entries.push_back({it->second, c, Rational(1)});
      }
      mult[static_cast<std::size_t>(i)].emplace_back(dims[t + 1], dims[t], std::move(entries));
    }
  }
  return GradedModule(num_vars, std::move(dims), std::move(mult));
}

// Small dense exact matrix used by the random module transformations.
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  Dense(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  explicit Dense(const SparseMatrix& s) : Dense(s.rows(), s.cols()) {
    for (const auto& e : s.entries()) (*this)(e.row, e.col) = e.value;
  }

  Rational& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  SparseMatrix to_sparse() const {
    std::vector<MatrixEntry> entries;
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if ((*this)(r, c) != 0) entries.push_back({r, c, (*this)(r, c)});
      }
    }
    return SparseMatrix(rows, cols, std::move(entries));
  }
};

using Vector = std::vector<Rational>;

// Row-reduced basis of a subspace: pivot column per row, rows normalized so
// the pivot entry is 1 and every other row is zero in that column.
struct ReducedSpan {
  std::vector<Vector> rows;
  std::vector<std::size_t> pivots;

  void reduce(Vector& w) const {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Rational f = w[pivots[k]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < w.size(); ++c) w[c] -= f * rows[k][c];
    }
  }

  bool insert(Vector w) {
    reduce(w);
    auto lead = std::find_if(w.begin(), w.end(), [](const Rational& x) { return x != 0; });
    if (lead == w.end()) return false;
    const std::size_t p = static_cast<std::size_t>(lead - w.begin());
    const Rational inv = 1 / w[p];
    for (auto& x : w) x *= inv;
    for (auto& row : rows) {
      const Rational f = row[p];
      if (f == 0) continue;
      for (std::size_t c = 0; c < w.size(); ++c) row[c] -= f * w[c];
    }
    rows.push_back(std::move(w));
    pivots.push_back(p);
    return true;
  }
};

Vector multiply(const SparseMatrix& a, const Vector& x) {
  Vector y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto cols = a.row_cols(r);
    auto vals = a.row_values(r);
    for (std::size_t k = 0; k < cols.size(); ++k) y[r] += vals[k] * x[cols[k]];
  }
  return y;
}

// M / N for the graded submodule N spanned by `generators` at `level`.
GradedModule quotient_by_generated(const GradedModule& module, std::size_t level,
                                   const std::vector<Vector>& generators) {
  const std::size_t levels = module.num_levels();
  std::vector<ReducedSpan> sub(levels);
  for (const auto& g : generators) sub[level].insert(g);
  for (std::size_t t = level; t + 1 < levels; ++t) {
    for (const auto& y : sub[t].rows) {
      for (int i = 0; i < module.num_vars(); ++i) sub[t + 1].insert(multiply(module.mult(i, t), y));
    }
  }
  std::vector<std::vector<std::size_t>> keep(levels);
  std::vector<std::size_t> dims(levels);
  for (std::size_t t = 0; t < levels; ++t) {
    std::vector<bool> pivot(module.dim(t), false);
    for (auto p : sub[t].pivots) pivot[p] = true;
    for (std::size_t c = 0; c < module.dim(t); ++c) {
      if (!pivot[c]) keep[t].push_back(c);
    }
    dims[t] = keep[t].size();
  }
  std::vector<std::vector<SparseMatrix>> mult(static_cast<std::size_t>(module.num_vars()));
  for (int i = 0; i < module.num_vars(); ++i) {
    for (std::size_t t = 0; t + 1 < levels; ++t) {
      std::vector<MatrixEntry> entries;
      for (std::size_t c = 0; c < keep[t].size(); ++c) {
        Vector x(module.dim(t));
        x[keep[t][c]] = 1;
        Vector y = multiply(module.mult(i, t), x);
        sub[t + 1].reduce(y);
        for (std::size_t r = 0; r < keep[t + 1].size(); ++r) {
          if (y[keep[t + 1][r]] != 0) entries.push_back({r, c, y[keep[t + 1][r]]});
        }
      }
      mult[static_cast<std::size_t>(i)].emplace_back(dims[t + 1], dims[t], std::move(entries));
    }
  }
  return GradedModule(module.num_vars(), std::move(dims), std::move(mult));
}

struct ElementaryOp {
  std::size_t from;
  std::size_t to;
  Rational factor;  // basis vector `to` += factor * basis vector `from`
};

// Conjugates every operator by a random invertible change of basis on each
// positive level.
GradedModule change_basis(const GradedModule& module, std::mt19937_64& rng) {
  const std::size_t levels = module.num_levels();
  std::vector<std::vector<ElementaryOp>> ops(levels);
  for (std::size_t t = 1; t < levels; ++t) {
    const std::size_t n = module.dim(t);
    if (n < 2) continue;
    const std::uint64_t count = 1 + uniform_below(rng, 2 * n);
    for (std::uint64_t k = 0; k < count; ++k) {
      const std::size_t a = uniform_below(rng, n);
      std::size_t b = uniform_below(rng, n - 1);
      if (b >= a) ++b;
      const auto num = static_cast<long>(uniform_below(rng, 7)) - 3;
      const auto den = static_cast<long>(1 + uniform_below(rng, 3));
      if (num == 0) continue;
      Rational f(num, den);
      f.canonicalize();
      ops[t].push_back({a, b, f});
    }
  }
  std::vector<std::vector<SparseMatrix>> mult(static_cast<std::size_t>(module.num_vars()));
  for (int i = 0; i < module.num_vars(); ++i) {
    for (std::size_t t = 0; t + 1 < levels; ++t) {
      Dense d(module.mult(i, t));
      // Row operations P_{t+1} · V, then column operations V · P_t^{-1}.
      for (const auto& op : ops[t + 1]) {
        for (std::size_t c = 0; c < d.cols; ++c) d(op.to, c) += op.factor * d(op.from, c);
      }
      for (const auto& op : ops[t]) {
        for (std::size_t r = 0; r < d.rows; ++r) d(r, op.from) -= op.factor * d(r, op.to);
      }
      mult[static_cast<std::size_t>(i)].push_back(d.to_sparse());
    }
  }
  return GradedModule(module.num_vars(), module.level_dims(), std::move(mult));
}

}  // namespace

std::vector<Exponent> monomials_of_degree(int num_vars, unsigned degree) {
  std::vector<Exponent> out;
  if (num_vars <= 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent current(static_cast<std::size_t>(num_vars), 0);
  append_monomials(num_vars, 0, degree, current, out);
  return out;
}

GradedModule::GradedModule(int num_vars, std::vector<std::size_t> level_dims,
                           std::vector<std::vector<SparseMatrix>> mult)
    : m_(num_vars), dims_(std::move(level_dims)), mult_(std::move(mult)) {
  if (num_vars < 0) throw std::invalid_argument("negative number of variables");
  const std::size_t slots = dims_.empty() ? 0 : dims_.size() - 1;
  if (mult_.size() != static_cast<std::size_t>(num_vars)) {
    throw std::invalid_argument("expected one operator list per variable");
  }
  for (const auto& per_level : mult_) {
    if (per_level.size() != slots) {
      throw std::invalid_argument("expected " + std::to_string(slots) +
                                  " multiplication operators per variable");
    }
  }
}

GradedModule GradedModule::residue_field(int num_vars) {
  return GradedModule(num_vars, {1},
                      std::vector<std::vector<SparseMatrix>>(static_cast<std::size_t>(num_vars)));
}

std::size_t GradedModule::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

std::size_t GradedModule::top_level() const {
  for (std::size_t t = dims_.size(); t-- > 0;) {
    if (dims_[t] != 0) return t;
  }
  throw std::logic_error("top_level of the zero module");
}

const SparseMatrix& GradedModule::mult(int var, std::size_t level) const {
  return mult_.at(static_cast<std::size_t>(var)).at(level);
}

std::vector<ModuleViolation> validate(const GradedModule& module) {
  std::vector<ModuleViolation> out;
  const int m = module.num_vars();
  const std::size_t levels = module.num_levels();
  std::vector<std::vector<bool>> shape_ok(static_cast<std::size_t>(m),
                                          std::vector<bool>(levels, true));
  for (int i = 0; i < m; ++i) {
    for (std::size_t t = 0; t + 1 < levels; ++t) {
      const auto& a = module.mult(i, t);
      if (a.rows() != module.dim(t + 1) || a.cols() != module.dim(t)) {
        shape_ok[static_cast<std::size_t>(i)][t] = false;
        out.push_back({ModuleViolation::Kind::Shape, i + 1, i + 1, t,
                       "v" + std::to_string(i + 1) + " at level " + std::to_string(t) + " is " +
                           std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                           ", expected " + std::to_string(module.dim(t + 1)) + "x" +
                           std::to_string(module.dim(t))});
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (std::size_t t = 0; t + 2 < levels; ++t) {
        const auto si = static_cast<std::size_t>(i);
        const auto sj = static_cast<std::size_t>(j);
        if (!shape_ok[si][t] || !shape_ok[si][t + 1] || !shape_ok[sj][t] || !shape_ok[sj][t + 1]) {
          continue;
        }
        if (!(compose(module.mult(j, t + 1), module.mult(i, t)) ==
              compose(module.mult(i, t + 1), module.mult(j, t)))) {
          out.push_back({ModuleViolation::Kind::Commutativity, i + 1, j + 1, t,
                         "v" + std::to_string(i + 1) + " and v" + std::to_string(j + 1) +
                             " do not commute on level " + std::to_string(t)});
        }
      }
    }
  }
  return out;
}

GradedModule stanley_reisner(const SimplicialComplex& k, std::size_t t_max) {
  if (t_max < 1) throw std::invalid_argument("stanley_reisner needs t_max >= 1");
  return order_ideal_module(k.num_vertices(), t_max,
                            [&](const Exponent& e) { return k.contains(support_of(e)); });
}

GradedModule monomial_quotient(int num_vars, const std::vector<Exponent>& generators,
                               std::size_t t_max) {
  for (const auto& g : generators) {
    if (g.size() != static_cast<std::size_t>(num_vars)) {
      throw std::invalid_argument("generator has " + std::to_string(g.size()) +
                                  " exponents, expected " + std::to_string(num_vars));
    }
    if (std::all_of(g.begin(), g.end(), [](unsigned x) { return x == 0; })) {
      throw std::invalid_argument("generator 1 would kill the whole ring");
    }
  }
  return order_ideal_module(num_vars, t_max, [&](const Exponent& e) {
    return std::none_of(generators.begin(), generators.end(),
                        [&](const Exponent& g) { return divides(g, e); });
  });
}

GradedModule dual_module(const GradedModule& module) {
  const int m = module.num_vars();
  if (module.is_zero()) return GradedModule(m, {}, std::vector<std::vector<SparseMatrix>>(m));
  const std::size_t top = module.top_level();
  std::vector<std::size_t> dims(top + 1);
  for (std::size_t t = 0; t <= top; ++t) dims[t] = module.dim(top - t);
  std::vector<std::vector<SparseMatrix>> mult(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    // (v f)(x) = f(v x): level t of M* is level top - t of M.
    for (std::size_t t = 0; t < top; ++t) {
      mult[static_cast<std::size_t>(i)].push_back(module.mult(i, top - t - 1).transpose());
    }
  }
  return GradedModule(m, std::move(dims), std::move(mult));
}

GradedModule random_artinian_module(int num_vars, std::uint64_t seed, std::size_t max_level) {
  if (max_level < 1) throw std::invalid_argument("random_artinian_module needs max_level >= 1");
  std::mt19937_64 rng(seed);
  const auto m = static_cast<std::size_t>(num_vars);

  std::vector<Exponent> generators;
  for (std::size_t i = 0; i < m; ++i) {
    if (!coin(rng, 3, 4)) continue;
    Exponent g(m, 0);
    g[i] = static_cast<unsigned>(1 + uniform_below(rng, max_level + 1));
    generators.push_back(std::move(g));
  }
  const std::uint64_t extra = m == 0 ? 0 : uniform_below(rng, m + 1);
  for (std::uint64_t k = 0; k < extra; ++k) {
    const auto degree = 2 + uniform_below(rng, max_level);
    Exponent g(m, 0);
    for (std::uint64_t d = 0; d < degree; ++d) ++g[uniform_below(rng, m)];
    generators.push_back(std::move(g));
  }
  GradedModule module = monomial_quotient(num_vars, generators, max_level);
  if (module.is_zero() || module.top_level() == 0) return module;

  if (coin(rng, 1, 2)) {
    const std::size_t top = module.top_level();
    const std::size_t level = (top >= 2 && coin(rng, 1, 2)) ? top - 1 : top;
    const std::uint64_t count = 1 + uniform_below(rng, 2);
    std::vector<Vector> gens;
    for (std::uint64_t g = 0; g < count; ++g) {
      Vector x(module.dim(level));
      for (auto& c : x) {
        if (coin(rng, 1, 2)) c = static_cast<long>(uniform_below(rng, 5)) - 2;
      }
      gens.push_back(std::move(x));
    }
    module = quotient_by_generated(module, level, gens);
  }
  if (coin(rng, 1, 3)) module = change_basis(module, rng);
  return module;
}

}  // namespace tork
