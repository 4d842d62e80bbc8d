#include "duo/vbase.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

namespace duo {

namespace {

std::atomic<std::int64_t> g_budget{100000};

// Dense matrices are kept well below memory limits even when dimensions pass the budget.
constexpr std::int64_t kMaxMatrixEntries = 50'000'000;

void require(bool ok, const char* what) {
  if (!ok) throw ShapeError(what);
}

void require_same_kind(const BaseValue& x, const BaseValue& y) {
  if (!(x.kind == y.kind)) throw ShapeError("kind mismatch: " + x.kind.name() + " vs " + y.kind.name());
}

void require_parallel(const BaseMap& f, const BaseMap& g) {
  if (!(f.src == g.src) || !(f.tgt == g.tgt)) throw ShapeError("non-parallel pair");
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a)
    throw BudgetError("size overflow");
  return a * b;
}

std::vector<std::int64_t> matrix_storage(std::int64_t rows, std::int64_t cols) {
  if (checked_mul(rows, cols) > kMaxMatrixEntries) throw BudgetError("matrix too large");
  return std::vector<std::int64_t>(rows * cols, 0);
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::int64_t> rref(std::vector<std::int64_t>& m, std::int64_t rows, std::int64_t cols,
                               int p) {
  std::vector<std::int64_t> pivots;
  std::int64_t r = 0;
  for (std::int64_t c = 0; c < cols && r < rows; ++c) {
    std::int64_t sel = -1;
    for (std::int64_t i = r; i < rows; ++i)
      if (m[i * cols + c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (std::int64_t j = 0; j < cols; ++j) std::swap(m[sel * cols + j], m[r * cols + j]);
    std::int64_t iv = fp::inv(m[r * cols + c], p);
    for (std::int64_t j = 0; j < cols; ++j) m[r * cols + j] = m[r * cols + j] * iv % p;
    for (std::int64_t i = 0; i < rows; ++i) {
      if (i == r || m[i * cols + c] == 0) continue;
      std::int64_t fct = m[i * cols + c];
      for (std::int64_t j = 0; j < cols; ++j)
        m[i * cols + j] = fp::norm(m[i * cols + j] - fct * m[r * cols + j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::int64_t> transpose(const std::vector<std::int64_t>& m, std::int64_t rows,
                                    std::int64_t cols) {
  std::vector<std::int64_t> t(m.size());
  for (std::int64_t i = 0; i < rows; ++i)
    for (std::int64_t j = 0; j < cols; ++j) t[j * rows + i] = m[i * cols + j];
  return t;
}

std::int64_t find_root(std::vector<std::int64_t>& parent, std::int64_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

namespace fp {

std::int64_t norm(std::int64_t a, int p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv(std::int64_t a, int p) {
  std::int64_t r = 1, b = norm(a, p), e = p - 2;
  if (b == 0) throw std::domain_error("zero has no inverse");
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace fp

std::int64_t size_budget() { return g_budget.load(); }
void set_size_budget(std::int64_t n) { g_budget.store(n); }

BaseKind BaseKind::finvect(int p) {
  if (!fp::is_prime(p) || p > 257) throw ShapeError("FinVect needs a prime p <= 257");
  return {Tag::FinVect, p};
}

std::string BaseKind::name() const {
  return is_set() ? std::string("FinSet") : "FinVect(" + std::to_string(p) + ")";
}

std::string BaseValue::label(std::int64_t i) const {
  if (i < static_cast<std::int64_t>(labels.size())) return labels[i];
  return std::to_string(i);
}

BaseValue make_value(BaseKind k, std::int64_t n) {
  if (n < 0) throw ShapeError("negative size");
  if (n > size_budget())
    throw BudgetError("value of size " + std::to_string(n) + " exceeds budget " +
                      std::to_string(size_budget()));
  return BaseValue{k, n, {}};
}

BaseValue make_set(std::vector<std::string> labels) {
  BaseValue v = make_value(BaseKind::finset(), static_cast<std::int64_t>(labels.size()));
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "duplicate labels");
  v.labels = std::move(labels);
  return v;
}

BaseValue unit_value(BaseKind k) { return make_value(k, 1); }
BaseValue zero_value(BaseKind k) { return make_value(k, 0); }

BaseMap function_map(const BaseValue& x, const BaseValue& y, std::vector<std::int64_t> t) {
  require(x.kind.is_set() && y.kind.is_set(), "function_map needs FinSet");
  require(static_cast<std::int64_t>(t.size()) == x.size, "function table length");
  for (auto v : t) require(v >= 0 && v < y.size, "function value out of range");
  return BaseMap{x, y, std::move(t)};
}

BaseMap matrix_map(const BaseValue& x, const BaseValue& y, std::vector<std::int64_t> t) {
  require(!x.kind.is_set() && x.kind == y.kind, "matrix_map needs FinVect");
  require(static_cast<std::int64_t>(t.size()) == x.size * y.size, "matrix shape");
  for (auto& v : t) v = fp::norm(v, x.kind.p);
  return BaseMap{x, y, std::move(t)};
}

BaseMap identity(const BaseValue& x) {
  if (x.kind.is_set()) {
    std::vector<std::int64_t> t(x.size);
    std::iota(t.begin(), t.end(), 0);
    return BaseMap{x, x, std::move(t)};
  }
  auto t = matrix_storage(x.size, x.size);
  for (std::int64_t i = 0; i < x.size; ++i) t[i * x.size + i] = 1;
  return BaseMap{x, x, std::move(t)};
}

BaseMap zero_map(const BaseValue& x, const BaseValue& y) {
  require(!x.kind.is_set(), "zero_map needs FinVect");
  require_same_kind(x, y);
  return BaseMap{x, y, matrix_storage(y.size, x.size)};
}

BaseMap compose(const BaseMap& g, const BaseMap& f) {
  if (!(f.tgt == g.src)) throw ShapeError("compose: codomain/domain mismatch");
  if (f.src.kind.is_set()) {
    std::vector<std::int64_t> t(f.src.size);
    for (std::int64_t i = 0; i < f.src.size; ++i) t[i] = g.table[f.table[i]];
    return BaseMap{f.src, g.tgt, std::move(t)};
  }
  const int p = f.src.kind.p;
  const std::int64_t n = g.tgt.size, m = f.tgt.size, k = f.src.size;
  auto t = matrix_storage(n, k);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t l = 0; l < m; ++l) {
      std::int64_t a = g.table[i * m + l];
      if (a == 0) continue;
      for (std::int64_t j = 0; j < k; ++j) t[i * k + j] += a * f.table[l * k + j];
    }
  for (auto& v : t) v %= p;
  return BaseMap{f.src, g.tgt, std::move(t)};
}

BaseMap point(const BaseValue& x, std::int64_t i) {
  require(i >= 0 && i < x.size, "point index out of range");
  BaseValue u = unit_value(x.kind);
  if (x.kind.is_set()) return BaseMap{u, x, {i}};
  std::vector<std::int64_t> t(x.size, 0);
  t[i] = 1;
  return BaseMap{u, x, std::move(t)};
}

BaseMap vector_point(const BaseValue& x, std::vector<std::int64_t> coords) {
  require(!x.kind.is_set(), "vector_point needs FinVect");
  return matrix_map(unit_value(x.kind), x, std::move(coords));
}

std::int64_t generator_count(const BaseValue& x) { return x.size; }

BaseValue tensor(const BaseValue& x, const BaseValue& y) {
  require_same_kind(x, y);
  BaseValue v = make_value(x.kind, checked_mul(x.size, y.size));
  if (x.kind.is_set() && (!x.labels.empty() || !y.labels.empty())) {
    v.labels.reserve(v.size);
    for (std::int64_t i = 0; i < x.size; ++i)
      for (std::int64_t j = 0; j < y.size; ++j)
        v.labels.push_back("(" + x.label(i) + "," + y.label(j) + ")");
  }
  return v;
}

BaseMap tensor(const BaseMap& f, const BaseMap& g) {
  BaseValue s = tensor(f.src, g.src), t = tensor(f.tgt, g.tgt);
  if (s.kind.is_set()) {
    std::vector<std::int64_t> tab(s.size);
    const std::int64_t gs = g.src.size, gt = g.tgt.size;
    for (std::int64_t i = 0; i < f.src.size; ++i)
      for (std::int64_t j = 0; j < gs; ++j) tab[i * gs + j] = f.table[i] * gt + g.table[j];
    return BaseMap{s, t, std::move(tab)};
  }
  const int p = s.kind.p;
  const std::int64_t fr = f.tgt.size, fc = f.src.size, gr = g.tgt.size, gc = g.src.size;
  auto tab = matrix_storage(t.size, s.size);
  for (std::int64_t r1 = 0; r1 < fr; ++r1)
    for (std::int64_t c1 = 0; c1 < fc; ++c1) {
      std::int64_t a = f.table[r1 * fc + c1];
      if (a == 0) continue;
      for (std::int64_t r2 = 0; r2 < gr; ++r2)
        for (std::int64_t c2 = 0; c2 < gc; ++c2)
          tab[(r1 * gr + r2) * s.size + c1 * gc + c2] = a * g.table[r2 * gc + c2] % p;
    }
  return BaseMap{s, t, std::move(tab)};
}

namespace {

// Permutation-like map sending source index i to target index perm[i].
BaseMap permutation(const BaseValue& s, const BaseValue& t, const std::vector<std::int64_t>& perm) {
  if (s.kind.is_set()) return BaseMap{s, t, perm};
  auto tab = matrix_storage(t.size, s.size);
  for (std::int64_t i = 0; i < s.size; ++i) tab[perm[i] * s.size + i] = 1;
  return BaseMap{s, t, std::move(tab)};
}

}  // namespace

BaseMap symmetry(const BaseValue& x, const BaseValue& y) {
  BaseValue s = tensor(x, y), t = tensor(y, x);
  std::vector<std::int64_t> perm(s.size);
  for (std::int64_t i = 0; i < x.size; ++i)
    for (std::int64_t j = 0; j < y.size; ++j) perm[i * y.size + j] = j * x.size + i;
  return permutation(s, t, perm);
}

BaseMap associator(const BaseValue& x, const BaseValue& y, const BaseValue& z) {
  BaseValue s = tensor(tensor(x, y), z), t = tensor(x, tensor(y, z));
  std::vector<std::int64_t> perm(s.size);
  std::iota(perm.begin(), perm.end(), 0);
  return permutation(s, t, perm);
}

BaseMap left_unitor(const BaseValue& x) {
  BaseValue s = tensor(unit_value(x.kind), x);
  std::vector<std::int64_t> perm(s.size);
  std::iota(perm.begin(), perm.end(), 0);
  return permutation(s, x, perm);
}

BaseMap right_unitor(const BaseValue& x) {
  BaseValue s = tensor(x, unit_value(x.kind));
  std::vector<std::int64_t> perm(s.size);
  std::iota(perm.begin(), perm.end(), 0);
  return permutation(s, x, perm);
}

Coproduct coproduct(const std::vector<BaseValue>& xs, BaseKind k) {
  Coproduct c;
  std::int64_t total = 0;
  for (const auto& x : xs) {
    if (!(x.kind == k)) throw ShapeError("coproduct: kind mismatch");
    c.offsets.push_back(total);
    total += x.size;
  }
  c.value = make_value(k, total);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<std::int64_t> perm(xs[i].size);
    std::iota(perm.begin(), perm.end(), c.offsets[i]);
    c.injections.push_back(permutation(xs[i], c.value, perm));
  }
  return c;
}

BaseMap copair(const Coproduct& c, const std::vector<BaseMap>& fs, const BaseValue& target) {
  require(fs.size() == c.injections.size(), "copair arity");
  const BaseKind k = c.value.kind;
  if (k.is_set()) {
    std::vector<std::int64_t> t(c.value.size);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      require(fs[i].src == c.injections[i].src && fs[i].tgt == target, "copair leg type");
      std::copy(fs[i].table.begin(), fs[i].table.end(), t.begin() + c.offsets[i]);
    }
    return BaseMap{c.value, target, std::move(t)};
  }
  auto t = matrix_storage(target.size, c.value.size);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    require(fs[i].src == c.injections[i].src && fs[i].tgt == target, "copair leg type");
    const std::int64_t w = fs[i].src.size;
    for (std::int64_t r = 0; r < target.size; ++r)
      for (std::int64_t j = 0; j < w; ++j) t[r * c.value.size + c.offsets[i] + j] = fs[i].table[r * w + j];
  }
  return BaseMap{c.value, target, std::move(t)};
}

BaseMap add(const BaseMap& f, const BaseMap& g) {
  require_parallel(f, g);
  require(!f.src.kind.is_set(), "add needs FinVect");
  BaseMap r = f;
  for (std::size_t i = 0; i < r.table.size(); ++i) r.table[i] = (f.table[i] + g.table[i]) % f.src.kind.p;
  return r;
}

BaseMap subtract(const BaseMap& f, const BaseMap& g) {
  require_parallel(f, g);
  require(!f.src.kind.is_set(), "subtract needs FinVect");
  BaseMap r = f;
  for (std::size_t i = 0; i < r.table.size(); ++i)
    r.table[i] = fp::norm(f.table[i] - g.table[i], f.src.kind.p);
  return r;
}

std::int64_t rank(const BaseMap& f) {
  require(!f.src.kind.is_set(), "rank needs FinVect");
  auto m = f.table;
  return static_cast<std::int64_t>(rref(m, f.tgt.size, f.src.size, f.src.kind.p).size());
}

Coequalizer coequalizer(const BaseMap& f, const BaseMap& g) {
  require_parallel(f, g);
  const BaseValue& y = f.tgt;
  if (y.kind.is_set()) {
    std::vector<std::int64_t> parent(y.size);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::int64_t i = 0; i < f.src.size; ++i) {
      std::int64_t a = find_root(parent, f.table[i]), b = find_root(parent, g.table[i]);
      if (a == b) continue;
      // Smaller index becomes the root, so each root is its class minimum.
      if (a < b) parent[b] = a; else parent[a] = b;
    }
    std::vector<std::int64_t> cls(y.size, -1), reps;
    for (std::int64_t i = 0; i < y.size; ++i) {
      std::int64_t r = find_root(parent, i);
      if (r == i) {
        cls[i] = static_cast<std::int64_t>(reps.size());
        reps.push_back(i);
      }
    }
    std::vector<std::int64_t> proj(y.size);
    for (std::int64_t i = 0; i < y.size; ++i) proj[i] = cls[find_root(parent, i)];
    BaseValue q = make_value(y.kind, static_cast<std::int64_t>(reps.size()));
    if (!y.labels.empty())
      for (auto r : reps) q.labels.push_back("[" + y.label(r) + "]");
    return Coequalizer{q, BaseMap{y, q, std::move(proj)}, BaseMap{q, y, reps}};
  }
  // Cokernel of f - g: reduce the image rows, keep the non-pivot coordinates.
  const int p = y.kind.p;
  const std::int64_t n = y.size, m = f.src.size;
  BaseMap d = subtract(f, g);
  auto rows = transpose(d.table, n, m);  // m x n, rows span the image
  auto piv = rref(rows, m, n, p);
  std::vector<bool> is_piv(n, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::int64_t> free_cols, pos(n, -1);
  for (std::int64_t j = 0; j < n; ++j)
    if (!is_piv[j]) {
      pos[j] = static_cast<std::int64_t>(free_cols.size());
      free_cols.push_back(j);
    }
  const std::int64_t k = static_cast<std::int64_t>(free_cols.size());
  BaseValue q = make_value(y.kind, k);
  auto proj = matrix_storage(k, n);
  for (std::int64_t j : free_cols) proj[pos[j] * n + j] = 1;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    const std::int64_t pc = piv[r];
    // e_pc == -(rest of row r) modulo the image.
    for (std::int64_t j : free_cols) {
      std::int64_t v = rows[r * n + j];
      if (v != 0) proj[pos[j] * n + pc] = fp::norm(-v, p);
    }
  }
  auto sec = matrix_storage(n, k);
  for (std::int64_t j : free_cols) sec[j * k + pos[j]] = 1;
  return Coequalizer{q, BaseMap{y, q, std::move(proj)}, BaseMap{q, y, std::move(sec)}};
}

std::optional<BaseMap> factor_through(const Coequalizer& q, const BaseMap& f, const BaseMap& g,
                                      const BaseMap& h) {
  if (!(h.src == q.projection.src)) throw ShapeError("factor_through: domain mismatch");
  if (!(compose(h, f) == compose(h, g))) return std::nullopt;
  return compose(h, q.section);
}

Equalizer equalizer(const BaseMap& f, const BaseMap& g) {
  require_parallel(f, g);
  const BaseValue& x = f.src;
  if (x.kind.is_set()) {
    std::vector<std::int64_t> keep;
    for (std::int64_t i = 0; i < x.size; ++i)
      if (f.table[i] == g.table[i]) keep.push_back(i);
    BaseValue e = make_value(x.kind, static_cast<std::int64_t>(keep.size()));
    if (!x.labels.empty())
      for (auto i : keep) e.labels.push_back(x.label(i));
    return Equalizer{e, BaseMap{e, x, std::move(keep)}};
  }
  const int p = x.kind.p;
  const std::int64_t n = f.tgt.size, m = x.size;
  auto mat = subtract(f, g).table;
  auto piv = rref(mat, n, m, p);
  std::vector<bool> is_piv(m, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::int64_t> free_cols;
  for (std::int64_t j = 0; j < m; ++j)
    if (!is_piv[j]) free_cols.push_back(j);
  const std::int64_t k = static_cast<std::int64_t>(free_cols.size());
  BaseValue e = make_value(x.kind, k);
  auto inc = matrix_storage(m, k);
  for (std::int64_t t = 0; t < k; ++t) {
    const std::int64_t fc = free_cols[t];
    inc[fc * k + t] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) inc[piv[r] * k + t] = fp::norm(-mat[r * m + fc], p);
  }
  return Equalizer{e, BaseMap{e, x, std::move(inc)}};
}

std::optional<BaseMap> factor_through(const Equalizer& e, const BaseMap& f, const BaseMap& g,
                                      const BaseMap& h) {
  if (!(h.tgt == e.inclusion.tgt)) throw ShapeError("factor_through: codomain mismatch");
  if (!(compose(f, h) == compose(g, h))) return std::nullopt;
  const BaseValue& w = h.src;
  if (w.kind.is_set()) {
    std::vector<std::int64_t> where(e.inclusion.tgt.size, -1);
    for (std::int64_t i = 0; i < e.value.size; ++i) where[e.inclusion.table[i]] = i;
    std::vector<std::int64_t> t(w.size);
    for (std::int64_t i = 0; i < w.size; ++i) t[i] = where[h.table[i]];
    return BaseMap{w, e.value, std::move(t)};
  }
  // The inclusion is injective, so the solution is unique.
  return preimage(e.inclusion, h);
}

InternalHom internal_hom(const BaseValue& y, const BaseValue& z) {
  require_same_kind(y, z);
  if (y.kind.is_set()) {
    std::int64_t n = 1;
    for (std::int64_t i = 0; i < y.size; ++i) {
      n = checked_mul(n, z.size);
      if (n > size_budget()) throw BudgetError("internal hom exceeds budget");
    }
    BaseValue h = make_value(y.kind, n);
    BaseValue dom = tensor(h, y);
    std::vector<std::int64_t> ev(dom.size);
    // Function index: digits base |z|, element 0 most significant.
    for (std::int64_t f = 0; f < n; ++f) {
      std::int64_t rest = f;
      for (std::int64_t i = y.size - 1; i >= 0; --i) {
        ev[f * y.size + i] = rest % z.size;
        rest /= z.size;
      }
    }
    return InternalHom{h, BaseMap{dom, z, std::move(ev)}};
  }
  BaseValue h = make_value(y.kind, checked_mul(y.size, z.size));
  BaseValue dom = tensor(h, y);
  auto ev = matrix_storage(z.size, dom.size);
  // Basis E_{r,c} has index r*|y|+c; it sends e_c to e_r.
  for (std::int64_t r = 0; r < z.size; ++r)
    for (std::int64_t c = 0; c < y.size; ++c) ev[r * dom.size + (r * y.size + c) * y.size + c] = 1;
  return InternalHom{h, BaseMap{dom, z, std::move(ev)}};
}

BaseMap curry(const BaseMap& f, const BaseValue& x, const BaseValue& y) {
  if (!(f.src == tensor(x, y))) throw ShapeError("curry: domain is not x(x)y");
  const BaseValue& z = f.tgt;
  InternalHom h = internal_hom(y, z);
  if (x.kind.is_set()) {
    std::vector<std::int64_t> t(x.size);
    for (std::int64_t i = 0; i < x.size; ++i) {
      std::int64_t idx = 0;
      for (std::int64_t j = 0; j < y.size; ++j) idx = idx * z.size + f.table[i * y.size + j];
      t[i] = idx;
    }
    return BaseMap{x, h.value, std::move(t)};
  }
  auto t = matrix_storage(h.value.size, x.size);
  for (std::int64_t i = 0; i < x.size; ++i)
    for (std::int64_t r = 0; r < z.size; ++r)
      for (std::int64_t c = 0; c < y.size; ++c)
        t[(r * y.size + c) * x.size + i] = f.table[r * f.src.size + i * y.size + c];
  return BaseMap{x, h.value, std::move(t)};
}

BaseMap uncurry(const BaseMap& g, const BaseValue& y) {
  // g : x -> [y,z]; recover z from the size of [y,z].
  const BaseValue& x = g.src;
  std::int64_t zs = 0;
  if (x.kind.is_set()) {
    if (y.size == 0) {
      zs = 0;
      // [0,z] is a singleton for every z; the codomain cannot be recovered.
      throw ShapeError("uncurry: codomain ambiguous for empty y");
    }
    std::int64_t n = g.tgt.size;
    for (std::int64_t c = 0; c <= n; ++c) {
      std::int64_t pw = 1;
      for (std::int64_t i = 0; i < y.size && pw <= n; ++i) pw *= c;
      if (pw == n) {
        zs = c;
        break;
      }
    }
  } else {
    if (y.size == 0) throw ShapeError("uncurry: codomain ambiguous for zero y");
    zs = g.tgt.size / y.size;
  }
  BaseValue z = make_value(x.kind, zs);
  InternalHom h = internal_hom(y, z);
  if (!(h.value == g.tgt)) throw ShapeError("uncurry: codomain is not an internal hom");
  return compose(h.eval, tensor(g, identity(y)));
}

bool is_injective(const BaseMap& f) {
  if (f.src.kind.is_set()) {
    std::vector<bool> seen(f.tgt.size, false);
    for (auto v : f.table) {
      if (seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }
  return rank(f) == f.src.size;
}

std::optional<BaseMap> is_invertible(const BaseMap& f) {
  if (f.src.size != f.tgt.size) return std::nullopt;
  const std::int64_t n = f.src.size;
  if (f.src.kind.is_set()) {
    std::vector<std::int64_t> inv(n, -1);
    for (std::int64_t i = 0; i < n; ++i) {
      if (inv[f.table[i]] >= 0) return std::nullopt;
      inv[f.table[i]] = i;
    }
    return BaseMap{f.tgt, f.src, std::move(inv)};
  }
  const int p = f.src.kind.p;
  auto aug = matrix_storage(n, 2 * n);
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) aug[i * 2 * n + j] = f.table[i * n + j];
    aug[i * 2 * n + n + i] = 1;
  }
  auto piv = rref(aug, n, 2 * n, p);
  if (static_cast<std::int64_t>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  auto t = matrix_storage(n, n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) t[i * n + j] = aug[i * 2 * n + n + j];
  return BaseMap{f.tgt, f.src, std::move(t)};
}

}  // namespace duo

namespace duo {

std::optional<BaseMap> preimage(const BaseMap& f, const BaseMap& y) {
  if (!(y.tgt == f.tgt)) throw ShapeError("preimage: codomain mismatch");
  const BaseValue& w = y.src;
  if (f.src.kind.is_set()) {
    std::vector<std::int64_t> first(f.tgt.size, -1);
    for (std::int64_t i = f.src.size - 1; i >= 0; --i) first[f.table[i]] = i;
    std::vector<std::int64_t> t(w.size);
    for (std::int64_t j = 0; j < w.size; ++j) {
      if (first[y.table[j]] < 0) return std::nullopt;
      t[j] = first[y.table[j]];
    }
    return BaseMap{w, f.src, std::move(t)};
  }
  const int p = f.src.kind.p;
  const std::int64_t n = f.tgt.size, m = f.src.size, k = w.size;
  const std::int64_t cols = m + k;
  auto aug = matrix_storage(n, cols);
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < m; ++j) aug[i * cols + j] = f.table[i * m + j];
    for (std::int64_t j = 0; j < k; ++j) aug[i * cols + m + j] = y.table[i * k + j];
  }
  auto piv = rref(aug, n, cols, p);
  for (auto c : piv)
    if (c >= m) return std::nullopt;
  auto t = matrix_storage(m, k);
  for (std::size_t r = 0; r < piv.size(); ++r)
    for (std::int64_t j = 0; j < k; ++j) t[piv[r] * k + j] = aug[r * cols + m + j];
  return BaseMap{w, f.src, std::move(t)};
}

BaseMap middle_four(const BaseValue& x, const BaseValue& y, const BaseValue& z, const BaseValue& w) {
  // (xy)(zw) -> x(y(zw)) -> x((yz)w) -> x((zy)w) -> x(z(yw)) -> (xz)(yw)
  BaseValue zw = tensor(z, w), yw = tensor(y, w);
  BaseMap s1 = associator(x, y, zw);
  BaseMap s2 = tensor(identity(x), *is_invertible(associator(y, z, w)));
  BaseMap s3 = tensor(identity(x), tensor(symmetry(y, z), identity(w)));
  BaseMap s4 = tensor(identity(x), associator(z, y, w));
  BaseMap s5 = *is_invertible(associator(x, z, yw));
  return compose(s5, compose(s4, compose(s3, compose(s2, s1))));
}

}  // namespace duo
