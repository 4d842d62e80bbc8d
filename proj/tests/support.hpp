// Seeded generators and brute-force oracles shared by the unit tests and the acceptance binary.
// Oracles here deliberately avoid the library's own algorithms (no rref, no union-find).
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "duo/vbase.hpp"

namespace duo::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  std::int64_t below(std::int64_t n) {
    return std::uniform_int_distribution<std::int64_t>(0, n - 1)(rng_);
  }
  std::int64_t range(std::int64_t lo, std::int64_t hi) { return lo + below(hi - lo + 1); }

  BaseMap function(const BaseValue& x, const BaseValue& y) {
    std::vector<std::int64_t> t(x.size);
    for (auto& v : t) v = below(y.size);
    return BaseMap{x, y, std::move(t)};
  }
  BaseMap matrix(const BaseValue& x, const BaseValue& y) {
    std::vector<std::int64_t> t(x.size * y.size);
    for (auto& v : t) v = below(x.kind.p);
    return BaseMap{x, y, std::move(t)};
  }
  BaseMap map(const BaseValue& x, const BaseValue& y) {
    return x.kind.is_set() ? function(x, y) : matrix(x, y);
  }

 private:
  std::mt19937_64 rng_;
};

// Every map x -> y, by odometer over tables (FinSet) or matrix entries (FinVect).
inline void for_each_map(const BaseValue& x, const BaseValue& y,
                         const std::function<void(const BaseMap&)>& visit) {
  const std::int64_t cells = x.kind.is_set() ? x.size : x.size * y.size;
  const std::int64_t radix = x.kind.is_set() ? y.size : x.kind.p;
  if (cells > 0 && radix == 0) return;
  std::vector<std::int64_t> t(cells, 0);
  while (true) {
    visit(BaseMap{x, y, t});
    std::int64_t i = cells - 1;
    while (i >= 0 && ++t[i] == radix) t[i--] = 0;
    if (i < 0) return;
  }
}

// Number of elements of F_p^n in the span of the given columns, by closure under addition.
inline std::int64_t span_size(const std::vector<std::vector<std::int64_t>>& cols, std::int64_t n, int p) {
  std::set<std::vector<std::int64_t>> span{std::vector<std::int64_t>(n, 0)};
  for (const auto& c : cols) {
    std::set<std::vector<std::int64_t>> next;
    for (const auto& v : span)
      for (int k = 0; k < p; ++k) {
        std::vector<std::int64_t> w(v);
        for (std::int64_t i = 0; i < n; ++i) w[i] = (w[i] + k * c[i]) % p;
        next.insert(w);
      }
    span = std::move(next);
  }
  return static_cast<std::int64_t>(span.size());
}

// Rank by counting the span; only for tiny dimensions.
inline std::int64_t oracle_rank(const BaseMap& f) {
  const int p = f.src.kind.p;
  std::vector<std::vector<std::int64_t>> cols;
  for (std::int64_t c = 0; c < f.src.size; ++c) {
    std::vector<std::int64_t> col(f.tgt.size);
    for (std::int64_t r = 0; r < f.tgt.size; ++r) col[r] = f.table[r * f.src.size + c];
    cols.push_back(col);
  }
  std::int64_t sz = span_size(cols, f.tgt.size, p), r = 0;
  while (sz > 1) {
    sz /= p;
    ++r;
  }
  return r;
}

// Number of classes of the equivalence relation generated by f(x) ~ g(x), by fixpoint relabeling.
inline std::int64_t oracle_quotient_size(const BaseMap& f, const BaseMap& g) {
  std::vector<std::int64_t> lab(f.tgt.size);
  for (std::int64_t i = 0; i < f.tgt.size; ++i) lab[i] = i;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::int64_t x = 0; x < f.src.size; ++x) {
      std::int64_t a = lab[f.table[x]], b = lab[g.table[x]];
      if (a == b) continue;
      std::int64_t lo = std::min(a, b), hi = std::max(a, b);
      for (auto& l : lab)
        if (l == hi) l = lo;
      changed = true;
    }
  }
  return static_cast<std::int64_t>(std::set<std::int64_t>(lab.begin(), lab.end()).size());
}

struct UniversalOutcome {
  bool ok = true;
  std::string why;
};

// Coequalizer: q.f = q.g, and every h with h.f = h.g into a small test object factors uniquely.
inline UniversalOutcome check_coequalizer_universal(const BaseMap& f, const BaseMap& g,
                                                    const BaseValue& test) {
  Coequalizer q = coequalizer(f, g);
  if (!(compose(q.projection, f) == compose(q.projection, g))) return {false, "q.f != q.g"};
  if (!(compose(q.projection, q.section) == identity(q.value))) return {false, "q.s != 1"};
  UniversalOutcome out;
  for_each_map(f.tgt, test, [&](const BaseMap& h) {
    if (!out.ok) return;
    bool coeq = compose(h, f) == compose(h, g);
    int count = 0;
    for_each_map(q.value, test, [&](const BaseMap& k) {
      if (compose(k, q.projection) == h) ++count;
    });
    if (coeq != (count == 1) || count > 1) out = {false, "factorization count " + std::to_string(count)};
    if (coeq) {
      auto k = factor_through(q, f, g, h);
      if (!k || !(compose(*k, q.projection) == h)) out = {false, "factor_through disagrees"};
    }
  });
  return out;
}

// Equalizer: f.e = g.e, and every h from a small test object with f.h = g.h factors uniquely.
inline UniversalOutcome check_equalizer_universal(const BaseMap& f, const BaseMap& g,
                                                  const BaseValue& test) {
  Equalizer e = equalizer(f, g);
  if (!(compose(f, e.inclusion) == compose(g, e.inclusion))) return {false, "f.e != g.e"};
  UniversalOutcome out;
  for_each_map(test, f.src, [&](const BaseMap& h) {
    if (!out.ok) return;
    bool eq = compose(f, h) == compose(g, h);
    int count = 0;
    for_each_map(test, e.value, [&](const BaseMap& k) {
      if (compose(e.inclusion, k) == h) ++count;
    });
    if (eq != (count == 1) || count > 1) out = {false, "factorization count " + std::to_string(count)};
    if (eq) {
      auto k = factor_through(e, f, g, h);
      if (!k || !(compose(e.inclusion, *k) == h)) out = {false, "factor_through disagrees"};
    }
  });
  return out;
}

// Internal hom: every f : x(x)y -> z is ev.(g(x)1) for exactly one g : x -> [y,z], namely curry(f).
inline UniversalOutcome check_internal_hom_universal(const BaseValue& x, const BaseValue& y,
                                                     const BaseValue& z) {
  InternalHom h = internal_hom(y, z);
  std::int64_t expected = 0;
  if (x.kind.is_set()) {
    expected = 1;
    for (std::int64_t i = 0; i < y.size; ++i) expected *= z.size;
  } else {
    expected = y.size * z.size;
  }
  if (h.value.size != expected) return {false, "wrong size of [y,z]"};
  UniversalOutcome out;
  BaseValue xy = tensor(x, y);
  for_each_map(xy, z, [&](const BaseMap& f) {
    if (!out.ok) return;
    BaseMap g = curry(f, x, y);
    if (!(compose(h.eval, tensor(g, identity(y))) == f)) out = {false, "ev.(curry f (x) 1) != f"};
    if (y.size > 0 && !(uncurry(g, y) == f)) out = {false, "uncurry.curry != 1"};
  });
  // Uniqueness: distinct g give distinct ev.(g(x)1).
  if (out.ok) {
    std::set<std::vector<std::int64_t>> seen;
    std::int64_t n = 0;
    for_each_map(x, h.value, [&](const BaseMap& g) {
      seen.insert(compose(h.eval, tensor(g, identity(y))).table);
      ++n;
    });
    if (static_cast<std::int64_t>(seen.size()) != n) out = {false, "transpose not injective"};
  }
  return out;
}

}  // namespace duo::testing
