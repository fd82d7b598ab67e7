#include "catkit/fincat.hpp"

#include <algorithm>
#include <numeric>

namespace catkit::fincat {

using finset::checked_pow;
using finset::tuple_code;
using finset::tuple_decode;

int FinCategory::compose(int a, int b, int c, int g, int f) const {
  if (a < 0 || a >= n_obj || b < 0 || b >= n_obj || c < 0 || c >= n_obj)
    throw BoundsError("FinCategory::compose: object out of range");
  if (f < 0 || f >= hom_size(a, b) || g < 0 || g >= hom_size(b, c))
    throw BoundsError("FinCategory::compose: morphism out of range");
  int r = comp[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(c)]
              [static_cast<size_t>(g * hom_size(a, b) + f)];
  if (r < 0 || r >= hom_size(a, c))
    throw InvariantError("FinCategory::compose: table entry out of range");
  return r;
}

void alloc_comp(FinCategory& c) {
  c.comp.assign(static_cast<size_t>(c.n_obj), {});
  for (int a = 0; a < c.n_obj; ++a) {
    c.comp[static_cast<size_t>(a)].assign(static_cast<size_t>(c.n_obj), {});
    for (int b = 0; b < c.n_obj; ++b) {
      c.comp[static_cast<size_t>(a)][static_cast<size_t>(b)].assign(static_cast<size_t>(c.n_obj), {});
      for (int d = 0; d < c.n_obj; ++d)
        c.comp[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(d)]
            .assign(static_cast<size_t>(c.hom_size(b, d)) * static_cast<size_t>(c.hom_size(a, b)), -1);
    }
  }
}

Report check_category(const FinCategory& c) {
  Report r;
  if (static_cast<int>(c.hom.size()) != c.n_obj || static_cast<int>(c.id.size()) != c.n_obj ||
      static_cast<int>(c.comp.size()) != c.n_obj) {
    r.add("category '" + c.name + "': table shapes do not match object count");
    return r;
  }
  for (int a = 0; a < c.n_obj; ++a) {
    if (c.id[static_cast<size_t>(a)] < 0 || c.id[static_cast<size_t>(a)] >= c.hom_size(a, a))
      r.add("identity index out of range at object " + std::to_string(a));
  }
  if (!r.ok()) return r;
  // composition entries in range
  for (int a = 0; a < c.n_obj; ++a)
    for (int b = 0; b < c.n_obj; ++b)
      for (int d = 0; d < c.n_obj; ++d) {
        const auto& t = c.comp[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(d)];
        if (static_cast<int>(t.size()) != c.hom_size(b, d) * c.hom_size(a, b)) {
          r.add("comp table shape wrong at (" + std::to_string(a) + "," + std::to_string(b) +
                "," + std::to_string(d) + ")");
          return r;
        }
        for (int e : t)
          if (e < 0 || e >= c.hom_size(a, d)) {
            r.add("comp entry out of range at (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(d) + ")");
            return r;
          }
      }
  // unit laws
  for (int a = 0; a < c.n_obj; ++a)
    for (int b = 0; b < c.n_obj; ++b)
      for (int f = 0; f < c.hom_size(a, b); ++f) {
        if (c.compose(a, a, b, f, c.id[static_cast<size_t>(a)]) != f)
          r.add("right unit fails at object " + std::to_string(a) + ", morphism " +
                std::to_string(f) + " -> " + std::to_string(b));
        if (c.compose(a, b, b, c.id[static_cast<size_t>(b)], f) != f)
          r.add("left unit fails at object " + std::to_string(b) + ", morphism " +
                std::to_string(f) + " from " + std::to_string(a));
      }
  // associativity
  for (int a = 0; a < c.n_obj; ++a)
    for (int b = 0; b < c.n_obj; ++b)
      for (int d = 0; d < c.n_obj; ++d)
        for (int e = 0; e < c.n_obj; ++e)
          for (int f = 0; f < c.hom_size(a, b); ++f)
            for (int g = 0; g < c.hom_size(b, d); ++g)
              for (int h = 0; h < c.hom_size(d, e); ++h) {
                int lhs = c.compose(a, d, e, h, c.compose(a, b, d, g, f));
                int rhs = c.compose(a, b, e, c.compose(b, d, e, h, g), f);
                if (lhs != rhs)
                  r.add("associativity fails on triple (" + std::to_string(f) + "," +
                        std::to_string(g) + "," + std::to_string(h) + ") over objects (" +
                        std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d) +
                        "," + std::to_string(e) + ")");
              }
  return r;
}

Report check_poset(const FinLattice& p) {
  Report r;
  if (static_cast<int>(p.leq.size()) != p.n) {
    r.add("poset '" + p.name + "': order matrix shape wrong");
    return r;
  }
  for (const auto& row : p.leq)
    if (static_cast<int>(row.size()) != p.n) {
      r.add("poset '" + p.name + "': order matrix shape wrong");
      return r;
    }
  for (int i = 0; i < p.n; ++i)
    if (!p.le(i, i)) r.add("reflexivity fails at " + std::to_string(i));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j) {
      if (i != j && p.le(i, j) && p.le(j, i))
        r.add("antisymmetry fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      for (int k = 0; k < p.n; ++k)
        if (p.le(i, j) && p.le(j, k) && !p.le(i, k))
          r.add("transitivity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," +
                std::to_string(k) + ")");
    }
  return r;
}

namespace {
int meet_or_minus1(const FinLattice& p, int i, int j) {
  int best = -1;
  for (int m = 0; m < p.n; ++m) {
    if (!p.le(m, i) || !p.le(m, j)) continue;
    if (best == -1 || p.le(best, m)) best = m;
  }
  if (best == -1) return -1;
  for (int m = 0; m < p.n; ++m)
    if (p.le(m, i) && p.le(m, j) && !p.le(m, best)) return -1;
  return best;
}

int top_or_minus1(const FinLattice& p) {
  for (int t = 0; t < p.n; ++t) {
    bool top = true;
    for (int i = 0; i < p.n; ++i)
      if (!p.le(i, t)) top = false;
    if (top) return t;
  }
  return -1;
}
}  // namespace

Report check_lattice(const FinLattice& p) {
  Report r = check_poset(p);
  if (!r.ok()) return r;
  if (top_or_minus1(p) == -1) r.add("no top element");
  for (int i = 0; i < p.n; ++i)
    for (int j = i; j < p.n; ++j)
      if (meet_or_minus1(p, i, j) == -1)
        r.add("no meet for (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return r;
}

int lattice_top(const FinLattice& p) {
  int t = top_or_minus1(p);
  if (t == -1) throw PreconditionError("lattice '" + p.name + "' has no top");
  return t;
}

int lattice_meet(const FinLattice& p, int i, int j) {
  int m = meet_or_minus1(p, i, j);
  if (m == -1)
    throw PreconditionError("lattice '" + p.name + "': no meet for (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
  return m;
}

FinLattice chain_lattice(int n) {
  FinLattice p;
  p.n = n;
  p.name = "chain" + std::to_string(n);
  p.leq.assign(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    p.labels.push_back(std::to_string(i));
    for (int j = i; j < n; ++j) p.leq[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
  }
  return p;
}

FinLattice diamond_lattice() {
  FinLattice p;
  p.n = 4;
  p.name = "diamond";
  p.labels = {"bot", "a", "b", "top"};
  p.leq.assign(4, std::vector<char>(4, 0));
  for (int i = 0; i < 4; ++i) {
    p.leq[0][static_cast<size_t>(i)] = 1;  // bottom below everything
    p.leq[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    p.leq[static_cast<size_t>(i)][3] = 1;  // everything below top
  }
  return p;
}

FinLattice antichain_top(int k) {
  FinLattice p;
  p.n = k + 1;
  p.name = "antichain" + std::to_string(k) + "top";
  p.leq.assign(static_cast<size_t>(k + 1), std::vector<char>(static_cast<size_t>(k + 1), 0));
  for (int i = 0; i <= k; ++i) {
    p.labels.push_back(i == k ? "top" : "a" + std::to_string(i));
    p.leq[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    p.leq[static_cast<size_t>(i)][static_cast<size_t>(k)] = 1;
  }
  return p;
}

FinCategory lattice_to_category(const FinLattice& p) {
  FinCategory c;
  c.n_obj = p.n;
  c.name = p.name;
  c.hom.assign(static_cast<size_t>(p.n), std::vector<int>(static_cast<size_t>(p.n), 0));
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      c.hom[static_cast<size_t>(i)][static_cast<size_t>(j)] = p.le(i, j) ? 1 : 0;
  c.id.assign(static_cast<size_t>(p.n), 0);
  alloc_comp(c);
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      for (int d = 0; d < p.n; ++d)
        if (p.le(a, b) && p.le(b, d))
          c.comp[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(d)][0] = 0;
  return c;
}

FinCategory trunc_category(int max_arity) {
  if (max_arity < 0) throw PreconditionError("trunc_category: negative bound");
  FinCategory c;
  c.n_obj = max_arity + 1;
  c.name = "trunc" + std::to_string(max_arity);
  c.hom.assign(static_cast<size_t>(c.n_obj), std::vector<int>(static_cast<size_t>(c.n_obj), 0));
  for (int n = 0; n <= max_arity; ++n)
    for (int m = 0; m <= max_arity; ++m) {
      long long s = checked_pow(n, m, 1'000'000'000);
      if (s < 0) throw ResourceError("trunc_category: hom-set too large");
      c.hom[static_cast<size_t>(n)][static_cast<size_t>(m)] = static_cast<int>(s);
    }
  c.id.assign(static_cast<size_t>(c.n_obj), 0);
  for (int n = 0; n <= max_arity; ++n) {
    std::vector<int> ident(static_cast<size_t>(n));
    std::iota(ident.begin(), ident.end(), 0);
    c.id[static_cast<size_t>(n)] = static_cast<int>(tuple_code(ident, n));
  }
  alloc_comp(c);
  // a morphism n -> m is a function [m] -> [n]; composition is contravariant
  for (int a = 0; a <= max_arity; ++a)
    for (int b = 0; b <= max_arity; ++b)
      for (int d = 0; d <= max_arity; ++d)
        for (int g = 0; g < c.hom_size(b, d); ++g) {
          std::vector<int> tg = tuple_decode(g, b, d);  // [d] -> [b]
          for (int f = 0; f < c.hom_size(a, b); ++f) {
            std::vector<int> tf = tuple_decode(f, a, b);  // [b] -> [a]
            std::vector<int> t(static_cast<size_t>(d));
            for (int i = 0; i < d; ++i)
              t[static_cast<size_t>(i)] = tf[static_cast<size_t>(tg[static_cast<size_t>(i)])];
            c.comp[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(d)]
                  [static_cast<size_t>(g * c.hom_size(a, b) + f)] =
                static_cast<int>(tuple_code(t, a));
          }
        }
  return c;
}

LexBasePtr make_lattice_base(const FinLattice& p, const std::string& name) {
  Report r = check_lattice(p);
  if (!r.ok()) throw PreconditionError("make_lattice_base: " + r.summary());
  auto base = std::make_shared<LexBase>();
  base->kind = BaseKind::lattice;
  base->lattice = p;
  base->cat = std::make_shared<FinCategory>(lattice_to_category(p));
  base->terminal_obj = lattice_top(p);
  base->name = name.empty() ? p.name : name;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      base->products.push_back(ProductCone{i, j, lattice_meet(p, i, j), 0, 0});
  return base;
}

LexBasePtr make_trunc_base(int max_arity) {
  auto base = std::make_shared<LexBase>();
  base->kind = BaseKind::trunc_arity;
  base->max_arity = max_arity;
  base->cat = std::make_shared<FinCategory>(trunc_category(max_arity));
  base->terminal_obj = 0;
  base->name = "trunc" + std::to_string(max_arity);
  // the product of arities n and m is n + m, recorded only while in bounds
  for (int n = 0; n <= max_arity; ++n)
    for (int m = 0; n + m <= max_arity; ++m) {
      std::vector<int> pl(static_cast<size_t>(n)), pr(static_cast<size_t>(m));
      std::iota(pl.begin(), pl.end(), 0);
      std::iota(pr.begin(), pr.end(), n);
      base->products.push_back(ProductCone{n, m, n + m,
                                           static_cast<int>(tuple_code(pl, n + m)),
                                           static_cast<int>(tuple_code(pr, n + m))});
    }
  return base;
}

Report check_functor(const FunctorData& F) {
  Report r;
  const FinCategory& s = *F.src;
  const FinCategory& d = *F.dst;
  if (static_cast<int>(F.obj_map.size()) != s.n_obj) {
    r.add("functor '" + F.name + "': object map shape wrong");
    return r;
  }
  for (int v : F.obj_map)
    if (v < 0 || v >= d.n_obj) {
      r.add("functor '" + F.name + "': object image out of range");
      return r;
    }
  for (int a = 0; a < s.n_obj; ++a)
    for (int b = 0; b < s.n_obj; ++b) {
      const auto& m = F.mor_map[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (static_cast<int>(m.size()) != s.hom_size(a, b)) {
        r.add("functor '" + F.name + "': morphism map shape wrong at (" + std::to_string(a) +
              "," + std::to_string(b) + ")");
        return r;
      }
      int fa = F.obj_map[static_cast<size_t>(a)], fb = F.obj_map[static_cast<size_t>(b)];
      for (int v : m)
        if (v < 0 || v >= d.hom_size(fa, fb)) {
          r.add("functor '" + F.name + "': morphism image out of range at (" +
                std::to_string(a) + "," + std::to_string(b) + ")");
          return r;
        }
    }
  for (int a = 0; a < s.n_obj; ++a)
    if (F.map_mor(a, a, s.id[static_cast<size_t>(a)]) !=
        d.id[static_cast<size_t>(F.obj_map[static_cast<size_t>(a)])])
      r.add("functor '" + F.name + "': identity not preserved at " + std::to_string(a));
  for (int a = 0; a < s.n_obj; ++a)
    for (int b = 0; b < s.n_obj; ++b)
      for (int c = 0; c < s.n_obj; ++c)
        for (int f = 0; f < s.hom_size(a, b); ++f)
          for (int g = 0; g < s.hom_size(b, c); ++g) {
            int lhs = F.map_mor(a, c, s.compose(a, b, c, g, f));
            int rhs = d.compose(F.obj_map[static_cast<size_t>(a)], F.obj_map[static_cast<size_t>(b)],
                                F.obj_map[static_cast<size_t>(c)], F.map_mor(b, c, g),
                                F.map_mor(a, b, f));
            if (lhs != rhs)
              r.add("functor '" + F.name + "': composition not preserved on (" +
                    std::to_string(f) + "," + std::to_string(g) + ") over (" + std::to_string(a) +
                    "," + std::to_string(b) + "," + std::to_string(c) + ")");
          }
  return r;
}

FunctorData identity_functor(FinCategoryPtr c) {
  FunctorData F;
  F.src = c;
  F.dst = c;
  F.name = "id";
  F.obj_map.resize(static_cast<size_t>(c->n_obj));
  std::iota(F.obj_map.begin(), F.obj_map.end(), 0);
  F.mor_map.assign(static_cast<size_t>(c->n_obj), {});
  for (int a = 0; a < c->n_obj; ++a) {
    F.mor_map[static_cast<size_t>(a)].assign(static_cast<size_t>(c->n_obj), {});
    for (int b = 0; b < c->n_obj; ++b) {
      auto& m = F.mor_map[static_cast<size_t>(a)][static_cast<size_t>(b)];
      m.resize(static_cast<size_t>(c->hom_size(a, b)));
      std::iota(m.begin(), m.end(), 0);
    }
  }
  return F;
}

FunctorData compose_functor(const FunctorData& G, const FunctorData& F) {
  if (F.dst.get() != G.src.get())
    throw CompositionError("compose_functor: F.dst != G.src");
  FunctorData H;
  H.src = F.src;
  H.dst = G.dst;
  H.name = G.name + "." + F.name;
  H.obj_map.resize(F.obj_map.size());
  for (size_t a = 0; a < F.obj_map.size(); ++a)
    H.obj_map[a] = G.obj_map[static_cast<size_t>(F.obj_map[a])];
  int n = F.src->n_obj;
  H.mor_map.assign(static_cast<size_t>(n), {});
  for (int a = 0; a < n; ++a) {
    H.mor_map[static_cast<size_t>(a)].assign(static_cast<size_t>(n), {});
    for (int b = 0; b < n; ++b) {
      auto& m = H.mor_map[static_cast<size_t>(a)][static_cast<size_t>(b)];
      m.resize(static_cast<size_t>(F.src->hom_size(a, b)));
      for (int f = 0; f < F.src->hom_size(a, b); ++f)
        m[static_cast<size_t>(f)] = G.map_mor(F.obj_map[static_cast<size_t>(a)],
                                              F.obj_map[static_cast<size_t>(b)],
                                              F.map_mor(a, b, f));
    }
  }
  return H;
}

bool functor_equal(const FunctorData& F, const FunctorData& G) {
  return F.src.get() == G.src.get() && F.dst.get() == G.dst.get() &&
         F.obj_map == G.obj_map && F.mor_map == G.mor_map;
}

Report check_nat_trans(const FunctorData& F, const FunctorData& G, const NatTransData& t) {
  Report r;
  const FinCategory& s = *F.src;
  const FinCategory& d = *F.dst;
  if (static_cast<int>(t.component.size()) != s.n_obj) {
    r.add("natural transformation: component count wrong");
    return r;
  }
  for (int a = 0; a < s.n_obj; ++a) {
    int fa = F.obj_map[static_cast<size_t>(a)], ga = G.obj_map[static_cast<size_t>(a)];
    if (t.component[static_cast<size_t>(a)] < 0 ||
        t.component[static_cast<size_t>(a)] >= d.hom_size(fa, ga)) {
      r.add("component out of range at " + std::to_string(a));
      return r;
    }
  }
  for (int a = 0; a < s.n_obj; ++a)
    for (int b = 0; b < s.n_obj; ++b)
      for (int f = 0; f < s.hom_size(a, b); ++f) {
        int fa = F.obj_map[static_cast<size_t>(a)], fb = F.obj_map[static_cast<size_t>(b)];
        int ga = G.obj_map[static_cast<size_t>(a)], gb = G.obj_map[static_cast<size_t>(b)];
        int lhs = d.compose(fa, fb, gb, t.component[static_cast<size_t>(b)], F.map_mor(a, b, f));
        int rhs = d.compose(fa, ga, gb, G.map_mor(a, b, f), t.component[static_cast<size_t>(a)]);
        if (lhs != rhs)
          r.add("naturality fails at morphism " + std::to_string(f) + ": " + std::to_string(a) +
                " -> " + std::to_string(b));
      }
  return r;
}

namespace {
bool is_iso_in(const FinCategory& c, int a, int b, int f) {
  for (int g = 0; g < c.hom_size(b, a); ++g)
    if (c.compose(a, b, a, g, f) == c.id[static_cast<size_t>(a)] &&
        c.compose(b, a, b, f, g) == c.id[static_cast<size_t>(b)])
      return true;
  return false;
}
}  // namespace

bool is_nat_iso(const FunctorData& F, const FunctorData& G, const NatTransData& t) {
  if (!check_nat_trans(F, G, t).ok()) return false;
  for (int a = 0; a < F.src->n_obj; ++a)
    if (!is_iso_in(*F.dst, F.obj_map[static_cast<size_t>(a)], G.obj_map[static_cast<size_t>(a)],
                   t.component[static_cast<size_t>(a)]))
      return false;
  return true;
}

std::optional<NatTransData> find_nat_iso(const FunctorData& F, const FunctorData& G,
                                         long long max_candidates) {
  int n = F.src->n_obj;
  std::vector<int> lim(static_cast<size_t>(n));
  long long total = 1;
  for (int a = 0; a < n; ++a) {
    lim[static_cast<size_t>(a)] = F.dst->hom_size(F.obj_map[static_cast<size_t>(a)],
                                                  G.obj_map[static_cast<size_t>(a)]);
    if (lim[static_cast<size_t>(a)] == 0) return std::nullopt;
    if (total > max_candidates / lim[static_cast<size_t>(a)] + 1) total = max_candidates + 1;
    else total *= lim[static_cast<size_t>(a)];
  }
  if (total > max_candidates)
    throw ResourceError("find_nat_iso: candidate count exceeds bound");
  NatTransData t;
  t.component.assign(static_cast<size_t>(n), 0);
  for (;;) {
    if (is_nat_iso(F, G, t)) return t;
    int pos = 0;
    while (pos < n && t.component[static_cast<size_t>(pos)] == lim[static_cast<size_t>(pos)] - 1) {
      t.component[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == n) return std::nullopt;
    ++t.component[static_cast<size_t>(pos)];
  }
}

Report check_set_functor(const SetFunctor& X) {
  Report r;
  const FinCategory& s = *X.src;
  if (static_cast<int>(X.obj_size.size()) != s.n_obj ||
      static_cast<int>(X.mor.size()) != s.n_obj) {
    r.add("set functor '" + X.name + "': shape wrong");
    return r;
  }
  for (int a = 0; a < s.n_obj; ++a)
    for (int b = 0; b < s.n_obj; ++b) {
      const auto& mv = X.mor[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (static_cast<int>(mv.size()) != s.hom_size(a, b)) {
        r.add("set functor '" + X.name + "': morphism table count wrong at (" +
              std::to_string(a) + "," + std::to_string(b) + ")");
        return r;
      }
      for (const auto& tab : mv) {
        if (static_cast<int>(tab.size()) != X.obj_size[static_cast<size_t>(a)]) {
          r.add("set functor '" + X.name + "': table length wrong at (" + std::to_string(a) +
                "," + std::to_string(b) + ")");
          return r;
        }
        for (int v : tab)
          if (v < 0 || v >= X.obj_size[static_cast<size_t>(b)]) {
            r.add("set functor '" + X.name + "': table entry out of range at (" +
                  std::to_string(a) + "," + std::to_string(b) + ")");
            return r;
          }
      }
    }
  for (int a = 0; a < s.n_obj; ++a) {
    const auto& tab = X.table(a, a, s.id[static_cast<size_t>(a)]);
    for (int i = 0; i < X.obj_size[static_cast<size_t>(a)]; ++i)
      if (tab[static_cast<size_t>(i)] != i) {
        r.add("set functor '" + X.name + "': identity not preserved at " + std::to_string(a));
        break;
      }
  }
  for (int a = 0; a < s.n_obj; ++a)
    for (int b = 0; b < s.n_obj; ++b)
      for (int c = 0; c < s.n_obj; ++c)
        for (int f = 0; f < s.hom_size(a, b); ++f)
          for (int g = 0; g < s.hom_size(b, c); ++g) {
            const auto& tgf = X.table(a, c, s.compose(a, b, c, g, f));
            const auto& tf = X.table(a, b, f);
            const auto& tg = X.table(b, c, g);
            for (int i = 0; i < X.obj_size[static_cast<size_t>(a)]; ++i)
              if (tgf[static_cast<size_t>(i)] != tg[static_cast<size_t>(tf[static_cast<size_t>(i)])]) {
                r.add("set functor '" + X.name + "': composition not preserved on (" +
                      std::to_string(f) + "," + std::to_string(g) + ") over (" +
                      std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
                break;
              }
          }
  return r;
}

Report check_lex_point(const LexBase& base, const SetFunctor& X) {
  Report r;
  if (X.src.get() != base.cat.get()) {
    r.add("lex point check: functor source is not the base category");
    return r;
  }
  if (X.obj_size[static_cast<size_t>(base.terminal_obj)] != 1)
    r.add("terminal value is not a singleton");
  for (const auto& cone : base.products) {
    const auto& pl = X.table(cone.apex, cone.left, cone.proj_left);
    const auto& pr = X.table(cone.apex, cone.right, cone.proj_right);
    int nl = X.obj_size[static_cast<size_t>(cone.left)];
    int nr = X.obj_size[static_cast<size_t>(cone.right)];
    int na = X.obj_size[static_cast<size_t>(cone.apex)];
    if (na != nl * nr) {
      r.add("product comparison not bijective (size) at cone (" + std::to_string(cone.left) +
            "," + std::to_string(cone.right) + ")");
      continue;
    }
    std::vector<char> hit(static_cast<size_t>(nl * nr), 0);
    bool inj = true;
    for (int v = 0; v < na; ++v) {
      int idx = finset::pair_index(pl[static_cast<size_t>(v)], pr[static_cast<size_t>(v)], nr);
      if (hit[static_cast<size_t>(idx)]) inj = false;
      hit[static_cast<size_t>(idx)] = 1;
    }
    if (!inj)
      r.add("product comparison not injective at cone (" + std::to_string(cone.left) + "," +
            std::to_string(cone.right) + ")");
  }
  return r;
}

bool set_functor_equal(const SetFunctor& X, const SetFunctor& Y) {
  return X.src.get() == Y.src.get() && X.obj_size == Y.obj_size && X.mor == Y.mor;
}

bool set_functor_iso(const SetFunctor& X, const SetFunctor& Y, long long max_candidates) {
  if (X.src.get() != Y.src.get() || X.obj_size != Y.obj_size) return false;
  const FinCategory& s = *X.src;
  // candidate bijections per object
  std::vector<std::vector<std::vector<int>>> perms(static_cast<size_t>(s.n_obj));
  long long total = 1;
  for (int a = 0; a < s.n_obj; ++a) {
    std::vector<int> p(static_cast<size_t>(X.obj_size[static_cast<size_t>(a)]));
    std::iota(p.begin(), p.end(), 0);
    do {
      perms[static_cast<size_t>(a)].push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    long long k = static_cast<long long>(perms[static_cast<size_t>(a)].size());
    if (total > max_candidates / k + 1) total = max_candidates + 1;
    else total *= k;
  }
  if (total > max_candidates)
    throw ResourceError("set_functor_iso: candidate count exceeds bound");
  std::vector<size_t> pick(static_cast<size_t>(s.n_obj), 0);
  for (;;) {
    bool good = true;
    for (int a = 0; a < s.n_obj && good; ++a)
      for (int b = 0; b < s.n_obj && good; ++b)
        for (int f = 0; f < s.hom_size(a, b) && good; ++f) {
          const auto& xa = X.table(a, b, f);
          const auto& ya = Y.table(a, b, f);
          const auto& ta = perms[static_cast<size_t>(a)][pick[static_cast<size_t>(a)]];
          const auto& tb = perms[static_cast<size_t>(b)][pick[static_cast<size_t>(b)]];
          for (int i = 0; i < X.obj_size[static_cast<size_t>(a)]; ++i)
            if (tb[static_cast<size_t>(xa[static_cast<size_t>(i)])] !=
                ya[static_cast<size_t>(ta[static_cast<size_t>(i)])]) {
              good = false;
              break;
            }
        }
    if (good) return true;
    int pos = 0;
    while (pos < s.n_obj &&
           pick[static_cast<size_t>(pos)] == perms[static_cast<size_t>(pos)].size() - 1) {
      pick[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == s.n_obj) return false;
    ++pick[static_cast<size_t>(pos)];
  }
}

namespace {
SetFunctor filter_point(const LexBase& base, unsigned mask) {
  const FinCategory& c = *base.cat;
  SetFunctor X;
  X.src = base.cat;
  X.name = "filter" + std::to_string(mask);
  X.obj_size.assign(static_cast<size_t>(c.n_obj), 0);
  for (int i = 0; i < c.n_obj; ++i)
    X.obj_size[static_cast<size_t>(i)] = (mask >> i) & 1u ? 1 : 0;
  X.mor.assign(static_cast<size_t>(c.n_obj), {});
  for (int a = 0; a < c.n_obj; ++a) {
    X.mor[static_cast<size_t>(a)].assign(static_cast<size_t>(c.n_obj), {});
    for (int b = 0; b < c.n_obj; ++b) {
      auto& mv = X.mor[static_cast<size_t>(a)][static_cast<size_t>(b)];
      mv.resize(static_cast<size_t>(c.hom_size(a, b)));
      for (auto& tab : mv)
        if (X.obj_size[static_cast<size_t>(a)] == 1) tab = {0};
    }
  }
  return X;
}

SetFunctor power_point(const LexBase& base, int carrier) {
  const FinCategory& c = *base.cat;
  SetFunctor X;
  X.src = base.cat;
  X.name = "carrier" + std::to_string(carrier);
  X.obj_size.assign(static_cast<size_t>(c.n_obj), 0);
  for (int n = 0; n < c.n_obj; ++n) {
    long long s = checked_pow(carrier, n, 1'000'000'000);
    if (s < 0) throw ResourceError("power_point: value too large");
    X.obj_size[static_cast<size_t>(n)] = static_cast<int>(s);
  }
  X.mor.assign(static_cast<size_t>(c.n_obj), {});
  for (int n = 0; n < c.n_obj; ++n) {
    X.mor[static_cast<size_t>(n)].assign(static_cast<size_t>(c.n_obj), {});
    for (int m = 0; m < c.n_obj; ++m) {
      auto& mv = X.mor[static_cast<size_t>(n)][static_cast<size_t>(m)];
      mv.resize(static_cast<size_t>(c.hom_size(n, m)));
      for (int u = 0; u < c.hom_size(n, m); ++u) {
        std::vector<int> uf = tuple_decode(u, n, m);  // [m] -> [n]
        auto& tab = mv[static_cast<size_t>(u)];
        tab.resize(static_cast<size_t>(X.obj_size[static_cast<size_t>(n)]));
        for (int t = 0; t < X.obj_size[static_cast<size_t>(n)]; ++t) {
          std::vector<int> tup = tuple_decode(t, carrier, n);
          std::vector<int> img(static_cast<size_t>(m));
          for (int j = 0; j < m; ++j)
            img[static_cast<size_t>(j)] = tup[static_cast<size_t>(uf[static_cast<size_t>(j)])];
          tab[static_cast<size_t>(t)] = static_cast<int>(tuple_code(img, carrier));
        }
      }
    }
  }
  return X;
}
}  // namespace

std::vector<SetFunctor> enumerate_lex_points(const LexBase& base, int value_bound,
                                             long long max_candidates) {
  std::vector<SetFunctor> out;
  if (base.kind == BaseKind::lattice) {
    const FinLattice& p = base.lattice;
    if (p.n >= 30 || (1LL << p.n) > max_candidates)
      throw ResourceError("enumerate_lex_points: lattice too large");
    int top = lattice_top(p);
    for (unsigned mask = 0; mask < (1u << p.n); ++mask) {
      if (!((mask >> top) & 1u)) continue;
      bool good = true;
      for (int i = 0; i < p.n && good; ++i) {
        if (!((mask >> i) & 1u)) continue;
        for (int j = 0; j < p.n && good; ++j) {
          if (p.le(i, j) && !((mask >> j) & 1u)) good = false;  // upward closed
          if (((mask >> j) & 1u) && !((mask >> lattice_meet(p, i, j)) & 1u))
            good = false;  // meet closed
        }
      }
      if (good) out.push_back(filter_point(base, mask));
    }
  } else {
    for (int carrier = 0; carrier <= value_bound; ++carrier)
      out.push_back(power_point(base, carrier));
  }
  return out;
}

Report check_lex_functor(const LexBase& base, const FunctorData& F) {
  Report r;
  if (F.src.get() != base.cat.get()) {
    r.add("lex functor check: source is not the base category");
    return r;
  }
  const FinCategory& d = *F.dst;
  int ft = F.obj_map[static_cast<size_t>(base.terminal_obj)];
  for (int z = 0; z < d.n_obj; ++z)
    if (d.hom_size(z, ft) != 1) {
      r.add("terminal image is not terminal: hom(" + std::to_string(z) + ", image) has " +
            std::to_string(d.hom_size(z, ft)) + " elements");
    }
  for (const auto& cone : base.products) {
    int fl = F.obj_map[static_cast<size_t>(cone.left)];
    int fr = F.obj_map[static_cast<size_t>(cone.right)];
    int fa = F.obj_map[static_cast<size_t>(cone.apex)];
    int pl = F.map_mor(cone.apex, cone.left, cone.proj_left);
    int pr = F.map_mor(cone.apex, cone.right, cone.proj_right);
    for (int z = 0; z < d.n_obj; ++z) {
      // h -> (pl∘h, pr∘h) must biject hom(z, Fapex) with hom(z,Fl) x hom(z,Fr)
      int nh = d.hom_size(z, fa);
      int npairs = d.hom_size(z, fl) * d.hom_size(z, fr);
      if (nh != npairs) {
        r.add("product cone (" + std::to_string(cone.left) + "," + std::to_string(cone.right) +
              ") image fails universality at object " + std::to_string(z) + " (size)");
        continue;
      }
      std::vector<char> hit(static_cast<size_t>(npairs), 0);
      bool inj = true;
      for (int h = 0; h < nh; ++h) {
        int f1 = d.compose(z, fa, fl, pl, h);
        int f2 = d.compose(z, fa, fr, pr, h);
        int idx = finset::pair_index(f1, f2, d.hom_size(z, fr));
        if (hit[static_cast<size_t>(idx)]) inj = false;
        hit[static_cast<size_t>(idx)] = 1;
      }
      if (!inj)
        r.add("product cone (" + std::to_string(cone.left) + "," + std::to_string(cone.right) +
              ") image fails universality at object " + std::to_string(z) + " (uniqueness)");
    }
  }
  return r;
}

namespace {
FunctorData lattice_map_functor(const LexBase& a, const LexBase& b, const std::vector<int>& f) {
  FunctorData F;
  F.src = a.cat;
  F.dst = b.cat;
  F.obj_map = f;
  F.name = a.name + "->" + b.name;
  int n = a.cat->n_obj;
  F.mor_map.assign(static_cast<size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    F.mor_map[static_cast<size_t>(i)].assign(static_cast<size_t>(n), {});
    for (int j = 0; j < n; ++j)
      F.mor_map[static_cast<size_t>(i)][static_cast<size_t>(j)]
          .assign(static_cast<size_t>(a.cat->hom_size(i, j)), 0);
  }
  return F;
}

FunctorData trunc_mult_functor(const LexBase& a, const LexBase& b, int c) {
  FunctorData F;
  F.src = a.cat;
  F.dst = b.cat;
  F.name = "mult" + std::to_string(c);
  int n = a.cat->n_obj;
  F.obj_map.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) F.obj_map[static_cast<size_t>(i)] = c * i;
  F.mor_map.assign(static_cast<size_t>(n), {});
  for (int p = 0; p < n; ++p) {
    F.mor_map[static_cast<size_t>(p)].assign(static_cast<size_t>(n), {});
    for (int q = 0; q < n; ++q) {
      auto& mm = F.mor_map[static_cast<size_t>(p)][static_cast<size_t>(q)];
      mm.resize(static_cast<size_t>(a.cat->hom_size(p, q)));
      for (int u = 0; u < a.cat->hom_size(p, q); ++u) {
        std::vector<int> uf = tuple_decode(u, p, q);  // [q] -> [p]
        std::vector<int> img(static_cast<size_t>(c * q));
        // block encoding: element x of [c*q] is (j = x / c, t = x % c)
        for (int x = 0; x < c * q; ++x)
          img[static_cast<size_t>(x)] = uf[static_cast<size_t>(x / c)] * c + x % c;
        mm[static_cast<size_t>(u)] = static_cast<int>(tuple_code(img, c * p));
      }
    }
  }
  return F;
}
}  // namespace

std::vector<FunctorData> enumerate_lex_maps(const LexBase& a, const LexBase& b) {
  std::vector<FunctorData> out;
  if (a.kind != b.kind) return out;
  if (a.kind == BaseKind::lattice) {
    const FinLattice& pa = a.lattice;
    const FinLattice& pb = b.lattice;
    int ta = lattice_top(pa), tb = lattice_top(pb);
    std::vector<int> f(static_cast<size_t>(pa.n), 0);
    for (;;) {
      bool good = f[static_cast<size_t>(ta)] == tb;
      for (int i = 0; i < pa.n && good; ++i)
        for (int j = 0; j < pa.n && good; ++j) {
          if (pa.le(i, j) && !pb.le(f[static_cast<size_t>(i)], f[static_cast<size_t>(j)]))
            good = false;
          if (f[static_cast<size_t>(lattice_meet(pa, i, j))] !=
              lattice_meet(pb, f[static_cast<size_t>(i)], f[static_cast<size_t>(j)]))
            good = false;
        }
      if (good) out.push_back(lattice_map_functor(a, b, f));
      int pos = 0;
      while (pos < pa.n && f[static_cast<size_t>(pos)] == pb.n - 1) {
        f[static_cast<size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == pa.n) break;
      ++f[static_cast<size_t>(pos)];
    }
  } else {
    int cmax = a.max_arity == 0 ? 0 : b.max_arity / a.max_arity;
    for (int c = 0; c <= cmax; ++c) out.push_back(trunc_mult_functor(a, b, c));
  }
  return out;
}

}  // namespace catkit::fincat
