#include "catkit/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "catkit/finset.hpp"

namespace catkit::algebra {

using finset::tuple_code;
using finset::tuple_decode;

Term tvar(int i) {
  Term t;
  t.op = -1;
  t.var = i;
  return t;
}

Term tapp(int op, std::vector<Term> args) {
  Term t;
  t.op = op;
  t.args = std::move(args);
  return t;
}

namespace {

void check_term(const Presentation& p, const Term& t, int n_vars,
                const std::string& where, Report& r) {
  if (t.op == -1) {
    if (t.var < 0 || t.var >= n_vars)
      r.add(where + ": variable index " + std::to_string(t.var) +
            " out of range");
    if (!t.args.empty()) r.add(where + ": variable node has arguments");
    return;
  }
  if (t.op < 0 || t.op >= static_cast<int>(p.sig.ops.size())) {
    r.add(where + ": operation index " + std::to_string(t.op) +
          " out of range");
    return;
  }
  if (static_cast<int>(t.args.size()) != p.sig.ops[t.op].arity)
    r.add(where + ": operation " + p.sig.ops[t.op].name + " expects " +
          std::to_string(p.sig.ops[t.op].arity) + " arguments, got " +
          std::to_string(t.args.size()));
  for (const Term& a : t.args) check_term(p, a, n_vars, where, r);
}

}  // namespace

Report check_presentation(const Presentation& p) {
  Report r;
  for (size_t i = 0; i < p.sig.ops.size(); ++i)
    if (p.sig.ops[i].arity < 0)
      r.add("operation " + p.sig.ops[i].name + " has negative arity");
  for (size_t e = 0; e < p.eqs.size(); ++e) {
    const std::string where = "equation " + std::to_string(e);
    if (p.eqs[e].n_vars < 0) r.add(where + ": negative variable count");
    check_term(p, p.eqs[e].lhs, p.eqs[e].n_vars, where + " lhs", r);
    check_term(p, p.eqs[e].rhs, p.eqs[e].n_vars, where + " rhs", r);
  }
  return r;
}

namespace {

// Growable union-find whose class representative is the least member, so
// class orderings are stable under later insertions.
struct UnionFind {
  std::vector<int> parent;

  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(parent.size()) - 1;
  }
  int find(int i) {
    while (parent[i] != i) {
      parent[i] = parent[parent[i]];
      i = parent[i];
    }
    return i;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Hash-consed term pool for one fixed variable arity.
struct Pool {
  struct Node {
    int op;                 // -1 for variables
    std::vector<int> kids;  // node ids, or {var} for variables
  };
  std::vector<Node> nodes;
  std::map<std::pair<int, std::vector<int>>, int> index;
  UnionFind uf;

  int get(int op, std::vector<int> kids) {
    auto key = std::make_pair(op, kids);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    nodes.push_back({op, std::move(kids)});
    int id = uf.add();
    index.emplace(std::move(key), id);
    return id;
  }

  int build(const Term& t, const std::vector<int>& var_node) {
    if (t.op == -1) return var_node[t.var];
    std::vector<int> kids;
    kids.reserve(t.args.size());
    for (const Term& a : t.args) kids.push_back(build(a, var_node));
    return get(t.op, std::move(kids));
  }

  std::vector<int> class_reps() {
    std::vector<int> reps;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
      if (uf.find(i) == i) reps.push_back(i);
    return reps;
  }

  Term to_term(int id) const {
    const Node& n = nodes[id];
    if (n.op == -1) return tvar(n.kids[0]);
    std::vector<Term> args;
    args.reserve(n.kids.size());
    for (int k : n.kids) args.push_back(to_term(k));
    return tapp(n.op, std::move(args));
  }
};

// Enumerate tuples (odometer, last coordinate fastest) over a fixed pool of
// choices; calls fn on each tuple.
template <typename Fn>
void for_each_tuple(int len, int n_choices, Fn&& fn) {
  std::vector<int> t(len, 0);
  if (n_choices == 0 && len > 0) return;
  while (true) {
    fn(t);
    int i = len - 1;
    while (i >= 0 && t[i] == n_choices - 1) t[i--] = 0;
    if (i < 0) return;
    ++t[i];
  }
}

struct ArityResult {
  int n_classes = 0;
  std::vector<int> class_of_node;  // node id -> class index (rep order)
  std::vector<Term> reps;          // class -> representative term
  std::vector<int> unit;           // variable -> class
  // (op, kid class tuple) -> class; total once stabilized
  std::map<std::pair<int, std::vector<int>>, int> op_table;
};

ArityResult tabulate_arity(const Presentation& p, int n, int depth_bound,
                           long long size_bound) {
  Pool pool;
  std::vector<int> var_node(n);
  for (int i = 0; i < n; ++i) var_node[i] = pool.get(-1, {i});

  bool stabilized = false;
  // Class-count delta of the last completed round; positive means the
  // congruence was still growing when a bound tripped, i.e. no sign of
  // local finiteness within the configured bounds.
  long long prev_delta = 0;
  std::map<std::pair<int, std::vector<int>>, int> op_class_table;
  auto guard_pool = [&]() {
    if (static_cast<long long>(pool.nodes.size()) <= size_bound) return;
    if (prev_delta > 0) throw StabilizationError(n);
    throw ResourceError("tabulate: term pool exceeded size bound " +
                        std::to_string(size_bound) + " at arity " +
                        std::to_string(n));
  };
  for (int round = 1; round <= depth_bound && !stabilized; ++round) {
    std::vector<int> reps = pool.class_reps();
    int classes_before = static_cast<int>(reps.size());

    // Apply every operation to class representatives.
    for (size_t op = 0; op < p.sig.ops.size(); ++op) {
      int r = p.sig.ops[op].arity;
      for_each_tuple(r, classes_before, [&](const std::vector<int>& t) {
        std::vector<int> kids(r);
        for (int i = 0; i < r; ++i) kids[i] = reps[t[i]];
        pool.get(static_cast<int>(op), std::move(kids));
        guard_pool();
      });
    }

    // Instantiate every equation with representatives for variables.
    for (const Equation& eq : p.eqs) {
      for_each_tuple(eq.n_vars, classes_before, [&](const std::vector<int>& t) {
        std::vector<int> subst(eq.n_vars);
        for (int i = 0; i < eq.n_vars; ++i) subst[i] = reps[t[i]];
        int lhs = pool.build(eq.lhs, subst);
        int rhs = pool.build(eq.rhs, subst);
        pool.uf.unite(lhs, rhs);
        guard_pool();
      });
    }

    // Congruence closure: nodes with the same operation and classwise-equal
    // children are merged, to a fixpoint.
    bool changed = true;
    while (changed) {
      changed = false;
      op_class_table.clear();
      for (int i = 0; i < static_cast<int>(pool.nodes.size()); ++i) {
        if (pool.nodes[i].op == -1) continue;
        std::vector<int> kc;
        kc.reserve(pool.nodes[i].kids.size());
        for (int k : pool.nodes[i].kids) kc.push_back(pool.uf.find(k));
        auto key = std::make_pair(pool.nodes[i].op, std::move(kc));
        auto it = op_class_table.find(key);
        if (it == op_class_table.end())
          op_class_table.emplace(std::move(key), pool.uf.find(i));
        else
          changed |= pool.uf.unite(it->second, i);
      }
    }

    // Stabilized when the round created no new classes and every operation
    // applied to current classes already lands inside a known class.
    std::vector<int> reps_after = pool.class_reps();
    prev_delta =
        static_cast<long long>(reps_after.size()) - classes_before;
    if (static_cast<int>(reps_after.size()) == classes_before) {
      stabilized = true;
      for (size_t op = 0; op < p.sig.ops.size() && stabilized; ++op) {
        int r = p.sig.ops[op].arity;
        for_each_tuple(r, classes_before, [&](const std::vector<int>& t) {
          std::vector<int> kc(r);
          for (int i = 0; i < r; ++i) kc[i] = reps_after[t[i]];
          if (!op_class_table.count({static_cast<int>(op), kc}))
            stabilized = false;
        });
      }
    }
  }
  if (!stabilized) throw StabilizationError(n);

  ArityResult res;
  std::vector<int> reps = pool.class_reps();
  res.n_classes = static_cast<int>(reps.size());
  if (res.n_classes > size_bound)
    throw ResourceError("tabulate: class count exceeded size bound at arity " +
                        std::to_string(n));
  res.class_of_node.assign(pool.nodes.size(), -1);
  std::map<int, int> rep_to_class;
  for (int c = 0; c < res.n_classes; ++c) {
    rep_to_class[reps[c]] = c;
    res.reps.push_back(pool.to_term(reps[c]));
  }
  for (int i = 0; i < static_cast<int>(pool.nodes.size()); ++i)
    res.class_of_node[i] = rep_to_class.at(pool.uf.find(i));
  res.unit.resize(n);
  for (int i = 0; i < n; ++i) res.unit[i] = res.class_of_node[var_node[i]];
  for (const auto& [key, rep] : op_class_table) {
    std::vector<int> kc;
    for (int r : key.second) kc.push_back(rep_to_class.at(pool.uf.find(r)));
    res.op_table[{key.first, std::move(kc)}] =
        res.class_of_node[pool.uf.find(rep)];
  }
  return res;
}

// Evaluate a term whose variables denote classes of arity-n data, using the
// total operation table produced by stabilization.
int eval_class(const ArityResult& target, const Term& t,
               const std::vector<int>& var_class) {
  if (t.op == -1) return var_class[t.var];
  std::vector<int> kc;
  kc.reserve(t.args.size());
  for (const Term& a : t.args) kc.push_back(eval_class(target, a, var_class));
  auto it = target.op_table.find({t.op, std::move(kc)});
  if (it == target.op_table.end())
    throw InvariantError("tabulate: stabilized operation table is not total");
  return it->second;
}

}  // namespace

TabMonad tabulate(const Presentation& p, int N, int depth_bound,
                  long long size_bound) {
  Report pr = check_presentation(p);
  if (!pr.ok()) throw PreconditionError("tabulate: " + pr.summary());
  if (N < 0 || depth_bound < 1)
    throw PreconditionError("tabulate: need N >= 0 and depth bound >= 1");

  std::vector<ArityResult> per_arity;
  per_arity.reserve(N + 1);
  for (int n = 0; n <= N; ++n)
    per_arity.push_back(tabulate_arity(p, n, depth_bound, size_bound));

  TabMonad t;
  t.N = N;
  t.name = p.name;
  for (int n = 0; n <= N; ++n) {
    t.tsize.push_back(per_arity[n].n_classes);
    t.unit.push_back(per_arity[n].unit);
    t.reps.push_back(per_arity[n].reps);
  }
  t.ext.resize(N + 1);
  for (int n = 0; n <= N; ++n) {
    t.ext[n].resize(N + 1);
    for (int m = 0; m <= N; ++m) {
      long long n_tuples = finset::checked_pow(t.tsize[n], m, size_bound);
      if (n_tuples < 0)
        throw ResourceError("tabulate: extension table exceeds size bound");
      t.ext[n][m].resize(n_tuples);
      for (long long f = 0; f < n_tuples; ++f) {
        std::vector<int> fv = tuple_decode(f, t.tsize[n], m);
        std::vector<int>& table = t.ext[n][m][f];
        table.resize(t.tsize[m]);
        for (int c = 0; c < t.tsize[m]; ++c)
          table[c] = eval_class(per_arity[n], per_arity[m].reps[c], fv);
      }
    }
  }
  return t;
}

TabMonad identity_tabmonad(int N) {
  Presentation p;
  p.name = "identity";
  return tabulate(p, N, 1);
}

bool monad_equal(const TabMonad& a, const TabMonad& b) {
  return a.N == b.N && a.tsize == b.tsize && a.unit == b.unit && a.ext == b.ext;
}

Report check_kleisli(const TabMonad& t) {
  Report r;
  if (static_cast<int>(t.tsize.size()) != t.N + 1 ||
      static_cast<int>(t.unit.size()) != t.N + 1 ||
      static_cast<int>(t.ext.size()) != t.N + 1) {
    r.add("tables do not cover arities 0.." + std::to_string(t.N));
    return r;
  }
  for (int n = 0; n <= t.N; ++n) {
    if (static_cast<int>(t.unit[n].size()) != n)
      r.add("unit table at arity " + std::to_string(n) + " has wrong length");
    for (int v : t.unit[n])
      if (v < 0 || v >= t.tsize[n])
        r.add("unit value out of range at arity " + std::to_string(n));
  }
  if (!r.ok()) return r;

  for (int n = 0; n <= t.N; ++n)
    for (int m = 0; m <= t.N; ++m) {
      long long n_tuples = finset::checked_pow(t.tsize[n], m, 1'000'000'000);
      if (static_cast<long long>(t.ext[n][m].size()) != n_tuples) {
        r.add("extension table (" + std::to_string(n) + "," +
              std::to_string(m) + ") has wrong tuple count");
        continue;
      }
      for (long long f = 0; f < n_tuples; ++f) {
        const std::vector<int>& table = t.ext[n][m][f];
        if (static_cast<int>(table.size()) != t.tsize[m]) {
          r.add("extension entry has wrong table length at (" +
                std::to_string(n) + "," + std::to_string(m) + ")");
          continue;
        }
        for (int v : table)
          if (v < 0 || v >= t.tsize[n]) {
            r.add("extension value out of range at (" + std::to_string(n) +
                  "," + std::to_string(m) + ")");
            break;
          }
      }
    }
  if (!r.ok()) return r;

  // Law 1: extension of f restricted along the unit recovers f.
  for (int n = 0; n <= t.N; ++n)
    for (int m = 0; m <= t.N; ++m)
      for (long long f = 0; f < static_cast<long long>(t.ext[n][m].size());
           ++f) {
        std::vector<int> fv = tuple_decode(f, t.tsize[n], m);
        for (int j = 0; j < m; ++j)
          if (t.ext[n][m][f][t.unit[m][j]] != fv[j]) {
            r.add("extension does not restrict to its tuple at (" +
                  std::to_string(n) + "," + std::to_string(m) + "), tuple " +
                  std::to_string(f) + ", slot " + std::to_string(j));
            break;
          }
      }

  // Law 2: extension of the unit tuple is the identity.
  for (int n = 0; n <= t.N; ++n) {
    if (t.tsize[n] == 0 && n > 0) continue;
    long long uf = tuple_code(t.unit[n], t.tsize[n]);
    for (int c = 0; c < t.tsize[n]; ++c)
      if (t.ext[n][n][uf][c] != c)
        r.add("extension of the unit tuple is not the identity at arity " +
              std::to_string(n) + ", class " + std::to_string(c));
  }

  // Law 3: associativity of Kleisli extension.
  for (int n = 0; n <= t.N; ++n)
    for (int m = 0; m <= t.N; ++m)
      for (int k = 0; k <= t.N; ++k)
        for (long long f = 0; f < static_cast<long long>(t.ext[n][m].size());
             ++f)
          for (long long g = 0; g < static_cast<long long>(t.ext[m][k].size());
               ++g) {
            std::vector<int> gv = tuple_decode(g, t.tsize[m], k);
            std::vector<int> hv(k);
            for (int i = 0; i < k; ++i) hv[i] = t.ext[n][m][f][gv[i]];
            long long h = tuple_code(hv, t.tsize[n]);
            for (int c = 0; c < t.tsize[k]; ++c)
              if (t.ext[n][k][h][c] != t.ext[n][m][f][t.ext[m][k][g][c]]) {
                r.add("extension is not associative at (" + std::to_string(n) +
                      "," + std::to_string(m) + "," + std::to_string(k) + ")");
                goto next_pair;
              }
          next_pair:;
          }
  return r;
}

LawTheory monad_to_theory(const TabMonad& t) {
  Report kr = check_kleisli(t);
  if (!kr.ok()) throw PreconditionError("monad_to_theory: " + kr.summary());

  LawTheory l;
  l.N = t.N;
  l.name = t.name.empty() ? "theory" : "theory(" + t.name + ")";
  l.base = fincat::make_trunc_base(t.N);
  l.trunc = l.base->cat;

  auto cat = std::make_shared<fincat::FinCategory>();
  cat->name = l.name;
  cat->n_obj = t.N + 1;
  cat->hom.assign(cat->n_obj, std::vector<int>(cat->n_obj, 0));
  for (int n = 0; n <= t.N; ++n)
    for (int m = 0; m <= t.N; ++m) {
      long long h = finset::checked_pow(t.tsize[n], m, 1'000'000'000);
      if (h < 0)
        throw ResourceError("monad_to_theory: hom set exceeds bounds");
      cat->hom[n][m] = static_cast<int>(h);
    }
  cat->id.resize(cat->n_obj);
  for (int n = 0; n <= t.N; ++n)
    cat->id[n] = static_cast<int>(tuple_code(t.unit[n], t.tsize[n]));
  fincat::alloc_comp(*cat);
  for (int n = 0; n <= t.N; ++n)
    for (int m = 0; m <= t.N; ++m)
      for (int k = 0; k <= t.N; ++k)
        for (int f = 0; f < cat->hom[n][m]; ++f)
          for (int g = 0; g < cat->hom[m][k]; ++g) {
            std::vector<int> gv = tuple_decode(g, t.tsize[m], k);
            std::vector<int> hv(k);
            for (int i = 0; i < k; ++i) hv[i] = t.ext[n][m][f][gv[i]];
            cat->comp[n][m][k][static_cast<size_t>(g) * cat->hom[n][m] + f] =
                static_cast<int>(tuple_code(hv, t.tsize[n]));
          }
  l.cat = cat;

  l.J.src = l.trunc;
  l.J.dst = l.cat;
  l.J.name = "J";
  l.J.obj_map.resize(cat->n_obj);
  std::iota(l.J.obj_map.begin(), l.J.obj_map.end(), 0);
  l.J.mor_map.resize(cat->n_obj);
  for (int n = 0; n <= t.N; ++n) {
    l.J.mor_map[n].resize(cat->n_obj);
    for (int m = 0; m <= t.N; ++m) {
      l.J.mor_map[n][m].resize(l.trunc->hom[n][m]);
      for (int u = 0; u < l.trunc->hom[n][m]; ++u) {
        std::vector<int> uv = tuple_decode(u, n, m);
        std::vector<int> img(m);
        for (int i = 0; i < m; ++i) img[i] = t.unit[n][uv[i]];
        l.J.mor_map[n][m][u] = static_cast<int>(tuple_code(img, t.tsize[n]));
      }
    }
  }
  return l;
}

namespace {

// Components of f in hom(k,n) under the point projections J(i): n -> 1.
std::vector<int> theory_components(const LawTheory& l, int k, int n, int f) {
  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) {
    int pi = l.J.mor_map[n][1][i];  // point i encodes itself in the base
    comp[i] = l.cat->compose(k, n, 1, pi, f);
  }
  return comp;
}

}  // namespace

Report check_theory(const LawTheory& l) {
  Report r = fincat::check_category(*l.cat);
  if (!r.ok()) return r;
  if (l.cat->n_obj != l.N + 1) {
    r.add("theory category does not have objects 0.." + std::to_string(l.N));
    return r;
  }
  r.merge(fincat::check_functor(l.J));
  if (!r.ok()) return r;
  for (int n = 0; n <= l.N; ++n)
    if (l.J.obj_map[n] != n) r.add("J is not identity on objects");
  if (!r.ok()) return r;
  for (int n = 0; n <= l.N; ++n)
    if (l.cat->hom[n][1] == 0 && n > 0) {
      // empty hom(n,1) is fine, but then hom(n,m) must be empty for m > 0
      for (int m = 1; m <= l.N; ++m)
        if (l.cat->hom[n][m] != 0)
          r.add("tupling fails at (" + std::to_string(n) + "," +
                std::to_string(m) + "): components empty but hom nonempty");
    }
  // Tupling: hom(k,n) -> hom(k,1)^n via the points must be bijective.
  for (int k = 0; k <= l.N; ++k)
    for (int n = 0; n <= l.N; ++n) {
      long long expect =
          finset::checked_pow(l.cat->hom[k][1], n, 1'000'000'000);
      if (expect != l.cat->hom[k][n]) {
        r.add("tupling fails at (" + std::to_string(k) + "," +
              std::to_string(n) + "): hom size " +
              std::to_string(l.cat->hom[k][n]) + " != " +
              std::to_string(expect));
        continue;
      }
      std::vector<char> seen(static_cast<size_t>(std::max(expect, 1LL)), 0);
      for (int f = 0; f < l.cat->hom[k][n]; ++f) {
        long long code =
            tuple_code(theory_components(l, k, n, f), l.cat->hom[k][1]);
        if (seen[code]) {
          r.add("tupling not injective at (" + std::to_string(k) + "," +
                std::to_string(n) + ")");
          break;
        }
        seen[code] = 1;
      }
    }
  return r;
}

bool theory_equal(const LawTheory& a, const LawTheory& b) {
  return a.N == b.N && a.cat->hom == b.cat->hom && a.cat->id == b.cat->id &&
         a.cat->comp == b.cat->comp && a.J.mor_map == b.J.mor_map;
}

TabMonad theory_to_monad(const LawTheory& l) {
  Report tr = check_theory(l);
  if (!tr.ok()) throw PreconditionError("theory_to_monad: " + tr.summary());

  TabMonad t;
  t.N = l.N;
  t.name = l.name;
  for (int n = 0; n <= l.N; ++n) {
    t.tsize.push_back(l.cat->hom[n][1]);
    std::vector<int> u(n);
    for (int i = 0; i < n; ++i) u[i] = l.J.mor_map[n][1][i];
    t.unit.push_back(std::move(u));
  }
  // Invert the tupling bijection so tuples of points become theory morphisms.
  t.ext.resize(l.N + 1);
  for (int n = 0; n <= l.N; ++n) {
    t.ext[n].resize(l.N + 1);
    for (int m = 0; m <= l.N; ++m) {
      std::vector<int> untuple(l.cat->hom[n][m], -1);
      for (int f = 0; f < l.cat->hom[n][m]; ++f)
        untuple[tuple_code(theory_components(l, n, m, f), t.tsize[n])] = f;
      t.ext[n][m].resize(untuple.size());
      for (size_t f = 0; f < untuple.size(); ++f) {
        std::vector<int>& table = t.ext[n][m][f];
        table.resize(t.tsize[m]);
        for (int c = 0; c < t.tsize[m]; ++c)
          table[c] = l.cat->compose(n, m, 1, c, untuple[f]);
      }
    }
  }
  Report kr = check_kleisli(t);
  if (!kr.ok()) throw InvariantError("theory_to_monad: " + kr.summary());
  return t;
}

namespace {

// Tuple of carrier values encoded little-endian in base `carrier`; the code
// doubles as the index of the corresponding base arrow carrier -> n.
std::vector<int> model_interp(const LawTheory& l, int carrier,
                              const std::vector<int>& a, int n, int f) {
  long long n_codes = finset::checked_pow(carrier, n, 1'000'000'000);
  std::vector<int> table(n_codes);
  for (long long c = 0; c < n_codes; ++c) {
    // the tuple coded by c, read as a base arrow psi: carrier -> n,
    // has the same code c in hom(trunc)(carrier, n)
    int psi = l.J.mor_map[carrier][n][c];
    table[c] = a[l.cat->compose(carrier, n, 1, f, psi)];
  }
  return table;
}

bool verify_model(const LawTheory& l, const ModelData& m) {
  int x = m.carrier;
  // Base compatibility: reindexings act by tuple projection.
  for (int n = 0; n <= l.N; ++n) {
    long long n_codes = finset::checked_pow(x, n, 1'000'000'000);
    for (int u = 0; u < n; ++u) {
      int ju = l.J.mor_map[n][1][u];
      for (long long c = 0; c < n_codes; ++c)
        if (m.op[n][ju][c] != tuple_decode(c, x, n)[u]) return false;
    }
  }
  // Functoriality: composing with any morphism into arity 1 commutes with
  // the induced map on powers.
  for (int n = 0; n <= l.N; ++n) {
    long long n_codes = finset::checked_pow(x, n, 1'000'000'000);
    for (int mm = 0; mm <= l.N; ++mm)
      for (int f = 0; f < l.cat->hom[n][mm]; ++f) {
        std::vector<int> comps = theory_components(l, n, mm, f);
        for (int s = 0; s < l.cat->hom[mm][1]; ++s) {
          int sf = l.cat->compose(n, mm, 1, s, f);
          for (long long c = 0; c < n_codes; ++c) {
            std::vector<int> mid(mm);
            for (int i = 0; i < mm; ++i) mid[i] = m.op[n][comps[i]][c];
            if (m.op[n][sf][c] != m.op[mm][s][tuple_code(mid, x)])
              return false;
          }
        }
      }
  }
  return true;
}

bool is_model_map(const LawTheory& l, const ModelData& a, const ModelData& b,
                  const std::vector<int>& f) {
  for (int n = 0; n <= l.N; ++n) {
    long long n_codes = finset::checked_pow(a.carrier, n, 1'000'000'000);
    for (int t = 0; t < l.cat->hom[n][1]; ++t)
      for (long long c = 0; c < n_codes; ++c) {
        std::vector<int> cv = tuple_decode(c, a.carrier, n);
        for (int& v : cv) v = f[v];
        if (f[a.op[n][t][c]] != b.op[n][t][tuple_code(cv, b.carrier)])
          return false;
      }
  }
  return true;
}

}  // namespace

ModelCategory enumerate_models(const LawTheory& l, int k,
                               long long max_candidates) {
  Report tr = check_theory(l);
  if (!tr.ok()) throw PreconditionError("enumerate_models: " + tr.summary());
  if (k > l.N)
    throw PreconditionError(
        "enumerate_models: carrier bound exceeds arity truncation");
  if (k < 0) throw PreconditionError("enumerate_models: negative bound");

  ModelCategory mc;
  long long candidates = 0;

  // A model with carrier x is determined by its evaluation
  // a: hom(x,1) -> x at the tautological x-tuple, which must send the point
  // projections to the matching coordinates.  Enumerate those maps, rebuild
  // the full interpretation, and keep the ones satisfying all axioms.
  for (int x = 0; x <= k; ++x) {
    int hx1 = l.cat->hom[x][1];
    std::vector<int> a(hx1, 0);
    std::vector<char> pinned(hx1, 0);
    bool feasible = true;
    for (int i = 0; i < x; ++i) {
      int pi = l.J.mor_map[x][1][i];
      if (pinned[pi] && a[pi] != i) feasible = false;
      a[pi] = i;
      pinned[pi] = 1;
    }
    if (!feasible) continue;
    std::vector<int> free_slots;
    for (int s = 0; s < hx1; ++s)
      if (!pinned[s]) free_slots.push_back(s);
    if (x == 0 && !free_slots.empty()) continue;  // constants force x > 0

    bool done = false;
    while (!done) {
      if (++candidates > max_candidates)
        throw ResourceError("enumerate_models: candidate bound exceeded");
      ModelData model;
      model.carrier = x;
      model.op.resize(l.N + 1);
      bool ok = x > 0 || hx1 == 0;
      if (ok) {
        for (int n = 0; n <= l.N && ok; ++n) {
          model.op[n].resize(l.cat->hom[n][1]);
          for (int f = 0; f < l.cat->hom[n][1]; ++f)
            model.op[n][f] = model_interp(l, x, a, n, f);
        }
        if (verify_model(l, model)) mc.objects.push_back(std::move(model));
      }
      // next assignment over the free slots (odometer)
      int i = static_cast<int>(free_slots.size()) - 1;
      while (i >= 0 && a[free_slots[i]] == x - 1) a[free_slots[i--]] = 0;
      if (i < 0)
        done = true;
      else
        ++a[free_slots[i]];
      if (x == 0) done = true;
    }
  }

  std::sort(mc.objects.begin(), mc.objects.end(),
            [](const ModelData& a, const ModelData& b) {
              if (a.carrier != b.carrier) return a.carrier < b.carrier;
              return a.op < b.op;
            });
  mc.objects.erase(std::unique(mc.objects.begin(), mc.objects.end(),
                               [](const ModelData& a, const ModelData& b) {
                                 return a.carrier == b.carrier && a.op == b.op;
                               }),
                   mc.objects.end());

  int n_obj = static_cast<int>(mc.objects.size());
  mc.hom_maps.assign(n_obj, std::vector<std::vector<std::vector<int>>>(n_obj));
  fincat::FinCategory& cat = mc.cat;
  cat.name = "models(" + l.name + ")";
  cat.n_obj = n_obj;
  cat.hom.assign(n_obj, std::vector<int>(n_obj, 0));
  for (int i = 0; i < n_obj; ++i)
    for (int j = 0; j < n_obj; ++j) {
      std::vector<finset::FinFn> fns = finset::enumerate_fns(
          finset::make_set(mc.objects[i].carrier),
          finset::make_set(mc.objects[j].carrier), max_candidates);
      for (const finset::FinFn& f : fns)
        if (is_model_map(l, mc.objects[i], mc.objects[j], f.table))
          mc.hom_maps[i][j].push_back(f.table);
      cat.hom[i][j] = static_cast<int>(mc.hom_maps[i][j].size());
    }
  cat.id.resize(n_obj);
  for (int i = 0; i < n_obj; ++i) {
    std::vector<int> idt(mc.objects[i].carrier);
    std::iota(idt.begin(), idt.end(), 0);
    auto it = std::find(mc.hom_maps[i][i].begin(), mc.hom_maps[i][i].end(), idt);
    if (it == mc.hom_maps[i][i].end())
      throw InvariantError("enumerate_models: identity map is not a model map");
    cat.id[i] = static_cast<int>(it - mc.hom_maps[i][i].begin());
  }
  fincat::alloc_comp(cat);
  for (int i = 0; i < n_obj; ++i)
    for (int j = 0; j < n_obj; ++j)
      for (int kk = 0; kk < n_obj; ++kk)
        for (size_t f = 0; f < mc.hom_maps[i][j].size(); ++f)
          for (size_t g = 0; g < mc.hom_maps[j][kk].size(); ++g) {
            std::vector<int> comp(mc.objects[i].carrier);
            for (int v = 0; v < mc.objects[i].carrier; ++v)
              comp[v] = mc.hom_maps[j][kk][g][mc.hom_maps[i][j][f][v]];
            auto it = std::find(mc.hom_maps[i][kk].begin(),
                                mc.hom_maps[i][kk].end(), comp);
            if (it == mc.hom_maps[i][kk].end())
              throw InvariantError(
                  "enumerate_models: composite is not a model map");
            cat.comp[i][j][kk][g * mc.hom_maps[i][j].size() + f] =
                static_cast<int>(it - mc.hom_maps[i][kk].begin());
          }
  return mc;
}

ModelCategory enumerate_algebras(const TabMonad& t, int k,
                                 long long max_candidates) {
  ModelCategory mc = enumerate_models(monad_to_theory(t), k, max_candidates);
  mc.cat.name = "algebras(" + (t.name.empty() ? "monad" : t.name) + ")";
  return mc;
}

Presentation pointed_presentation() {
  Presentation p;
  p.name = "pointed";
  p.sig.ops.push_back({"e", 0});
  return p;
}

Presentation semilattice_presentation() {
  Presentation p;
  p.name = "semilattice";
  p.sig.ops.push_back({"join", 2});
  Term x = tvar(0), y = tvar(1), z = tvar(2);
  p.eqs.push_back({2, tapp(0, {x, y}), tapp(0, {y, x})});
  p.eqs.push_back({3, tapp(0, {tapp(0, {x, y}), z}), tapp(0, {x, tapp(0, {y, z})})});
  p.eqs.push_back({1, tapp(0, {x, x}), x});
  return p;
}

Presentation monoid_presentation() {
  Presentation p;
  p.name = "monoid";
  p.sig.ops.push_back({"e", 0});
  p.sig.ops.push_back({"mul", 2});
  Term x = tvar(0), y = tvar(1), z = tvar(2);
  p.eqs.push_back({3, tapp(1, {tapp(1, {x, y}), z}), tapp(1, {x, tapp(1, {y, z})})});
  p.eqs.push_back({1, tapp(1, {tapp(0, {}), x}), x});
  p.eqs.push_back({1, tapp(1, {x, tapp(0, {})}), x});
  return p;
}

Presentation empty_presentation() {
  Presentation p;
  p.name = "empty-signature";
  return p;
}

}  // namespace catkit::algebra
