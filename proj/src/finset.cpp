#include "catkit/finset.hpp"

#include <algorithm>
#include <numeric>

namespace catkit {

std::string Report::summary() const {
  if (ok()) return "ok";
  std::string s;
  for (const auto& v : violations) {
    s += v;
    s += '\n';
  }
  return s;
}

namespace finset {

FinSetObj make_set(int size) {
  if (size < 0) throw PreconditionError("FinSetObj: negative size");
  return FinSetObj{size, {}};
}

FinFn make_fn(int dom_size, int cod_size, std::vector<int> table) {
  if (static_cast<int>(table.size()) != dom_size)
    throw PreconditionError("FinFn: table length != dom size");
  for (int v : table)
    if (v < 0 || v >= cod_size) throw BoundsError("FinFn: table entry out of range");
  return FinFn{make_set(dom_size), make_set(cod_size), std::move(table)};
}

FinFn identity_fn(const FinSetObj& s) {
  std::vector<int> t(static_cast<size_t>(s.size));
  std::iota(t.begin(), t.end(), 0);
  return FinFn{s, s, std::move(t)};
}

bool fn_equal(const FinFn& f, const FinFn& g) {
  return f.dom.size == g.dom.size && f.cod.size == g.cod.size && f.table == g.table;
}

bool is_bijection(const FinFn& f) {
  if (f.dom.size != f.cod.size) return false;
  std::vector<char> hit(static_cast<size_t>(f.cod.size), 0);
  for (int v : f.table) {
    if (hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = 1;
  }
  return true;
}

FinFn inverse_fn(const FinFn& f) {
  if (!is_bijection(f)) throw PreconditionError("inverse_fn: not a bijection");
  std::vector<int> t(static_cast<size_t>(f.cod.size));
  for (int i = 0; i < f.dom.size; ++i) t[static_cast<size_t>(f.table[static_cast<size_t>(i)])] = i;
  return FinFn{f.cod, f.dom, std::move(t)};
}

FinFn compose_fn(const FinFn& g, const FinFn& f) {
  if (f.cod.size != g.dom.size)
    throw CompositionError("compose_fn: f.cod != g.dom");
  std::vector<int> t(f.table.size());
  for (size_t i = 0; i < f.table.size(); ++i)
    t[i] = g.table[static_cast<size_t>(f.table[i])];
  return FinFn{f.dom, g.cod, std::move(t)};
}

ProductResult product(const FinSetObj& a, const FinSetObj& b) {
  FinSetObj p = make_set(a.size * b.size);
  std::vector<int> t1(static_cast<size_t>(p.size)), t2(static_cast<size_t>(p.size));
  for (int i = 0; i < a.size; ++i)
    for (int j = 0; j < b.size; ++j) {
      t1[static_cast<size_t>(pair_index(i, j, b.size))] = i;
      t2[static_cast<size_t>(pair_index(i, j, b.size))] = j;
    }
  return ProductResult{p, FinFn{p, a, std::move(t1)}, FinFn{p, b, std::move(t2)}};
}

Partition::Partition(int n) : parent_(static_cast<size_t>(n)) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int Partition::find(int i) const {
  if (i < 0 || i >= carrier_size()) throw BoundsError("Partition::find: out of range");
  int root = i;
  while (parent_[static_cast<size_t>(root)] != root) root = parent_[static_cast<size_t>(root)];
  while (parent_[static_cast<size_t>(i)] != root) {
    int next = parent_[static_cast<size_t>(i)];
    parent_[static_cast<size_t>(i)] = root;
    i = next;
  }
  return root;
}

void Partition::unite(int i, int j) {
  int a = find(i), b = find(j);
  if (a == b) return;
  // least member stays root
  if (a > b) std::swap(a, b);
  parent_[static_cast<size_t>(b)] = a;
}

int Partition::block_count() const {
  int c = 0;
  for (int i = 0; i < carrier_size(); ++i)
    if (find(i) == i) ++c;
  return c;
}

std::vector<int> Partition::representatives() const {
  std::vector<int> reps;
  for (int i = 0; i < carrier_size(); ++i)
    if (find(i) == i) reps.push_back(i);
  return reps;  // ascending by construction
}

CoequalizeResult coequalize(const std::vector<std::pair<int, int>>& pairs,
                            const FinSetObj& carrier) {
  Partition part(carrier.size);
  for (const auto& [i, j] : pairs) {
    if (i < 0 || i >= carrier.size || j < 0 || j >= carrier.size)
      throw BoundsError("coequalize: pair index out of range");
    part.unite(i, j);
  }
  std::vector<int> reps = part.representatives();
  std::vector<int> block_index(static_cast<size_t>(carrier.size), -1);
  for (size_t k = 0; k < reps.size(); ++k) block_index[static_cast<size_t>(reps[k])] = static_cast<int>(k);
  std::vector<int> table(static_cast<size_t>(carrier.size));
  for (int i = 0; i < carrier.size; ++i)
    table[static_cast<size_t>(i)] = block_index[static_cast<size_t>(part.find(i))];
  FinFn quot{carrier, make_set(static_cast<int>(reps.size())), std::move(table)};
  return CoequalizeResult{std::move(part), std::move(quot)};
}

long long checked_pow(long long base, long long exp, long long cap) {
  long long r = 1;
  for (long long e = 0; e < exp; ++e) {
    if (base != 0 && r > cap / base) return -1;
    r *= base;
    if (r > cap) return -1;
  }
  return r;
}

long long tuple_code(const std::vector<int>& t, int base) {
  long long code = 0, weight = 1;
  for (int v : t) {
    if (v < 0 || v >= base) throw BoundsError("tuple_code: entry out of range");
    code += v * weight;
    weight *= base;
  }
  return code;
}

std::vector<int> tuple_decode(long long code, int base, int len) {
  if (len > 0 && base <= 0) throw BoundsError("tuple_decode: empty base, nonzero length");
  std::vector<int> t(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) {
    t[static_cast<size_t>(i)] = static_cast<int>(code % base);
    code /= base;
  }
  if (code != 0) throw BoundsError("tuple_decode: code out of range");
  return t;
}

std::vector<FinFn> enumerate_fns(const FinSetObj& dom, const FinSetObj& cod,
                                 long long max_count) {
  long long count = checked_pow(cod.size, dom.size, max_count);
  if (count < 0) throw ResourceError("enumerate_fns: cod^dom exceeds bound");
  std::vector<FinFn> out;
  out.reserve(static_cast<size_t>(count));
  std::vector<int> table(static_cast<size_t>(dom.size), 0);
  if (dom.size == 0) {
    out.push_back(FinFn{dom, cod, {}});
    return out;
  }
  if (cod.size == 0) return out;  // no functions from nonempty dom
  for (;;) {
    out.push_back(FinFn{dom, cod, table});
    int pos = dom.size - 1;
    while (pos >= 0 && table[static_cast<size_t>(pos)] == cod.size - 1) {
      table[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++table[static_cast<size_t>(pos)];
  }
  return out;
}

}  // namespace finset
}  // namespace catkit
