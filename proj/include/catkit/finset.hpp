#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catkit {

struct CatkitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// f.cod != g.dom and friends.
struct CompositionError : CatkitError {
  using CatkitError::CatkitError;
};

// An element index fell outside its carrier.
struct BoundsError : CatkitError {
  using CatkitError::CatkitError;
};

// A configured enumeration/size bound was exceeded.
struct ResourceError : CatkitError {
  using CatkitError::CatkitError;
};

// Caller handed in data violating a stated precondition.
struct PreconditionError : CatkitError {
  using CatkitError::CatkitError;
};

// An internal invariant failed; signals a bug, not bad input.
struct InvariantError : CatkitError {
  using CatkitError::CatkitError;
};

// Free-algebra tabulation did not stabilize within the depth bound.
struct StabilizationError : CatkitError {
  explicit StabilizationError(int arity)
      : CatkitError("not locally finite within bounds (arity " +
                    std::to_string(arity) + ")"),
        arity(arity) {}
  int arity;
};

struct ParseError : CatkitError {
  using CatkitError::CatkitError;
};

/// Diagnostic result: a list of violated-axiom descriptions, empty when good.
struct Report {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
  void merge(const Report& other) {
    violations.insert(violations.end(), other.violations.begin(),
                      other.violations.end());
  }
  std::string summary() const;
};

namespace finset {

/// A finite set: elements are canonically the indices 0..size-1.
/// Labels, when present, are display metadata only.
struct FinSetObj {
  int size = 0;
  std::vector<std::string> labels;
};

FinSetObj make_set(int size);

/// A function between canonically indexed finite sets.
struct FinFn {
  FinSetObj dom, cod;
  std::vector<int> table;

  int operator()(int i) const {
    if (i < 0 || i >= dom.size) throw BoundsError("FinFn: argument out of range");
    return table[static_cast<size_t>(i)];
  }
};

FinFn make_fn(int dom_size, int cod_size, std::vector<int> table);
FinFn identity_fn(const FinSetObj& s);
bool fn_equal(const FinFn& f, const FinFn& g);
bool is_bijection(const FinFn& f);
FinFn inverse_fn(const FinFn& f);

/// g after f; requires f.cod = g.dom (same size).
FinFn compose_fn(const FinFn& g, const FinFn& f);

struct ProductResult {
  FinSetObj obj;
  FinFn proj1, proj2;
};

/// Cartesian product with row-major pairing (i,j) -> i*b.size + j.
ProductResult product(const FinSetObj& a, const FinSetObj& b);

inline int pair_index(int i, int j, int b_size) { return i * b_size + j; }

/// Union-find forest; canonical representative of a block is its least member.
class Partition {
 public:
  explicit Partition(int n);

  int find(int i) const;
  void unite(int i, int j);
  int carrier_size() const { return static_cast<int>(parent_.size()); }
  int block_count() const;
  /// Ascending least representatives, one per block.
  std::vector<int> representatives() const;

 private:
  mutable std::vector<int> parent_;
};

struct CoequalizeResult {
  Partition partition;
  FinFn quot;  // carrier -> dense block indices, ordered by least representative
};

/// Quotient of carrier by the equivalence relation generated by `pairs`.
CoequalizeResult coequalize(const std::vector<std::pair<int, int>>& pairs,
                            const FinSetObj& carrier);

/// All functions dom -> cod in lexicographic table order
/// ([0,0,...,0] first, last entry varying fastest).
std::vector<FinFn> enumerate_fns(const FinSetObj& dom, const FinSetObj& cod,
                                 long long max_count = 10'000'000);

/// cod^dom without overflow; returns -1 when it exceeds `cap`.
long long checked_pow(long long base, long long exp, long long cap);

/// Dense tuple codes, little-endian: code = sum_i t[i] * base^i.
/// Used wherever a k-tuple over a finite set needs a canonical index.
long long tuple_code(const std::vector<int>& t, int base);
std::vector<int> tuple_decode(long long code, int base, int len);

}  // namespace finset
}  // namespace catkit
