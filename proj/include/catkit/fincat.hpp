#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catkit/finset.hpp"

namespace catkit::fincat {

/// A finite category with dense hom-set indexing: morphisms a -> b are the
/// indices 0..hom[a][b]-1.
struct FinCategory {
  int n_obj = 0;
  std::vector<std::vector<int>> hom;  // hom[a][b] = |hom-set a -> b|
  std::vector<int> id;                // id[a]: index in hom(a,a)
  // comp[a][b][c] is a flat table of size hom[b][c] * hom[a][b];
  // entry at g * hom[a][b] + f is the index of g∘f in hom(a,c).
  std::vector<std::vector<std::vector<std::vector<int>>>> comp;
  std::string name;

  int hom_size(int a, int b) const { return hom[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  /// g∘f with f: a -> b, g: b -> c.
  int compose(int a, int b, int c, int g, int f) const;
};

using FinCategoryPtr = std::shared_ptr<const FinCategory>;

/// Allocates comp tables (filled with -1) matching the hom sizes.
void alloc_comp(FinCategory& c);

Report check_category(const FinCategory& c);

/// A finite poset presented by its order matrix; intended to be a lattice
/// (meets + top) when used as a lex base, which check_lattice certifies.
struct FinLattice {
  int n = 0;
  std::vector<std::vector<char>> leq;
  std::vector<std::string> labels;
  std::string name;

  bool le(int i, int j) const { return leq[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0; }
};

Report check_poset(const FinLattice& p);
Report check_lattice(const FinLattice& p);  // poset + binary meets + top
int lattice_top(const FinLattice& p);       // throws PreconditionError if absent
int lattice_meet(const FinLattice& p, int i, int j);

FinLattice chain_lattice(int n);      // 0 < 1 < ... < n-1
FinLattice diamond_lattice();         // bottom, a, b, top
FinLattice antichain_top(int k);      // k incomparable elements below a top (a lattice only for k <= 1)

FinCategory lattice_to_category(const FinLattice& p);

/// Truncated finite-sets-opposite: objects 0..N; a morphism n -> m is a
/// function [m] -> [n], indexed by its little-endian tuple code.
FinCategory trunc_category(int max_arity);

enum class BaseKind { lattice, trunc_arity };

/// A chosen binary product cone in a base category.
struct ProductCone {
  int left = 0, right = 0, apex = 0;
  int proj_left = 0;   // index in hom(apex, left)
  int proj_right = 0;  // index in hom(apex, right)
};

/// A base category for lex profunctors, together with its terminal object and
/// the list of in-bounds product cones that all lexness checks quantify over.
struct LexBase {
  BaseKind kind = BaseKind::lattice;
  FinLattice lattice;  // meaningful when kind == lattice
  int max_arity = 0;   // meaningful when kind == trunc_arity
  FinCategoryPtr cat;
  int terminal_obj = 0;
  std::vector<ProductCone> products;
  std::string name;
};

using LexBasePtr = std::shared_ptr<const LexBase>;

LexBasePtr make_lattice_base(const FinLattice& p, const std::string& name);
LexBasePtr make_trunc_base(int max_arity);

struct FunctorData {
  FinCategoryPtr src, dst;
  std::vector<int> obj_map;
  std::vector<std::vector<std::vector<int>>> mor_map;  // [a][b][f] -> index in hom(F a, F b)
  std::string name;

  int map_mor(int a, int b, int f) const {
    return mor_map[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(f)];
  }
};

Report check_functor(const FunctorData& F);
FunctorData identity_functor(FinCategoryPtr c);
/// G after F.
FunctorData compose_functor(const FunctorData& G, const FunctorData& F);
bool functor_equal(const FunctorData& F, const FunctorData& G);

struct NatTransData {
  std::vector<int> component;  // component[a]: index in dst-hom(F a, G a)
};

Report check_nat_trans(const FunctorData& F, const FunctorData& G, const NatTransData& t);
bool is_nat_iso(const FunctorData& F, const FunctorData& G, const NatTransData& t);
/// Exhaustive search for an invertible natural transformation F => G.
std::optional<NatTransData> find_nat_iso(const FunctorData& F, const FunctorData& G,
                                         long long max_candidates = 10'000'000);

/// A functor from a finite category into finite sets, stored by tables.
struct SetFunctor {
  FinCategoryPtr src;
  std::vector<int> obj_size;
  // mor[a][b][f]: table of the function obj_size[a] -> obj_size[b]
  std::vector<std::vector<std::vector<std::vector<int>>>> mor;
  std::string name;

  const std::vector<int>& table(int a, int b, int f) const {
    return mor[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(f)];
  }
};

Report check_set_functor(const SetFunctor& X);
/// Lexness of a set-valued functor relative to the base's recorded cones.
Report check_lex_point(const LexBase& base, const SetFunctor& X);
bool set_functor_equal(const SetFunctor& X, const SetFunctor& Y);
/// Natural isomorphism of set-valued functors, by exhaustive bijection search.
bool set_functor_iso(const SetFunctor& X, const SetFunctor& Y,
                     long long max_candidates = 10'000'000);

/// Lex points of a base: filters (lattice regime) or finite-carrier power
/// functors (truncated regime, carriers of size <= value_bound).
std::vector<SetFunctor> enumerate_lex_points(const LexBase& base, int value_bound,
                                             long long max_candidates = 10'000'000);

/// Lexness of a functor between categories, relative to the source base's
/// recorded cones: images of the terminal and of each product cone are
/// required to be genuine limit cones in the target.
Report check_lex_functor(const LexBase& base, const FunctorData& F);

/// All lex maps between bases of like kind: for lattices, monotone maps
/// preserving top and binary meets; for truncated bases, the multiplication
/// functors n -> c*n with c * src-bound <= dst-bound.
std::vector<FunctorData> enumerate_lex_maps(const LexBase& a, const LexBase& b);

}  // namespace catkit::fincat
