#pragma once

#include "catkit/fincat.hpp"

namespace catkit::algebra {

struct OpSym {
  std::string name;
  int arity = 0;
};

struct Signature {
  std::vector<OpSym> ops;
};

/// A term tree: op == -1 marks a variable (index in `var`), otherwise `op`
/// indexes the signature and `args` has matching length.
struct Term {
  int op = -1;
  int var = -1;
  std::vector<Term> args;
};

Term tvar(int i);
Term tapp(int op, std::vector<Term> args);

struct Equation {
  int n_vars = 0;
  Term lhs, rhs;
};

struct Presentation {
  Signature sig;
  std::vector<Equation> eqs;
  std::string name;
};

Report check_presentation(const Presentation& p);

/// A finitary monad tabulated to arity N as a Kleisli triple: free-algebra
/// sizes, unit tables, and the full Kleisli extension table.
struct TabMonad {
  int N = 0;
  std::vector<int> tsize;              // |T n| for n = 0..N
  std::vector<std::vector<int>> unit;  // unit[n]: table n -> T n
  // ext[n][m][f]: table T m -> T n, where f encodes a tuple in (T n)^m by
  // its little-endian tuple code
  std::vector<std::vector<std::vector<std::vector<int>>>> ext;
  // representative term per class (populated by tabulate; empty otherwise)
  std::vector<std::vector<Term>> reps;
  std::string name;
};

/// The three Kleisli-triple laws, checked exhaustively.
Report check_kleisli(const TabMonad& t);

/// Free algebras by bounded term enumeration plus congruence closure.
/// Stabilization is required: a depth round that neither creates classes nor
/// leaves an operation-on-representatives outside the known classes.
TabMonad tabulate(const Presentation& p, int N, int depth_bound,
                  long long size_bound = 100'000);

TabMonad identity_tabmonad(int N);

bool monad_equal(const TabMonad& a, const TabMonad& b);

/// A Lawvere theory at arity truncation N: a category on objects 0..N and the
/// identity-on-objects functor J from the truncated base into it.
struct LawTheory {
  int N = 0;
  fincat::LexBasePtr base;       // truncated-arity base at N
  fincat::FinCategoryPtr trunc;  // base->cat
  fincat::FinCategoryPtr cat;
  fincat::FunctorData J;
  std::string name;
};

/// Category axioms, J functoriality, identity-on-objects, and the tupling
/// bijection hom(k,n) -> hom(k,1)^n induced by J's points.
Report check_theory(const LawTheory& l);
bool theory_equal(const LawTheory& a, const LawTheory& b);

/// hom(n,m) = (T n)^m with Kleisli composition; J postcomposes with the unit.
LawTheory monad_to_theory(const TabMonad& t);
/// T n = hom(n,1); unit from J; ext via the tupling bijection and composition.
TabMonad theory_to_monad(const LawTheory& l);

/// A model: carrier of size `carrier`, with interpretation tables
/// op[n][f]: X^n -> X (little-endian codes) per theory morphism f in hom(n,1).
struct ModelData {
  int carrier = 0;
  std::vector<std::vector<std::vector<int>>> op;  // op[n][f]: table of length carrier^n
};

struct ModelCategory {
  fincat::FinCategory cat;  // objects = models, morphisms = structure maps
  std::vector<ModelData> objects;
  // hom_maps[i][j][k]: the carrier table of the k-th morphism i -> j
  std::vector<std::vector<std::vector<std::vector<int>>>> hom_maps;
};

/// All strict-power models of the theory with carrier size <= k, as a finite
/// category whose morphisms are the structure-preserving carrier maps.
/// Requires k <= l.N (carriers must be expressible as arities).
ModelCategory enumerate_models(const LawTheory& l, int k,
                               long long max_candidates = 10'000'000);

/// Eilenberg–Moore style enumeration, delegated through the theory.
ModelCategory enumerate_algebras(const TabMonad& t, int k,
                                 long long max_candidates = 10'000'000);

/// Semantics-triangle certification: builds the comparison functor from the
/// algebra category of t to the model category of its theory and certifies it
/// is an isomorphism of finite categories, then cross-checks both against the
/// enriched semantics of the one-object profunctor embedding of t.
Report check_triangle(const TabMonad& t, int k,
                      long long max_candidates = 10'000'000);

/// Fixture presentations.
Presentation pointed_presentation();
Presentation semilattice_presentation();
Presentation monoid_presentation();
Presentation empty_presentation();

}  // namespace catkit::algebra
