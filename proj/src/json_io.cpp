#include "catkit/json_io.hpp"

#include <fstream>

namespace catkit::jsonio {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw ParseError("json: " + what); }

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    parse_fail(std::string(what) + ": " + e.what());
  } catch (const std::exception& e) {
    if (dynamic_cast<const CatkitError*>(&e)) throw;
    parse_fail(std::string(what) + ": " + e.what());
  }
}

json term_to_json(const algebra::Term& t) {
  if (t.op < 0) return json(t.var);
  json a = json::array();
  a.push_back(t.op);
  for (const auto& s : t.args) a.push_back(term_to_json(s));
  return a;
}

algebra::Term term_from_json(const json& j) {
  if (j.is_number_integer()) return algebra::tvar(j.get<int>());
  if (!j.is_array() || j.empty() || !j[0].is_number_integer())
    parse_fail("term: expected a variable index or [op, args...]");
  std::vector<algebra::Term> args;
  for (size_t i = 1; i < j.size(); ++i) args.push_back(term_from_json(j[i]));
  return algebra::tapp(j[0].get<int>(), std::move(args));
}

}  // namespace

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open file: " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) parse_fail("syntax error in " + path);
  return j;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

void save_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) parse_fail("cannot open file for writing: " + path);
  out << dump_canonical(j);
}

std::string kind_of(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    parse_fail("missing \"kind\" discriminator");
  return j["kind"].get<std::string>();
}

json lattice_to_json(const fincat::FinLattice& p) {
  json j;
  j["kind"] = "lattice";
  j["name"] = p.name;
  j["elements"] = p.labels;
  json rows = json::array();
  for (const auto& row : p.leq) {
    json r = json::array();
    for (char c : row) r.push_back(c != 0);
    rows.push_back(r);
  }
  j["leq"] = rows;
  return j;
}

fincat::FinLattice lattice_from_json(const json& j) {
  return guarded("lattice", [&] {
    if (kind_of(j) != "lattice") parse_fail("expected kind=lattice");
    fincat::FinLattice p;
    p.labels = j.at("elements").get<std::vector<std::string>>();
    p.n = static_cast<int>(p.labels.size());
    p.name = j.value("name", "");
    const auto rows = j.at("leq");
    if (static_cast<int>(rows.size()) != p.n) parse_fail("lattice: leq row count");
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != p.n) parse_fail("lattice: leq column count");
      std::vector<char> r;
      for (const auto& v : row) r.push_back(v.get<bool>() ? 1 : 0);
      p.leq.push_back(std::move(r));
    }
    return p;
  });
}

json base_to_json(const fincat::LexBase& b) {
  json j;
  if (b.kind == fincat::BaseKind::lattice) {
    j["type"] = "lattice";
    j["lattice"] = lattice_to_json(b.lattice);
  } else {
    j["type"] = "trunc";
    j["max_arity"] = b.max_arity;
  }
  j["name"] = b.name;
  return j;
}

fincat::LexBasePtr base_from_json(const json& j) {
  return guarded("base", [&]() -> fincat::LexBasePtr {
    const std::string type = j.at("type").get<std::string>();
    if (type == "lattice")
      return fincat::make_lattice_base(lattice_from_json(j.at("lattice")), j.value("name", ""));
    if (type == "trunc") return fincat::make_trunc_base(j.at("max_arity").get<int>());
    parse_fail("base: unknown type \"" + type + "\"");
  });
}

json category_to_json(const fincat::FinCategory& c) {
  json j;
  j["kind"] = "category";
  j["name"] = c.name;
  j["objects"] = c.n_obj;
  j["hom"] = c.hom;
  j["id"] = c.id;
  j["comp"] = c.comp;
  return j;
}

fincat::FinCategory category_from_json(const json& j) {
  return guarded("category", [&] {
    if (kind_of(j) != "category") parse_fail("expected kind=category");
    fincat::FinCategory c;
    c.n_obj = j.at("objects").get<int>();
    c.name = j.value("name", "");
    c.hom = j.at("hom").get<std::vector<std::vector<int>>>();
    c.id = j.at("id").get<std::vector<int>>();
    c.comp = j.at("comp").get<std::vector<std::vector<std::vector<std::vector<int>>>>>();
    const Report r = fincat::check_category(c);
    if (!r.ok()) parse_fail("category: invalid tables: " + r.summary());
    return c;
  });
}

namespace {

json cell_tables_to_json(const lexprof::LexProf1Cell& w) {
  json j;
  j["name"] = w.name;
  j["value"] = w.value;
  j["lact"] = w.lact;
  j["ract"] = w.ract;
  return j;
}

lexprof::LexProf1Cell cell_tables_from_json(const json& j, fincat::LexBasePtr src,
                                            fincat::LexBasePtr dst) {
  lexprof::LexProf1Cell w;
  w.src = std::move(src);
  w.dst = std::move(dst);
  w.name = j.value("name", "");
  w.value = j.at("value").get<std::vector<std::vector<int>>>();
  using TL = std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>>;
  w.lact = j.at("lact").get<TL>();
  w.ract = j.at("ract").get<TL>();
  const Report r = lexprof::check_prof(w);
  if (!r.ok()) parse_fail("profunctor: invalid tables: " + r.summary());
  return w;
}

json functor_tables_to_json(const fincat::FunctorData& F) {
  json j;
  j["name"] = F.name;
  j["obj_map"] = F.obj_map;
  j["mor_map"] = F.mor_map;
  return j;
}

fincat::FunctorData functor_tables_from_json(const json& j, fincat::FinCategoryPtr src,
                                             fincat::FinCategoryPtr dst) {
  fincat::FunctorData F;
  F.src = std::move(src);
  F.dst = std::move(dst);
  F.name = j.value("name", "");
  F.obj_map = j.at("obj_map").get<std::vector<int>>();
  F.mor_map = j.at("mor_map").get<std::vector<std::vector<std::vector<int>>>>();
  const Report r = fincat::check_functor(F);
  if (!r.ok()) parse_fail("functor: invalid tables: " + r.summary());
  return F;
}

}  // namespace

json prof_to_json(const lexprof::LexProf1Cell& w) {
  json j = cell_tables_to_json(w);
  j["kind"] = "profunctor";
  j["src"] = base_to_json(*w.src);
  j["dst"] = base_to_json(*w.dst);
  return j;
}

lexprof::LexProf1Cell prof_from_json(const json& j) {
  return guarded("profunctor", [&] {
    if (kind_of(j) != "profunctor") parse_fail("expected kind=profunctor");
    return cell_tables_from_json(j, base_from_json(j.at("src")), base_from_json(j.at("dst")));
  });
}

json parfl_to_json(const wcat::ParflCategory& p) {
  json j;
  j["kind"] = "parfl";
  j["name"] = p.name;
  j["category"] = category_to_json(*p.cat);
  json gens = json::array();
  for (const auto& g : p.gens) {
    json jg = functor_tables_to_json(g.F);
    jg["base"] = base_to_json(*g.base);
    jg["name"] = g.name;
    gens.push_back(jg);
  }
  j["gens"] = gens;
  return j;
}

wcat::ParflCategory parfl_from_json(const json& j) {
  return guarded("parfl", [&] {
    if (kind_of(j) != "parfl") parse_fail("expected kind=parfl");
    wcat::ParflCategory p;
    p.name = j.value("name", "");
    p.cat = std::make_shared<const fincat::FinCategory>(category_from_json(j.at("category")));
    for (const auto& jg : j.at("gens")) {
      wcat::SieveGen g;
      g.base = base_from_json(jg.at("base"));
      g.name = jg.value("name", "");
      g.F = functor_tables_from_json(jg, g.base->cat, p.cat);
      p.gens.push_back(std::move(g));
    }
    const Report r = wcat::check_parfl(p);
    if (!r.ok()) parse_fail("parfl: invalid data: " + r.summary());
    return p;
  });
}

json wcat_to_json(const wcat::WCategory& c) {
  json j;
  j["kind"] = "wcat";
  j["name"] = c.name;
  j["obj_names"] = c.obj_names;
  json extents = json::array();
  for (const auto& e : c.extent) extents.push_back(base_to_json(*e));
  j["extents"] = extents;
  json homs = json::array();
  for (const auto& row : c.hom) {
    json r = json::array();
    for (const auto& cell : row) r.push_back(cell_tables_to_json(cell));
    homs.push_back(r);
  }
  j["hom"] = homs;
  j["comp"] = c.comp;
  json iotas = json::array();
  for (const auto& i : c.iota) iotas.push_back(i.component);
  j["iota"] = iotas;
  return j;
}

wcat::WCategory wcat_from_json(const json& j) {
  return guarded("wcat", [&] {
    if (kind_of(j) != "wcat") parse_fail("expected kind=wcat");
    wcat::WCategory c;
    c.name = j.value("name", "");
    c.obj_names = j.at("obj_names").get<std::vector<std::string>>();
    for (const auto& je : j.at("extents")) c.extent.push_back(base_from_json(je));
    const size_t n = c.extent.size();
    const auto& homs = j.at("hom");
    if (homs.size() != n) parse_fail("wcat: hom row count");
    for (size_t x = 0; x < n; ++x) {
      if (homs[x].size() != n) parse_fail("wcat: hom column count");
      c.hom.emplace_back();
      for (size_t y = 0; y < n; ++y)
        c.hom.back().push_back(cell_tables_from_json(homs[x][y], c.extent[x], c.extent[y]));
    }
    using Comp = decltype(c.comp);
    c.comp = j.at("comp").get<Comp>();
    const auto& iotas = j.at("iota");
    if (iotas.size() != n) parse_fail("wcat: iota count");
    for (const auto& ji : iotas) {
      lexprof::ProfMorphism m;
      m.component = ji.get<std::vector<std::vector<lexprof::Tab>>>();
      c.iota.push_back(std::move(m));
    }
    const Report r = wcat::check_wcategory(c);
    if (!r.ok()) parse_fail("wcat: invalid data: " + r.summary());
    return c;
  });
}

json monad_to_json(const wcat::MonadData& m) {
  json j;
  j["kind"] = "monad";
  j["name"] = m.name;
  j["cell"] = prof_to_json(m.T);
  j["unit"] = m.unit.component;
  j["mult"] = m.mult.component;
  return j;
}

wcat::MonadData monad_from_json(const json& j) {
  return guarded("monad", [&] {
    if (kind_of(j) != "monad") parse_fail("expected kind=monad");
    wcat::MonadData m;
    m.name = j.value("name", "");
    json cell = j.at("cell");
    // A monad 1-cell is an endo-cell: share one base pointer for src and dst.
    const fincat::LexBasePtr base = base_from_json(cell.at("src"));
    m.T = cell_tables_from_json(cell, base, base);
    m.unit.component = j.at("unit").get<std::vector<std::vector<lexprof::Tab>>>();
    m.mult.component = j.at("mult").get<std::vector<std::vector<lexprof::Tab>>>();
    return m;
  });
}

json presentation_to_json(const algebra::Presentation& p) {
  json j;
  j["kind"] = "presentation";
  j["name"] = p.name;
  json ops = json::array();
  for (const auto& o : p.sig.ops) ops.push_back({{"name", o.name}, {"arity", o.arity}});
  j["ops"] = ops;
  json eqs = json::array();
  for (const auto& e : p.eqs)
    eqs.push_back({{"vars", e.n_vars}, {"lhs", term_to_json(e.lhs)}, {"rhs", term_to_json(e.rhs)}});
  j["eqs"] = eqs;
  return j;
}

algebra::Presentation presentation_from_json(const json& j) {
  return guarded("presentation", [&] {
    if (kind_of(j) != "presentation") parse_fail("expected kind=presentation");
    algebra::Presentation p;
    p.name = j.value("name", "");
    for (const auto& jo : j.at("ops"))
      p.sig.ops.push_back({jo.at("name").get<std::string>(), jo.at("arity").get<int>()});
    for (const auto& je : j.at("eqs"))
      p.eqs.push_back({je.at("vars").get<int>(), term_from_json(je.at("lhs")),
                       term_from_json(je.at("rhs"))});
    const Report r = algebra::check_presentation(p);
    if (!r.ok()) parse_fail("presentation: invalid data: " + r.summary());
    return p;
  });
}

json tabmonad_to_json(const algebra::TabMonad& t) {
  json j;
  j["kind"] = "tabmonad";
  j["name"] = t.name;
  j["N"] = t.N;
  j["sizes"] = t.tsize;
  j["unit"] = t.unit;
  j["ext"] = t.ext;
  return j;
}

algebra::TabMonad tabmonad_from_json(const json& j) {
  return guarded("tabmonad", [&] {
    if (kind_of(j) != "tabmonad") parse_fail("expected kind=tabmonad");
    algebra::TabMonad t;
    t.name = j.value("name", "");
    t.N = j.at("N").get<int>();
    t.tsize = j.at("sizes").get<std::vector<int>>();
    t.unit = j.at("unit").get<std::vector<std::vector<int>>>();
    t.ext = j.at("ext").get<std::vector<std::vector<std::vector<std::vector<int>>>>>();
    const Report r = algebra::check_kleisli(t);
    if (!r.ok()) parse_fail("tabmonad: Kleisli laws fail: " + r.summary());
    return t;
  });
}

json theory_to_json(const algebra::LawTheory& l) {
  json j;
  j["kind"] = "theory";
  j["name"] = l.name;
  j["N"] = l.N;
  j["category"] = category_to_json(*l.cat);
  j["J"] = functor_tables_to_json(l.J);
  return j;
}

algebra::LawTheory theory_from_json(const json& j) {
  return guarded("theory", [&] {
    if (kind_of(j) != "theory") parse_fail("expected kind=theory");
    algebra::LawTheory l;
    l.name = j.value("name", "");
    l.N = j.at("N").get<int>();
    l.base = fincat::make_trunc_base(l.N);
    l.trunc = l.base->cat;
    l.cat = std::make_shared<const fincat::FinCategory>(category_from_json(j.at("category")));
    l.J = functor_tables_from_json(j.at("J"), l.trunc, l.cat);
    return l;
  });
}

}  // namespace catkit::jsonio
