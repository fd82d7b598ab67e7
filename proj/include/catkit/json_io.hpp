#pragma once

#include <string>

#include <json.hpp>

#include "catkit/algebra.hpp"
#include "catkit/fincat.hpp"
#include "catkit/lexprof.hpp"
#include "catkit/wcat.hpp"

namespace catkit::jsonio {

using json = nlohmann::json;

/// Load a JSON file; throws ParseError on unreadable files or syntax errors.
json load_file(const std::string& path);
/// Canonical serialization: sorted keys (nlohmann object order), two-space
/// indent, trailing newline. Byte-identical for identical values.
std::string dump_canonical(const json& j);
void save_file(const std::string& path, const json& j);
/// The "kind" discriminator; throws ParseError when absent.
std::string kind_of(const json& j);

json lattice_to_json(const fincat::FinLattice& p);
fincat::FinLattice lattice_from_json(const json& j);

json base_to_json(const fincat::LexBase& b);
fincat::LexBasePtr base_from_json(const json& j);

json category_to_json(const fincat::FinCategory& c);
fincat::FinCategory category_from_json(const json& j);

json prof_to_json(const lexprof::LexProf1Cell& w);
lexprof::LexProf1Cell prof_from_json(const json& j);

json parfl_to_json(const wcat::ParflCategory& p);
wcat::ParflCategory parfl_from_json(const json& j);

json wcat_to_json(const wcat::WCategory& c);
wcat::WCategory wcat_from_json(const json& j);

json monad_to_json(const wcat::MonadData& m);
wcat::MonadData monad_from_json(const json& j);

json presentation_to_json(const algebra::Presentation& p);
algebra::Presentation presentation_from_json(const json& j);

json tabmonad_to_json(const algebra::TabMonad& t);
algebra::TabMonad tabmonad_from_json(const json& j);

json theory_to_json(const algebra::LawTheory& l);
algebra::LawTheory theory_from_json(const json& j);

}  // namespace catkit::jsonio
