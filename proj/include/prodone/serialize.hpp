#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"
#include "prodone/factorization.hpp"
#include "prodone/iso_lab.hpp"

namespace prodone {

using json = nlohmann::json;

NLOHMANN_JSON_SERIALIZE_ENUM(Classification, {
                                                 {Classification::isomorphism, "isomorphism"},
                                                 {Classification::anti_isomorphism,
                                                  "anti_isomorphism"},
                                                 {Classification::neither, "neither"},
                                             })

NLOHMANN_JSON_SERIALIZE_ENUM(Status, {
                                         {Status::pass, "pass"},
                                         {Status::vacuous, "vacuous"},
                                         {Status::fail, "fail"},
                                     })

NLOHMANN_JSON_SERIALIZE_ENUM(InvariantVerdict,
                             {
                                 {InvariantVerdict::distinguishes, "distinguishes"},
                                 {InvariantVerdict::matches, "matches"},
                                 {InvariantVerdict::inconclusive, "inconclusive"},
                             })

void to_json(json& j, AssertionResult const& r);
void from_json(json const& j, AssertionResult& r);
void to_json(json& j, AssertionReport const& r);
void from_json(json const& j, AssertionReport& r);
void to_json(json& j, TheoremVerdict const& v);
void from_json(json const& j, TheoremVerdict& v);
void to_json(json& j, InvariantRow const& r);
void from_json(json const& j, InvariantRow& r);
void to_json(json& j, InvariantReport const& r);
void from_json(json const& j, InvariantReport& r);
void to_json(json& j, LengthSet const& s);
void from_json(json const& j, LengthSet& s);
void to_json(json& j, LengthSystem const& s);
void from_json(json const& j, LengthSystem& s);
void to_json(json& j, Fingerprint const& f);
void from_json(json const& j, Fingerprint& f);

// Atom catalog cache files.
//
//   prodone-atom-catalog 1
//   group <16 hex digits of the Cayley-table hash>
//   order <n>
//   max_length <L>
//   complete_through <C>
//   exhaustive <0|1>
//   atoms <count>
//   <length> <e_0> ... <e_{n-1}>      one line per atom
//   end
//
// All numbers are decimal ASCII, so the encoding is independent of byte order.
inline constexpr int catalog_format_version = 1;

void write_catalog(std::ostream& out, AtomCatalog const& cat);
/// Throws ParseError on malformed input or a group hash/order mismatch.
AtomCatalog read_catalog(std::istream& in, Group const& g);

std::filesystem::path catalog_path(std::filesystem::path const& dir, Group const& g);
/// Writes to a temporary file in `dir`, then renames it into place.
void save_catalog(std::filesystem::path const& dir, AtomCatalog const& cat);
std::optional<AtomCatalog> load_catalog(std::filesystem::path const& dir, Group const& g);

/// Exhaustive catalog through `max_length`, served from `dir` when a cached
/// catalog covers it, otherwise computed and cached.
AtomCatalog cached_atoms(Group const& g, std::size_t max_length, Workspace& ws,
                         std::optional<std::filesystem::path> const& dir);
/// D(G) from a cached catalog when it already shows an empty length past its
/// longest atom; otherwise searched and cached through D + 1.
unsigned cached_davenport(Group const& g, Workspace& ws,
                          std::optional<std::filesystem::path> const& dir);

}  // namespace prodone
