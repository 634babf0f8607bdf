#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "adnrg/lattice.hpp"

namespace adnrg {

// Text form: a `dim=<d>` header line, then one point per line as d integers.
// Blank lines and lines starting with '#' are ignored; duplicates collapse on load.
LatticeSet read_set_text(std::istream& in);
void write_set_text(std::ostream& out, const LatticeSet& set);

// JSON form: {"dim": d, "points": [[...], ...]}.
nlohmann::json set_to_json(const LatticeSet& set);
LatticeSet set_from_json(const nlohmann::json& j);

/// Dispatches on extension: `.json` uses the JSON form, anything else the text form.
LatticeSet load_set(const std::filesystem::path& path);
void save_set(const std::filesystem::path& path, const LatticeSet& set);

std::string to_text(const LatticeSet& set);

}  // namespace adnrg
