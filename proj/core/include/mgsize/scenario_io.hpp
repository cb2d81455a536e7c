#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "mgsize/scenario.hpp"

namespace mgsize {

// Reads a scenario description (JSON, schema in docs/scenario-format.md).
// Series files are resolved relative to the scenario file. Every key is
// optional; an empty object yields the bundled scenario.
// Throws FileNotFound, ParseError (with line) or ConfigError (with key path),
// then ValidationErrors if the assembled scenario is inconsistent.
Scenario load_scenario(const std::filesystem::path& path);

// Same, from an in-memory document; relative series paths resolve against
// `base_dir`.
Scenario parse_scenario(std::string_view json_text, const std::filesystem::path& base_dir,
                        std::string_view source = "<memory>");

// Writes `dir/scenario.json` plus one text file per series, so that
// load_scenario(dir / "scenario.json") reproduces `s` exactly.
std::filesystem::path save_scenario(const Scenario& s, const std::filesystem::path& dir);

}  // namespace mgsize
