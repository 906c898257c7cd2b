#pragma once

// File formats.
//
//   whg-1 JSON:  {"format":"whg-1","k":3,"n":5,
//                 "edges":[{"v":[0,1,2],"w":1.0},{"v":[2,3,4],"w":2.0}]}
//   plain text:  first line "k n m", then m lines of k vertex indices
//                followed by the weight. Blank lines and '#' comments are
//                ignored.
//
// Both parse into RawHypergraph and go through validate().

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "whg/bounds.hpp"
#include "whg/generators.hpp"
#include "whg/hypergraph.hpp"
#include "whg/spectral.hpp"
#include "whg/tensor.hpp"

namespace whg {

RawHypergraph parse_whg_json(std::string_view text);
RawHypergraph parse_plain_text(std::string_view text);
// Picks the format from the first non-blank character ('{' means JSON).
RawHypergraph parse_hypergraph(std::string_view text);

// Reads, parses and validates. Throws ParseError for unreadable files.
WeightedHypergraph load_hypergraph(const std::filesystem::path& path);

nlohmann::ordered_json to_whg_json(const WeightedHypergraph& g);
std::string to_plain_text(const WeightedHypergraph& g);

nlohmann::ordered_json to_json(const HypergraphStats& s);
nlohmann::ordered_json to_json(const RegularityInfo& r);
nlohmann::ordered_json to_json(const PowerIterationResult& r);
nlohmann::ordered_json to_json(const Eigenpair& p);
nlohmann::ordered_json to_json(const std::vector<Eigenpair>& pairs);
nlohmann::ordered_json to_json(const BoundReport& report);
// Nonzero entries only: {"k":..,"n":..,"entries":[{"idx":[..],"val":..}]}
nlohmann::ordered_json to_json(const DenseTensor& t);
nlohmann::ordered_json to_json(const GeneratorSpec& spec);

// Inverse of to_json(GeneratorSpec); throws ParseError on malformed input.
GeneratorSpec generator_spec_from_json(const nlohmann::json& j);

}  // namespace whg
