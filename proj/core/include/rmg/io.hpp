#pragma once

#include <rmg/coloring.hpp>
#include <rmg/construct.hpp>
#include <rmg/girth.hpp>
#include <rmg/hypergraph.hpp>

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace rmg {

using Json = nlohmann::json;

/**
 * A hypergraph file: {"vertices": [...], "edges": [[...], ...], "parts": [[...], ...]}.
 * "parts" is optional. Other top-level keys are carried through in `extra`.
 * Labels may be JSON integers or strings; labels that are decimal integers
 * are written back as numbers.
 */
struct Document {
    Hypergraph graph;
    std::optional<PartiteHypergraph> partite;
    Json extra = Json::object();
};

/// Throws ParseError (with line and column for syntax errors) or ValidationError.
auto parse_document(std::string_view text) -> Document;
auto read_document(const std::filesystem::path & path) -> Document;

auto to_json(const Hypergraph & h) -> Json;
auto to_json(const PartiteHypergraph & p) -> Json;
auto to_json(const Document & d) -> Json;

/// Compact, key-sorted serialisation with a trailing newline.
auto canonical_dump(const Json & j) -> std::string;

/// The incidence graph: one node per vertex, one per edge, an arc per incidence.
auto to_dot(const Hypergraph & h) -> std::string;

auto coloring_to_json(const Hypergraph & h, const Coloring & c) -> Json;
auto cycle_to_json(const Hypergraph & h, const CycleWitness & w) -> Json;
auto trace_to_json(const ConstructionTrace & t) -> Json;
auto estimate_to_json(const SizeEstimate & e) -> Json;

/// Writes to a sibling temporary file and renames it into place.
void write_file_atomically(const std::filesystem::path & path, std::string_view content);

}
