#pragma once

// Cover files, reports, the bc table and SVG drawings.

#include <gridbc/diagnostics.hpp>
#include <gridbc/grid.hpp>
#include <gridbc/verify.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace gridbc {

/// Malformed or structurally wrong cover text.
class ParseError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

[[nodiscard]] auto cover_to_json(const Cover & cover) -> nlohmann::json;
/// Throws ParseError on schema violations and duplicate elements.  Elements
/// that do not fit the grid are accepted here and reported by verify_cover.
[[nodiscard]] auto cover_from_json(const nlohmann::json & j) -> Cover;

/// Two-space indented JSON with a trailing newline.
[[nodiscard]] auto write_cover(const Cover & cover) -> std::string;
[[nodiscard]] auto read_cover(const std::string & text) -> Cover;
[[nodiscard]] auto load_cover_file(const std::string & path) -> Cover;
auto save_text_file(const std::string & path, const std::string & text) -> void;

[[nodiscard]] auto report_to_json(const CoverReport & report) -> nlohmann::json;
[[nodiscard]] auto analysis_to_json(const Grid & grid, const BoundaryAnalysis & analysis) -> nlohmann::json;
[[nodiscard]] auto classification_to_json(const Grid & grid, const StaircaseClassification & cls) -> nlohmann::json;
[[nodiscard]] auto waste_identity_to_json(const WasteIdentity & w) -> nlohmann::json;

/// Rows p = 1..pmax, columns q = p..qmax.  With mark_branch, values on the
/// pq/2 - 1 branch carry a '*'.
[[nodiscard]] auto bc_table_csv(int pmax, int qmax, bool mark_branch = false) -> std::string;

/// One lattice step is 32 px with a 16 px margin.  Byte-identical for equal
/// inputs.  Elements carry class="star", "cycle" or "thick".
[[nodiscard]] auto render_svg(const Cover & cover) -> std::string;

} // namespace gridbc
