#pragma once

#include <string>
#include <string_view>

#include "cpg/c_syntax.hpp"
#include "cpg/frontend.hpp"
#include "cpg/graph.hpp"

namespace cpg::c {

/// Maps a parse tree to the language-independent AST under a new
/// TranslationUnitDeclaration, builds the unit's scope tree and collects the
/// coverage records. `source` must be the text `tree` was parsed from.
TranslationResult translate(Graph& graph, const SyntaxTree& tree, std::string_view source, std::string file);

/// Appends an IMPLICIT ReturnStatement to every `void` function body that
/// can fall off its end. Non-void functions are left alone. Idempotent.
/// Returns the number of statements added.
std::size_t insert_implicit(Graph& graph, const TranslationResult& unit);

// parse + translate + insert_implicit.
TranslationResult translate_source(Graph& graph, std::string_view source, std::string file);

}  // namespace cpg::c
