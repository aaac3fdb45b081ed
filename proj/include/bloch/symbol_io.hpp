#pragma once

#include <string>

#include <json.hpp>

#include "bloch/functionals.hpp"

namespace bloch {

// Expression document grammar (JSON):
//   {"op":"z"} | {"op":"const","re":R,"im":I}
//   {"op":"add"|"sub"|"mul"|"div","args":[A,B]}
//   {"op":"neg"|"log"|"exp","args":[A]}
//   {"op":"powint","n":N,"args":[A]}
//   {"op":"compose","args":[F,G]}   (F applied after G)
//   {"op":"mobius","re":R,"im":I}
// Top level: {"label":S, "u":NODE, "phi":NODE}.

ExprPtr parse_expr_node(const nlohmann::json& node, const std::string& path = "$");
nlohmann::json serialize_expr(const Expr& e);

SymbolPair parse_symbol_json(const nlohmann::json& doc);
SymbolPair parse_symbol_text(const std::string& text, const std::string& origin = "<string>");
SymbolPair parse_symbol_file(const std::string& path);

nlohmann::json serialize_symbol_pair(const SymbolPair& pair);

}  // namespace bloch
