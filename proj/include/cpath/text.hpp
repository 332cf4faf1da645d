#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cpath/path_expr.hpp"
#include "cpath/space.hpp"
#include "cpath/step.hpp"

namespace cpath {

// Grammar (fully parenthesized, whitespace ignored):
//   expr := "refl(" point ")" | name | name "^-1" | "inv(" expr ")" | "(" expr "." expr ")"
std::string printExpr(const PathExpr& e);

/// Syntax only. Throws SyntaxError.
PathExpr parsePathExprRaw(std::string_view text);
/// Also checks edges, points and composability. Throws SyntaxError,
/// UnknownEdge, UnknownPoint, IllComposed.
PathExpr parsePathExpr(std::string_view text, const SpacePresentation& space);

std::string printLetter(const EdgeLetter& l);
/// "e" or "e^-1".
EdgeLetter parseLetter(std::string_view text);
std::string printLetters(const LetterSeq& letters);

/// `rule[^-1] @ position : before -> after`, one line per step.
std::vector<std::string> traceLines(const Derivation& d, const SpacePresentation& space);
/// Inverse of traceLines for a non-empty trace. Throws SyntaxError.
Derivation parseTrace(const std::vector<std::string>& lines, const SpacePresentation& space);

nlohmann::json spaceToJson(const SpacePresentation& space);
/// Throws InvalidSpace (also for malformed documents).
SpacePresentation spaceFromJson(const nlohmann::json& doc);
SpacePresentation loadSpaceFile(const std::string& path);

}  // namespace cpath
