#pragma once

#include <string>
#include <string_view>

#include "efglat/efg.hpp"
#include "efglat/poset.hpp"

namespace efglat {

// Line-oriented documents. Blank lines and lines starting with '#' are
// ignored. Labels are non-empty tokens free of whitespace, '<', '-' and '>'.
//
//   poset                      efg
//   elements: a b c            vertices: a b s
//   covers: a<c b<c            sink: s
//                              edges: s-a s-b
//                              orientation: s->a s->b
//
// Syntax errors are reported as "line L, column C: ..." with code SyntaxError.

Poset parse_poset(std::string_view text);
std::string emit_poset(const Poset& p);

// Throws SyntaxError, UnknownLabel, BadSink, SelfLoop, DuplicateEdge,
// OrientationMismatch, or whatever validate_efg throws.
EfgInstance parse_efg(std::string_view text);
std::string emit_efg(const EfgInstance& e);

// True when the label can be written into a document.
bool is_document_label(std::string_view label);

}  // namespace efglat
