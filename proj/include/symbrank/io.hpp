#pragma once

#include "symbrank/bratteli.hpp"
#include "symbrank/construction.hpp"
#include "symbrank/sadic.hpp"
#include "symbrank/words.hpp"

#include <string>

namespace symbrank {

// JSON text in canonical key order; parse errors throw std::invalid_argument
// with a field diagnostic.
std::string construction_to_json(const RankConstruction& c);
RankConstruction construction_from_json(const std::string& text);

std::string diagram_to_json(const OrderedBratteliDiagram& d);
OrderedBratteliDiagram diagram_from_json(const std::string& text);

std::string sadic_to_json(const DirectiveSequence& ds);
DirectiveSequence sadic_from_json(const std::string& text);

// 0/1 text; words longer than limit elide the middle with the exact length
// appended unless full is set.
std::string render_word(const Word& w, bool full = false, std::size_t limit = 64);

}  // namespace symbrank
