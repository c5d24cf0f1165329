#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "rltl/automaton.hpp"

namespace rltl {

/// Writes `a` in HOA v1 with state-based generalized Büchi acceptance.
/// Designated start states go into a custom `rltl-start:` header line as
/// `<state> <value>` pairs; guards become conjunctions of AP literals.
std::string writeHoa(const Gba& a, std::string_view name = {});
void writeHoa(std::ostream& os, const Gba& a, std::string_view name = {});

/// Reads the subset of HOA v1 produced by writeHoa: explicit labels built from
/// `t`, `f`, AP indices, `!`, `&`, `|` and parentheses, state-based
/// acceptance of the form `Inf(i)&...` or `t`, at most one `Start:` state.
/// Aliases (`@name`) are expanded. Throws ParseError.
Gba readHoa(std::string_view text);

}  // namespace rltl
