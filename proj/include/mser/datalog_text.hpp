#pragma once

// Textual Datalog: `pred("iri", ...).` facts and `head :- b1, ..., bn.` rules.
// Constants are double-quoted; variables are bare identifiers starting with an
// upper-case letter or '_'.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mser/model.hpp"

namespace mser {

std::string format_term(const Term& t);
std::string format_atom(const Atom& a);
std::string format_rule(const Rule& r);

/// One fact per line, LF-terminated, in the given order.
void write_facts(std::ostream& os, const std::vector<Atom>& facts);
void write_rules(std::ostream& os, const std::vector<Rule>& rules);

/// Reads facts and rules; `%` starts a comment. Bare lower-case identifiers
/// are read as constants.
std::vector<Rule> parse_program(std::string_view text);

}  // namespace mser
