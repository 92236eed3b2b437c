#pragma once

#include "mpoly.hpp"

#include <string>
#include <vector>

namespace stubborn {

// Parse an expression over the declared variables. Grammar:
//   expr     := ('+'|'-')? term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | var | 'sqrt' '(' expr ')' | '(' expr ')'
//   rational := uint ('/' uint)?
// Whitespace is insignificant. sqrt arguments must be constant; they are
// certified nonnegative and registered as tower generators.
MPoly parse_poly(const std::string& text, const std::vector<std::string>& var_names);

std::string print_poly(const MPoly& p, const std::vector<std::string>& var_names);

} // namespace stubborn
