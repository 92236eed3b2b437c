#pragma once

#include "rational.hpp"

#include <vector>

namespace stubborn {

using ZVec = std::vector<Z>; // dense integer polynomial, ascending powers

// Irreducible factors over Z of a primitive squarefree polynomial of degree
// >= 1, each primitive with positive leading coefficient. Deterministic for a
// fixed seed (randomness only inside equal-degree splitting).
std::vector<ZVec> zz_factor_squarefree(const ZVec& f, uint64_t seed = 1);

} // namespace stubborn
