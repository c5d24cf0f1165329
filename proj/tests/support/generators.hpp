#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "rltl/formula.hpp"
#include "rltl/lasso.hpp"

namespace rltl::testing {

using Rng = std::mt19937_64;

struct FormulaShape {
  std::vector<std::string> atoms{"p", "q"};
  int maxTemporal = 3;
  int maxDepth = 4;
  /// Also draw next, release, until and the two constants.
  bool full = false;
};

Formula randomFormula(Rng& rng, const FormulaShape& shape, Logic logic = Logic::RLTL);

LassoWord randomLasso(Rng& rng, const std::vector<std::string>& atoms, std::size_t maxPrefix,
                      std::size_t maxLoop);

/// Every formula over `atoms` built from negation, conjunction, disjunction,
/// implication, always and eventually with at most `maxSize` nodes and at
/// most `maxTemporal` temporal operators.
std::vector<Formula> enumerateFormulas(const std::vector<std::string>& atoms, std::size_t maxSize,
                                       int maxTemporal, Logic logic = Logic::RLTL);

int temporalCount(const Formula& f);

bool containsOp(const Formula& f, Op op);

}  // namespace rltl::testing
