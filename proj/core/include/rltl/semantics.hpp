#pragma once

#include <vector>

#include "rltl/formula.hpp"
#include "rltl/lasso.hpp"
#include "rltl/truth_value.hpp"

namespace rltl {

/// Classical valuation W(σ, φ). Requires an LTL-tagged formula whose atoms
/// all belong to σ's alphabet (AlphabetMismatch otherwise).
bool evalLTL(const Formula& phi, const LassoWord& sigma);

/// Five-valued valuation V(σ, φ) for an rLTL-tagged formula.
TruthValue evalRLTL(const Formula& phi, const LassoWord& sigma);

/// V(σ..i, φ) for every canonical position i of σ.
std::vector<TruthValue> evalRLTLPositions(const Formula& phi, const LassoWord& sigma);

/// The LTL formula whose classical value is component j (1..4) of φ.
/// Defined on the fragment without release and until; those throw
/// UnsupportedOperator.
Formula translateToLTL(const Formula& phi, int j);

/// First component of V(σ, φ), which is the classical value of the undotted
/// formula on the always/eventually fragment.
bool recoverLTLValue(const Formula& phi, const LassoWord& sigma);

}  // namespace rltl
