#pragma once

// Serialization of coefficient sequences. Numbers are written as strings:
// shortest round-trip decimals for doubles, "num/den" for rationals.

#include <string>

#include "hyprec/coeffrec.hpp"

namespace hyprec {

/// JSON object with keys coeffs, kind, method, spec (keys sorted).
std::string to_json(const CoeffSequence& seq);
std::string to_json(const RationalCoeffSequence& seq);

/// "n,u_n" header then one row per coefficient, LF line endings.
std::string to_csv(const CoeffSequence& seq);
std::string to_csv(const RationalCoeffSequence& seq);

}  // namespace hyprec
