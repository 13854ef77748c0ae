#pragma once

#include <string>

#include "cyclolab/roots.hpp"

namespace cyclo {

/// One-line JSON for a CoincidenceRecord:
/// {"m":…, "n":…, "degree":…, "roots":[{"kind":…, "value":…, "modulus":…, "residual":…, …}], …}
/// Real values are decimal strings with their exact rational bracket; complex values are
/// [re, im] pairs of decimal strings.
std::string to_json_line(const CoincidenceRecord& rec);

/// Inverse of to_json_line. Real roots are rebuilt exactly from their brackets; complex
/// values are rebuilt from their decimals with an error bound of one unit in the last digit.
CoincidenceRecord record_from_json(const std::string& line);

}  // namespace cyclo
