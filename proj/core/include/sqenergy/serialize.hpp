#pragma once

#include <string>

#include "sqenergy/bounds.hpp"
#include "sqenergy/survey.hpp"

namespace sqe {

// Single-line JSON objects. Reals are rounded to 6 decimals.

/// {"rule", "target", "bound", "witness": {...}, "conclusive"}; witness vertex
/// sets are sorted integer arrays.
std::string to_json(const BoundCertificate& c);
std::string to_json(const SurveyRecord& r);
std::string to_json(const SurveyReport& r);

}  // namespace sqe
