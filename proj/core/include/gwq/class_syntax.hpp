#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gwq/cohmodel.hpp"

namespace gwq {

// Textual class syntax:
//   "1"          fundamental class
//   "pt"         point class
//   "H", "H^a"   powers of the hyperplane class on P^N
//   "H1^a*H2^b"  monomials on P^m x P^n ("H1", "H2^3", ...)
//   "s[2,1]"     Schubert class sigma_(2,1) on Gr(k,m)
// A list separates classes with commas; "c*k" repeats c k times.

RingModel parse_model(std::string_view text);  // "P3", "P1xP1", "Gr(2,4)" or "Gr:2,4"
CurveClass parse_curve_class(const RingModel& model, std::string_view text);  // "3", "1,1"

BasisClass parse_class(const RingModel& model, std::string_view text);
std::string format_class(const RingModel& model, const BasisClass& b);

std::vector<BasisClass> parse_class_list(const RingModel& model, std::string_view text);
// Canonical form; runs of equal classes collapse to "c*k".
std::string format_class_list(const RingModel& model, const std::vector<BasisClass>& classes);

// Splits on commas outside square brackets; trims blanks.
std::vector<std::string> split_top_level(std::string_view text);

}  // namespace gwq
