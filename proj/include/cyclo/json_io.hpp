#pragma once

#include <string>

#include "json.hpp"

#include "cyclo/parity.hpp"
#include "cyclo/residue.hpp"

namespace cyclo {

using Json = nlohmann::json;

// Decimal strings at the requested number of digits.
Json complex_json(const Complex& z, int digits);
Json cval_json(const CVal& v, int digits);
std::string double_str(double v);

Json rational_json(const FactoredRational& r);
FactoredRational rational_from_json(const Json& j);
// A JSON object or the mini syntax "poles=[(1/2,2)]".
FactoredRational parse_rational_text(const std::string& text);

std::vector<int> parse_int_list(const std::string& text);
std::vector<RootOfUnity> parse_root_list(const std::string& text);

}  // namespace cyclo
