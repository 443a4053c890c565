#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cyclo/json_io.hpp"

namespace cyclo {

// A check case is a flat JSON object such as
//   {"theorem":"T31","p":1,"q":2,"x":"1/2","y":"1/2"}
//   {"theorem":"closure","kernel":"H","p":[1],"rational":"poles=[(1/2,2)]","nmax":200}
//   {"theorem":"T63a","p":[1,1],"roots":["1/2","1/4"],"x":"1/2","rational":{...}}
struct CaseOutcome {
  Json report;
  bool pass = false;
  double residual = 0.0;
};

// Throws cyclo::Error when the case is malformed or violates a constraint.
void validate_case(const Json& c);
CaseOutcome run_case(const Json& c, const PrecisionCtx& ctx);

// A descriptor with a "grid" object expands to every admissible combination;
// without one it is a single case.
std::vector<Json> expand_descriptor(const Json& d);

// Exit codes: 0 pass, 1 fail, 2 invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclo
