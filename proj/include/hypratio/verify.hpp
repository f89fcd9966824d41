#ifndef HYPRATIO_VERIFY_HPP
#define HYPRATIO_VERIFY_HPP

#include <string>

#include "hypratio/quadrature.hpp"
#include "hypratio/types.hpp"

namespace hypratio {

// Result of a self-verification run: the worst relative deviation between a
// closed-form ingredient and its independent oracle, over `cases` checks.
struct VerifyReport {
    double max_rel_dev = 0.0;
    int cases = 0;
};

// Named verification suites for a given parameter/shift configuration:
//   boundary - closed boundary formula for Im R on the upper bank vs the
//              directly continued ratio at x + i0, x in {1.1, 2, 10};
//   repr     - assembled integral representation vs the direct ratio on a
//              z-grid avoiding the cut (strategy chosen automatically);
//   zeros    - located zeros of the base function vs the counting formula
//              (count mismatch counts as deviation 1) and the residual of
//              the function at each located zero;
//   products - closed product/ratio identities vs direct-ratio oracles;
//   all      - all of the above, worst deviation wins.
// Throws ParamError for an unknown suite name or inadmissible parameters,
// NumericError on quadrature/continuation failure.
VerifyReport verify_suite(const std::string& suite, const Params& p, const Shift& s,
                          const QuadratureConfig& quad, const Precision& prec);

} // namespace hypratio

#endif
