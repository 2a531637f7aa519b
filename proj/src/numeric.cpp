#include "domblab/numeric.hpp"

#include <mpfr.h>

namespace domblab {

Real pi_value() {
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    return pi;
}

Real sqrt3_value() { return sqrt(Real(3)); }

std::string rat_str(const Rat& r) { return r.str(); }

std::string real_str(const Real& x, unsigned digits) {
    return x.str(static_cast<std::streamsize>(digits), std::ios_base::scientific);
}

} // namespace domblab
