#include "drtk/rational.hpp"

#include <stdexcept>

namespace drtk {

Rat rat_sqrt_exact(const Rat& r) {
    using Int = boost::multiprecision::cpp_int;
    if (r < 0) throw std::domain_error("rat_sqrt_exact: negative input");
    const Int num = numerator(r), den = denominator(r);
    const Int sn = sqrt(num), sd = sqrt(den);
    if (sn * sn != num || sd * sd != den)
        throw std::domain_error("rat_sqrt_exact: not a perfect square");
    return Rat(sn, sd);
}

} // namespace drtk
