#include "drtk/damek_ricci.hpp"

namespace drtk {

TwoSteinProbe DRSpace::two_stein_probe(std::size_t samples, std::uint64_t seed) const {
    if (samples < 2) throw std::invalid_argument("two_stein_probe: need at least 2 samples");
    std::vector<double> tr1(samples), tr2(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto t = random_unit(seed, i);
        const DMat r = jacobi_matrix(t);
        tr1[i] = r.trace();
        tr2[i] = (r * r).trace();
    }
    TwoSteinProbe p{0, 0, 0, 0, 0};
    for (std::size_t i = 0; i < samples; ++i) {
        p.c1 += tr1[i];
        p.c2 += tr2[i];
    }
    p.c1 /= static_cast<double>(samples);
    p.c2 /= static_cast<double>(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        p.maxdev1 = std::max(p.maxdev1, std::abs(tr1[i] - p.c1));
        p.maxdev2 = std::max(p.maxdev2, std::abs(tr2[i] - p.c2));
    }
    p.maxdev = std::max(p.maxdev1, p.maxdev2);
    return p;
}

} // namespace drtk
