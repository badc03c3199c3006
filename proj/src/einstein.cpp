#include "drtk/einstein.hpp"

#include <cmath>
#include <functional>

namespace drtk {
namespace {

void require_same_root(const AlgNum& x, const AlgNum& y) {
    if (x.b != 0 && y.b != 0 && x.root != y.root)
        throw std::invalid_argument("AlgNum: mixed radicals are not supported");
}

long merged_root(const AlgNum& x, const AlgNum& y) { return x.b != 0 ? x.root : y.root; }

} // namespace

AlgNum operator+(const AlgNum& x, const AlgNum& y) {
    require_same_root(x, y);
    return {x.a + y.a, x.b + y.b, merged_root(x, y)};
}

AlgNum operator-(const AlgNum& x, const AlgNum& y) {
    require_same_root(x, y);
    return {x.a - y.a, x.b - y.b, merged_root(x, y)};
}

AlgNum operator*(const AlgNum& x, const AlgNum& y) {
    require_same_root(x, y);
    const long k = merged_root(x, y);
    return {x.a * y.a + x.b * y.b * Rat(k), x.a * y.b + x.b * y.a, k};
}

double to_double(const AlgNum& x) {
    return to_double(x.a) + to_double(x.b) * std::sqrt(static_cast<double>(x.root));
}

std::string to_string(const AlgNum& x) {
    if (x.b == 0) return x.a.str();
    std::string s = x.b.str() + "*sqrt(" + std::to_string(x.root) + ")";
    if (x.a == 0) return s;
    return x.a.str() + (x.b > 0 ? "+" : "") + s;
}

AlgNum alg_sqrt(const Rat& square, long root) {
    if (square < 0) throw std::domain_error("alg_sqrt: negative argument");
    return {Rat(0), rat_sqrt_exact(square / Rat(root)), root};
}

double gauss_einstein_residual(const HypersurfaceData& h) {
    if (h.lambda.size() != 15)
        throw std::invalid_argument("gauss_einstein_residual: need 15 principal curvatures");
    double worst = 0;
    for (std::size_t i = 0; i < 15; ++i) {
        const double want = i < 7 ? h.eps : h.eps / 4.0;
        const double got = -h.lambda[i] * h.lambda[i] + h.H * h.lambda[i] + h.C;
        worst = std::max(worst, std::abs(got - want));
    }
    return worst;
}

std::vector<MeanCurvatureSolution> enumerate_H(int eps, double C) {
    if (eps != 1 && eps != -1) throw std::invalid_argument("enumerate_H: eps must be +-1");
    const double u = 4.0 * C - 4.0 * eps;
    const double w = 4.0 * C - eps;
    std::vector<MeanCurvatureSolution> out;

    auto back_substitutes = [&](double H, double a, double b) {
        const double ru = H * H + u, rw = H * H + w;
        if (ru < -1e-12 || rw < -1e-12) return false;
        const double lhs = 13.0 * H;
        const double rhs = a * std::sqrt(std::max(ru, 0.0)) + b * std::sqrt(std::max(rw, 0.0));
        return std::abs(lhs - rhs) <= 1e-8 * (1.0 + std::abs(lhs));
    };

    for (int q1 = 0; q1 <= 7; ++q1)
        for (int q3 = 0; q3 <= 8; ++q3) {
            const int q2 = 7 - q1, q4 = 8 - q3;
            const double a = q2 - q1, b = q4 - q3;
            // Clearing the radicals from 13H = a sqrt(H^2+u) + b sqrt(H^2+w)
            // yields a quadratic in s = H^2.
            const double alpha = 169.0 - a * a - b * b;
            const double beta = a * a * u + b * b * w;
            const double qa = alpha * alpha - 4.0 * a * a * b * b;
            const double qb = -(2.0 * alpha * beta + 4.0 * a * a * b * b * (u + w));
            const double qc = beta * beta - 4.0 * a * a * b * b * u * w;

            std::vector<double> roots;
            if (std::abs(qa) > 1e-9) {
                const double disc = qb * qb - 4.0 * qa * qc;
                if (disc >= -1e-9 * std::abs(qb * qb)) {
                    const double sq = std::sqrt(std::max(disc, 0.0));
                    roots.push_back((-qb + sq) / (2.0 * qa));
                    roots.push_back((-qb - sq) / (2.0 * qa));
                }
            } else if (std::abs(qb) > 1e-9) {
                roots.push_back(-qc / qb);
            }
            for (double s : roots) {
                if (s < -1e-12) continue;
                s = std::max(s, 0.0);
                for (double H : {std::sqrt(s), -std::sqrt(s)}) {
                    if (!back_substitutes(H, a, b)) continue;
                    bool dup = false;
                    for (const auto& sol : out)
                        dup = dup || (sol.q1 == q1 && sol.q3 == q3 && std::abs(sol.H - H) < 1e-9);
                    if (!dup) out.push_back({H, q1, q2, q3, q4});
                }
            }
        }
    return out;
}

HypersurfaceData hypersurface_from_solution(int eps, double C, const MeanCurvatureSolution& s) {
    HypersurfaceData h;
    h.eps = eps;
    h.C = C;
    h.H = s.H;
    const double r1 = std::sqrt(std::max(s.H * s.H + 4.0 * C - 4.0 * eps, 0.0));
    const double r2 = std::sqrt(std::max(s.H * s.H + 4.0 * C - eps, 0.0));
    h.alpha = {(s.H + r1) / 2.0, (s.H - r1) / 2.0, (s.H + r2) / 2.0, (s.H - r2) / 2.0};
    h.p = {s.q1, s.q2, s.q3, s.q4};
    for (int i = 0; i < s.q1; ++i) h.lambda.push_back(h.alpha[0]);
    for (int i = 0; i < s.q2; ++i) h.lambda.push_back(h.alpha[1]);
    for (int i = 0; i < s.q3; ++i) h.lambda.push_back(h.alpha[2]);
    for (int i = 0; i < s.q4; ++i) h.lambda.push_back(h.alpha[3]);
    return h;
}

std::vector<Case78Result> solve_case_78_branch(int eps, int sign_prime) {
    if (std::abs(sign_prime) != 1 || std::abs(eps) != 1)
        throw std::invalid_argument("solve_case_78_branch: signs must be +-1");
    // alpha1 = 2 alpha3 + H and H = 7 alpha1 + 8 alpha3, solved for
    // (alpha3, H) in units of alpha1.
    RatMat lin(2, 2);
    lin(0, 0) = 2;
    lin(0, 1) = 1;
    lin(1, 0) = 8;
    lin(1, 1) = -1;
    const auto x = exact_solve(lin, std::vector<Rat>{Rat(1), Rat(-7)});
    const Rat r3 = x[0], rh = x[1]; // alpha3 = r3 alpha1, H = rh alpha1
    const Rat quad = (r3 - 1) * (r3 + 1 - rh);
    const Rat a1sq = Rat(3 * eps, 4) / quad;
    if (a1sq < 0) return {};
    const AlgNum alpha1 = -AlgNum::rational(Rat(sign_prime)) * alg_sqrt(a1sq, 6);
    Case78Result res;
    res.eps = eps;
    res.alpha1 = alpha1;
    res.alpha3 = AlgNum::rational(r3) * alpha1;
    res.H = AlgNum::rational(rh) * alpha1;
    res.C = Rat(eps) + a1sq - rh * a1sq; // eps + alpha1^2 - H alpha1
    return {res};
}

Case78Result solve_case_78(int sign_prime) {
    for (int eps : {1, -1}) {
        auto sols = solve_case_78_branch(eps, sign_prime);
        if (!sols.empty()) return sols.front();
    }
    throw std::logic_error("solve_case_78: no real solution for either sign");
}

std::vector<Case717Result> solve_case_717_branch(int eps, int sign_prime) {
    if (std::abs(sign_prime) != 1 || std::abs(eps) != 1)
        throw std::invalid_argument("solve_case_717_branch: signs must be +-1");
    // alpha1 = 2 alpha3 + H, H = 7 alpha1 + 7 alpha3 + alpha4, and (from the
    // two quadratic constraints sharing one block value) alpha3 + alpha4 = H.
    RatMat lin(3, 3);
    // unknowns (alpha3, alpha4, H) in units of alpha1
    lin(0, 0) = 2;
    lin(0, 2) = 1;
    lin(1, 0) = 1;
    lin(1, 1) = 1;
    lin(1, 2) = -1;
    lin(2, 0) = 7;
    lin(2, 1) = 1;
    lin(2, 2) = -1;
    const auto x = exact_solve(lin, std::vector<Rat>{Rat(1), Rat(0), Rat(-7)});
    const Rat r3 = x[0], r4 = x[1], rh = x[2];
    const Rat quad = (r3 - 1) * (r3 + 1 - rh);
    const Rat a1sq = Rat(3 * eps, 4) / quad;
    if (a1sq < 0) return {};
    const AlgNum alpha1 = -AlgNum::rational(Rat(sign_prime)) * alg_sqrt(a1sq, 91);
    Case717Result res;
    res.eps = eps;
    res.alpha1 = alpha1;
    res.alpha3 = AlgNum::rational(r3) * alpha1;
    res.alpha4 = AlgNum::rational(r4) * alpha1;
    res.H = AlgNum::rational(rh) * alpha1;
    res.C = Rat(eps) + a1sq - rh * a1sq;

    res.printed_q = RatMat(3, 3);
    const Rat pre = Rat(1) / (Rat(4 * 91) * Rat(4 * 91) * Rat(4 * 91));
    const long entries[3][3] = {{-75 * 13, -27 * 34, 27 * 21},
                                {6 * 13, 12 * 34, 6 * 21},
                                {-7 * 13, 7 * 34, 27 * 21}};
    RatMat bare(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            bare(i, j) = Rat(entries[i][j]);
            res.printed_q(i, j) = pre * bare(i, j);
        }
    res.det_q = exact_det(res.printed_q);
    res.det_scaled = pre * exact_det(bare);
    res.printed_det = Rat(-39051, 16562);
    res.dets_agree = res.det_q == res.printed_det || res.det_scaled == res.printed_det;
    return {res};
}

Case717Result solve_case_717(int sign_prime) {
    for (int eps : {1, -1}) {
        auto sols = solve_case_717_branch(eps, sign_prime);
        if (!sols.empty()) return sols.front();
    }
    throw std::logic_error("solve_case_717: no real solution for either sign");
}

double SphereModel::cot_r() const { return std::cos(r) / std::sin(r); }
double SphereModel::half_cot_half_r() const { return 0.5 * std::cos(r / 2) / std::sin(r / 2); }
double SphereModel::mean_curvature() const { return 7.0 * cot_r() + 4.0 / std::tan(r / 2); }

HypersurfaceData SphereModel::data() const {
    HypersurfaceData h;
    h.eps = 1;
    h.H = mean_curvature();
    const double l1 = cot_r(), l2 = half_cot_half_r();
    h.alpha = {l1, 0, l2, 0};
    h.p = {7, 0, 8, 0};
    h.lambda.assign(7, l1);
    h.lambda.insert(h.lambda.end(), 8, l2);
    h.C = 1.0 + l1 * l1 - h.H * l1;
    return h;
}

namespace {

double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((flo <= 0) == (fm <= 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

double sphere_einstein_radius() {
    const double pi = std::acos(-1.0);
    auto einstein_gap = [&](double r) {
        const SphereModel s{r};
        const double H = s.mean_curvature(), l1 = s.cot_r(), l2 = s.half_cot_half_r();
        return (1.0 + l1 * l1 - H * l1) - (0.25 + l2 * l2 - H * l2);
    };
    // Bracket the sign change on a grid over (0, pi).
    const int steps = 2000;
    double prev_r = pi * 1.0 / steps, prev_f = einstein_gap(prev_r);
    for (int i = 2; i < steps; ++i) {
        const double r = pi * i / steps, f = einstein_gap(r);
        if ((prev_f <= 0) != (f <= 0)) {
            const double r0 = bisect(einstein_gap, prev_r, r);
            return std::cos(r0) / std::sin(r0);
        }
        prev_r = r;
        prev_f = f;
    }
    throw std::logic_error("sphere_einstein_radius: no sign change found");
}

double focal_coeff_f1(double r) {
    return std::cos(r) + 5.0 * std::sqrt(6.0) / 24.0 * std::sin(r);
}

double focal_coeff_f2(double r) {
    return std::cos(r / 2) - std::sqrt(6.0) / 4.0 * std::sin(r / 2);
}

int normal_exp_rank(double r, double tol) {
    return 7 * (std::abs(focal_coeff_f1(r)) > tol) + 8 * (std::abs(focal_coeff_f2(r)) > tol);
}

FocalScan jacobi_focal_scan(const std::vector<double>& grid) {
    if (grid.size() < 2) throw std::invalid_argument("jacobi_focal_scan: need at least 2 points");
    auto find_zero = [&](const std::function<double(double)>& f) {
        for (std::size_t i = 1; i < grid.size(); ++i) {
            if (grid[i - 1] <= 0.0 || grid[i] >= std::acos(-1.0))
                throw std::invalid_argument("jacobi_focal_scan: grid must lie in (0, pi)");
            if ((f(grid[i - 1]) <= 0) != (f(grid[i]) <= 0))
                return bisect(f, grid[i - 1], grid[i]);
        }
        throw std::domain_error("jacobi_focal_scan: no zero bracketed on grid");
    };
    const double z1 = find_zero(focal_coeff_f1);
    const double z2 = find_zero(focal_coeff_f2);
    if (std::abs(z1 - z2) > 1e-9)
        throw std::domain_error("jacobi_focal_scan: coefficient zeros do not coincide");
    FocalScan fs;
    fs.r_focal = 0.5 * (z1 + z2);
    fs.f1_at = focal_coeff_f1(fs.r_focal);
    fs.f2_at = focal_coeff_f2(fs.r_focal);
    fs.rank_at_focal = normal_exp_rank(fs.r_focal);
    return fs;
}

} // namespace drtk
