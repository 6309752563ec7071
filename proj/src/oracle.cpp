#include "twk/oracle.hpp"

#include <cmath>
#include <random>

namespace twk {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

double unit_uniform(std::mt19937_64& rng) {
    // explicit construction keeps the stream platform-independent
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

std::vector<TorusPoint> sample_points(Group g, const ExponentialFunctor& F, int count,
                                      uint64_t seed) {
    if (count < 1) throw Error("sample_points: count >= 1 required");
    std::mt19937_64 rng(seed);
    std::vector<TorusPoint> pts;
    pts.reserve(static_cast<size_t>(count));
    LaurentPoly character = F.character;
    while (static_cast<int>(pts.size()) < count) {
        TorusPoint p;
        p.group = g;
        p.seed = seed;
        if (g == Group::SU2) {
            double theta = kTau * unit_uniform(rng);
            Complex z = std::polar(1.0, theta);
            p.z = {z, 1.0 / z};
        } else {
            double a = kTau * unit_uniform(rng);
            double b = kTau * unit_uniform(rng);
            Complex z1 = std::polar(1.0, a), z2 = std::polar(1.0, b);
            p.z = {z1, z2, 1.0 / (z1 * z2)};
        }
        // reject points where the localized denominator nearly vanishes
        Complex frho(1.0, 0.0);
        for (const Complex& z : p.z) frho *= eval_complex(character, {z});
        if (std::abs(frho) < 1e-6) continue;
        pts.push_back(std::move(p));
    }
    return pts;
}

Complex eval_at(const RingElement& x, const TorusPoint& p, Edge edge) {
    switch (x.ring) {
        case Ring::TorusSU2:
            if (p.group != Group::SU2) throw Error("eval_at: SU2 point expected");
            return eval_complex(x.poly, {p.z[0]});
        case Ring::SU2: {
            if (p.group != Group::SU2) throw Error("eval_at: SU2 point expected");
            return eval_complex(x.poly, {p.z[0] + p.z[1]});
        }
        case Ring::TorusSU3:
            if (p.group != Group::SU3) throw Error("eval_at: SU3 point expected");
            return eval_complex(x.poly, {p.z[0], p.z[1]});
        case Ring::SU3: {
            if (p.group != Group::SU3) throw Error("eval_at: SU3 point expected");
            Complex e1 = p.z[0] + p.z[1] + p.z[2];
            Complex e2 = p.z[0] * p.z[1] + p.z[0] * p.z[2] + p.z[1] * p.z[2];
            return eval_complex(x.poly, {e1, e2});
        }
        case Ring::U2: {
            if (p.group != Group::SU3) throw Error("eval_at: SU3 point expected for U2");
            int j, k;
            if (edge == Edge::E01) {
                j = 1, k = 2;
            } else if (edge == Edge::E12) {
                j = 0, k = 2;
            } else {
                j = 0, k = 1;
            }
            Complex xz = p.z[static_cast<size_t>(j)], yz = p.z[static_cast<size_t>(k)];
            return eval_complex(x.poly, {xz + yz, xz * yz});
        }
    }
    throw Error("bad ring tag");
}

Complex eval_at(const Localized& x, const ExponentialFunctor& F, const TorusPoint& p, Edge edge) {
    Complex num = eval_at(x.numerator, p, edge);
    if (x.denom_exp == 0) return num;
    RingElement frho = f_rho_in(F, x.numerator.ring);
    Complex den = eval_at(frho, p, edge);
    Complex acc(1.0, 0.0);
    for (uint32_t i = 0; i < x.denom_exp; ++i) acc *= den;
    return num / acc;
}

IdentityReport check_identity(const RingElement& lhs, const RingElement& rhs,
                              const std::vector<TorusPoint>& points, Edge edge) {
    if (lhs.ring != rhs.ring) throw Error("check_identity: ring mismatch");
    IdentityReport rep;
    for (const TorusPoint& p : points) {
        double err = std::abs(eval_at(lhs, p, edge) - eval_at(rhs, p, edge));
        rep.max_abs_err = std::max(rep.max_abs_err, err);
        ++rep.points_checked;
        if (err >= 1e-8) ++rep.points_failed;
    }
    rep.pass = rep.points_failed == 0;
    return rep;
}

IdentityReport check_perturbed(const RingElement& lhs, const RingElement& rhs,
                               const std::vector<TorusPoint>& points, Edge edge) {
    LaurentPoly bump =
        lhs.poly.is_zero()
            ? LaurentPoly::constant(lhs.poly.vars(), 1)
            : LaurentPoly::monomial(lhs.poly.vars(), lhs.poly.leading_term().m, 1);
    RingElement perturbed{lhs.ring, lhs.poly + bump};
    return check_identity(perturbed, rhs, points, edge);
}

} // namespace twk
