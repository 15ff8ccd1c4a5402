#include "caplink/randgen.hpp"

#include "caplink/errors.hpp"
#include "caplink/rng.hpp"

#include <optional>
#include <sstream>

namespace caplink {

namespace {

HomPoly random_form(uint64_t& state, int degree, long amp) {
    HomPoly h(degree);
    for (int a = degree; a >= 0; --a)
        for (int b = degree - a; b >= 0; --b) {
            int c = degree - a - b;
            long v = rand_range(state, -amp, amp);
            if (v != 0) h.set_coeff({a, b, c}, GaussianRational(rat(v)));
        }
    return h;
}

std::optional<OrientedLine> random_disjoint_line(uint64_t& state, const PencilSpec& pencil,
                                                 int tries) {
    for (int k = 0; k < tries; ++k) {
        Vec3Q u{rat(rand_range(state, -6, 6)), rat(rand_range(state, -6, 6)),
                rat(rand_range(state, -6, 6))};
        Vec3Q v{rat(rand_range(state, -6, 6)), rat(rand_range(state, -6, 6)),
                rat(rand_range(state, -6, 6))};
        if (is_zero(u) || is_zero(v) || is_zero(cross(u, v))) continue;
        try {
            OrientedLine line(u, v);
            require_disjoint(line, pencil);
            return line;
        } catch (const DomainError&) {
            continue;
        }
    }
    return std::nullopt;
}

} // namespace

GeneratedInstance gen_random(uint64_t seed, int deg_lo, int deg_hi, int max_attempts) {
    if (deg_lo < 1 || deg_hi < deg_lo || deg_hi > 6)
        throw InputError("cli", "degree range must lie within [1, 6]");
    uint64_t state = seed ^ 0xc0ffee1234abcdULL;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        int degree = static_cast<int>(rand_range(state, deg_lo, deg_hi));
        HomPoly R = random_form(state, degree, 4);
        HomPoly S = random_form(state, degree, 4);
        if (R.is_zero() || S.is_zero()) continue;
        try {
            CoorientedBase base = certify_slice(R, S);
            auto line = random_disjoint_line(state, base.pencil, 12);
            if (!line.has_value()) continue;
            return {std::move(base), *line, seed, attempt};
        } catch (const DomainError&) {
            continue;
        }
    }
    std::ostringstream os;
    os << "no generic instance after " << max_attempts << " attempts (seed " << seed << ")";
    throw ExhaustedRetries(os.str());
}

GeneratedInstance gen_random_single_point(uint64_t seed, int max_attempts) {
    uint64_t state = seed ^ 0xfeedface5678ULL;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        // odd degrees only: an even-degree generic pencil has an even number
        // of real base points, never one
        int degree = (splitmix64(state) & 1) ? 1 : 3;
        HomPoly R = random_form(state, degree, 3);
        HomPoly S = random_form(state, degree, 3);
        if (R.is_zero() || S.is_zero()) continue;
        try {
            CoorientedBase base = certify_slice(R, S);
            if (base.points.size() != 1) continue;
            auto line = random_disjoint_line(state, base.pencil, 12);
            if (!line.has_value()) continue;
            return {std::move(base), *line, seed, attempt};
        } catch (const DomainError&) {
            continue;
        }
    }
    std::ostringstream os;
    os << "no single-point instance after " << max_attempts << " attempts (seed " << seed << ")";
    throw ExhaustedRetries(os.str());
}

} // namespace caplink
