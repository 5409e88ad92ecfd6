#include "sipoly/roots.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <optional>

namespace sipoly {

namespace {

constexpr int kSeparationCap = 1024;

struct MagnitudeRange {
    Rational lo;  // min |x| over the interval
    Rational hi;  // max |x| over the interval
    std::size_t index;
    int root_sign;
};

// Magnitude range of an interval that does not straddle zero.
MagnitudeRange magnitude_range(const IsolatingInterval& iv, std::size_t index) {
    if (iv.lo >= 0) return {iv.lo, iv.hi, index, 1};
    return {Rational(-iv.hi), Rational(-iv.lo), index, -1};
}

}  // namespace

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    if (p.degree() < 1) throw std::domain_error("sturm chain requires degree >= 1");
    std::vector<Polynomial> chain;
    chain.push_back(p.primitive());
    chain.push_back(p.derivative().primitive());
    while (chain.back().degree() > 0) {
        Polynomial rem = chain[chain.size() - 2].divmod(chain.back()).second;
        if (rem.is_zero()) break;
        chain.push_back((-rem).primitive());
    }
    return chain;
}

int sturm_variations(const std::vector<Polynomial>& chain, const Rational& x) {
    int variations = 0;
    int prev = 0;
    for (const Polynomial& q : chain) {
        const int s = sign(q(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi) {
    if (p.degree() < 1) throw std::domain_error("root count requires degree >= 1");
    if (!(lo < hi)) throw std::domain_error("root count requires lo < hi");
    if (p(lo) == 0 || p(hi) == 0)
        throw std::domain_error("root count endpoint is a root");
    const std::vector<Polynomial> chain = sturm_chain(p);
    return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

Rational cauchy_root_bound(const Polynomial& p) {
    if (p.degree() < 1) throw std::domain_error("root bound requires degree >= 1");
    Rational top(0);
    for (int k = 1; k <= p.degree(); ++k) {
        Rational m = abs(p.coeff(k) / p.leading());
        if (m > top) top = m;
    }
    return top + 1;
}

std::vector<IsolatingInterval> isolate_real_roots(const Polynomial& p) {
    if (p.degree() < 1) throw std::domain_error("isolation requires degree >= 1");
    if (!square_free(p)) throw std::domain_error("isolation requires a square-free input");
    const std::vector<Polynomial> chain = sturm_chain(p);
    const Rational bound = cauchy_root_bound(p);

    // Split point inside (lo, hi) where p does not vanish.
    auto split_point = [&p](const Rational& lo, const Rational& hi) {
        Rational step = (hi - lo) / 2;
        Rational candidate = lo + step;
        while (p(candidate) == 0) {
            step /= 2;
            candidate = lo + step;
        }
        return candidate;
    };

    std::vector<IsolatingInterval> found;
    struct Segment {
        Rational lo, hi;
        int var_lo, var_hi;
    };
    std::vector<Segment> stack;
    stack.push_back({Rational(-bound), bound, sturm_variations(chain, -bound),
                     sturm_variations(chain, bound)});
    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        const int count = seg.var_lo - seg.var_hi;
        if (count <= 0) continue;
        if (count == 1) {
            found.push_back({seg.lo, seg.hi, sign(p(seg.lo))});
            continue;
        }
        const Rational mid = split_point(seg.lo, seg.hi);
        const int var_mid = sturm_variations(chain, mid);
        // Right pushed first so the left half pops first; keeps output sorted.
        stack.push_back({mid, seg.hi, var_mid, seg.var_hi});
        stack.push_back({seg.lo, mid, seg.var_lo, var_mid});
    }
    return found;
}

IsolatingInterval refine(const Polynomial& p, IsolatingInterval iv, const Rational& width) {
    if (width <= 0) throw std::domain_error("refinement width must be positive");
    while (iv.width() > width) {
        const Rational mid = iv.midpoint();
        const Rational value = p(mid);
        if (value == 0) {
            // mid is the isolated root; pin a half-open interval around it.
            Rational lo = mid - width / 2;
            if (lo <= iv.lo) lo = iv.lo;
            return {lo, mid, sign(p(lo))};
        }
        if (sign(value) != iv.sign_at_lo) {
            iv.hi = mid;
        } else {
            iv.lo = mid;
            iv.sign_at_lo = sign(value);
        }
    }
    return iv;
}

SiVerdict si_oracle(const Polynomial& p) {
    if (p.degree() < 1) throw std::domain_error("classification requires degree >= 1");
    const int n = p.degree();
    SiVerdict verdict;
    if (!square_free(p)) {
        verdict.reason = SiFailure::repeated_roots;
        return verdict;
    }
    std::vector<IsolatingInterval> intervals = isolate_real_roots(p);
    verdict.witnesses = intervals;
    if (static_cast<int>(intervals.size()) < n) {
        verdict.reason = SiFailure::non_real_roots;
        return verdict;
    }
    if (p.coeff(n) == 0) {  // zero root: sign alternation cannot be matched
        verdict.reason = SiFailure::wrong_sign_pattern;
        return verdict;
    }
    // Equal magnitudes occur exactly when p(z) and p(-z) share a root.
    if (gcd(p, p.reflect()).degree() >= 1) {
        verdict.reason = SiFailure::magnitude_order;
        return verdict;
    }

    // Shrink every interval away from zero, then until magnitudes separate.
    for (auto& iv : intervals)
        while (iv.lo < 0 && iv.hi > 0) iv = refine(p, iv, iv.width() / 2);

    std::vector<MagnitudeRange> ranges;
    for (int round = 0; round <= kSeparationCap; ++round) {
        ranges.clear();
        for (std::size_t i = 0; i < intervals.size(); ++i)
            ranges.push_back(magnitude_range(intervals[i], i));
        std::sort(ranges.begin(), ranges.end(),
                  [](const MagnitudeRange& a, const MagnitudeRange& b) {
                      return a.lo < b.lo;
                  });
        bool separated = true;
        for (std::size_t i = 0; i + 1 < ranges.size(); ++i) {
            if (!(ranges[i].hi < ranges[i + 1].lo)) {
                separated = false;
                const std::size_t a = ranges[i].index;
                const std::size_t b = ranges[i + 1].index;
                intervals[a] = refine(p, intervals[a], intervals[a].width() / 2);
                intervals[b] = refine(p, intervals[b], intervals[b].width() / 2);
            }
        }
        if (separated) break;
        if (round == kSeparationCap) {
            verdict.reason = SiFailure::magnitude_order;
            verdict.indeterminate = true;
            verdict.witnesses = intervals;
            return verdict;
        }
    }

    // ranges is sorted by ascending magnitude; walk it descending.
    std::vector<IsolatingInterval> ordered;
    bool kind_i = true, kind_ii = true;
    for (std::size_t k = 0; k < ranges.size(); ++k) {
        const MagnitudeRange& r = ranges[ranges.size() - 1 - k];
        ordered.push_back(intervals[r.index]);
        const int expected_first = k % 2 == 0 ? 1 : -1;
        if (r.root_sign != expected_first) kind_i = false;
        if (r.root_sign != -expected_first) kind_ii = false;
    }
    verdict.witnesses = ordered;
    if (kind_i) {
        verdict.kind = SiKind::kind_i;
    } else if (kind_ii) {
        verdict.kind = SiKind::kind_ii;
    } else {
        verdict.reason = SiFailure::wrong_sign_pattern;
    }
    return verdict;
}

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_50;
using BigComplex = boost::multiprecision::cpp_complex_50;

BigFloat to_bigfloat(const Rational& x) {
    return numerator(x).convert_to<BigFloat>() / denominator(x).convert_to<BigFloat>();
}

BigComplex horner(const std::vector<BigComplex>& coeffs, const BigComplex& z) {
    BigComplex acc(0);
    for (const BigComplex& a : coeffs) acc = acc * z + a;
    return acc;
}

// Simultaneous Newton-type iteration; returns the roots or nothing on a
// convergence failure.
std::optional<std::vector<BigComplex>> find_all_roots(const Polynomial& p) {
    const int n = p.degree();
    std::vector<BigComplex> coeffs, dcoeffs;
    for (int k = 0; k <= n; ++k) coeffs.emplace_back(to_bigfloat(p.coeff(k)));
    const Polynomial dp = p.derivative();
    for (int k = 0; k <= dp.degree(); ++k)
        dcoeffs.emplace_back(to_bigfloat(dp.coeff(k)));

    const BigFloat radius = to_bigfloat(cauchy_root_bound(p));
    std::vector<BigComplex> z(static_cast<std::size_t>(n));
    const BigFloat pi = 4 * atan(BigFloat(1));
    for (int i = 0; i < n; ++i) {
        const BigFloat angle = 2 * pi * (BigFloat(i) + BigFloat(1) / 4) / n + BigFloat(1) / 2;
        z[static_cast<std::size_t>(i)] =
            radius * BigComplex(cos(angle), sin(angle)) / 2;
    }

    const BigFloat tolerance = radius * BigFloat("1e-22");
    for (int iteration = 0; iteration < 2000; ++iteration) {
        BigFloat worst(0);
        for (int i = 0; i < n; ++i) {
            BigComplex& zi = z[static_cast<std::size_t>(i)];
            const BigComplex value = horner(coeffs, zi);
            if (value == BigComplex(0)) continue;
            const BigComplex slope = horner(dcoeffs, zi);
            BigComplex newton = slope == BigComplex(0) ? BigComplex(0) : value / slope;
            BigComplex repulsion(0);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const BigComplex diff = zi - z[static_cast<std::size_t>(j)];
                if (diff == BigComplex(0)) {
                    repulsion = BigComplex(0);
                    newton = value;  // degenerate overlap; plain residual step
                    break;
                }
                repulsion += BigComplex(1) / diff;
            }
            BigComplex step = newton;
            const BigComplex denom = BigComplex(1) - newton * repulsion;
            if (denom != BigComplex(0)) step = newton / denom;
            zi -= step;
            const BigFloat magnitude = abs(step);
            if (magnitude > worst) worst = magnitude;
        }
        if (worst < tolerance) return z;
    }
    return std::nullopt;
}

}  // namespace

Stability stability_oracle(const Polynomial& p) {
    if (p.degree() < 1) throw std::domain_error("classification requires degree >= 1");
    const auto roots = find_all_roots(p);
    if (!roots) return Stability::indeterminate;
    const BigFloat margin = to_bigfloat(cauchy_root_bound(p)) * BigFloat("1e-9");
    bool all_left = true;
    for (const BigComplex& root : *roots) {
        if (root.real() > margin) return Stability::not_stable;
        if (root.real() > -margin) all_left = false;
    }
    return all_left ? Stability::stable : Stability::indeterminate;
}

const char* to_string(SiKind kind) {
    switch (kind) {
        case SiKind::kind_i: return "SI_I";
        case SiKind::kind_ii: return "SI_II";
        default: return "NOT_SI";
    }
}

const char* to_string(SiFailure reason) {
    switch (reason) {
        case SiFailure::none: return "none";
        case SiFailure::non_real_roots: return "non-real roots";
        case SiFailure::repeated_roots: return "repeated roots";
        case SiFailure::wrong_sign_pattern: return "wrong sign pattern";
        default: return "magnitude ordering violated";
    }
}

const char* to_string(Stability verdict) {
    switch (verdict) {
        case Stability::stable: return "STABLE";
        case Stability::not_stable: return "NOT_STABLE";
        default: return "INDETERMINATE";
    }
}

}  // namespace sipoly
