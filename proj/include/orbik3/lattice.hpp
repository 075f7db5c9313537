// Picard intersection lattice of a blown-up K3 orbisurface.
//
// Basis order: H (the Cartier generator), then one block per blow-up in
// chain order. Blowing up A_n with n >= 2 contributes a Pair block with
// generators L = (n-1)C, L' = C + C'; blowing up A_1 contributes a Single
// block with generator G. Intersections:
//   H.H = h_self,  L^2 = -n(n-1),  L.L' = -(n-1),  L'^2 = -2,  G^2 = -2,
// all cross terms between different blocks (and with H) vanish.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbik3/rational.hpp"

namespace orbik3 {

struct ExceptionalBlock {
    long n = 1; // the A_n that was blown up; n == 1 means a Single block
    bool is_pair() const { return n >= 2; }
    int width() const { return is_pair() ? 2 : 1; }

    bool operator==(const ExceptionalBlock&) const = default;
};

struct LatticeBasis {
    long h_self = 0;
    std::vector<ExceptionalBlock> blocks;

    int rank() const {
        int r = 1;
        for (const auto& b : blocks) r += b.width();
        return r;
    }

    bool operator==(const LatticeBasis&) const = default;
};

struct DivisorClass {
    std::vector<Rational> coeffs; // length = basis rank
};

// The signed-tuple convention: "(14, 11, 28)" denotes a0*H - 11*L - 28*L'.
inline DivisorClass class_from_tuple(const LatticeBasis& basis, const std::vector<long>& tuple) {
    if (static_cast<int>(tuple.size()) != basis.rank())
        throw std::invalid_argument("tuple length does not match lattice rank");
    DivisorClass d;
    d.coeffs.reserve(tuple.size());
    d.coeffs.emplace_back(tuple[0]);
    for (size_t i = 1; i < tuple.size(); ++i) d.coeffs.emplace_back(-tuple[i]);
    return d;
}

inline std::string tuple_to_string(const std::vector<long>& tuple) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) os << ", ";
        os << tuple[i];
    }
    os << ")";
    return os.str();
}

inline std::vector<std::vector<Rational>> gram(const LatticeBasis& basis) {
    int r = basis.rank();
    std::vector<std::vector<Rational>> g(r, std::vector<Rational>(r, Rational(0)));
    g[0][0] = basis.h_self;
    int at = 1;
    for (const auto& b : basis.blocks) {
        if (b.is_pair()) {
            g[at][at] = -b.n * (b.n - 1);
            g[at][at + 1] = g[at + 1][at] = -(b.n - 1);
            g[at + 1][at + 1] = -2;
            at += 2;
        } else {
            g[at][at] = -2;
            at += 1;
        }
    }
    return g;
}

inline Rational intersect(const LatticeBasis& basis, const DivisorClass& d1, const DivisorClass& d2) {
    int r = basis.rank();
    if (static_cast<int>(d1.coeffs.size()) != r || static_cast<int>(d2.coeffs.size()) != r)
        throw std::invalid_argument("divisor class rank mismatch");
    Rational acc = Rational(basis.h_self) * d1.coeffs[0] * d2.coeffs[0];
    int at = 1;
    for (const auto& b : basis.blocks) {
        if (b.is_pair()) {
            const auto &x1 = d1.coeffs[at], &y1 = d1.coeffs[at + 1];
            const auto &x2 = d2.coeffs[at], &y2 = d2.coeffs[at + 1];
            acc += Rational(-b.n * (b.n - 1)) * x1 * x2;
            acc += Rational(-(b.n - 1)) * (x1 * y2 + y1 * x2);
            acc += Rational(-2) * y1 * y2;
            at += 2;
        } else {
            acc += Rational(-2) * d1.coeffs[at] * d2.coeffs[at];
            at += 1;
        }
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Blow-up bookkeeping

struct SurfaceState {
    std::string base_id;
    LatticeBasis lattice;
    std::vector<long> singularities; // multiset of A_n labels, sorted descending
    long b2 = 0;
    long euler = 0;
    std::vector<std::string> history;

    long sum_n() const {
        long s = 0;
        for (long n : singularities) s += n;
        return s;
    }
};

inline void sort_singularities(std::vector<long>& s) { std::sort(s.rbegin(), s.rend()); }

// Blowing up A_n leaves A_{n-2} (nothing for n <= 2) and appends the
// corresponding exceptional block.
inline SurfaceState blow_up(const SurfaceState& state, long n) {
    auto it = std::find(state.singularities.begin(), state.singularities.end(), n);
    if (it == state.singularities.end())
        throw std::invalid_argument("no A_" + std::to_string(n) + " singularity to blow up");
    SurfaceState next = state;
    next.singularities.erase(next.singularities.begin() + (it - state.singularities.begin()));
    if (n >= 3) next.singularities.push_back(n - 2);
    sort_singularities(next.singularities);
    ExceptionalBlock block{n};
    next.lattice.blocks.push_back(block);
    next.b2 += block.width();
    next.euler += block.width();
    next.history.push_back("A" + std::to_string(n));
    return next;
}

// ---------------------------------------------------------------------------
// Ampleness and effective-divisor bounds

struct PairPairings {
    long n = 0;
    Rational alpha, beta; // Q = a0 H - alpha L - beta L' on this block
    Rational q_c;         // Q.C  = n*alpha + beta
    Rational q_cp;        // Q.C' = beta - alpha
    Rational q_l;         // Q.L  = (n-1)(n*alpha + beta)
    Rational q_lp;        // Q.L' = alpha(n-1) + 2 beta
    Rational q_n1cp;      // Q.((n-1)C') = (n-1)(beta - alpha)
};

struct SinglePairings {
    Rational gamma;
    Rational q_g; // Q.G = 2 gamma
};

struct CurvePairings {
    Rational q_h; // Q.H = a0 * h_self
    std::vector<PairPairings> pairs;
    std::vector<SinglePairings> singles;
};

inline CurvePairings curve_pairings(const LatticeBasis& basis, const DivisorClass& q) {
    if (static_cast<int>(q.coeffs.size()) != basis.rank())
        throw std::invalid_argument("divisor class rank mismatch");
    CurvePairings cp;
    cp.q_h = q.coeffs[0] * basis.h_self;
    int at = 1;
    for (const auto& b : basis.blocks) {
        if (b.is_pair()) {
            PairPairings pp;
            pp.n = b.n;
            pp.alpha = -q.coeffs[at];
            pp.beta = -q.coeffs[at + 1];
            pp.q_c = pp.alpha * b.n + pp.beta;
            pp.q_cp = pp.beta - pp.alpha;
            pp.q_l = Rational(b.n - 1) * pp.q_c;
            pp.q_lp = pp.alpha * (b.n - 1) + 2 * pp.beta;
            pp.q_n1cp = Rational(b.n - 1) * pp.q_cp;
            cp.pairs.push_back(pp);
            at += 2;
        } else {
            SinglePairings sp;
            sp.gamma = -q.coeffs[at];
            sp.q_g = 2 * sp.gamma;
            cp.singles.push_back(sp);
            at += 1;
        }
    }
    return cp;
}

enum class Profile { Strict, Cartier, AmpleOnly };

inline std::string profile_name(Profile p) {
    switch (p) {
        case Profile::Strict: return "strict";
        case Profile::Cartier: return "cartier";
        case Profile::AmpleOnly: return "ample-only";
    }
    return "?";
}

inline std::optional<Profile> profile_from_name(const std::string& s) {
    if (s == "strict") return Profile::Strict;
    if (s == "cartier") return Profile::Cartier;
    if (s == "ample-only") return Profile::AmpleOnly;
    return std::nullopt;
}

struct ProfileResult {
    bool pass = true;
    std::vector<std::string> violations;
};

struct AmpleCertificate {
    DivisorClass q;
    Rational q_self;
    CurvePairings pairings;
    bool ample = false;
    std::map<std::string, ProfileResult> profile_results;
};

// Nakai-Moishezon over the known curve classes: Q^2 > 0, Q.H > 0, and every
// Q.C, Q.C', Q.G strictly positive.
inline AmpleCertificate is_ample(const LatticeBasis& basis, const DivisorClass& q) {
    AmpleCertificate cert;
    cert.q = q;
    cert.q_self = intersect(basis, q, q);
    cert.pairings = curve_pairings(basis, q);
    cert.ample = cert.q_self > 0 && cert.pairings.q_h > 0;
    for (const auto& pp : cert.pairings.pairs)
        cert.ample = cert.ample && pp.q_c > 0 && pp.q_cp > 0;
    for (const auto& sp : cert.pairings.singles) cert.ample = cert.ample && sp.q_g > 0;
    return cert;
}

// No effective divisor should pair with Q at or below `bound`. The strict
// profile checks the block coefficients themselves; the cartier profile checks
// positivity over the effective Cartier monoid generators {L, L', (n-1)C', G};
// ample-only checks nothing beyond ampleness.
inline ProfileResult effective_bound(const LatticeBasis& basis, const DivisorClass& q,
                                     Profile profile, const Rational& bound = Rational(2)) {
    ProfileResult res;
    if (profile == Profile::AmpleOnly) return res;
    auto cp = curve_pairings(basis, q);
    auto check = [&](const Rational& value, const std::string& what) {
        if (!(value > bound))
            res.violations.push_back(what + " = " + rat_str(value) + " <= " + rat_str(bound));
    };
    check(q.coeffs[0], "a0");
    int idx = 0, sidx = 0;
    for (const auto& b : basis.blocks) {
        if (b.is_pair()) {
            const auto& pp = cp.pairs[idx];
            std::string tag = "Pair(" + std::to_string(b.n) + ")#" + std::to_string(idx);
            if (profile == Profile::Strict) {
                check(pp.q_c, tag + " Q.C");
                check(pp.q_cp, tag + " Q.C'");
            } else {
                check(pp.q_l, tag + " Q.L");
                check(pp.q_lp, tag + " Q.L'");
                check(pp.q_n1cp, tag + " Q.(n-1)C'");
            }
            ++idx;
        } else {
            const auto& sp = cp.singles[sidx];
            std::string tag = "Single#" + std::to_string(sidx);
            check(sp.q_g, tag + " Q.G");
            ++sidx;
        }
    }
    res.pass = res.violations.empty();
    return res;
}

inline AmpleCertificate certify(const LatticeBasis& basis, const DivisorClass& q,
                                const Rational& bound = Rational(2)) {
    auto cert = is_ample(basis, q);
    for (Profile p : {Profile::Strict, Profile::Cartier, Profile::AmpleOnly})
        cert.profile_results[profile_name(p)] = effective_bound(basis, q, p, bound);
    return cert;
}

// ---------------------------------------------------------------------------
// Integer search for Q with prescribed self-intersection

struct SearchBounds {
    long a0_max = 20;
    long coeff_max = 64;
};

namespace detail {

// Positive contribution of a block with given coefficients to -Q^2.
inline long long block_cost_pair(long n, long a, long b) {
    return (long long)n * (n - 1) * a * a + 2LL * (n - 1) * a * b + 2LL * b * b;
}

inline bool pair_ok(Profile profile, long n, long a, long b) {
    if (!(b > a && a >= 1)) return false; // ampleness: Q.C' > 0 with positive entries
    switch (profile) {
        case Profile::AmpleOnly: return true;
        case Profile::Strict: return n * a + b > 2 && b - a > 2;
        case Profile::Cartier:
            return (n - 1) * (n * a + b) > 2 && a * (n - 1) + 2 * b > 2 && (n - 1) * (b - a) > 2;
    }
    return false;
}

inline bool single_ok(Profile profile, long g) {
    if (g < 1) return false;
    return profile == Profile::AmpleOnly ? true : 2 * g > 2;
}

inline long long min_block_cost(const ExceptionalBlock& blk, Profile profile, long coeff_max) {
    long long best = -1;
    if (blk.is_pair()) {
        for (long a = 1; a <= std::min(4L, coeff_max); ++a)
            for (long b = a + 1; b <= std::min(a + 8, coeff_max); ++b)
                if (pair_ok(profile, blk.n, a, b)) {
                    long long c = block_cost_pair(blk.n, a, b);
                    if (best < 0 || c < best) best = c;
                }
    } else {
        for (long g = 1; g <= std::min(4L, coeff_max); ++g)
            if (single_ok(profile, g)) {
                long long c = 2LL * g * g;
                if (best < 0 || c < best) best = c;
            }
    }
    return best < 0 ? (1LL << 60) : best;
}

} // namespace detail

// All positive tuples (a0, ...) with Q^2 == target, ample, and satisfying the
// profile, in lexicographic order. Every emitted tuple is re-verified through
// the rational pairing before emission.
inline std::vector<std::vector<long>> search_q(const LatticeBasis& basis,
                                               const Rational& target = Rational(2),
                                               Profile profile = Profile::AmpleOnly,
                                               SearchBounds bounds = {},
                                               size_t limit = SIZE_MAX) {
    std::vector<std::vector<long>> results;
    if (rat_den(target) != 1) return results;
    long long target_i = static_cast<long long>(rat_num(target).convert_to<long long>());

    const auto& blocks = basis.blocks;
    std::vector<long long> suffix_min(blocks.size() + 1, 0);
    for (size_t i = blocks.size(); i-- > 0;)
        suffix_min[i] = suffix_min[i + 1] + detail::min_block_cost(blocks[i], profile, bounds.coeff_max);

    std::vector<long> tuple;
    auto emit = [&](const std::vector<long>& t) {
        auto cert = certify(basis, class_from_tuple(basis, t));
        if (cert.q_self == target && cert.ample && cert.profile_results[profile_name(profile)].pass)
            results.push_back(t);
    };

    std::function<void(size_t, long long)> dfs = [&](size_t bi, long long rem) {
        if (results.size() >= limit) return;
        if (bi == blocks.size()) {
            if (rem == 0) emit(tuple);
            return;
        }
        const auto& blk = blocks[bi];
        long long need_rest = suffix_min[bi + 1];
        if (blk.is_pair()) {
            for (long a = 1; a <= bounds.coeff_max; ++a) {
                if ((long long)blk.n * (blk.n - 1) * a * a + need_rest > rem) break;
                for (long b = a + 1; b <= bounds.coeff_max; ++b) {
                    long long cost = detail::block_cost_pair(blk.n, a, b);
                    if (cost + need_rest > rem) break;
                    if (!detail::pair_ok(profile, blk.n, a, b)) continue;
                    tuple.push_back(a);
                    tuple.push_back(b);
                    dfs(bi + 1, rem - cost);
                    tuple.pop_back();
                    tuple.pop_back();
                    if (results.size() >= limit) return;
                }
            }
        } else {
            for (long g = 1; g <= bounds.coeff_max; ++g) {
                long long cost = 2LL * g * g;
                if (cost + need_rest > rem) break;
                if (!detail::single_ok(profile, g)) continue;
                tuple.push_back(g);
                dfs(bi + 1, rem - cost);
                tuple.pop_back();
                if (results.size() >= limit) return;
            }
        }
    };

    long a0_min = (profile == Profile::AmpleOnly) ? 1 : 3;
    for (long a0 = a0_min; a0 <= bounds.a0_max && results.size() < limit; ++a0) {
        long long rem = (long long)a0 * a0 * basis.h_self - target_i;
        if (rem < 0) continue;
        if (blocks.empty()) {
            if (rem == 0) emit({a0});
            continue;
        }
        tuple.assign(1, a0);
        dfs(0, rem);
    }
    return results;
}

} // namespace orbik3
