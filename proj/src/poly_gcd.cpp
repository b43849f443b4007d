#include "stringy/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace stringy {

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 q) { return static_cast<u64>((u128(a) * b) % q); }

u64 powmod(u64 a, u64 e, u64 q) {
    u64 r = 1 % q;
    while (e > 0) {
        if (e & 1)
            r = mulmod(r, a, q);
        a = mulmod(a, a, q);
        e >>= 1;
    }
    return r;
}

// Inverse with verification, so a composite modulus can only lead to a
// rejected modulus, never a wrong result.
std::optional<u64> invmod_checked(u64 a, u64 q) {
    u64 inv = powmod(a % q, q - 2, q);
    if (mulmod(inv, a % q, q) != 1)
        return std::nullopt;
    return inv;
}

// Dense coefficient vector, index = degree, no trailing zeros.
using GfPoly = std::vector<u64>;

void gf_strip(GfPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

GfPoly gf_reduce(const std::vector<mpz_class>& coeffs, u64 q) {
    GfPoly r(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i)
        r[i] = mpz_fdiv_ui(coeffs[i].get_mpz_t(), q);
    gf_strip(r);
    return r;
}

// Remainder of a by b in (Z/q)[x]; fails when a needed inverse does not
// exist (composite q).
bool gf_mod_inplace(GfPoly& a, const GfPoly& b, u64 q) {
    auto inv = invmod_checked(b.back(), q);
    if (!inv)
        return false;
    while (a.size() >= b.size()) {
        u64 factor = mulmod(a.back(), *inv, q);
        size_t shift = a.size() - b.size();
        if (factor != 0) {
            for (size_t i = 0; i < b.size(); ++i) {
                u64 sub = mulmod(factor, b[i], q);
                u64& c = a[shift + i];
                c = (c >= sub) ? c - sub : c + (q - sub);
            }
        }
        a.pop_back();
        gf_strip(a);
        if (a.empty())
            break;
    }
    return true;
}

std::optional<GfPoly> gf_gcd(GfPoly a, GfPoly b, u64 q) {
    while (!b.empty()) {
        if (!gf_mod_inplace(a, b, q))
            return std::nullopt;
        std::swap(a, b);
    }
    if (!a.empty()) {
        auto inv = invmod_checked(a.back(), q);
        if (!inv)
            return std::nullopt;
        for (u64& c : a)
            c = mulmod(c, *inv, q);
    }
    return a;
}

// --- dense integer/rational polynomial helpers (index = degree) ---

struct ZPoly {
    std::vector<mpz_class> c;
    bool zero() const { return c.empty(); }
    size_t deg() const { return c.size() - 1; }
    void strip() {
        while (!c.empty() && c.back() == 0)
            c.pop_back();
    }
};

ZPoly to_zpoly(const LaurentPoly& p) {
    ZPoly z;
    z.c = p.dense();
    return z;
}

LaurentPoly from_zpoly(const ZPoly& z) {
    LaurentPoly p;
    for (size_t i = 0; i < z.c.size(); ++i)
        p.add_term(static_cast<int64_t>(i), z.c[i]);
    return p;
}

mpz_class zpoly_content(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& v : p.c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

// Content 1, positive leading coefficient; zero stays zero.
void make_primitive(ZPoly& p) {
    p.strip();
    if (p.zero())
        return;
    mpz_class g = zpoly_content(p);
    if (p.c.back() < 0)
        g = -g;
    if (g != 1)
        for (auto& v : p.c)
            v /= g;
}

// Exact division over Q with integer quotient; integer-only fast path
// when the divisor is monic up to sign.
bool zpoly_div_exact(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
    if (b.zero())
        return false;
    if (a.zero()) {
        quot = ZPoly{};
        return true;
    }
    if (a.deg() < b.deg())
        return false;

    const mpz_class& lc = b.c.back();
    if (lc == 1 || lc == -1) {
        std::vector<mpz_class> rem = a.c;
        std::vector<mpz_class> q(a.deg() - b.deg() + 1);
        for (size_t k = a.deg() + 1; k-- > b.deg();) {
            size_t shift = k - b.deg();
            mpz_class factor = (lc == 1) ? rem[k] : mpz_class(-rem[k]);
            q[shift] = factor;
            if (factor != 0)
                for (size_t i = 0; i < b.c.size(); ++i)
                    rem[shift + i] -= factor * b.c[i];
        }
        for (const auto& v : rem)
            if (v != 0)
                return false;
        quot.c = std::move(q);
        quot.strip();
        return true;
    }

    std::vector<mpq_class> rem(a.c.begin(), a.c.end());
    std::vector<mpq_class> q(a.deg() - b.deg() + 1);
    mpq_class lcq(lc);
    for (size_t k = a.deg() + 1; k-- > b.deg();) {
        size_t shift = k - b.deg();
        mpq_class factor = rem[k] / lcq;
        q[shift] = factor;
        if (factor != 0)
            for (size_t i = 0; i < b.c.size(); ++i)
                rem[shift + i] -= factor * mpq_class(b.c[i]);
    }
    for (const auto& v : rem)
        if (v != 0)
            return false;
    quot.c.assign(q.size(), 0);
    for (size_t i = 0; i < q.size(); ++i) {
        q[i].canonicalize();
        if (q[i].get_den() != 1)
            return false;
        quot.c[i] = q[i].get_num();
    }
    quot.strip();
    return true;
}

ZPoly zpoly_gcd_rational_euclid(ZPoly a, ZPoly b) {
    make_primitive(a);
    make_primitive(b);
    if (a.zero())
        return b;
    if (b.zero())
        return a;

    std::vector<mpq_class> fa(a.c.begin(), a.c.end());
    std::vector<mpq_class> fb(b.c.begin(), b.c.end());
    auto strip = [](std::vector<mpq_class>& p) {
        while (!p.empty() && p.back() == 0)
            p.pop_back();
    };
    auto monic = [&](std::vector<mpq_class>& p) {
        mpq_class lc = p.back();
        for (auto& v : p)
            v /= lc;
    };
    while (!fb.empty()) {
        monic(fb);
        while (fa.size() >= fb.size()) {
            mpq_class factor = fa.back();
            size_t shift = fa.size() - fb.size();
            if (factor != 0)
                for (size_t i = 0; i < fb.size(); ++i)
                    fa[shift + i] -= factor * fb[i];
            fa.pop_back();
            strip(fa);
            if (fa.empty())
                break;
        }
        std::swap(fa, fb);
    }

    // Clear denominators, then reduce to the primitive integer gcd.
    mpz_class lcm_den = 1;
    for (auto& v : fa) {
        v.canonicalize();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
    }
    ZPoly g;
    g.c.resize(fa.size());
    for (size_t i = 0; i < fa.size(); ++i) {
        mpq_class scaled = fa[i] * mpq_class(lcm_den);
        scaled.canonicalize();
        g.c[i] = scaled.get_num();
    }
    make_primitive(g);
    return g;
}

// Deterministic stream of candidate moduli near 2^62.
u64 next_modulus(mpz_class& state) {
    mpz_nextprime(state.get_mpz_t(), state.get_mpz_t());
    return state.get_ui();
}

// Brown-style single/multi-prime gcd with exact verification by trial
// division. Never returns a wrong answer: unlucky or composite moduli
// fail verification and trigger a retry.
ZPoly zpoly_gcd_modular(const ZPoly& a, const ZPoly& b) {
    mpz_class lambda;
    mpz_gcd(lambda.get_mpz_t(), a.c.back().get_mpz_t(), b.c.back().get_mpz_t());

    mpz_class state = (mpz_class(1) << 62) - (mpz_class(1) << 20);
    std::vector<u64> used_primes;
    std::vector<GfPoly> images;
    size_t best_deg = SIZE_MAX;

    for (int attempts = 0; attempts < 64; ++attempts) {
        u64 q = next_modulus(state);
        if (mpz_fdiv_ui(lambda.get_mpz_t(), q) == 0)
            continue;
        GfPoly ga = gf_reduce(a.c, q);
        GfPoly gb = gf_reduce(b.c, q);
        if (ga.size() != a.c.size() || gb.size() != b.c.size())
            continue; // modulus kills a leading coefficient
        auto g = gf_gcd(std::move(ga), std::move(gb), q);
        if (!g)
            continue; // non-invertible element: composite modulus

        if (g->size() <= 1) {
            ZPoly one;
            one.c = {mpz_class(1)};
            return one; // sound for any modulus coprime to lambda
        }

        size_t deg = g->size() - 1;
        if (deg < best_deg) {
            best_deg = deg;
            used_primes.clear();
            images.clear();
        } else if (deg > best_deg) {
            continue; // unlucky modulus, image too large
        }

        // Scale the monic image by lambda so integer lifting can recover
        // the true gcd regardless of its leading coefficient.
        u64 lam = mpz_fdiv_ui(lambda.get_mpz_t(), q);
        GfPoly scaled = *g;
        for (u64& c : scaled)
            c = mulmod(c, lam, q);
        used_primes.push_back(q);
        images.push_back(std::move(scaled));

        // CRT-combine the collected images and lift symmetrically.
        mpz_class modulus = 1;
        std::vector<mpz_class> lift(best_deg + 1, mpz_class(0));
        for (size_t k = 0; k < used_primes.size(); ++k) {
            mpz_class qk(static_cast<unsigned long>(used_primes[k]));
            if (k == 0) {
                for (size_t i = 0; i <= best_deg; ++i)
                    lift[i] = mpz_class(static_cast<unsigned long>(images[k][i]));
                modulus = qk;
            } else {
                mpz_class inv;
                mpz_class mod_mod_qk = modulus % qk;
                if (mpz_invert(inv.get_mpz_t(), mod_mod_qk.get_mpz_t(), qk.get_mpz_t()) == 0)
                    continue;
                for (size_t i = 0; i <= best_deg; ++i) {
                    mpz_class delta = (mpz_class(static_cast<unsigned long>(images[k][i])) - lift[i]) % qk;
                    if (delta < 0)
                        delta += qk;
                    lift[i] += modulus * ((delta * inv) % qk);
                }
                modulus *= qk;
            }
        }
        mpz_class half = modulus / 2;
        ZPoly cand;
        cand.c.resize(best_deg + 1);
        for (size_t i = 0; i <= best_deg; ++i) {
            mpz_class v = lift[i] % modulus;
            if (v < 0)
                v += modulus;
            if (v > half)
                v -= modulus;
            cand.c[i] = v;
        }
        make_primitive(cand);
        if (cand.zero())
            continue;

        ZPoly qout;
        if (zpoly_div_exact(a, cand, qout) && zpoly_div_exact(b, cand, qout))
            return cand;
    }

    return zpoly_gcd_rational_euclid(a, b);
}

} // namespace

bool lp_div_exact(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient) {
    if (b.is_zero())
        return false;
    if (a.is_zero()) {
        quotient = LaurentPoly();
        return true;
    }
    ZPoly za = to_zpoly(a);
    ZPoly zb = to_zpoly(b);
    ZPoly q;
    if (!zpoly_div_exact(za, zb, q))
        return false;
    quotient = from_zpoly(q).shifted(a.min_exp() - b.min_exp());
    return true;
}

LaurentPoly lp_gcd_rational_euclid(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero())
        return LaurentPoly();
    if (a.is_zero())
        return from_zpoly([&] { ZPoly z = to_zpoly(b); make_primitive(z); return z; }());
    if (b.is_zero())
        return from_zpoly([&] { ZPoly z = to_zpoly(a); make_primitive(z); return z; }());
    return from_zpoly(zpoly_gcd_rational_euclid(to_zpoly(a), to_zpoly(b)));
}

LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero())
        return LaurentPoly();
    if (a.is_zero())
        return lp_gcd_rational_euclid(a, b);
    if (b.is_zero())
        return lp_gcd_rational_euclid(a, b);

    ZPoly za = to_zpoly(a);
    ZPoly zb = to_zpoly(b);
    make_primitive(za);
    make_primitive(zb);
    if (za.deg() == 0 || zb.deg() == 0)
        return LaurentPoly::one();

    // Small inputs go through the plain rational Euclid; the modular path
    // only pays off once coefficient growth would bite.
    if (std::min(za.deg(), zb.deg()) <= 64)
        return from_zpoly(zpoly_gcd_rational_euclid(std::move(za), std::move(zb)));
    return from_zpoly(zpoly_gcd_modular(za, zb));
}

} // namespace stringy
