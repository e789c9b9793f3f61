#include "symblock/numeric.hpp"

#include <algorithm>
#include <map>

namespace symblock {

long p_valuation_int(const Int& n, long p) {
    if (n == 0) throw ShapeError("p_valuation_int: zero has no finite valuation");
    Int m = abs(n);
    long v = 0;
    Int q, r;
    while (true) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

Valuation p_valuation(const Rat& q, long p) {
    if (q == 0) return Valuation{true, 0};
    long v = p_valuation_int(q.get_num(), p) - p_valuation_int(q.get_den(), p);
    return Valuation{false, v};
}

long factorial_valuation(long n, long p) {
    long v = 0;
    for (long q = n / p; q > 0; q /= p) v += q;
    return v;
}

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Int factorial(long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw ShapeError("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

namespace {

bool is_probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0; }

// Pollard rho, Brent variant. n must be odd composite, > 1.
Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(0xC0FFEEUL);
    while (true) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 1) + 1;
        Int x = y, d = 1, q = 1, ys = 0;
        const unsigned long m = 128;
        unsigned long r = 1;
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                ys = y;
                const unsigned long lim = std::min(m, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                d = gcd(q, n);
            }
            r *= 2;
        }
        if (d == n) {
            // Backtrack one step at a time.
            do {
                ys = (ys * ys + c) % n;
                d = gcd(abs(x - ys), n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<Int, unsigned>> factorize(const Int& n_in) {
    if (n_in == 0) throw ShapeError("factorize: zero");
    Int n = abs(n_in);
    std::map<Int, unsigned> acc;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++acc[Int(static_cast<long>(p))];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    for (unsigned long p = 37; p < 100000 && n > 1; p += 2) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            ++acc[Int(static_cast<long>(p))];
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n > 1) factor_rec(n, acc);
    return {acc.begin(), acc.end()};
}

std::vector<Int> divisors(const Int& n, std::size_t cap) {
    const auto factors = factorize(n);
    std::size_t count = 1;
    for (const auto& [p, e] : factors) {
        count *= e + 1;
        if (count > cap) throw CapExceededError("divisors: more than cap divisors");
    }
    std::vector<Int> out = {Int(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = out.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace symblock
