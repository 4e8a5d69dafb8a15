#include "narrowtower/exact.hpp"

#include <algorithm>
#include <mutex>

namespace narrowtower {

int kronecker(const Int& a, const Int& n) {
    if (sgn(n) == 0) throw std::invalid_argument("kronecker: n must be nonzero");
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int kronecker(long a, long n) { return kronecker(Int(a), Int(n)); }

namespace {

std::vector<unsigned long> g_primes;
unsigned long g_sieved = 0;
std::mutex g_sieve_mutex;

void sieve_to(unsigned long limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<unsigned long> ps;
    for (unsigned long i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        ps.push_back(i);
        for (unsigned long j = i * i; j <= limit; j += i) composite[j] = true;
    }
    g_primes = std::move(ps);
    g_sieved = limit;
}

// Deterministic Miller-Rabin; the base set certifies everything below
// 3.317e24, far beyond the factoring bound.
bool miller_rabin(const Int& n) {
    if (n < 2) return false;
    for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    Int d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    for (long a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        Int x;
        Int base(a);
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned long i = 1; i < r; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace

const std::vector<unsigned long>& primes_up_to(unsigned long limit) {
    std::lock_guard<std::mutex> lock(g_sieve_mutex);
    if (g_sieved < limit) sieve_to(std::max<unsigned long>(limit, 1u << 16));
    return g_primes;
}

bool is_prime(const Int& n) { return miller_rabin(n); }

std::vector<Int> factor(const Int& n, const Int& bound) {
    if (n < 1) throw std::invalid_argument("factor: n must be >= 1");
    if (n > bound) throw BoundExceeded("factor: input exceeds configured bound");
    std::vector<Int> out;
    Int rem = n;
    const auto& ps = primes_up_to(1'000'000);
    for (unsigned long p : ps) {
        if (Int(p) * p > rem) break;
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), p);
            out.emplace_back(p);
        }
    }
    if (rem > 1) {
        if (!miller_rabin(rem))
            throw BoundExceeded("factor: composite cofactor beyond trial-division range");
        out.push_back(rem);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int squarefree_part(const Int& n) {
    if (sgn(n) == 0) throw std::invalid_argument("squarefree_part: n must be nonzero");
    Int core(sgn(n) < 0 ? -1 : 1);
    Int prev(0);
    for (const Int& p : factor(abs(n))) {
        if (p == prev) {
            // paired up: p^2 drops out
            mpz_divexact(core.get_mpz_t(), core.get_mpz_t(), prev.get_mpz_t());
            prev = 0;
        } else {
            core *= p;
            prev = p;
        }
    }
    return core;
}

bool is_perfect_square(const Rat& q) {
    if (sgn(q) < 0) return false;
    return mpz_perfect_square_p(q.get_num_mpz_t()) &&
           mpz_perfect_square_p(q.get_den_mpz_t());
}

std::optional<Rat> sqrt_exact(const Rat& q) {
    if (!is_perfect_square(q)) return std::nullopt;
    Rat r;
    mpz_sqrt(r.get_num_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(r.get_den_mpz_t(), q.get_den_mpz_t());
    r.canonicalize();
    return r;
}

Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

std::vector<long long> negative_prime_discriminants(long long bound) {
    std::vector<long long> out;
    for (unsigned long q : primes_up_to(std::max<long long>(bound, 8))) {
        if ((long long)q > bound) break;
        if (q % 4 == 3) out.push_back(-(long long)q);
    }
    out.push_back(-4);
    out.push_back(-8);
    std::sort(out.begin(), out.end(),
              [](long long a, long long b) { return std::llabs(a) < std::llabs(b); });
    return out;
}

}  // namespace narrowtower
