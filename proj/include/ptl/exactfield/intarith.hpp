#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ptl/error.hpp"

namespace ptl {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Trial division; the integers met here are small.
inline std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (auto& [p, e] : factor(n)) out.push_back(p);
    return out;
}

// q = p^f with p prime, or nothing.
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t q) {
    auto f = factor(q);
    if (f.size() != 1) return std::nullopt;
    return f.front();
}

// Multiplicative order of x modulo n. With mod_sign set, the order is
// taken in (Z/n)* / {+1, -1}.
inline std::uint64_t mult_order_mod(std::int64_t x, std::uint64_t n, bool mod_sign = false) {
    if (n < 2) throw PreconditionError("modulus must be at least 2");
    std::uint64_t r = static_cast<std::uint64_t>(((x % static_cast<std::int64_t>(n)) + n) % n);
    if (std::gcd(r, n) != 1) throw PreconditionError("not a unit modulo " + std::to_string(n));
    std::uint64_t acc = r, m = 1;
    while (!(acc == 1 || (mod_sign && acc == n - 1))) {
        acc = mulmod(acc, r, n);
        ++m;
    }
    return m;
}

// p-adic valuation of a nonzero rational.
inline long valuation(const mpq_class& x, std::uint64_t p) {
    if (x == 0) throw PreconditionError("valuation of zero");
    long v = 0;
    mpz_class n = x.get_num(), d = x.get_den(), pp = static_cast<unsigned long>(p);
    while (n % pp == 0) {
        n /= pp;
        ++v;
    }
    while (d % pp == 0) {
        d /= pp;
        --v;
    }
    return v;
}

inline std::uint64_t mpz_mod(const mpz_class& n, std::uint64_t p) {
    mpz_class r = n % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

}  // namespace ptl
