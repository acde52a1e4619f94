#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "ptl/error.hpp"
#include "ptl/exactfield/intarith.hpp"

namespace ptl {

// Base scalar domains. A tower is parameterized by one of these; every
// operation goes through the domain object so that the prime of a prime
// field travels with the values' field descriptor.

struct Rationals {
    using value_type = mpq_class;

    std::uint64_t characteristic() const { return 0; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const { return v; }
    value_type from_rational(const mpq_class& q) const {
        mpq_class r = q;
        r.canonicalize();
        return r;
    }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const {
        if (a == 0) throw DivisionByZero();
        return 1 / a;
    }
    bool is_zero(const value_type& a) const { return sgn(a) == 0; }
    bool is_one(const value_type& a) const { return a == 1; }
    int compare(const value_type& a, const value_type& b) const { return cmp(a, b); }
    std::string to_string(const value_type& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }

    bool operator==(const Rationals&) const = default;
};

struct PrimeField {
    using value_type = std::uint64_t;

    std::uint64_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint64_t prime) : p(prime) {
        if (!is_prime(prime) || prime >= (1ull << 32))
            throw PreconditionError("prime field modulus must be a prime below 2^32");
    }

    std::uint64_t characteristic() const { return p; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const {
        long r = v % static_cast<long>(p);
        return static_cast<value_type>(r < 0 ? r + static_cast<long>(p) : r);
    }
    value_type from_rational(const mpq_class& q) const {
        value_type d = mpz_mod(q.get_den(), p);
        if (d == 0) throw PreconditionError("denominator divisible by the characteristic");
        return mulmod(mpz_mod(q.get_num(), p), inv(d), p);
    }
    value_type add(value_type a, value_type b) const {
        value_type s = a + b;
        return s >= p ? s - p : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
    value_type mul(value_type a, value_type b) const { return mulmod(a, b, p); }
    value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
    value_type inv(value_type a) const {
        if (a == 0) throw DivisionByZero();
        return powmod(a, p - 2, p);
    }
    bool is_zero(value_type a) const { return a == 0; }
    bool is_one(value_type a) const { return a == 1; }
    int compare(value_type a, value_type b) const { return a < b ? -1 : (a > b ? 1 : 0); }
    std::string to_string(value_type a) const { return std::to_string(a); }
    std::string name() const { return "F" + std::to_string(p); }

    bool operator==(const PrimeField&) const = default;
};

}  // namespace ptl
