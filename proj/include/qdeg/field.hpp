#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qdeg {

// All linear algebra in this project is exact.  Two coefficient fields are
// supported: the rationals (GMP-backed, canonical form maintained by mpq) and
// prime fields GF(p) for a runtime-chosen prime p.  A field is a small value
// object passed around as context; matrix entries are plain Elem values.

class RationalField {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long v) const { return Elem(v); }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }

    Elem inv(const Elem& a) const {
        if (a == 0) throw std::domain_error("division by zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    // Uniform on the integers [-9, 9]; used for random representations.
    Elem random(std::mt19937_64& rng) const {
        std::uniform_int_distribution<int> dist(-9, 9);
        return Elem(dist(rng));
    }
    Elem random_nonzero(std::mt19937_64& rng) const {
        for (;;) {
            Elem e = random(rng);
            if (e != 0) return e;
        }
    }

    std::string str(const Elem& a) const { return a.get_str(); }

    // Accepts "n" or "n/d" with arbitrary precision.
    Elem parse(const std::string& s) const {
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("bad rational literal: " + s);
        v.canonicalize();
        if (v.get_den() == 0)
            throw std::invalid_argument("zero denominator: " + s);
        return v;
    }

    bool operator==(const RationalField&) const { return true; }
};

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

} // namespace detail

class PrimeField {
public:
    using Elem = std::uint64_t;

    PrimeField() : p_(2) {}
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!detail::is_prime_u64(p))
            throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
        if (p >= (1ULL << 62))
            throw std::invalid_argument("modulus too large");
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_long(long v) const {
        long long m = static_cast<long long>(p_);
        long long r = static_cast<long long>(v) % m;
        if (r < 0) r += m;
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return detail::mulmod(a, b, p_); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }

    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("division by zero");
        return detail::powmod(a, p_ - 2, p_);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem random(std::mt19937_64& rng) const {
        std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
        return dist(rng);
    }
    Elem random_nonzero(std::mt19937_64& rng) const {
        std::uniform_int_distribution<std::uint64_t> dist(1, p_ - 1);
        return dist(rng);
    }

    std::string str(Elem a) const { return std::to_string(a); }

    // Accepts "n" or "n/d", reduced mod p.
    Elem parse(const std::string& s) const {
        auto slash = s.find('/');
        mpq_class v;
        if (v.set_str(s, 10) != 0)
            throw std::invalid_argument("bad field literal: " + s);
        v.canonicalize();
        mpz_class num = v.get_num(), den = v.get_den();
        mpz_class pz(static_cast<unsigned long>(p_));
        mpz_class nm = num % pz, dm = den % pz;
        if (nm < 0) nm += pz;
        if (dm < 0) dm += pz;
        Elem n = static_cast<Elem>(nm.get_ui());
        Elem d = static_cast<Elem>(dm.get_ui());
        (void)slash;
        if (d == 0) throw std::invalid_argument("denominator divisible by p: " + s);
        return div(n, d);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint64_t p_;
};

} // namespace qdeg
