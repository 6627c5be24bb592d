#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "wb/error.hpp"

namespace wb {

// Ground field of the whole system.  Exact arithmetic only: an odd prime
// field F_p (p < 2^31) or the rationals.
struct FieldSpec {
    enum class Kind { prime, rationals };
    Kind kind = Kind::prime;
    std::uint32_t p = 32003;

    static FieldSpec prime(std::uint32_t p) { return FieldSpec{Kind::prime, p}; }
    static FieldSpec rationals() { return FieldSpec{Kind::rationals, 0}; }

    bool operator==(const FieldSpec&) const = default;

    std::string name() const {
        return kind == Kind::rationals ? "QQ" : "F" + std::to_string(p);
    }
};

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class FpField {
public:
    using Elem = std::uint32_t;

    explicit FpField(std::uint32_t p) : p_(p) {
        if (p < 3 || p % 2 == 0 || p >= (1u << 31) || !is_prime_u32(p))
            throw usage_error("invalid-field", "p must be an odd prime < 2^31");
    }

    FieldSpec spec() const { return FieldSpec::prime(p_); }
    std::uint32_t p() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    Elem from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<Elem>(s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(std::uint64_t(a) * b % p_);
    }
    Elem inv(Elem a) const {
        if (a == 0) throw certificate_error("division-by-zero");
        // extended Euclid
        std::int64_t t = 0, newt = 1, r = p_, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    std::string to_string(Elem a) const { return std::to_string(a); }

private:
    std::uint32_t p_;
};

class QQField {
public:
    using Elem = mpq_class;

    QQField() = default;
    FieldSpec spec() const { return FieldSpec::rationals(); }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool eq(const Elem& a, const Elem& b) const { return cmp(a, b) == 0; }

    Elem from_int(long long n) const {
        Elem e;
        e = static_cast<long>(n);
        return e;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw certificate_error("division-by-zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    std::string to_string(const Elem& a) const { return a.get_str(); }

private:
    const Elem& inv_guard(const Elem& b) const {
        if (sgn(b) == 0) throw certificate_error("division-by-zero");
        return b;
    }
};

}  // namespace wb
