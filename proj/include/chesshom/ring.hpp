// Coefficient rings: exact integers and prime fields.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace chesshom {

using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(Int a, Int b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Int int_lcm(const Int& a, const Int& b)
{
    if (a == 0 || b == 0) return 0;
    Int g = int_gcd(a, b);
    Int l = (a / g) * b;
    return l < 0 ? Int(-l) : l;
}

// Quotient rounded to nearest, so |a - q*b| <= |b|/2. Used by the
// Euclidean steps in integer elimination to shrink remainders fast.
inline Int round_div(const Int& a, const Int& b)
{
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0) {
        Int twice = 2 * (r < 0 ? Int(-r) : r);
        Int babs = b < 0 ? Int(-b) : b;
        if (twice > babs) q += ((r < 0) == (b < 0)) ? 1 : -1;
    }
    return q;
}

// Exact integers (Z). Unbounded arithmetic throughout.
struct IntRing {
    using elem = Int;
    static constexpr bool is_field = false;

    static elem zero() { return 0; }
    static elem one() { return 1; }
    static elem from_int(long v) { return v; }
    static bool is_zero(const elem& a) { return a == 0; }
    static bool is_unit(const elem& a) { return a == 1 || a == -1; }
    static elem neg(const elem& a) { return -a; }
    static elem add(const elem& a, const elem& b) { return a + b; }
    static elem sub(const elem& a, const elem& b) { return a - b; }
    static elem mul(const elem& a, const elem& b) { return a * b; }
    static bool divides(const elem& a, const elem& b) { return a != 0 && b % a == 0; }
    static elem div_exact(const elem& a, const elem& b) { return a / b; }
    static elem quot_round(const elem& a, const elem& b) { return round_div(a, b); }
};

// Z_p for prime p; elements normalized to [0, p).
struct ModRing {
    using elem = std::int64_t;
    static constexpr bool is_field = true;

    std::int64_t p;

    explicit ModRing(std::int64_t prime) : p(prime)
    {
        if (p < 2) throw std::invalid_argument("ModRing: modulus must be >= 2");
    }

    elem zero() const { return 0; }
    elem one() const { return 1 % p; }
    elem from_int(long v) const
    {
        std::int64_t r = v % p;
        return r < 0 ? r + p : r;
    }
    bool is_zero(elem a) const { return a == 0; }
    bool is_unit(elem a) const { return a != 0; }
    elem neg(elem a) const { return a == 0 ? 0 : p - a; }
    elem add(elem a, elem b) const
    {
        elem s = a + b;
        return s >= p ? s - p : s;
    }
    elem sub(elem a, elem b) const { return add(a, neg(b)); }
    elem mul(elem a, elem b) const { return (a * b) % p; }
    elem inv(elem a) const
    {
        // extended Euclid
        std::int64_t t = 0, new_t = 1, r = p, new_r = a;
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (r != 1) throw std::domain_error("ModRing::inv: not invertible (p not prime?)");
        return t < 0 ? t + p : t;
    }
    bool divides(elem a, elem b) const
    {
        (void)b;
        return a != 0;
    }
    elem div_exact(elem a, elem b) const { return mul(a, inv(b)); }
    elem quot_round(elem a, elem b) const { return div_exact(a, b); }
};

// Runtime ring selector for the public API surface.
struct RingZ {};
struct RingZp {
    std::int64_t p;
};
using RingSpec = std::variant<RingZ, RingZp>;

inline bool is_prime_i64(std::int64_t n)
{
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline RingSpec parse_ring(const std::string& s)
{
    if (s == "Z" || s == "z") return RingZ{};
    std::string body;
    if (s.rfind("Zp:", 0) == 0)
        body = s.substr(3);
    else if (s.rfind("Z", 0) == 0 && s.size() > 1)
        body = s.substr(1);
    else
        throw std::invalid_argument("unknown ring: " + s);
    std::int64_t p = std::stoll(body);
    if (!is_prime_i64(p)) throw std::invalid_argument("ring modulus must be prime: " + s);
    return RingZp{p};
}

inline std::string ring_name(const RingSpec& r)
{
    if (std::holds_alternative<RingZ>(r)) return "Z";
    return "Zp:" + std::to_string(std::get<RingZp>(r).p);
}

}  // namespace chesshom
