#include "kaccoh/linalg/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace kaccoh {

bool is_odd_prime(std::int64_t n)
{
    if (n < 3 || n % 2 == 0)
        return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::int64_t p)
{
    if (!is_odd_prime(p) || p >= (1 << 16))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not an odd prime below 65536");
    p_ = static_cast<std::uint32_t>(p);
}

Residue PrimeField::inv(Residue a) const
{
    if (a % p_ == 0)
        throw std::domain_error("inverse of zero in F_" + std::to_string(p_));
    std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        auto q = r0 / r1;
        auto r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        auto t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    return reduce(t0);
}

} // namespace kaccoh
