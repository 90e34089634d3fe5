#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace defectk {

using Integer = mpz_class;
using Rational = mpq_class;

/// binom(a, b) with the convention binom(a, b) = 0 whenever a < b or b < 0.
Integer binom(long a, long b);

/// binom(a, b) for a big top argument; same zero convention.
Integer binom(const Integer& a, long b);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

/// Element of F_p for an odd prime p < 2^31. Operands with different moduli throw.
class ModP {
public:
    ModP() = default;
    ModP(std::int64_t value, std::uint32_t prime);

    /// Reduces a rational; throws std::domain_error if p divides the denominator.
    static ModP from_rational(const Rational& q, std::uint32_t prime);

    std::uint32_t value() const { return value_; }
    std::uint32_t prime() const { return prime_; }
    bool is_zero() const { return value_ == 0; }

    ModP inverse() const;

    friend ModP operator+(ModP a, ModP b);
    friend ModP operator-(ModP a, ModP b);
    friend ModP operator*(ModP a, ModP b);
    friend bool operator==(ModP a, ModP b) { return a.prime_ == b.prime_ && a.value_ == b.value_; }

private:
    static std::uint32_t check_same(ModP a, ModP b);

    std::uint32_t value_ = 0;
    std::uint32_t prime_ = 0;
};

/// Scalar backend selector: prime == 0 means exact rationals.
struct Field {
    std::uint32_t prime = 0;

    static Field rationals() { return {}; }
    static Field modular(std::uint32_t p);
    bool is_rational() const { return prime == 0; }
    std::string name() const;
};

/// Parses "q", "qp" or "fp=P".
Field parse_field(const std::string& spec);

bool is_probable_prime(std::uint64_t n);

} // namespace defectk
