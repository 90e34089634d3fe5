#include "defectk/numeric.hpp"

namespace defectk {

Integer binom(long a, long b)
{
    if (b < 0 || a < b) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

Integer binom(const Integer& a, long b)
{
    if (b < 0 || a < b) {
        return 0;
    }
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
    return r;
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

ModP::ModP(std::int64_t value, std::uint32_t prime) : prime_(prime)
{
    if (prime < 2) {
        throw std::invalid_argument("ModP: modulus must be a prime >= 2");
    }
    std::int64_t r = value % static_cast<std::int64_t>(prime);
    if (r < 0) {
        r += prime;
    }
    value_ = static_cast<std::uint32_t>(r);
}

ModP ModP::from_rational(const Rational& q, std::uint32_t prime)
{
    const auto num = mpz_fdiv_ui(q.get_num_mpz_t(), prime);
    const auto den = mpz_fdiv_ui(q.get_den_mpz_t(), prime);
    if (den == 0) {
        throw std::domain_error("denominator divisible by p: " + q.get_str());
    }
    return ModP(static_cast<std::int64_t>(num), prime) * ModP(static_cast<std::int64_t>(den), prime).inverse();
}

std::uint32_t ModP::check_same(ModP a, ModP b)
{
    if (a.prime_ != b.prime_) {
        throw std::logic_error("ModP: mixed moduli");
    }
    return a.prime_;
}

ModP ModP::inverse() const
{
    if (value_ == 0) {
        throw std::domain_error("ModP: inverse of zero");
    }
    // Fermat: a^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = value_;
    std::uint64_t e = prime_ - 2;
    while (e != 0) {
        if (e & 1U) {
            result = result * base % prime_;
        }
        base = base * base % prime_;
        e >>= 1U;
    }
    return ModP(static_cast<std::int64_t>(result), prime_);
}

ModP operator+(ModP a, ModP b)
{
    const auto p = ModP::check_same(a, b);
    return ModP(static_cast<std::int64_t>((std::uint64_t{a.value_} + b.value_) % p), p);
}

ModP operator-(ModP a, ModP b)
{
    const auto p = ModP::check_same(a, b);
    return ModP(static_cast<std::int64_t>(a.value_) - static_cast<std::int64_t>(b.value_), p);
}

ModP operator*(ModP a, ModP b)
{
    const auto p = ModP::check_same(a, b);
    return ModP(static_cast<std::int64_t>(std::uint64_t{a.value_} * b.value_ % p), p);
}

bool is_probable_prime(std::uint64_t n)
{
    Integer z(std::to_string(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

Field Field::modular(std::uint32_t p)
{
    if (p < 3 || p > (1U << 31U) || !is_probable_prime(p)) {
        throw std::invalid_argument("field modulus must be an odd prime <= 2^31, got " + std::to_string(p));
    }
    return Field{p};
}

std::string Field::name() const { return prime == 0 ? "q" : "fp=" + std::to_string(prime); }

Field parse_field(const std::string& spec)
{
    if (spec == "q" || spec == "qp" || spec == "Q") {
        return Field::rationals();
    }
    if (spec.rfind("fp=", 0) == 0) {
        std::size_t used = 0;
        const auto p = std::stoull(spec.substr(3), &used);
        if (used != spec.size() - 3 || p > (1ULL << 31U)) {
            throw std::invalid_argument("bad field spec: " + spec);
        }
        return Field::modular(static_cast<std::uint32_t>(p));
    }
    throw std::invalid_argument("bad field spec: " + spec);
}

} // namespace defectk
