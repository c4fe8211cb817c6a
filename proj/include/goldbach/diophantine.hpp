#pragma once

// Exact big-integer checks of the witness pair, the master equation and the
// linear/converse identities derived from it, plus an empirical audit of the
// synchronization claims. No floating point in this file.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "goldbach/caps.hpp"
#include "goldbach/error.hpp"
#include "goldbach/oracle.hpp"
#include "goldbach/sequences.hpp"
#include "goldbach/wilson.hpp"

namespace goldbach {

struct DiophantineWitness {
    std::uint64_t n = 3;
    std::uint64_t i = 1;
    mpz_class a;
    mpz_class b;
    bool master_holds = false;

    std::uint64_t lower() const noexcept { return 2 * i + 1; }
    std::uint64_t upper() const noexcept { return 2 * n - 1 - 2 * i; }
};

struct SyncAuditRow {
    std::uint64_t n = 3;
    std::uint64_t i = 1;
    std::uint64_t p = 3;
    bool p_prime = false;
    bool gcd_ok = false;
    std::uint64_t partner = 3;
    bool partner_prime = false;

    /// p prime and coprime to its partner, yet the partner is composite.
    bool is_counterexample() const noexcept { return p_prime && gcd_ok && !partner_prime; }
    friend bool operator==(const SyncAuditRow&, const SyncAuditRow&) = default;
};

struct SyncAudit {
    std::uint64_t n = 3;
    std::vector<SyncAuditRow> rows;
    bool exists_A = false;
    std::vector<SyncAuditRow> counterexamples;
};

enum class PairCase { A, B, C };

inline std::string_view to_string(PairCase c) {
    switch (c) {
    case PairCase::A: return "A";
    case PairCase::B: return "B";
    case PairCase::C: return "C";
    }
    return "?";
}

struct PairClass {
    std::uint64_t n = 3;
    std::uint64_t i = 1;
    PairCase pair_case = PairCase::C;
};

namespace detail {

inline mpz_class factorial(std::uint64_t k) {
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

inline mpz_class big(std::uint64_t v) {
    mpz_class out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof v, 0, 0, &v);
    return out;
}

inline void require_factorial_cap(std::uint64_t n, const Caps& caps) {
    if (2 * n > caps.factorial_cap) {
        throw CapExceeded("2n = " + std::to_string(2 * n) + " exceeds factorial cap " +
                          std::to_string(caps.factorial_cap));
    }
}

/// (m-1)! + 1 divided by m when exact.
inline std::optional<mpz_class> wilson_quotient(std::uint64_t m) {
    mpz_class numerator = factorial(m - 1) + 1;
    if (!mpz_divisible_ui_p(numerator.get_mpz_t(), static_cast<unsigned long>(m))) return std::nullopt;
    mpz_class out;
    mpz_divexact_ui(out.get_mpz_t(), numerator.get_mpz_t(), static_cast<unsigned long>(m));
    return out;
}

} // namespace detail

/// b[(2i)! + 1] + a[(2n-2-2i)! + 1] == 2n a b, evaluated exactly.
inline bool check_master(std::uint64_t n, std::uint64_t i, const mpz_class& a, const mpz_class& b,
                         const Caps& caps = {}) {
    const auto pair = pair_at(n, i);
    detail::require_factorial_cap(n, caps);
    const mpz_class lhs = b * (detail::factorial(pair.lower - 1) + 1) + a * (detail::factorial(pair.upper - 1) + 1);
    const mpz_class rhs = detail::big(2 * n) * a * b;
    return lhs == rhs;
}

/// b (2n-1-2i) - alpha (2i+1) == (2n-2-2i)! - (2i)!, evaluated exactly.
inline bool check_linear(std::uint64_t n, std::uint64_t i, const mpz_class& alpha, const mpz_class& b,
                         const Caps& caps = {}) {
    const auto pair = pair_at(n, i);
    detail::require_factorial_cap(n, caps);
    const mpz_class lhs = b * detail::big(pair.upper) - alpha * detail::big(pair.lower);
    const mpz_class rhs = detail::factorial(pair.upper - 1) - detail::factorial(pair.lower - 1);
    return lhs == rhs;
}

inline DiophantineWitness witness(std::uint64_t n, std::uint64_t i, const Caps& caps = {}) {
    const auto pair = pair_at(n, i);
    if (!oracle::is_prime(pair.lower) || !oracle::is_prime(pair.upper)) {
        throw NotBothPrime("pair (" + std::to_string(pair.lower) + ", " + std::to_string(pair.upper) +
                           ") for 2n = " + std::to_string(2 * n) + " is not a pair of primes");
    }
    detail::require_factorial_cap(n, caps);
    DiophantineWitness out;
    out.n = n;
    out.i = i;
    // Both quotients are exact because both endpoints are prime.
    out.a = *detail::wilson_quotient(pair.lower);
    out.b = *detail::wilson_quotient(pair.upper);
    out.master_holds = check_master(n, i, out.a, out.b, caps);
    return out;
}

/// gcd(2n - (2i+1), 2i+1) == 1.
inline bool gcd_condition(std::uint64_t n, std::uint64_t i) {
    const auto pair = pair_at(n, i);
    return std::gcd(2 * n - pair.lower, pair.lower) == 1;
}

/// The three facts behind the converse argument for one (n, i, k).
struct ConverseReport {
    bool b0_natural = false;
    bool shifted_identity = false;
    /// Engaged only when 2i+1 is prime, i.e. when alpha is a natural.
    std::optional<bool> linear_identity;
    mpz_class b0;

    bool holds() const noexcept { return b0_natural && shifted_identity && linear_identity.value_or(true); }
};

inline ConverseReport converse_report(std::uint64_t n, std::uint64_t i, std::uint64_t k, const Caps& caps = {}) {
    const auto pair = pair_at(n, i);
    if (k < 1) throw DomainError("k must be a natural >= 1");
    if (!oracle::is_prime(pair.upper)) {
        throw PartnerComposite("partner " + std::to_string(pair.upper) + " of " + std::to_string(pair.lower) +
                               " is composite");
    }
    detail::require_factorial_cap(n, caps);

    ConverseReport report;
    const mpz_class upper_fact = detail::factorial(pair.upper - 1);
    const mpz_class lower_big = detail::big(pair.lower);
    const mpz_class upper_big = detail::big(pair.upper);
    const mpz_class k_big = detail::big(k);

    const mpz_class numerator = upper_fact + 1;
    report.b0_natural = mpz_divisible_p(numerator.get_mpz_t(), upper_big.get_mpz_t()) != 0;
    if (!report.b0_natural) return report;
    mpz_divexact(report.b0.get_mpz_t(), numerator.get_mpz_t(), upper_big.get_mpz_t());

    // (2i+1)(2n/(2i+1) - 1) is 2n - (2i+1) without the intermediate fraction.
    const mpz_class coefficient = detail::big(2 * n - pair.lower);
    report.shifted_identity = report.b0 * coefficient - k_big * lower_big == numerator - k_big * lower_big;

    if (auto alpha = detail::wilson_quotient(pair.lower)) {
        report.linear_identity =
            report.b0 * coefficient - *alpha * lower_big == upper_fact - detail::factorial(pair.lower - 1);
    }
    return report;
}

inline bool converse_check(std::uint64_t n, std::uint64_t i, std::uint64_t k, const Caps& caps = {}) {
    return converse_report(n, i, k, caps).holds();
}

inline SyncAuditRow sync_row(std::uint64_t n, std::uint64_t i) {
    const auto pair = pair_at(n, i);
    SyncAuditRow row;
    row.n = n;
    row.i = i;
    row.p = pair.lower;
    row.p_prime = oracle::is_prime(pair.lower);
    row.gcd_ok = std::gcd(2 * n - pair.lower, pair.lower) == 1;
    row.partner = pair.upper;
    row.partner_prime = oracle::is_prime(pair.upper);
    return row;
}

inline SyncAudit sync_audit(std::uint64_t n) {
    SyncAudit audit;
    audit.n = n;
    const auto size = pair_count(n);
    audit.rows.reserve(size);
    for (std::uint64_t i = 1; i <= size; ++i) {
        const auto& row = audit.rows.emplace_back(sync_row(n, i));
        audit.exists_A = audit.exists_A || (row.p_prime && row.partner_prime);
        if (row.is_counterexample()) audit.counterexamples.push_back(row);
    }
    return audit;
}

inline PairClass classify_pair(std::uint64_t n, std::uint64_t i) {
    const auto pair = pair_at(n, i);
    const int primes = int{oracle::is_prime(pair.lower)} + int{oracle::is_prime(pair.upper)};
    return {n, i, primes == 2 ? PairCase::A : primes == 1 ? PairCase::B : PairCase::C};
}

/// Some prime p = 2i+1 with i in [1, |I_n|], p > n/2 and p not dividing n.
inline bool half_prime_claim(std::uint64_t n) {
    const auto size = pair_count(n);
    // p > n/2 is p > floor(n/2) for integer p; p >= 3 keeps it inside the odd labels.
    const std::uint64_t lo = std::max<std::uint64_t>(n / 2, 2);
    const std::uint64_t hi = 2 * size + 1;
    if (lo >= hi) return false;
    return oracle::prime_in_range(lo, hi, n).has_value();
}

} // namespace goldbach
