#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "goldbach/caps.hpp"
#include "goldbach/error.hpp"

namespace goldbach {

/// Fractional evidence of the phase function: ((j-1)! + 1) mod j.
struct PhaseFraction {
    std::uint64_t j = 1;
    std::uint64_t residue = 0;
};

/// alpha(j) = ((j-1)! + 1) / j. `alpha` is engaged only when the division is exact.
struct PhaseValue {
    std::uint64_t j = 2;
    mpz_class numerator;
    std::optional<mpz_class> alpha;

    bool integral() const noexcept { return alpha.has_value(); }
};

struct WilsonVerdict {
    std::uint64_t j = 2;
    bool indicator = false;
    PhaseFraction evidence;
};

/// (j-1)! mod j by iterated modular multiplication. Stops early once the
/// running product reaches zero, which happens for every composite j > 4.
constexpr std::uint64_t factorial_mod(std::uint64_t j) noexcept {
    if (j <= 1) return 0;
    std::uint64_t product = 1;
    if (j <= 0xFFFF'FFFFu) {
        for (std::uint64_t k = 2; k < j; ++k) {
            product = product * k % j;
            if (product == 0) return 0;
        }
    } else {
        for (std::uint64_t k = 2; k < j; ++k) {
            product = static_cast<std::uint64_t>(static_cast<unsigned __int128>(product) * k % j);
            if (product == 0) return 0;
        }
    }
    return product;
}

constexpr PhaseFraction phase_fraction(std::uint64_t j) noexcept {
    if (j == 1) return {1, 0};
    const auto f = factorial_mod(j);
    return {j, (f + 1) % j};
}

inline WilsonVerdict wilson_indicator(std::uint64_t j) {
    if (j < 2) {
        throw DomainError("the Wilson indicator is defined for j >= 2, got " + std::to_string(j));
    }
    const auto evidence = phase_fraction(j);
    return {j, evidence.residue == 0, evidence};
}

inline PhaseValue phase_value(std::uint64_t j, const Caps& caps = {}) {
    if (j < 2) throw DomainError("phase_value requires j >= 2, got " + std::to_string(j));
    if (j > caps.phase_cap) {
        throw CapExceeded("phase_value(" + std::to_string(j) + ") exceeds factorial cap " +
                          std::to_string(caps.phase_cap));
    }
    PhaseValue out;
    out.j = j;
    mpz_fac_ui(out.numerator.get_mpz_t(), static_cast<unsigned long>(j - 1));
    out.numerator += 1;
    if (mpz_divisible_ui_p(out.numerator.get_mpz_t(), static_cast<unsigned long>(j))) {
        mpz_class alpha;
        mpz_divexact_ui(alpha.get_mpz_t(), out.numerator.get_mpz_t(), static_cast<unsigned long>(j));
        out.alpha = std::move(alpha);
    }
    return out;
}

inline constexpr std::uint64_t literal_indicator_max = 19;

/// floor(cos^2(pi * ((j-1)! + 1) / j)) evaluated in double precision.
///
/// 18! + 1 < 2^53 is the largest numerator that is exact in a double, hence
/// the upper bound of 19. The quotient is reduced modulo 2 (an exact fmod)
/// before multiplying by pi; cos^2(pi x) only depends on x mod 1, and without
/// the reduction pi * x at j = 19 carries an absolute error of ~0.1 rad.
inline bool literal_indicator(std::uint64_t j) {
    if (j < 2 || j > literal_indicator_max) {
        throw DomainError("literal_indicator is restricted to 2 <= j <= 19, got " + std::to_string(j));
    }
    double numerator = 1.0;
    for (std::uint64_t k = 2; k < j; ++k) numerator *= static_cast<double>(k);
    numerator += 1.0;
    const double x = std::fmod(numerator / static_cast<double>(j), 2.0);
    const double c = std::cos(std::numbers::pi * x);
    return std::floor(c * c) >= 1.0;
}

/// Exact stand-in for cos^2(pi alpha(j1)) * cos^2(pi alpha(j2)) == 1: both
/// phase fractions vanish.
inline bool max_condition(std::uint64_t j1, std::uint64_t j2) {
    return wilson_indicator(j1).indicator && wilson_indicator(j2).indicator;
}

/// F(j) for every j in [0, limit], computed once with factorial_mod.
/// F(0) and F(1) are stored as 0; they are outside the indicator's domain.
class WilsonTable {
public:
    explicit WilsonTable(std::uint64_t limit) : bits_(limit + 1, 0) {
        for (std::uint64_t j = 2; j <= limit; ++j) bits_[j] = wilson_indicator(j).indicator ? 1 : 0;
    }

    std::uint64_t limit() const noexcept { return bits_.size() - 1; }

    bool operator()(std::uint64_t j) const {
        if (j < 2) throw DomainError("the Wilson indicator is defined for j >= 2, got " + std::to_string(j));
        if (j > limit()) throw DomainError("Wilson table queried beyond its limit");
        return bits_[j] != 0;
    }

private:
    std::vector<std::uint8_t> bits_;
};

} // namespace goldbach
