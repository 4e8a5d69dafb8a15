#pragma once

#include <optional>
#include <string>

#include "narrowtower/exact.hpp"

namespace narrowtower {

struct SquareInput : std::invalid_argument {
    explicit SquareInput(const std::string& w) : std::invalid_argument(w) {}
};
struct NotFundamental : std::invalid_argument {
    explicit NotFundamental(const std::string& w) : std::invalid_argument(w) {}
};

/// Unit x + y*sqrt(m) of the maximal order of Q(sqrt m); x, y are integers or
/// half-integers (the latter only when m = 1 mod 4), |x^2 - m y^2| = 1.
struct QuadUnit {
    Int m;
    Rat x, y;
    int norm;  // +1 or -1

    std::string str() const;
    bool operator==(const QuadUnit& o) const { return m == o.m && x == o.x && y == o.y; }
};

/// disc(Q(sqrt m)): squarefree core s, then s or 4s. Throws SquareInput.
Int fundamental_discriminant(const Int& m);

/// Fundamental unit > 1 of the maximal order, by the continued fraction of
/// (r + sqrt D)/2 with exact integer recurrences and state-repetition period
/// detection.
QuadUnit fundamental_unit(const Int& m);

/// Exhaustive minimal-unit search with y <= bound; independent test oracle.
std::optional<QuadUnit> pell_oracle(const Int& m, const Int& bound);

struct ClassData {
    Int D;
    Int h;         // wide class number
    Int h2;        // 2-part of h
    Int h_narrow;  // equals h for D < 0
    Int h2_narrow;
};

inline constexpr long kDefaultClassBound = 10'000'000;  // |D| <= 10^7

/// Form class group order of fundamental discriminant D: reduced
/// positive-definite forms for D < 0, cycles of reduced indefinite forms for
/// D > 0 (narrow, then adjusted to wide by the norm of the fundamental unit).
ClassData class_number(const Int& D, const Int& bound = Int(kDefaultClassBound));

/// 2-part of the wide class number of Q(sqrt m), m squarefree.
Int two_class_number(const Int& m);

Int two_part(const Int& n);

}  // namespace narrowtower
