#pragma once

#include <mpfr.h>

#include <optional>
#include <string>

#include "narrowtower/exact.hpp"

namespace narrowtower {

/// Closed interval [lo, hi] with directed MPFR rounding: lo always rounds
/// down, hi always rounds up, so the true value stays enclosed through any
/// chain of operations.
class Interval {
  public:
    explicit Interval(mpfr_prec_t prec = 128);
    Interval(const Interval&);
    Interval(Interval&&) noexcept;
    Interval& operator=(const Interval&);
    Interval& operator=(Interval&&) noexcept;
    ~Interval();

    static Interval exact_zero(mpfr_prec_t prec = 128);
    static Interval from_int(const Int& v, mpfr_prec_t prec);
    static Interval from_rat(const Rat& v, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }

    Interval operator+(const Interval&) const;
    Interval operator-(const Interval&) const;
    Interval operator*(const Interval&) const;
    Interval operator/(const Interval&) const;  // divisor must exclude zero
    Interval operator-() const;

    /// Enclosure of sqrt; requires hi >= 0 (lo is clamped at 0 for roundoff).
    Interval sqrt() const;

    bool contains_zero() const;
    bool is_exact_zero() const;
    /// -1, 0 (exact zero) or +1 when certain; nullopt when straddling zero.
    std::optional<int> sign() const;

    Rat lower() const;  // exact (mpfr values are dyadic rationals)
    Rat upper() const;
    Rat width() const { return upper() - lower(); }

    double mid_double() const;
    std::string str() const;

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;
};

struct ComplexInterval {
    Interval re, im;

    ComplexInterval operator+(const ComplexInterval& o) const { return {re + o.re, im + o.im}; }
    ComplexInterval operator-(const ComplexInterval& o) const { return {re - o.re, im - o.im}; }
    ComplexInterval operator*(const ComplexInterval& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
};

}  // namespace narrowtower
