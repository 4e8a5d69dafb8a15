#include "narrowtower/quadratic.hpp"

#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace narrowtower {

std::string QuadUnit::str() const {
    std::ostringstream os;
    os << x.get_str() << " + " << y.get_str() << "*sqrt(" << m.get_str() << ")";
    return os.str();
}

Int fundamental_discriminant(const Int& m) {
    if (sgn(m) == 0) throw SquareInput("fundamental_discriminant: m = 0");
    if (sgn(m) > 0 && mpz_perfect_square_p(m.get_mpz_t()))
        throw SquareInput("fundamental_discriminant: m is a perfect square");
    Int s = squarefree_part(m);
    Int r = s % 4;  // GMP: sign follows dividend
    if (r < 0) r += 4;
    return r == 1 ? s : 4 * s;
}

Int two_part(const Int& n) {
    Int a = abs(n);
    if (sgn(a) == 0) return 0;
    unsigned long v = mpz_scan1(a.get_mpz_t(), 0);
    Int r(1);
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), v);
    return r;
}

QuadUnit fundamental_unit(const Int& m) {
    if (m < 2 || squarefree_part(m) != m)
        throw std::invalid_argument("fundamental_unit: m must be squarefree > 1");
    const Int D = (m % 4 == 1) ? m : 4 * m;
    const Int s = isqrt(D);

    // Continued fraction of (P + sqrt D)/Q starting at the principal form's
    // root; the cycle automorph is the fundamental unit of O_D.
    Int P = (D % 2 == 0) ? Int(0) : Int(1);
    Int Q = 2;
    std::map<std::pair<Int, Int>, size_t> seen;
    std::vector<Int> partial;          // a_0, a_1, ...
    std::vector<std::pair<Int, Int>> states;

    size_t start = 0;
    while (true) {
        auto key = std::make_pair(P, Q);
        auto it = seen.find(key);
        if (it != seen.end()) {
            start = it->second;
            break;
        }
        seen.emplace(key, states.size());
        states.push_back(key);
        // a = floor((P + sqrt D)/Q), exact: sqrt D in (s, s+1)
        Int num = P + s + (sgn(Q) < 0 ? 1 : 0);
        Int a;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
        partial.push_back(a);
        Int Pn = a * Q - P;
        Int Qn = D - Pn * Pn;
        assert(mpz_divisible_p(Qn.get_mpz_t(), Q.get_mpz_t()));
        mpz_divexact(Qn.get_mpz_t(), Qn.get_mpz_t(), Q.get_mpz_t());
        P = Pn;
        Q = Qn;
        if (states.size() > 10'000'000)
            throw std::runtime_error("fundamental_unit: period did not close");
    }

    // M = prod over the cycle of [[a,1],[1,0]]; unit = M21*beta + M22 with
    // beta = (P_start + sqrt D)/Q_start.
    Int m11(1), m12(0), m21(0), m22(1);
    for (size_t i = start; i < partial.size(); ++i) {
        const Int& a = partial[i];
        Int n11 = m11 * a + m12;
        Int n21 = m21 * a + m22;
        m12 = m11;
        m22 = m21;
        m11 = n11;
        m21 = n21;
    }
    const Int& Ps = states[start].first;
    const Int& Qs = states[start].second;
    Rat xD(m21 * Ps + m22 * Qs, Qs);
    Rat yD(m21, Qs);
    xD.canonicalize();
    yD.canonicalize();
    if (D != m) yD *= 2;  // sqrt(4m) = 2 sqrt(m)

    QuadUnit u;
    u.m = m;
    u.x = abs(xD);
    u.y = abs(yD);
    Rat n = u.x * u.x - Rat(m) * u.y * u.y;
    if (n == 1)
        u.norm = 1;
    else if (n == -1)
        u.norm = -1;
    else
        throw std::logic_error("fundamental_unit: norm is not +-1");
    return u;
}

std::optional<QuadUnit> pell_oracle(const Int& m, const Int& bound) {
    if (m < 2 || squarefree_part(m) != m)
        throw std::invalid_argument("pell_oracle: m must be squarefree > 1");
    std::optional<QuadUnit> integral, half;
    for (Int y = 1; y <= bound; ++y) {
        Int t = m * y * y;
        for (int n : {1, -1}) {
            Int x2 = t + n;
            if (x2 > 0 && mpz_perfect_square_p(x2.get_mpz_t())) {
                integral = QuadUnit{m, Rat(isqrt(x2)), Rat(y), n};
                break;
            }
        }
        if (integral) break;
    }
    if (m % 4 == 1) {
        for (Int b = 1; b <= 2 * bound; b += 2) {  // y = b/2 <= bound
            Int t = m * b * b;
            for (int n : {1, -1}) {
                Int a2 = t + 4 * n;
                if (a2 > 0 && mpz_perfect_square_p(a2.get_mpz_t())) {
                    Rat xr(isqrt(a2), 2), yr(b, 2);
                    xr.canonicalize();
                    yr.canonicalize();
                    if (yr.get_den() == 2) {  // genuine half-integer unit
                        half = QuadUnit{m, xr, yr, n};
                        break;
                    }
                }
            }
            if (half) break;
        }
    }
    if (!integral && !half) return std::nullopt;
    if (integral && half) {
        // smaller value wins: compare x + y*sqrt(m) via y (both > 1 units,
        // larger y <=> larger unit) -- equal y impossible here
        return (half->y < integral->y) ? half : integral;
    }
    return integral ? integral : half;
}

namespace {

void check_fundamental(const Int& D) {
    Int r = ((D % 4) + 4) % 4;
    if (r == 1) {
        if (squarefree_part(D) != D) throw NotFundamental("discriminant not fundamental");
    } else if (r == 0) {
        Int k = D / 4;
        Int kr = ((k % 4) + 4) % 4;
        if (!(kr == 2 || kr == 3) || squarefree_part(k) != k)
            throw NotFundamental("discriminant not fundamental");
    } else {
        throw NotFundamental("discriminant not 0,1 mod 4");
    }
}

Int imaginary_form_count(const Int& D) {
    // reduced positive definite forms: |b| <= a <= c, b = D mod 2,
    // b >= 0 when |b| = a or a = c
    Int count(0);
    Int amax = isqrt(abs(D) / 3);
    for (Int a = 1; a <= amax; ++a) {
        for (Int b = -a; b <= a; ++b) {
            if (((b - D) % 2) != 0) continue;
            Int num = b * b - D;
            if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * a).get_mpz_t())) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if ((b < 0) && (b == -a || a == c)) continue;
            assert(gcd(gcd(a, b), c) == 1);
            ++count;
        }
    }
    return count;
}

struct Form {
    Int a, b, c;
    auto operator<=>(const Form&) const = default;
};

Int real_narrow_count(const Int& D) {
    // enumerate reduced indefinite forms: 0 < b < sqrt D and
    // sqrt(D) - b < 2|a| < sqrt(D) + b, then count rho-cycles
    const Int s = isqrt(D);
    std::set<Form> reduced;
    for (Int b = 1; b <= s; ++b) {
        if (((b - D) % 2) != 0) continue;
        Int num = D - b * b;
        if (num <= 0 || !mpz_divisible_ui_p(num.get_mpz_t(), 4)) continue;
        Int N = num / 4;  // -ac
        // divisors of N
        std::vector<Int> divs{1};
        {
            auto fs = factor(N);
            for (size_t i = 0; i < fs.size();) {
                size_t j = i;
                while (j < fs.size() && fs[j] == fs[i]) ++j;
                size_t e = j - i;
                size_t old = divs.size();
                Int pk(1);
                for (size_t k = 1; k <= e; ++k) {
                    pk *= fs[i];
                    for (size_t t = 0; t < old; ++t) divs.push_back(divs[t] * pk);
                }
                i = j;
            }
        }
        for (const Int& d : divs) {
            for (int sign : {1, -1}) {
                Int a = sign * d;
                Int c = -(N / d) * sign;
                // reduced test: sqrt(D)-b < 2|a| < sqrt(D)+b via exact squares
                Int twoa = 2 * abs(a);
                // 2|a| < sqrt(D)+b  <=>  (2|a|-b)^2 < D when 2|a|>b, else true
                Int lhs = twoa - b;
                bool upper_ok = (lhs <= 0) || (lhs * lhs < D);
                // sqrt(D)-b < 2|a|  <=>  D < (2|a|+b)^2
                Int rhs = twoa + b;
                bool lower_ok = D < rhs * rhs;
                if (upper_ok && lower_ok) reduced.insert(Form{a, b, c});
            }
        }
    }
    // rho-cycles
    std::set<Form> visited;
    Int cycles(0);
    for (const Form& f0 : reduced) {
        if (visited.count(f0)) continue;
        ++cycles;
        Form f = f0;
        while (!visited.count(f)) {
            visited.insert(f);
            Int a2 = f.c;
            Int mod = 2 * abs(a2);
            Int r = s - ((s + f.b) % mod + mod) % mod;
            Int num2 = r * r - D;
            Int den2 = 4 * a2;
            assert(mpz_divisible_p(num2.get_mpz_t(), den2.get_mpz_t()));
            f = Form{a2, r, num2 / den2};
            assert(reduced.count(f));
        }
    }
    assert(visited.size() == reduced.size());
    return cycles;
}

}  // namespace

ClassData class_number(const Int& D, const Int& bound) {
    if (abs(D) > bound) throw BoundExceeded("class_number: |D| exceeds bound");
    check_fundamental(D);
    ClassData cd;
    cd.D = D;
    if (D < 0) {
        cd.h = imaginary_form_count(D);
        cd.h_narrow = cd.h;
    } else {
        Int narrow = real_narrow_count(D);
        cd.h_narrow = narrow;
        Int core = squarefree_part(D);
        QuadUnit eps = fundamental_unit(core);
        cd.h = (eps.norm == 1) ? narrow / 2 : narrow;
        if (eps.norm == 1) assert(narrow % 2 == 0);
    }
    cd.h2 = two_part(cd.h);
    cd.h2_narrow = two_part(cd.h_narrow);
    return cd;
}

Int two_class_number(const Int& m) {
    return class_number(fundamental_discriminant(m)).h2;
}

}  // namespace narrowtower
