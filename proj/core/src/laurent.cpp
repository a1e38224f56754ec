#include "klrc/laurent.hpp"

#include <sstream>

namespace klrc {

LaurentPoly LaurentPoly::term(long long exponent, BigInt coefficient) {
    LaurentPoly p;
    if (coefficient != 0) {
        p.terms_.emplace(exponent, std::move(coefficient));
    }
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

BigInt LaurentPoly::coefficient(long long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

long long LaurentPoly::min_exponent() const { return terms_.begin()->first; }

long long LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }

void LaurentPoly::insert_term(long long exponent, const BigInt& coefficient) {
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) {
        insert_term(e, c);
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const auto& [e, c] : other.terms_) {
        insert_term(e, -c);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    LaurentPoly result(*this);
    result += other;
    return result;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    LaurentPoly result(*this);
    result -= other;
    return result;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly result;
    for (const auto& [e, c] : terms_) {
        result.terms_.emplace(e, -c);
    }
    return result;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    LaurentPoly result;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : other.terms_) {
            result.insert_term(e1 + e2, c1 * c2);
        }
    }
    return result;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

LaurentPoly LaurentPoly::shifted(long long r) const {
    LaurentPoly result;
    for (const auto& [e, c] : terms_) {
        result.terms_.emplace(e + r, c);
    }
    return result;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly result;
    for (const auto& [e, c] : terms_) {
        result.terms_.emplace(-e, c);
    }
    return result;
}

BigInt LaurentPoly::eval_at_one() const {
    BigInt sum = 0;
    for (const auto& [e, c] : terms_) {
        sum += c;
    }
    return sum;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    if (divisor.is_zero()) {
        throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
    }
    if (is_zero()) {
        return {};
    }
    // Long division from the top exponent down.  An exact Laurent quotient has
    // lowest exponent min(this) - min(divisor), which bounds how far to divide.
    const long long min_shift = min_exponent() - divisor.min_exponent();
    LaurentPoly remainder(*this);
    LaurentPoly quotient;
    while (!remainder.is_zero() &&
           remainder.max_exponent() - divisor.max_exponent() >= min_shift) {
        const BigInt& lead = remainder.terms_.rbegin()->second;
        const BigInt& div_lead = divisor.terms_.rbegin()->second;
        if (lead % div_lead != 0) {
            throw Error(ErrorCode::NotDivisible, "remainder " + remainder.to_string());
        }
        const long long shift = remainder.max_exponent() - divisor.max_exponent();
        LaurentPoly piece = term(shift, lead / div_lead);
        quotient += piece;
        remainder -= piece * divisor;
    }
    if (!remainder.is_zero()) {
        throw Error(ErrorCode::NotDivisible, "remainder " + remainder.to_string());
    }
    return quotient;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt abs_c = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) {
                out << "-";
            }
            first = false;
        } else {
            out << (c < 0 ? "-" : "+");
        }
        if (e == 0) {
            out << abs_c;
        } else {
            if (abs_c != 1) {
                out << abs_c << "*";
            }
            out << "q";
            if (e != 1) {
                out << "^" << e;
            }
        }
    }
    return out.str();
}

LaurentPoly quantum_integer(int d, int n) {
    LaurentPoly result;
    for (int k = 0; k < n; ++k) {
        result += LaurentPoly::q_power(static_cast<long long>(d) * (n - 1 - 2 * k));
    }
    return result;
}

LaurentPoly quantum_factorial(int d, int n) {
    LaurentPoly result = LaurentPoly::one();
    for (int k = 1; k <= n; ++k) {
        result *= quantum_integer(d, k);
    }
    return result;
}

}  // namespace klrc
