#include "klrc/nilhecke.hpp"

#include <sstream>

#include "klrc/errors.hpp"

namespace klrc {

namespace {

void require_same_vars(const NilPolynomial& a, const NilPolynomial& b) {
    if (a.vars() != b.vars()) {
        throw Error(ErrorCode::UsageError, "polynomials live in different variable counts");
    }
}

void require_adjacent(int r, int vars) {
    if (r < 0 || r + 1 >= vars) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "variable pair " + std::to_string(r) + " out of range");
    }
}

}  // namespace

NilPolynomial NilPolynomial::one(int vars) {
    NilPolynomial p(vars);
    p.add_term(std::vector<int>(vars, 0), Rational(1));
    return p;
}

NilPolynomial NilPolynomial::variable(int vars, int r) {
    if (r < 0 || r >= vars) {
        throw Error(ErrorCode::IndexOutOfRange, "variable index " + std::to_string(r));
    }
    NilPolynomial p(vars);
    std::vector<int> exponents(vars, 0);
    exponents[r] = 1;
    p.add_term(exponents, Rational(1));
    return p;
}

void NilPolynomial::add_term(const std::vector<int>& exponents, const Rational& coefficient) {
    if (static_cast<int>(exponents.size()) != vars_) {
        throw Error(ErrorCode::UsageError, "exponent vector length mismatch");
    }
    if (coefficient == 0) {
        return;
    }
    auto [it, inserted] = terms_.emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

NilPolynomial NilPolynomial::operator+(const NilPolynomial& other) const {
    require_same_vars(*this, other);
    NilPolynomial result(*this);
    for (const auto& [e, c] : other.terms_) {
        result.add_term(e, c);
    }
    return result;
}

NilPolynomial NilPolynomial::operator-(const NilPolynomial& other) const {
    require_same_vars(*this, other);
    NilPolynomial result(*this);
    for (const auto& [e, c] : other.terms_) {
        result.add_term(e, -c);
    }
    return result;
}

NilPolynomial NilPolynomial::operator*(const NilPolynomial& other) const {
    require_same_vars(*this, other);
    NilPolynomial result(vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            std::vector<int> e(vars_);
            for (int r = 0; r < vars_; ++r) {
                e[r] = ea[r] + eb[r];
            }
            result.add_term(e, ca * cb);
        }
    }
    return result;
}

NilPolynomial NilPolynomial::swapped(int r) const {
    require_adjacent(r, vars_);
    NilPolynomial result(vars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> swapped_exponents(e);
        std::swap(swapped_exponents[r], swapped_exponents[r + 1]);
        result.add_term(swapped_exponents, c);
    }
    return result;
}

NilPolynomial NilPolynomial::divided_difference(int r) const {
    require_adjacent(r, vars_);
    NilPolynomial result(vars_);
    for (const auto& [e, c] : terms_) {
        const int p = e[r];
        const int q = e[r + 1];
        if (p == q) {
            continue;
        }
        // (x_r^p x_{r+1}^q - x_r^q x_{r+1}^p) / (x_r - x_{r+1})
        std::vector<int> base(e);
        if (p > q) {
            for (int l = 0; l < p - q; ++l) {
                base[r] = q + l;
                base[r + 1] = p - 1 - l;
                result.add_term(base, c);
            }
        } else {
            for (int l = 0; l < q - p; ++l) {
                base[r] = p + l;
                base[r + 1] = q - 1 - l;
                result.add_term(base, -c);
            }
        }
    }
    return result;
}

std::string NilPolynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        out << "(" << c << ")";
        for (int r = 0; r < vars_; ++r) {
            if (e[r] > 0) {
                out << "*x" << (r + 1);
                if (e[r] > 1) {
                    out << "^" << e[r];
                }
            }
        }
    }
    return out.str();
}

NilPolynomial nilhecke_apply(const NilPolynomial& f,
                             const std::vector<NilHeckeGenerator>& word) {
    NilPolynomial result(f);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (it->is_dot) {
            result = NilPolynomial::variable(result.vars(), it->index) * result;
        } else {
            result = result.divided_difference(it->index);
        }
    }
    return result;
}

}  // namespace klrc
