#ifndef PTRI_MPOLY_HPP_
#define PTRI_MPOLY_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ptri {

/// Symbols available to MPoly. D0..D2 are the coefficients of the factor D
/// in the curve factorization; c0..c3 stand for C_i(y) at a fixed y.
enum class Var : std::uint8_t { a1, a, b, k, z, Y, X, c0, c1, c2, c3, D0, D1, D2 };

inline constexpr std::size_t kNumVars = 14;
/// Individual degrees must stay below this cap.
inline constexpr int kMaxVarDegree = 64;

std::string_view var_name(Var v);

struct Monomial {
    std::array<std::uint8_t, kNumVars> exp{};

    int degree(Var v) const { return exp[static_cast<std::size_t>(v)]; }
    int total_degree() const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& x, const Monomial& y);

/// Polynomial over F_2 in the symbols of Var, stored as its set of monomials
/// (sorted, no duplicates). Addition is symmetric difference.
class MPoly {
public:
    MPoly() = default;
    /// Cancels repeated monomials in pairs.
    static MPoly from_monomials(std::vector<Monomial> monomials);
    static MPoly constant(bool c);
    static MPoly var(Var v, int power = 1);
    /// Parses expressions such as "a_1^2 b + (1+b)^3 k". Juxtaposition and
    /// '*' multiply; identifiers are a letter with an optional _digit or
    /// _{digits} subscript (a_1, c_0, D_1); integer literals are read mod 2.
    static MPoly parse(std::string_view text);

    const std::vector<Monomial>& monomials() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool contains(const Monomial& m) const;

    int degree(Var v) const;
    bool mentions(Var v) const { return degree(v) > 0; }
    /// Coefficient of v^d, as a polynomial free of v.
    MPoly coefficient(Var v, int d) const;

    MPoly& operator+=(const MPoly& other);
    friend MPoly operator+(MPoly x, const MPoly& y) { return x += y; }
    friend MPoly operator*(const MPoly& x, const MPoly& y);
    MPoly& operator*=(const MPoly& other) { return *this = *this * other; }

    MPoly square() const;
    MPoly pow(unsigned e) const;

    friend bool operator==(const MPoly&, const MPoly&) = default;

    std::string to_string() const;

private:
    std::vector<Monomial> terms_;
};

inline MPoly operator+(const MPoly& x, bool c) { return x + MPoly::constant(c); }

/// Rewrite z^2 -> z + k until every monomial has z-degree at most 1.
MPoly reduce_z(const MPoly& p);

/// Replace every occurrence of v by value.
MPoly substitute(const MPoly& p, Var v, const MPoly& value);

/// Substitute var_i -> numerator_i / denominator for several variables at
/// once and clear the denominator: returns den^d * p(num / den), where d is
/// the largest combined degree of the substituted variables in p.
MPoly substitute_cleared(const MPoly& p, std::span<const std::pair<Var, MPoly>> numerators,
                         const MPoly& denominator);

struct DivisionResult {
    MPoly quotient;
    MPoly remainder;
    bool exact() const { return remainder.is_zero(); }
};

/// Multivariate division by a single divisor under lex order on
/// (a1, a, b, k, z, Y, X, ...). The remainder is zero iff divisor | p.
DivisionResult divide(const MPoly& p, const MPoly& divisor);

/// Thrown by exact_divide; carries the nonzero remainder.
class InexactDivision : public std::runtime_error {
public:
    explicit InexactDivision(MPoly remainder);
    const MPoly& remainder() const { return remainder_; }

private:
    MPoly remainder_;
};

MPoly exact_divide(const MPoly& p, const MPoly& divisor);

/// Largest e with factor^e | p (p nonzero), together with p / factor^e.
std::pair<int, MPoly> strip_factor(MPoly p, const MPoly& factor);

/// Evaluates p with var v mapped to values[v], in any field context F.
template <class F>
typename F::value_type evaluate(const MPoly& p, const F& field,
                                const std::array<typename F::value_type, kNumVars>& values) {
    using E = typename F::value_type;
    E acc = field.zero();
    for (const auto& m : p.monomials()) {
        E term = field.one();
        for (std::size_t v = 0; v < kNumVars; ++v) {
            if (m.exp[v] != 0) term = field.mul(term, field.pow(values[v], m.exp[v]));
        }
        acc = field.add(acc, term);
    }
    return acc;
}

}  // namespace ptri

#endif  // PTRI_MPOLY_HPP_
