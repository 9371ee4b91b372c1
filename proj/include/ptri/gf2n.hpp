#ifndef PTRI_GF2N_HPP_
#define PTRI_GF2N_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ptri {

/// Element of F_{2^n}: bit i is the coefficient of t^i in F_2[t]/(modulus).
struct Elem {
    std::uint32_t bits = 0;

    constexpr bool is_zero() const { return bits == 0; }
    friend constexpr bool operator==(Elem, Elem) = default;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Field addition is XOR and needs no context.
constexpr Elem operator+(Elem x, Elem y) { return Elem{x.bits ^ y.bits}; }
constexpr Elem& operator+=(Elem& x, Elem y) {
    x.bits ^= y.bits;
    return x;
}

/// Thrown by GF2n::make when the supplied modulus factors over F_2.
class ReducibleModulusError : public std::invalid_argument {
public:
    ReducibleModulusError(std::uint32_t modulus, std::uint32_t factor);
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t factor() const { return factor_; }

private:
    std::uint32_t modulus_;
    std::uint32_t factor_;
};

// Polynomials over F_2 packed into integers (bit i = coefficient of t^i).
namespace gf2poly {
int degree(std::uint64_t p);
std::uint64_t clmul(std::uint64_t x, std::uint64_t y);
std::uint64_t mod(std::uint64_t p, std::uint64_t m);
/// Smallest nontrivial factor of p, or nullopt when p is irreducible.
std::optional<std::uint32_t> find_factor(std::uint32_t p);
}  // namespace gf2poly

/// The field F_q, q = 2^n, 1 <= n <= 16.
///
/// Multiplication goes through log/antilog tables built at construction.
/// Instances share their tables and are cheap to copy; all members are
/// const after construction, so one field may be used from many threads.
class GF2n {
public:
    using value_type = Elem;

    static constexpr int kMaxDegree = 16;

    /// Validates the modulus (degree n, irreducible). Without a modulus the
    /// irreducible polynomial with the smallest integer encoding is used.
    static GF2n make(int n, std::optional<std::uint32_t> modulus = std::nullopt);

    int degree() const { return n_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t order() const { return q_; }

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    /// Throws std::out_of_range when bits does not fit in n bits.
    Elem element(std::uint32_t bits) const;
    /// A generator of the multiplicative group used for the log tables.
    Elem generator() const { return generator_; }

    Elem add(Elem x, Elem y) const { return x + y; }
    Elem mul(Elem x, Elem y) const {
        if (x.is_zero() || y.is_zero()) return Elem{0};
        return Elem{tables_->exp[tables_->log[x.bits] + tables_->log[y.bits]]};
    }
    Elem square(Elem x) const { return mul(x, x); }
    Elem inv(Elem x) const;
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    /// Square-and-multiply; pow(0, 0) = 1.
    Elem pow(Elem x, std::uint64_t e) const;
    /// The unique square root x^(2^(n-1)).
    Elem sqrt(Elem x) const;

    /// Absolute trace to F_2 computed as x + x^2 + ... + x^(2^(n-1)).
    int trace_by_definition(Elem x) const;
    /// Same value via the precomputed linear functional.
    int trace(Elem x) const {
        return __builtin_parity(x.bits & tables_->trace_mask);
    }

    /// Roots of x^2 + x = c: both of them (smaller encoding first) when
    /// Tr(c) = 0, nothing otherwise.
    std::optional<std::pair<Elem, Elem>> solve_artin_schreier(Elem c) const;

    /// Discrete log with respect to generator(); x must be nonzero.
    std::uint32_t log(Elem x) const;
    Elem exp(std::uint64_t e) const { return Elem{tables_->exp[e % (q_ - 1)]}; }

    friend bool operator==(const GF2n& x, const GF2n& y) {
        return x.n_ == y.n_ && x.modulus_ == y.modulus_;
    }

private:
    struct Tables {
        std::vector<std::uint32_t> exp;  // length 2(q-1)
        std::vector<std::uint32_t> log;  // length q, log[0] unused
        std::uint32_t trace_mask = 0;
        // Echelon rows (image, preimage) of x -> x^2 + x, keyed by the
        // highest set bit of the image.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> as_rows;
    };

    GF2n(int n, std::uint32_t modulus);
    std::uint32_t mul_slow(std::uint32_t x, std::uint32_t y) const;

    int n_;
    std::uint32_t modulus_;
    std::uint32_t q_;
    Elem generator_;
    std::shared_ptr<const Tables> tables_;
};

/// Smallest-encoding irreducible polynomial of degree n.
std::uint32_t default_modulus(int n);

// Text encodings shared by the CLI.
std::string to_hex(std::uint32_t bits);
/// Accepts an optional 0x prefix; throws std::invalid_argument on junk.
std::uint32_t parse_hex(std::string_view text);
/// "n:<int>,mod:<hex>,val:<hex>"
std::string format_field_elem(const GF2n& field, Elem x);
std::pair<GF2n, Elem> parse_field_elem(std::string_view text);

}  // namespace ptri

#endif  // PTRI_GF2N_HPP_
