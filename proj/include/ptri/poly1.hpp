#ifndef PTRI_POLY1_HPP_
#define PTRI_POLY1_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ptri/gf2n.hpp"
#include "ptri/tower.hpp"

namespace ptri {

/// i-th element of a field in encoding order.
inline Elem field_element_at(const GF2n& f, std::uint64_t i) {
    return f.element(static_cast<std::uint32_t>(i));
}
inline TowerElem field_element_at(const Tower& t, std::uint64_t i) {
    return t.from_index(static_cast<std::uint32_t>(i));
}

/// Dense univariate polynomial; coeffs[i] multiplies X^i. Trailing zeros are
/// trimmed so the zero polynomial has no coefficients (degree -1 stands in
/// for -infinity).
template <class E>
struct Poly1 {
    std::vector<E> coeffs;
    char var = 'X';

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
    E coeff(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs.size()) ? coeffs[i] : E{};
    }
    void trim() {
        while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    }
    friend bool operator==(const Poly1& x, const Poly1& y) { return x.coeffs == y.coeffs; }
};

/// Polynomial arithmetic over a field context F (GF2n or Tower): anything
/// with value_type, zero/one/add/mul/inv and order().
template <class F>
class PolyRing {
public:
    using E = typename F::value_type;
    using Poly = Poly1<E>;

    explicit PolyRing(const F& field, char var = 'X') : field_(field), var_(var) {}

    const F& field() const { return field_; }

    Poly make(std::vector<E> coeffs) const {
        Poly p{std::move(coeffs), var_};
        p.trim();
        return p;
    }
    Poly constant(E c) const { return make({c}); }
    Poly x() const { return make({field_.zero(), field_.one()}); }
    /// X - r
    Poly linear(E r) const { return make({r, field_.one()}); }

    Poly add(const Poly& p, const Poly& q) const {
        Poly r{p.coeffs, var_};
        if (r.coeffs.size() < q.coeffs.size()) r.coeffs.resize(q.coeffs.size(), field_.zero());
        for (std::size_t i = 0; i < q.coeffs.size(); ++i) r.coeffs[i] = field_.add(r.coeffs[i], q.coeffs[i]);
        r.trim();
        return r;
    }

    Poly scale(E c, const Poly& p) const {
        Poly r{p.coeffs, var_};
        for (auto& x : r.coeffs) x = field_.mul(c, x);
        r.trim();
        return r;
    }

    Poly mul(const Poly& p, const Poly& q) const {
        if (p.is_zero() || q.is_zero()) return make({});
        std::vector<E> out(p.coeffs.size() + q.coeffs.size() - 1, field_.zero());
        for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
            if (p.coeffs[i].is_zero()) continue;
            for (std::size_t j = 0; j < q.coeffs.size(); ++j) {
                out[i + j] = field_.add(out[i + j], field_.mul(p.coeffs[i], q.coeffs[j]));
            }
        }
        return make(std::move(out));
    }

    /// Quotient and remainder; throws std::domain_error on a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& p, const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        Poly rem{p.coeffs, var_};
        rem.trim();
        const int dd = d.degree();
        if (rem.degree() < dd) return {make({}), rem};
        std::vector<E> quot(rem.degree() - dd + 1, field_.zero());
        const E lead_inv = field_.inv(d.coeffs.back());
        for (int i = rem.degree(); i >= dd; --i) {
            const E c = rem.coeffs[i];
            if (c.is_zero()) continue;
            const E t = field_.mul(c, lead_inv);
            quot[i - dd] = t;
            for (int j = 0; j <= dd; ++j) {
                rem.coeffs[i - dd + j] = field_.add(rem.coeffs[i - dd + j], field_.mul(t, d.coeffs[j]));
            }
        }
        rem.trim();
        return {make(std::move(quot)), rem};
    }
    Poly mod(const Poly& p, const Poly& d) const { return divmod(p, d).second; }
    Poly quotient(const Poly& p, const Poly& d) const { return divmod(p, d).first; }

    Poly monic(const Poly& p) const {
        if (p.is_zero()) return p;
        return scale(field_.inv(p.coeffs.back()), p);
    }

    /// Monic gcd; gcd(0, 0) = 0.
    Poly gcd(Poly p, Poly q) const {
        while (!q.is_zero()) {
            Poly r = mod(p, q);
            p = std::move(q);
            q = std::move(r);
        }
        return monic(p);
    }

    E eval(const Poly& p, E x) const {
        E acc = field_.zero();
        for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
            acc = field_.add(field_.mul(acc, x), *it);
        }
        return acc;
    }

    Poly mulmod(const Poly& p, const Poly& q, const Poly& m) const { return mod(mul(p, q), m); }

    /// Number of distinct roots of p in the field: deg gcd(X^|F| - X, p).
    /// X^|F| mod p is reached by log2|F| squarings.
    int root_count_in_field(const Poly& p) const {
        if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
        if (p.degree() == 0) return 0;
        Poly power = mod(x(), p);
        for (std::uint64_t size = field_.order(); size > 1; size >>= 1) power = mulmod(power, power, p);
        return gcd(add(power, x()), p).degree();
    }

    /// Roots by exhaustive evaluation, in element-encoding order.
    std::vector<E> roots_by_enumeration(const Poly& p) const {
        std::vector<E> out;
        for (std::uint64_t i = 0; i < field_.order(); ++i) {
            const E x = field_element_at(field_, i);
            if (eval(p, x).is_zero()) out.push_back(x);
        }
        return out;
    }

private:
    F field_;
    char var_;
};

}  // namespace ptri

#endif  // PTRI_POLY1_HPP_
