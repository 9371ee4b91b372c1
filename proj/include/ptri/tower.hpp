#ifndef PTRI_TOWER_HPP_
#define PTRI_TOWER_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptri/gf2n.hpp"

namespace ptri {

/// u + v*z in F_{q^2} = F_q[z]/(z^2 + z + k).
struct TowerElem {
    Elem u;
    Elem v;

    constexpr bool is_zero() const { return u.is_zero() && v.is_zero(); }
    constexpr bool in_base() const { return v.is_zero(); }
    friend constexpr bool operator==(TowerElem, TowerElem) = default;
    friend constexpr auto operator<=>(TowerElem, TowerElem) = default;
};

constexpr TowerElem operator+(TowerElem x, TowerElem y) { return {x.u + y.u, x.v + y.v}; }
constexpr TowerElem& operator+=(TowerElem& x, TowerElem y) {
    x.u += y.u;
    x.v += y.v;
    return x;
}

/// The quadratic extension F_{q^2} of a base field F_q (q even).
///
/// The constant k has absolute trace 1, so z^2 + z + k is irreducible,
/// z + z^q = 1 and z^(q+1) = k. Like GF2n, a Tower is immutable and cheap
/// to copy. Construction tabulates mu_{q+1} and x -> x^(q-1) over the whole
/// extension, so the base degree is limited to kMaxBaseDegree.
class Tower {
public:
    using value_type = TowerElem;

    static constexpr int kMaxBaseDegree = 8;

    /// Default k is the trace-one element with the smallest encoding.
    static Tower make(const GF2n& base, std::optional<Elem> k = std::nullopt);

    const GF2n& base() const { return base_; }
    Elem k() const { return k_; }
    /// q^2
    std::uint64_t order() const { return std::uint64_t{1} << (2 * base_.degree()); }
    /// q
    std::uint32_t base_order() const { return base_.order(); }

    TowerElem zero() const { return {}; }
    TowerElem one() const { return {Elem{1}, Elem{0}}; }
    TowerElem z() const { return {Elem{0}, Elem{1}}; }
    TowerElem embed(Elem x) const { return {x, Elem{0}}; }

    /// Dense index u | v << n, in [0, q^2).
    std::uint32_t index(TowerElem x) const { return x.u.bits | (x.v.bits << base_.degree()); }
    TowerElem from_index(std::uint32_t i) const {
        return {Elem{i & (base_.order() - 1)}, Elem{i >> base_.degree()}};
    }

    TowerElem add(TowerElem x, TowerElem y) const { return x + y; }
    TowerElem mul(TowerElem x, TowerElem y) const {
        const GF2n& f = base_;
        const Elem vv = f.mul(x.v, y.v);
        return {f.mul(x.u, y.u) + f.mul(k_, vv), f.mul(x.u, y.v) + f.mul(x.v, y.u) + vv};
    }
    TowerElem scale(Elem c, TowerElem x) const { return {base_.mul(c, x.u), base_.mul(c, x.v)}; }
    TowerElem square(TowerElem x) const {
        const GF2n& f = base_;
        const Elem vv = f.square(x.v);
        return {f.square(x.u) + f.mul(k_, vv), vv};
    }
    /// x^q = (u + v) + v z.
    TowerElem frobenius(TowerElem x) const { return {x.u + x.v, x.v}; }
    /// x^(q+1) = u^2 + uv + k v^2, an element of F_q.
    Elem norm(TowerElem x) const {
        const GF2n& f = base_;
        return f.square(x.u) + f.mul(x.u, x.v) + f.mul(k_, f.square(x.v));
    }
    TowerElem inv(TowerElem x) const;
    TowerElem div(TowerElem x, TowerElem y) const { return mul(x, inv(y)); }
    TowerElem pow(TowerElem x, std::uint64_t e) const;

    /// A generator of F_{q^2}^* (smallest index of full order).
    TowerElem generator() const { return data_->generator; }

    /// mu_{q+1}: the elements of norm 1, in index order.
    const std::vector<TowerElem>& mu_subgroup() const { return data_->mu; }
    /// The same subgroup as the powers g^((q-1)i), i = 0..q, of generator().
    std::vector<TowerElem> mu_subgroup_from_generator() const;
    /// Position of x in mu_subgroup(), or -1 when x is not in the subgroup.
    int mu_position(TowerElem x) const;

    /// phi(x) = (x + z^q) / (x + z); nullopt stands for infinity, phi(inf) = 1.
    TowerElem phi(std::optional<Elem> x) const;

    /// x^(q-1) by table lookup.
    TowerElem pow_q_minus_1(TowerElem x) const { return data_->q_minus_1_power[index(x)]; }

private:
    struct Data {
        TowerElem generator;
        std::vector<TowerElem> mu;
        std::vector<std::int32_t> mu_pos;        // index -> position or -1
        std::vector<TowerElem> q_minus_1_power;  // index -> x^(q-1)
    };

    Tower(GF2n base, Elem k);

    GF2n base_;
    Elem k_;
    std::shared_ptr<const Data> data_;
};

/// "<hex>+<hex>*z"
std::string format_tower_elem(TowerElem x);
/// Also accepts a bare "<hex>" for base-field values.
TowerElem parse_tower_elem(const Tower& tower, std::string_view text);

}  // namespace ptri

#endif  // PTRI_TOWER_HPP_
