#include "ptri/tower.hpp"

#include <stdexcept>

namespace ptri {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        primes.push_back(p);
        while (m % p == 0) m /= p;
    }
    if (m > 1) primes.push_back(m);
    return primes;
}

}  // namespace

Tower Tower::make(const GF2n& base, std::optional<Elem> k) {
    if (base.degree() > kMaxBaseDegree) {
        throw std::out_of_range("tower base degree must be at most " +
                                std::to_string(kMaxBaseDegree));
    }
    if (k) {
        base.element(k->bits);
        if (base.trace(*k) != 1) {
            throw std::invalid_argument("tower constant k must have trace 1");
        }
        return Tower(base, *k);
    }
    for (std::uint32_t bits = 0; bits < base.order(); ++bits) {
        if (base.trace(Elem{bits}) == 1) return Tower(base, Elem{bits});
    }
    throw std::logic_error("no trace-one element");  // unreachable: trace is onto F_2
}

Tower::Tower(GF2n base, Elem k) : base_(std::move(base)), k_(k) {
    auto d = std::make_shared<Data>();
    const auto size = static_cast<std::uint32_t>(order());
    const std::uint64_t group = size - 1;

    const auto primes = prime_factors(group);
    for (std::uint32_t i = 2; i < size; ++i) {
        const TowerElem x = from_index(i);
        bool full = true;
        for (auto p : primes) {
            if (pow(x, group / p) == one()) {
                full = false;
                break;
            }
        }
        if (full) {
            d->generator = x;
            break;
        }
    }

    d->mu_pos.assign(size, -1);
    d->q_minus_1_power.resize(size);
    const std::uint64_t q_minus_1 = base_.order() - 1;
    for (std::uint32_t i = 0; i < size; ++i) {
        const TowerElem x = from_index(i);
        if (!x.is_zero() && norm(x) == base_.one()) {
            d->mu_pos[i] = static_cast<std::int32_t>(d->mu.size());
            d->mu.push_back(x);
        }
        d->q_minus_1_power[i] = pow(x, q_minus_1);
    }
    data_ = d;
}

TowerElem Tower::inv(TowerElem x) const {
    if (x.is_zero()) throw std::domain_error("inverse of zero");
    return scale(base_.inv(norm(x)), frobenius(x));
}

TowerElem Tower::pow(TowerElem x, std::uint64_t e) const {
    TowerElem result = one();
    while (e != 0) {
        if (e & 1) result = mul(result, x);
        x = square(x);
        e >>= 1;
    }
    return result;
}

std::vector<TowerElem> Tower::mu_subgroup_from_generator() const {
    const TowerElem step = pow(generator(), base_.order() - 1);
    std::vector<TowerElem> out;
    TowerElem x = one();
    for (std::uint32_t i = 0; i <= base_.order(); ++i) {
        out.push_back(x);
        x = mul(x, step);
    }
    return out;
}

int Tower::mu_position(TowerElem x) const { return data_->mu_pos[index(x)]; }

TowerElem Tower::phi(std::optional<Elem> x) const {
    if (!x) return one();
    const TowerElem xz = embed(*x) + z();
    return mul(xz + one(), inv(xz));
}

std::string format_tower_elem(TowerElem x) {
    return to_hex(x.u.bits) + "+" + to_hex(x.v.bits) + "*z";
}

TowerElem parse_tower_elem(const Tower& tower, std::string_view text) {
    const GF2n& f = tower.base();
    const auto plus = text.find('+');
    if (plus == std::string_view::npos) return tower.embed(f.element(parse_hex(text)));
    auto vpart = text.substr(plus + 1);
    if (!vpart.ends_with("*z")) {
        throw std::invalid_argument("tower element must look like <hex>+<hex>*z");
    }
    vpart.remove_suffix(2);
    return {f.element(parse_hex(text.substr(0, plus))), f.element(parse_hex(vpart))};
}

}  // namespace ptri
