#include "ptri/trinomial.hpp"

#include <cstdint>
#include <vector>

namespace ptri {

TrinomialParams make_params(TowerElem a, TowerElem b) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("a and b must be nonzero");
    return {a, b};
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::not_pp: return "NotPP";
        case Verdict::pp_branch_i: return "PP_branch_i";
        case Verdict::pp_branch_ii: return "PP_branch_ii";
    }
    return "?";
}

TowerElem eval_f(const Tower& tower, const TrinomialParams& p, TowerElem x) {
    if (x.is_zero()) return x;
    const TowerElem w = tower.pow_q_minus_1(x);
    // x^(q(q-1)) = (x^(q-1))^q and x^(2(q-1)) = (x^(q-1))^2
    const TowerElem inner =
        tower.one() + tower.mul(p.a, tower.frobenius(w)) + tower.mul(p.b, tower.square(w));
    return tower.mul(x, inner);
}

TowerElem eval_f_by_powers(const Tower& tower, const TrinomialParams& p, TowerElem x) {
    const std::uint64_t q = tower.base_order();
    const TowerElem t1 = tower.mul(p.a, tower.pow(x, q * (q - 1) + 1));
    const TowerElem t2 = tower.mul(p.b, tower.pow(x, 2 * (q - 1) + 1));
    return x + t1 + t2;
}

bool is_pp_bruteforce(const Tower& tower, const TrinomialParams& p) {
    const auto size = static_cast<std::uint32_t>(tower.order());
    std::vector<std::uint64_t> seen((size + 63) / 64, 0);
    for (std::uint32_t i = 0; i < size; ++i) {
        const std::uint32_t y = tower.index(eval_f(tower, p, tower.from_index(i)));
        std::uint64_t& word = seen[y >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (y & 63);
        if (word & bit) return false;
        word |= bit;
    }
    return true;
}

Classification criterion_thm11(const Tower& tower, const TrinomialParams& p) {
    if (!p.b.in_base()) {
        throw std::invalid_argument("criterion_thm11 needs b in F_q; apply normalize_b first");
    }
    const GF2n& f = tower.base();
    const Elem b = p.b.u;
    Classification c;
    c.b_in_base_field = true;
    if (b == f.one()) {
        if (!p.a.in_base()) {
            c.failed_condition = "b = 1 but a is not in F_q";
            return c;
        }
        const int t = f.trace(f.one() + f.inv(p.a.u));
        c.traces.push_back({"Tr(1+1/a)", t});
        if (t == 0) {
            c.verdict = Verdict::pp_branch_i;
        } else {
            c.failed_condition = "Tr(1+1/a) = 1";
        }
        return c;
    }
    const Elem b_b1 = f.mul(b, b + f.one());
    const int t = f.trace(f.div(b, b + f.one()));
    c.traces.push_back({"Tr(b/(b+1))", t});
    const bool square_ok = tower.square(p.a) == tower.embed(b_b1);
    if (t != 0) {
        c.failed_condition = "Tr(b/(b+1)) = 1";
    } else if (!square_ok) {
        c.failed_condition = "a^2 != b(b+1)";
    } else {
        c.verdict = Verdict::pp_branch_ii;
    }
    return c;
}

TzlhResult criterion_tzlh(const Tower& tower, const TrinomialParams& p) {
    const GF2n& f = tower.base();
    const Elem na = tower.norm(p.a);
    const Elem nb = tower.norm(p.b);
    TzlhResult r;
    const TowerElem lhs = tower.scale(f.one() + na + nb, p.b) + tower.square(tower.frobenius(p.a));
    r.norm_equation = lhs.is_zero();
    r.b_norm_is_one = nb == f.one();
    r.trace_value = r.b_norm_is_one ? f.trace(f.one() + f.inv(na)) : f.trace(f.div(nb, na));
    r.pass = r.norm_equation && r.trace_value == 0;
    return r;
}

TrinomialParams normalize_b(const Tower& tower, const TrinomialParams& p) {
    const std::uint64_t q = tower.base_order();
    const std::uint64_t m = tower.order() - 1;  // odd, so 4 is invertible
    const std::uint64_t half = (m + 1) / 2;     // inverse of 2
    const std::uint64_t quarter = half * half % m;
    const TowerElem beta = tower.pow(p.b, quarter);
    TrinomialParams out{tower.mul(p.a, tower.pow(beta, (m + 1 - q) % m)), tower.pow(beta, 2 * (q + 1))};
    if (!out.b.in_base()) throw std::logic_error("normalized b left F_q");
    return out;
}

Classification classify(const Tower& tower, const TrinomialParams& p) {
    const bool b_in_base = p.b.in_base();
    Classification c = criterion_thm11(tower, normalize_b(tower, p));
    c.b_in_base_field = b_in_base;
    return c;
}

bool cubic_no_root_in_mu(const Tower& tower, const TrinomialParams& p) {
    for (const TowerElem x : tower.mu_subgroup()) {
        const TowerElem v = tower.mul(p.b, tower.mul(x, tower.square(x))) + x + p.a;
        if (v.is_zero()) return false;
    }
    return true;
}

bool h_permutes_mu(const Tower& tower, const TrinomialParams& p) {
    const auto& mu = tower.mu_subgroup();
    std::vector<bool> hit(mu.size(), false);
    for (const TowerElem x : mu) {
        const TowerElem base =
            tower.one() + tower.mul(p.a, tower.frobenius(x)) + tower.mul(p.b, tower.square(x));
        const TowerElem h = tower.mul(x, tower.pow_q_minus_1(base));
        const int pos = tower.mu_position(h);
        if (pos < 0 || hit[pos]) return false;
        hit[pos] = true;
    }
    return true;
}

TowerElem g_map(const Tower& tower, const TrinomialParams& p, TowerElem x) {
    const TowerElem x2 = tower.square(x);
    const TowerElem x3 = tower.mul(x2, x);
    const TowerElem num = tower.mul(tower.frobenius(p.a), x3) + x2 + p.b;
    const TowerElem den = tower.mul(p.b, x3) + x + p.a;
    return tower.div(num, den);
}

Prop21Result prop21_check(const Tower& tower, const TrinomialParams& p) {
    if (!p.b.in_base()) {
        throw std::invalid_argument("prop21_check needs b in F_q; apply normalize_b first");
    }
    Prop21Result r;
    r.no_root_in_mu = cubic_no_root_in_mu(tower, p);
    if (!r.no_root_in_mu) return r;

    const std::uint32_t q = tower.base_order();
    const TowerElem scale = tower.pow_q_minus_1(tower.one() + p.a + p.b);
    std::vector<TowerElem> lhs(q);
    std::vector<TowerElem> rhs(q);
    for (std::uint32_t i = 0; i < q; ++i) {
        const TowerElem phi = tower.phi(Elem{i});
        lhs[i] = g_map(tower, p, phi);
        rhs[i] = tower.mul(scale, phi);
    }
    r.counts.assign(q, 0);
    r.pp = true;
    for (std::uint32_t y = 0; y < q; ++y) {
        for (std::uint32_t x = 0; x < q; ++x) {
            if (lhs[x] == rhs[y]) ++r.counts[y];
        }
        if (r.counts[y] != 1) r.pp = false;
    }
    return r;
}

int claim1_trace(const GF2n& field, Elem a, Elem b) {
    const Elem a2 = field.square(a);
    return field.trace(field.div(field.mul(b, a2 + field.square(b)), a2));
}

}  // namespace ptri
