#include "ptri/cubic.hpp"

#include <algorithm>
#include <stdexcept>

#include "ptri/poly1.hpp"

namespace ptri {

int cubic_root_count(const GF2n& field, Elem alpha, Elem beta) {
    if (beta.is_zero()) throw std::domain_error("cubic_root_count: beta = 0");
    const PolyRing<GF2n> ring(field);
    return ring.root_count_in_field(ring.make({beta, alpha, field.zero(), field.one()}));
}

int williams_predicate(const GF2n& field, Elem alpha, Elem beta) {
    if (beta.is_zero()) throw std::domain_error("williams_predicate: beta = 0");
    const Elem a3 = field.mul(alpha, field.square(alpha));
    return field.trace(field.one() + field.div(a3, field.square(beta)));
}

std::vector<Elem> depressed_cubic_solve(const GF2n& field, Elem c3, Elem c2, Elem c1, Elem c0) {
    if (c3.is_zero()) throw std::domain_error("depressed_cubic_solve: c3 = 0");
    const Elem c3_sq = field.square(c3);
    const Elem shift = field.div(c2, c3);
    const Elem p = field.div(field.square(c2) + field.mul(c1, c3), c3_sq);
    const Elem r = field.div(field.mul(c1, c2) + field.mul(c0, c3), c3_sq);

    const PolyRing<GF2n> ring(field);
    auto rest = ring.make({r, p, field.zero(), field.one()});
    std::vector<Elem> roots;
    for (const Elem x : ring.roots_by_enumeration(rest)) {
        const auto lin = ring.linear(x);
        for (;;) {
            auto [quot, rem] = ring.divmod(rest, lin);
            if (!rem.is_zero()) break;
            roots.push_back(x + shift);
            rest = std::move(quot);
        }
    }
    std::sort(roots.begin(), roots.end(), [](Elem u, Elem v) { return u.bits < v.bits; });
    return roots;
}

WilliamsScan williams_scan(const GF2n& field) {
    WilliamsScan s;
    s.n = field.degree();
    const std::uint32_t q = field.order();
    for (std::uint32_t a = 0; a < q; ++a) {
        for (std::uint32_t b = 1; b < q; ++b) {
            const int count = cubic_root_count(field, Elem{a}, Elem{b});
            const int pred = williams_predicate(field, Elem{a}, Elem{b});
            ++s.pairs;
            ++s.root_count_histogram[count];
            if ((count == 1) != (pred == 1)) ++s.violations;
        }
    }
    return s;
}

}  // namespace ptri
