#include "ptri/gf2n.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

namespace ptri {

ReducibleModulusError::ReducibleModulusError(std::uint32_t modulus, std::uint32_t factor)
    : std::invalid_argument("modulus 0x" + to_hex(modulus) + " is reducible; factor 0x" +
                            to_hex(factor)),
      modulus_(modulus),
      factor_(factor) {}

namespace gf2poly {

int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - __builtin_clzll(p); }

std::uint64_t clmul(std::uint64_t x, std::uint64_t y) {
    std::uint64_t r = 0;
    while (y != 0) {
        if (y & 1) r ^= x;
        x <<= 1;
        y >>= 1;
    }
    return r;
}

std::uint64_t mod(std::uint64_t p, std::uint64_t m) {
    const int dm = degree(m);
    for (int dp = degree(p); dp >= dm; dp = degree(p)) p ^= m << (dp - dm);
    return p;
}

std::optional<std::uint32_t> find_factor(std::uint32_t p) {
    const int d = degree(p);
    for (std::uint32_t f = 2; degree(f) <= d / 2; ++f) {
        if (mod(p, f) == 0) return f;
    }
    return std::nullopt;
}

}  // namespace gf2poly

std::uint32_t default_modulus(int n) {
    if (n < 1 || n > GF2n::kMaxDegree) throw std::out_of_range("field degree must be in [1,16]");
    for (std::uint32_t m = 1u << n; m < (2u << n); ++m) {
        if (!gf2poly::find_factor(m)) return m;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

GF2n GF2n::make(int n, std::optional<std::uint32_t> modulus) {
    if (n < 1 || n > kMaxDegree) throw std::out_of_range("field degree must be in [1,16]");
    if (!modulus) return GF2n(n, default_modulus(n));
    if (gf2poly::degree(*modulus) != n) {
        throw std::invalid_argument("modulus 0x" + to_hex(*modulus) + " does not have degree " +
                                    std::to_string(n));
    }
    if (auto f = gf2poly::find_factor(*modulus)) throw ReducibleModulusError(*modulus, *f);
    return GF2n(n, *modulus);
}

std::uint32_t GF2n::mul_slow(std::uint32_t x, std::uint32_t y) const {
    return static_cast<std::uint32_t>(gf2poly::mod(gf2poly::clmul(x, y), modulus_));
}

GF2n::GF2n(int n, std::uint32_t modulus) : n_(n), modulus_(modulus), q_(1u << n) {
    auto t = std::make_shared<Tables>();
    const std::uint32_t group = q_ - 1;

    // First element of full multiplicative order becomes the log base.
    std::uint32_t g = 1;
    for (std::uint32_t cand = (q_ == 2 ? 1 : 2); cand < q_; ++cand) {
        std::uint32_t x = cand;
        std::uint32_t ord = 1;
        while (x != 1) {
            x = mul_slow(x, cand);
            ++ord;
        }
        if (ord == group) {
            g = cand;
            break;
        }
    }
    generator_ = Elem{g};

    t->exp.resize(2 * static_cast<std::size_t>(group));
    t->log.assign(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < group; ++i) {
        t->exp[i] = x;
        t->exp[i + group] = x;
        t->log[x] = i;
        x = mul_slow(x, g);
    }
    tables_ = t;

    // Trace is F_2-linear; record its values on the monomial basis.
    for (int i = 0; i < n_; ++i) {
        if (trace_by_definition(Elem{1u << i})) t->trace_mask |= 1u << i;
    }

    // Row-reduce the matrix of x -> x^2 + x once; solving is then a sweep.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rows(n_, {0, 0});
    for (int i = 0; i < n_; ++i) {
        std::uint32_t img = mul_slow(1u << i, 1u << i) ^ (1u << i);
        std::uint32_t pre = 1u << i;
        while (img != 0) {
            const int top = gf2poly::degree(img);
            if (rows[top].first == 0) {
                rows[top] = {img, pre};
                break;
            }
            img ^= rows[top].first;
            pre ^= rows[top].second;
        }
    }
    t->as_rows = std::move(rows);
}

Elem GF2n::element(std::uint32_t bits) const {
    if (bits >= q_) throw std::out_of_range("value 0x" + to_hex(bits) + " exceeds field size");
    return Elem{bits};
}

Elem GF2n::inv(Elem x) const {
    if (x.is_zero()) throw std::domain_error("inverse of zero");
    return Elem{tables_->exp[(q_ - 1 - tables_->log[x.bits]) % (q_ - 1)]};
}

Elem GF2n::pow(Elem x, std::uint64_t e) const {
    Elem result = one();
    while (e != 0) {
        if (e & 1) result = mul(result, x);
        x = square(x);
        e >>= 1;
    }
    return result;
}

Elem GF2n::sqrt(Elem x) const {
    for (int i = 1; i < n_; ++i) x = square(x);
    return x;
}

int GF2n::trace_by_definition(Elem x) const {
    Elem acc{0};
    Elem p = x;
    for (int i = 0; i < n_; ++i) {
        acc += p;
        p = square(p);
    }
    if (acc.bits > 1) throw std::logic_error("trace left F_2");
    return static_cast<int>(acc.bits);
}

std::optional<std::pair<Elem, Elem>> GF2n::solve_artin_schreier(Elem c) const {
    std::uint32_t rest = c.bits;
    std::uint32_t root = 0;
    for (int bit = n_ - 1; bit >= 0 && rest != 0; --bit) {
        if (!((rest >> bit) & 1)) continue;
        const auto& row = tables_->as_rows[bit];
        if (row.first == 0) return std::nullopt;
        rest ^= row.first;
        root ^= row.second;
    }
    if (rest != 0) return std::nullopt;
    Elem r0{root};
    Elem r1 = r0 + one();
    if (r1 < r0) std::swap(r0, r1);
    return std::make_pair(r0, r1);
}

std::uint32_t GF2n::log(Elem x) const {
    if (x.is_zero()) throw std::domain_error("logarithm of zero");
    return tables_->log[x.bits];
}

std::string to_hex(std::uint32_t bits) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%x", bits);
    return buf;
}

std::uint32_t parse_hex(std::string_view text) {
    if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("invalid hex value '" + std::string(text) + "'");
    }
    return value;
}

std::string format_field_elem(const GF2n& field, Elem x) {
    return "n:" + std::to_string(field.degree()) + ",mod:" + to_hex(field.modulus()) +
           ",val:" + to_hex(x.bits);
}

std::pair<GF2n, Elem> parse_field_elem(std::string_view text) {
    std::optional<int> n;
    std::optional<std::uint32_t> mod;
    std::optional<std::uint32_t> val;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw std::invalid_argument("malformed field element '" + std::string(item) + "'");
        }
        const auto key = item.substr(0, colon);
        const auto value = item.substr(colon + 1);
        if (key == "n") {
            int v = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc{} || ptr != value.data() + value.size()) {
                throw std::invalid_argument("invalid degree '" + std::string(value) + "'");
            }
            n = v;
        } else if (key == "mod") {
            mod = parse_hex(value);
        } else if (key == "val") {
            val = parse_hex(value);
        } else {
            throw std::invalid_argument("unknown key '" + std::string(key) + "'");
        }
    }
    if (!n || !val) throw std::invalid_argument("field element needs n and val");
    GF2n field = GF2n::make(*n, mod);
    return {field, field.element(*val)};
}

}  // namespace ptri
