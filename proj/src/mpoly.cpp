#include "ptri/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>

namespace ptri {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "a_1", "a", "b", "k", "z", "Y", "X", "c_0", "c_1", "c_2", "c_3", "D_0", "D_1", "D_2"};

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

// Symmetric difference of two sorted monomial lists.
std::vector<Monomial> sym_diff(const std::vector<Monomial>& x, const std::vector<Monomial>& y) {
    std::vector<Monomial> out;
    out.reserve(x.size() + y.size());
    std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

bool divides(const Monomial& d, const Monomial& m) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
        if (d.exp[i] > m.exp[i]) return false;
    }
    return true;
}

Monomial quotient(const Monomial& m, const Monomial& d) {
    Monomial out;
    for (std::size_t i = 0; i < kNumVars; ++i) out.exp[i] = static_cast<std::uint8_t>(m.exp[i] - d.exp[i]);
    return out;
}

MPoly times_monomial(const MPoly& p, const Monomial& m) {
    std::vector<Monomial> out;
    out.reserve(p.size());
    for (const auto& t : p.monomials()) out.push_back(t * m);
    return MPoly::from_monomials(std::move(out));
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    MPoly parse() {
        MPoly p = expr();
        skip_space();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
    }

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_factor() {
        skip_space();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return c == '(' || c == '*' || std::isalnum(static_cast<unsigned char>(c));
    }

    MPoly expr() {
        MPoly p = term();
        while (peek('+') || peek('-')) {
            ++pos_;
            p += term();
        }
        return p;
    }

    MPoly term() {
        MPoly p = factor();
        while (starts_factor()) {
            if (peek('*')) ++pos_;
            p *= factor();
        }
        return p;
    }

    MPoly factor() {
        MPoly base = primary();
        if (peek('^')) {
            ++pos_;
            base = base.pow(static_cast<unsigned>(integer(true)));
        }
        return base;
    }

    long integer(bool allow_braces) {
        skip_space();
        const bool braced = allow_braces && pos_ < s_.size() && s_[pos_] == '{';
        if (braced) ++pos_;
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        const long value = std::stol(std::string(s_.substr(start, pos_ - start)));
        if (braced) {
            if (pos_ >= s_.size() || s_[pos_] != '}') fail("expected '}'");
            ++pos_;
        }
        return value;
    }

    MPoly primary() {
        skip_space();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return MPoly::constant(integer(false) % 2 != 0);
        if (!std::isalpha(static_cast<unsigned char>(c))) fail("unexpected '" + std::string(1, c) + "'");
        std::string name(1, c);
        ++pos_;
        // Only a single digit may follow an underscore without braces (a_1b = a_1 * b).
        if (pos_ < s_.size() && s_[pos_] == '_') {
            ++pos_;
            name += '_';
            name += std::to_string(integer(true));
        }
        for (std::size_t v = 0; v < kNumVars; ++v) {
            if (kVarNames[v] == name) return MPoly::var(static_cast<Var>(v));
        }
        fail("unknown symbol '" + name + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string_view var_name(Var v) { return kVarNames[idx(v)]; }

int Monomial::total_degree() const {
    int d = 0;
    for (auto e : exp) d += e;
    return d;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial out;
    for (std::size_t i = 0; i < kNumVars; ++i) {
        const int e = x.exp[i] + y.exp[i];
        if (e >= kMaxVarDegree) {
            throw std::overflow_error("degree cap exceeded in " + std::string(kVarNames[i]));
        }
        out.exp[i] = static_cast<std::uint8_t>(e);
    }
    return out;
}

MPoly MPoly::from_monomials(std::vector<Monomial> monomials) {
    std::sort(monomials.begin(), monomials.end());
    MPoly p;
    p.terms_.reserve(monomials.size());
    for (std::size_t i = 0; i < monomials.size();) {
        std::size_t j = i;
        while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
        if ((j - i) % 2 == 1) p.terms_.push_back(monomials[i]);
        i = j;
    }
    return p;
}

MPoly MPoly::constant(bool c) {
    MPoly p;
    if (c) p.terms_.push_back(Monomial{});
    return p;
}

MPoly MPoly::var(Var v, int power) {
    if (power < 0 || power >= kMaxVarDegree) throw std::overflow_error("degree cap exceeded");
    Monomial m;
    m.exp[idx(v)] = static_cast<std::uint8_t>(power);
    MPoly p;
    p.terms_.push_back(m);
    return p;
}

MPoly MPoly::parse(std::string_view text) { return Parser(text).parse(); }

bool MPoly::contains(const Monomial& m) const {
    return std::binary_search(terms_.begin(), terms_.end(), m);
}

int MPoly::degree(Var v) const {
    int d = 0;
    for (const auto& m : terms_) d = std::max(d, m.degree(v));
    return terms_.empty() ? -1 : d;
}

MPoly MPoly::coefficient(Var v, int d) const {
    std::vector<Monomial> out;
    for (auto m : terms_) {
        if (m.degree(v) != d) continue;
        m.exp[idx(v)] = 0;
        out.push_back(m);
    }
    return from_monomials(std::move(out));
}

MPoly& MPoly::operator+=(const MPoly& other) {
    terms_ = sym_diff(terms_, other.terms_);
    return *this;
}

MPoly operator*(const MPoly& x, const MPoly& y) {
    std::vector<Monomial> out;
    out.reserve(x.size() * y.size());
    for (const auto& m : x.terms_) {
        for (const auto& n : y.terms_) out.push_back(m * n);
    }
    return MPoly::from_monomials(std::move(out));
}

MPoly MPoly::square() const {
    // Cross terms cancel in characteristic 2; squaring preserves the order.
    MPoly p;
    p.terms_.reserve(terms_.size());
    for (const auto& m : terms_) p.terms_.push_back(m * m);
    return p;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result = constant(true);
    MPoly base = *this;
    while (e != 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e != 0) base = base.square();
    }
    return result;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t v = 0; v < kNumVars; ++v) {
            const int e = it->exp[v];
            if (e == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += kVarNames[v];
            if (e > 1) mono += "^" + std::to_string(e);
        }
        out += mono.empty() ? "1" : mono;
    }
    return out;
}

MPoly reduce_z(const MPoly& p) {
    static const MPoly z_plus_k = MPoly::var(Var::z) + MPoly::var(Var::k);
    std::vector<Monomial> done;
    MPoly pending = p;
    while (!pending.is_zero()) {
        MPoly next;
        for (auto m : pending.monomials()) {
            const int e = m.degree(Var::z);
            if (e <= 1) {
                done.push_back(m);
                continue;
            }
            // z^e = z^(e-2) (z + k)
            m.exp[idx(Var::z)] = static_cast<std::uint8_t>(e - 2);
            next += times_monomial(z_plus_k, m);
        }
        pending = std::move(next);
    }
    return MPoly::from_monomials(std::move(done));
}

MPoly substitute(const MPoly& p, Var v, const MPoly& value) {
    const std::pair<Var, MPoly> sub[] = {{v, value}};
    return substitute_cleared(p, sub, MPoly::constant(true));
}

MPoly substitute_cleared(const MPoly& p, std::span<const std::pair<Var, MPoly>> numerators,
                         const MPoly& denominator) {
    int top = 0;
    for (const auto& m : p.monomials()) {
        int d = 0;
        for (const auto& [v, num] : numerators) d += m.degree(v);
        top = std::max(top, d);
    }
    std::vector<MPoly> den_powers{MPoly::constant(true)};
    for (int i = 1; i <= top; ++i) den_powers.push_back(den_powers.back() * denominator);

    MPoly out;
    for (auto m : p.monomials()) {
        MPoly term = MPoly::constant(true);
        int d = 0;
        for (const auto& [v, num] : numerators) {
            const int e = m.degree(v);
            if (e == 0) continue;
            term *= num.pow(static_cast<unsigned>(e));
            m.exp[idx(v)] = 0;
            d += e;
        }
        out += times_monomial(term * den_powers[top - d], m);
    }
    return out;
}

DivisionResult divide(const MPoly& p, const MPoly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("division by the zero polynomial");
    const Monomial lead = divisor.monomials().back();
    std::vector<Monomial> quot;
    std::vector<Monomial> rem;
    MPoly rest = p;
    while (!rest.is_zero()) {
        const Monomial top = rest.monomials().back();
        if (divides(lead, top)) {
            const Monomial t = quotient(top, lead);
            quot.push_back(t);
            rest += times_monomial(divisor, t);
        } else {
            rem.push_back(top);
            rest += MPoly::from_monomials({top});
        }
    }
    return {MPoly::from_monomials(std::move(quot)), MPoly::from_monomials(std::move(rem))};
}

InexactDivision::InexactDivision(MPoly remainder)
    : std::runtime_error("inexact division; remainder has " + std::to_string(remainder.size()) +
                         " monomials"),
      remainder_(std::move(remainder)) {}

MPoly exact_divide(const MPoly& p, const MPoly& divisor) {
    auto r = divide(p, divisor);
    if (!r.exact()) throw InexactDivision(std::move(r.remainder));
    return std::move(r.quotient);
}

std::pair<int, MPoly> strip_factor(MPoly p, const MPoly& factor) {
    if (p.is_zero()) throw std::domain_error("cannot strip factors from zero");
    if (factor.size() == 1 && factor.monomials()[0] == Monomial{}) {
        throw std::domain_error("cannot strip a constant factor");
    }
    int e = 0;
    for (;;) {
        auto r = divide(p, factor);
        if (!r.exact()) break;
        p = std::move(r.quotient);
        ++e;
    }
    return {e, std::move(p)};
}

}  // namespace ptri
