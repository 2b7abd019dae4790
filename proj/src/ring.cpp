#include "lyubeznik/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <utility>

namespace lyz {

namespace {

constexpr std::uint32_t kExpMax = std::numeric_limits<Exponent>::max();

[[noreturn]] void overflow() {
    throw ExponentOverflow("monomial exponent exceeds " + std::to_string(kExpMax));
}

bool valid_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

} // namespace

Monomial mono_mul(const Monomial& a, const Monomial& b, std::size_t n) {
    Monomial r;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t e = std::uint32_t(a.exp[i]) + b.exp[i];
        if (e > kExpMax) {
            overflow();
        }
        r.exp[i] = Exponent(e);
    }
    r.degree = a.degree + b.degree;
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b, std::size_t n) {
    Monomial r;
    for (std::size_t i = 0; i < n; ++i) {
        r.exp[i] = std::max(a.exp[i], b.exp[i]);
        r.degree += r.exp[i];
    }
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b, std::size_t n) {
    Monomial r;
    for (std::size_t i = 0; i < n; ++i) {
        r.exp[i] = Exponent(a.exp[i] - b.exp[i]);
    }
    r.degree = a.degree - b.degree;
    return r;
}

Monomial mono_scale(const Monomial& a, std::uint64_t factor, std::size_t n) {
    Monomial r;
    std::uint64_t deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t e = std::uint64_t(a.exp[i]) * factor;
        if (e > kExpMax) {
            overflow();
        }
        r.exp[i] = Exponent(e);
        deg += e;
    }
    r.degree = std::uint32_t(deg);
    return r;
}

std::uint64_t mono_divmask(const Monomial& m, std::size_t n) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Exponent e = m.exp[i];
        const std::uint64_t base = std::uint64_t(1) << (4 * i);
        if (e >= 1) mask |= base;
        if (e >= 2) mask |= base << 1;
        if (e >= 4) mask |= base << 2;
        if (e >= 8) mask |= base << 3;
    }
    return mask;
}

MonomialOrder MonomialOrder::elimination(const std::vector<std::size_t>& block) {
    std::uint32_t mask = 0;
    for (std::size_t v : block) {
        if (v >= kMaxVars) {
            throw Error("elimination block names variable index " + std::to_string(v));
        }
        mask |= std::uint32_t(1) << v;
    }
    return MonomialOrder(OrderKind::BlockElimination, mask);
}

int MonomialOrder::compare_block(const Monomial& a, const Monomial& b, std::size_t n) const {
    // Two passes: first the eliminated block, then the rest, each as grevlex.
    for (int pass = 0; pass < 2; ++pass) {
        const bool want = pass == 0;
        std::uint32_t da = 0, db = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (bool((block_ >> i) & 1U) == want) {
                da += a.exp[i];
                db += b.exp[i];
            }
        }
        if (da != db) {
            return da > db ? 1 : -1;
        }
        for (std::size_t i = n; i-- > 0;) {
            if (bool((block_ >> i) & 1U) == want && a.exp[i] != b.exp[i]) {
                return a.exp[i] < b.exp[i] ? 1 : -1;
            }
        }
    }
    return 0;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

Ring::Ring(Coeff p, std::vector<std::string> var_names, MonomialOrder order)
    : p_(p), names_(std::move(var_names)), order_(order) {
    if (!is_prime(p_)) {
        throw Error("characteristic " + std::to_string(p_) + " is not prime");
    }
    if (names_.empty()) {
        throw Error("a ring needs at least one variable");
    }
    if (names_.size() > kMaxVars) {
        throw Error("at most " + std::to_string(kMaxVars) + " variables are supported");
    }
    std::set<std::string> seen;
    for (const auto& name : names_) {
        if (!valid_identifier(name)) {
            throw Error("invalid variable name '" + name + "'");
        }
        if (!seen.insert(name).second) {
            throw Error("duplicate variable name '" + name + "'");
        }
    }
}

int Ring::var_index(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) {
            return int(i);
        }
    }
    return -1;
}

Coeff Ring::inv(Coeff a) const {
    if (a == 0) {
        throw Error("division by zero in F_" + std::to_string(p_));
    }
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) {
        t += p_;
    }
    return Coeff(t);
}

Coeff Ring::from_int(std::int64_t v) const {
    std::int64_t r = v % std::int64_t(p_);
    if (r < 0) {
        r += p_;
    }
    return Coeff(r);
}

RingPtr make_ring(Coeff p, std::vector<std::string> var_names, MonomialOrder order) {
    return std::make_shared<const Ring>(p, std::move(var_names), order);
}

RingPtr make_ring(Coeff p, std::size_t n, MonomialOrder order) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("X" + std::to_string(i));
    }
    return make_ring(p, std::move(names), order);
}

void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) {
        return;
    }
    if (!a || !b || !(*a == *b)) {
        throw ContextMismatch("operands belong to different polynomial rings");
    }
}

} // namespace lyz
