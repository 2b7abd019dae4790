#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lyz {

inline constexpr std::size_t kMaxVars = 16;
using Exponent = std::uint16_t;
using Coeff = std::uint32_t;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands built over different rings were combined.
class ContextMismatch : public Error {
public:
    using Error::Error;
};

/// Frobenius scaling or multiplication pushed an exponent past `Exponent`'s range.
class ExponentOverflow : public Error {
public:
    using Error::Error;
};

/// A configured computation budget (basis size, pair count, iteration count) ran out.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// Exponent vector. Only the first `n` slots of the owning ring are meaningful;
/// the rest stay zero so that equality can compare whole arrays.
struct Monomial {
    std::array<Exponent, kMaxVars> exp{};
    std::uint32_t degree = 0;

    bool operator==(const Monomial&) const = default;
    bool is_one() const { return degree == 0; }
};

Monomial mono_mul(const Monomial& a, const Monomial& b, std::size_t n);
Monomial mono_lcm(const Monomial& a, const Monomial& b, std::size_t n);
/// a / b, assuming b divides a.
Monomial mono_div(const Monomial& a, const Monomial& b, std::size_t n);
/// Every exponent multiplied by `factor`.
Monomial mono_scale(const Monomial& a, std::uint64_t factor, std::size_t n);

inline bool mono_divides(const Monomial& b, const Monomial& a, std::size_t n) {
    if (b.degree > a.degree) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (b.exp[i] > a.exp[i]) {
            return false;
        }
    }
    return true;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (a.exp[i] != 0 && b.exp[i] != 0) {
            return false;
        }
    }
    return true;
}

/// Coarse divisibility filter: bit k*4+j is set when exponent k is at least 2^j.
/// mask(b) must be a subset of mask(a) whenever b | a.
std::uint64_t mono_divmask(const Monomial& m, std::size_t n);

enum class OrderKind { GrevLex, Lex, BlockElimination };

class MonomialOrder {
public:
    static MonomialOrder grevlex() { return MonomialOrder(OrderKind::GrevLex, 0); }
    static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex, 0); }
    /// Variables in `block` are eliminated: any monomial involving them beats every
    /// monomial free of them. Grevlex is used inside each block.
    static MonomialOrder elimination(const std::vector<std::size_t>& block);

    OrderKind kind() const { return kind_; }
    std::uint32_t block_mask() const { return block_; }

    /// +1 if a > b, -1 if a < b, 0 if equal.
    int compare(const Monomial& a, const Monomial& b, std::size_t n) const {
        switch (kind_) {
        case OrderKind::GrevLex:
            if (a.degree != b.degree) {
                return a.degree > b.degree ? 1 : -1;
            }
            for (std::size_t i = n; i-- > 0;) {
                if (a.exp[i] != b.exp[i]) {
                    return a.exp[i] < b.exp[i] ? 1 : -1;
                }
            }
            return 0;
        case OrderKind::Lex:
            for (std::size_t i = 0; i < n; ++i) {
                if (a.exp[i] != b.exp[i]) {
                    return a.exp[i] > b.exp[i] ? 1 : -1;
                }
            }
            return 0;
        case OrderKind::BlockElimination:
            return compare_block(a, b, n);
        }
        return 0;
    }

    bool operator==(const MonomialOrder&) const = default;

private:
    MonomialOrder(OrderKind kind, std::uint32_t block) : kind_(kind), block_(block) {}
    int compare_block(const Monomial& a, const Monomial& b, std::size_t n) const;

    OrderKind kind_;
    std::uint32_t block_;
};

/// Polynomial ring F_p[X_1..X_n] with a fixed monomial order.
class Ring {
public:
    Ring(Coeff p, std::vector<std::string> var_names, MonomialOrder order = MonomialOrder::grevlex());

    Coeff characteristic() const { return p_; }
    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& var_names() const { return names_; }
    const MonomialOrder& order() const { return order_; }
    /// Index of a declared variable, or -1.
    int var_index(std::string_view name) const;

    Coeff add(Coeff a, Coeff b) const {
        const std::uint64_t s = std::uint64_t(a) + b;
        return Coeff(s >= p_ ? s - p_ : s);
    }
    Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : Coeff(std::uint64_t(a) + p_ - b); }
    Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
    Coeff mul(Coeff a, Coeff b) const { return Coeff((std::uint64_t(a) * b) % p_); }
    Coeff inv(Coeff a) const;
    Coeff from_int(std::int64_t v) const;

    int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, nvars()); }

    bool operator==(const Ring& other) const = default;

private:
    Coeff p_;
    std::vector<std::string> names_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Coeff p, std::vector<std::string> var_names,
                  MonomialOrder order = MonomialOrder::grevlex());
/// Ring with variables X1..Xn.
RingPtr make_ring(Coeff p, std::size_t n, MonomialOrder order = MonomialOrder::grevlex());

/// Throws ContextMismatch unless the two handles describe the same ring.
void check_same_ring(const RingPtr& a, const RingPtr& b);

bool is_prime(std::uint64_t p);

} // namespace lyz
