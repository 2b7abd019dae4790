#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lyubeznik/free_vector.hpp"

namespace lyz {

/// Budgets for a single Buchberger run. Exceeding one throws ResourceLimit.
struct GroebnerLimits {
    std::size_t max_basis_size = 200000;
    std::size_t max_pairs = 20000000;
    std::uint32_t max_degree = 1u << 20;
};

/// Process-wide limits read at the start of every basis computation.
GroebnerLimits& groebner_limits();

struct GroebnerStats {
    std::size_t runs = 0;
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t max_basis = 0;
};

/// Cumulative counters for the calling thread.
GroebnerStats& groebner_stats();

/// Reduced monic Groebner basis of the span of `gens` under `ord`, sorted by
/// descending lead term. Inputs need not be normalized for `ord`.
std::vector<TermList> groebner_basis_terms(const Ring& ring, std::vector<TermList> gens, const TermOrder& ord);

/// Division by a fixed list of monic polynomials with distinct leads.
class Reducer {
public:
    Reducer(const Ring& ring, const TermOrder& ord, const std::vector<TermList>* basis);

    /// Index of a basis element whose lead divides `t`, preferring the shortest; -1 if none.
    int find_divisor(const Term& t) const;
    /// Reduce every term, so that nothing in the result is divisible by a lead.
    TermList reduce_full(TermList f) const;
    /// Reduce only while the lead term is divisible.
    void reduce_top(TermList& f) const;

private:
    const Ring* ring_;
    TermOrder ord_;
    const std::vector<TermList>* basis_;
    std::vector<std::uint64_t> masks_;
};

/// Finitely generated submodule of R^rank (rank 1: an ideal). Generators are
/// immutable; the reduced basis and the lifting data are computed once and
/// shared between copies.
class Submodule {
public:
    Submodule(RingPtr ring, std::size_t rank);
    Submodule(RingPtr ring, std::size_t rank, std::vector<FreeVector> generators);

    static Submodule ideal(RingPtr ring, const std::vector<Polynomial>& gens);
    /// The whole free module R^rank.
    static Submodule full(RingPtr ring, std::size_t rank);

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return rank_; }
    const std::vector<FreeVector>& generators() const { return gens_; }

    /// Reduced Groebner basis (term-over-position, lower component wins ties).
    const std::vector<FreeVector>& basis() const;
    /// The submodule generated by its own reduced basis, with the basis already attached.
    Submodule reduced() const;

    bool is_zero() const { return basis().empty(); }
    bool is_full() const;

    FreeVector normal_form(const FreeVector& v) const;
    bool contains(const FreeVector& v) const;
    bool contains(const Submodule& other) const;
    bool operator==(const Submodule& other) const;

    /// Coefficients c with sum c_i * generators()[i] == v, or nullopt when v is not a member.
    std::optional<std::vector<Polynomial>> lift(const FreeVector& v) const;
    /// Module of relations among generators(), inside R^(generators().size()).
    Submodule syzygies() const;

    /// Generators raised to the p^e-th power; the basis carries over when already known.
    Submodule frobenius(unsigned e) const;

    /// Rank-1 generators as polynomials.
    std::vector<Polynomial> ideal_generators() const;

    std::string to_string() const;

private:
    struct Cache;
    const Cache& cache() const;
    void ensure_lift_data() const;

    RingPtr ring_;
    std::size_t rank_;
    std::vector<FreeVector> gens_;
    std::shared_ptr<Cache> cache_;
};

Submodule sub_sum(const Submodule& a, const Submodule& b);

/// Runs an elimination over R^(r + s): `gens` live in R^(r+s), the first block
/// [0, r) dominates. Returns the second-block parts of basis elements whose
/// first block vanishes, as vectors of R^s.
std::vector<FreeVector> eliminate_first_block(const RingPtr& ring, std::size_t r, std::size_t s,
                                              std::vector<TermList> gens, std::vector<std::int32_t> shifts = {});

/// Largest total degree plus component shift among the terms, 0 for zero.
std::uint32_t weighted_degree(const TermList& t, std::span<const std::int32_t> shifts = {});

} // namespace lyz
