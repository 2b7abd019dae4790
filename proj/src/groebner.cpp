#include "lyubeznik/groebner.hpp"

#include <algorithm>
#include <mutex>

namespace lyz {

GroebnerLimits& groebner_limits() {
    static GroebnerLimits limits;
    return limits;
}

GroebnerStats& groebner_stats() {
    thread_local GroebnerStats stats;
    return stats;
}

std::uint32_t weighted_degree(const TermList& t, std::span<const std::int32_t> shifts) {
    std::int64_t d = 0;
    for (const auto& term : t) {
        std::int64_t w = term.mono.degree;
        if (!shifts.empty()) {
            w += shifts[term.comp];
        }
        d = std::max(d, w);
    }
    return std::uint32_t(d);
}

// ---------------------------------------------------------------- Reducer

Reducer::Reducer(const Ring& ring, const TermOrder& ord, const std::vector<TermList>* basis)
    : ring_(&ring), ord_(ord), basis_(basis) {
    masks_.reserve(basis->size());
    for (const auto& g : *basis) {
        masks_.push_back(mono_divmask(g.front().mono, ring.nvars()));
    }
}

int Reducer::find_divisor(const Term& t) const {
    const std::size_t n = ring_->nvars();
    const std::uint64_t mask = mono_divmask(t.mono, n);
    int best = -1;
    for (std::size_t i = 0; i < basis_->size(); ++i) {
        const Term& lead = (*basis_)[i].front();
        if (lead.comp != t.comp || (masks_[i] & ~mask) != 0 || !mono_divides(lead.mono, t.mono, n)) {
            continue;
        }
        if (best < 0 || (*basis_)[i].size() < (*basis_)[std::size_t(best)].size()) {
            best = int(i);
        }
    }
    return best;
}

void Reducer::reduce_top(TermList& f) const {
    const std::size_t n = ring_->nvars();
    TermList tmp;
    while (!f.empty()) {
        const int d = find_divisor(f.front());
        if (d < 0) {
            return;
        }
        const TermList& g = (*basis_)[std::size_t(d)];
        const Monomial m = mono_div(f.front().mono, g.front().mono, n);
        terms::add_scaled(tmp, f, ring_->neg(f.front().coef), m, g, ord_);
        f.swap(tmp);
    }
}

TermList Reducer::reduce_full(TermList f) const {
    const std::size_t n = ring_->nvars();
    TermList out;
    TermList tmp;
    std::size_t pos = 0;
    while (pos < f.size()) {
        const Term& t = f[pos];
        const int d = find_divisor(t);
        if (d < 0) {
            out.push_back(t);
            ++pos;
            continue;
        }
        const TermList& g = (*basis_)[std::size_t(d)];
        const Monomial m = mono_div(t.mono, g.front().mono, n);
        terms::add_scaled(tmp, std::span<const Term>(f).subspan(pos), ring_->neg(t.coef), m, g, ord_);
        f.swap(tmp);
        pos = 0;
    }
    return out;
}

// ---------------------------------------------------------------- Buchberger

namespace {

struct Elem {
    TermList poly;
    std::uint64_t mask = 0;
    std::uint32_t sugar = 0;
    bool redundant = false;
};

struct Pair {
    std::uint32_t i = 0;
    std::uint32_t j = 0;  // kInput: i indexes the input list
    Term lcm;
    std::uint32_t sugar = 0;
};

constexpr std::uint32_t kInput = 0xffffffffu;

class Buchberger {
public:
    Buchberger(const Ring& ring, const TermOrder& ord, bool ideal_case)
        : ring_(ring), ord_(ord), n_(ring.nvars()), ideal_case_(ideal_case), limits_(groebner_limits()) {}

    std::vector<TermList> run(std::vector<TermList> inputs) {
        auto& stats = groebner_stats();
        ++stats.runs;
        inputs_ = std::move(inputs);
        for (std::size_t k = 0; k < inputs_.size(); ++k) {
            auto& f = inputs_[k];
            terms::normalize(f, ord_);
            if (f.empty()) {
                continue;
            }
            Pair pr;
            pr.i = std::uint32_t(k);
            pr.j = kInput;
            pr.lcm = f.front();
            pr.sugar = weighted_degree(f, ord_.shifts);
            pairs_.push_back(pr);
        }
        std::size_t processed = 0;
        while (!pairs_.empty()) {
            const Pair pr = pop_min();
            if (++processed > limits_.max_pairs) {
                throw ResourceLimit("Groebner basis: pair budget of " + std::to_string(limits_.max_pairs) +
                                    " exhausted (basis size " + std::to_string(basis_.size()) + ")");
            }
            if (pr.sugar > limits_.max_degree) {
                throw ResourceLimit("Groebner basis: degree budget of " + std::to_string(limits_.max_degree) +
                                    " exceeded");
            }
            TermList h;
            std::uint32_t sugar = pr.sugar;
            if (pr.j == kInput) {
                h = std::move(inputs_[pr.i]);
            } else {
                h = s_vector(pr);
            }
            ++stats.pairs_reduced;
            reduce(h, sugar);
            if (h.empty()) {
                ++stats.zero_reductions;
                continue;
            }
            make_monic(h);
            insert(std::move(h), sugar);
            if (basis_.size() > limits_.max_basis_size) {
                throw ResourceLimit("Groebner basis: size budget of " + std::to_string(limits_.max_basis_size) +
                                    " exceeded");
            }
        }
        stats.max_basis = std::max(stats.max_basis, basis_.size());
        return finish();
    }

private:
    std::uint32_t term_weight(const Term& t) const {
        std::int64_t w = t.mono.degree;
        if (!ord_.shifts.empty()) {
            w += ord_.shifts[t.comp];
        }
        return std::uint32_t(w);
    }

    bool pair_less(const Pair& a, const Pair& b) const {
        if (a.sugar != b.sugar) {
            return a.sugar < b.sugar;
        }
        const int c = ord_.compare(a.lcm, b.lcm);
        if (c != 0) {
            return c < 0;
        }
        // Inputs first, then older pairs: keeps runs deterministic.
        if ((a.j == kInput) != (b.j == kInput)) {
            return a.j == kInput;
        }
        if (a.j != b.j) {
            return a.j < b.j;
        }
        return a.i < b.i;
    }

    Pair pop_min() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            if (pair_less(pairs_[k], pairs_[best])) {
                best = k;
            }
        }
        Pair pr = pairs_[best];
        pairs_[best] = pairs_.back();
        pairs_.pop_back();
        return pr;
    }

    TermList s_vector(const Pair& pr) const {
        const TermList& f = basis_[pr.i].poly;
        const TermList& g = basis_[pr.j].poly;
        const Monomial mf = mono_div(pr.lcm.mono, f.front().mono, n_);
        const Monomial mg = mono_div(pr.lcm.mono, g.front().mono, n_);
        TermList fs;
        fs.reserve(f.size() - 1);
        for (std::size_t k = 1; k < f.size(); ++k) {
            fs.push_back(Term{mono_mul(f[k].mono, mf, n_), f[k].comp, f[k].coef});
        }
        TermList out;
        terms::add_scaled(out, fs, ring_.neg(1), mg, std::span<const Term>(g).subspan(1), ord_);
        return out;
    }

    int find_divisor(const Term& t) const {
        const std::uint64_t mask = mono_divmask(t.mono, n_);
        int best = -1;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const Elem& e = basis_[i];
            const Term& lead = e.poly.front();
            if (lead.comp != t.comp || (e.mask & ~mask) != 0 || !mono_divides(lead.mono, t.mono, n_)) {
                continue;
            }
            if (best < 0 || e.poly.size() < basis_[std::size_t(best)].poly.size()) {
                best = int(i);
            }
        }
        return best;
    }

    void reduce(TermList& h, std::uint32_t& sugar) {
        TermList tmp;
        while (!h.empty()) {
            const int d = find_divisor(h.front());
            if (d < 0) {
                return;
            }
            const Elem& g = basis_[std::size_t(d)];
            const Monomial m = mono_div(h.front().mono, g.poly.front().mono, n_);
            sugar = std::max(sugar, g.sugar + m.degree);
            terms::add_scaled(tmp, h, ring_.neg(h.front().coef), m, g.poly, ord_);
            h.swap(tmp);
        }
    }

    void make_monic(TermList& h) const {
        const Coeff c = h.front().coef;
        if (c != 1) {
            terms::scale(h, ring_.inv(c), ring_);
        }
    }

    void insert(TermList h, std::uint32_t sugar) {
        const std::uint32_t k = std::uint32_t(basis_.size());
        const Term lead = h.front();

        // Gebauer-Moeller: candidate pairs (i, k).
        struct Cand {
            std::uint32_t i;
            Monomial lcm;
            bool coprime;
            bool keep;
        };
        std::vector<Cand> cands;
        for (std::uint32_t i = 0; i < k; ++i) {
            const Elem& e = basis_[i];
            if (e.redundant || e.poly.front().comp != lead.comp) {
                continue;
            }
            const Monomial& li = e.poly.front().mono;
            cands.push_back(Cand{i, mono_lcm(li, lead.mono, n_), ideal_case_ && mono_coprime(li, lead.mono, n_), true});
        }
        // Criterion M: drop pairs whose lcm is strictly divisible by another new lcm.
        for (auto& a : cands) {
            for (const auto& b : cands) {
                if (&a != &b && b.lcm.degree < a.lcm.degree && mono_divides(b.lcm, a.lcm, n_)) {
                    a.keep = false;
                    break;
                }
            }
        }
        // Criterion F and the product criterion on groups with equal lcm.
        for (std::size_t x = 0; x < cands.size(); ++x) {
            if (!cands[x].keep) {
                continue;
            }
            bool any_coprime = cands[x].coprime;
            for (std::size_t y = x + 1; y < cands.size(); ++y) {
                if (cands[y].keep && cands[y].lcm == cands[x].lcm) {
                    any_coprime = any_coprime || cands[y].coprime;
                    cands[y].keep = false;
                }
            }
            if (any_coprime) {
                cands[x].keep = false;
            }
        }
        // Criterion B on the old pairs.
        std::erase_if(pairs_, [&](const Pair& pr) {
            if (pr.j == kInput || pr.lcm.comp != lead.comp || !mono_divides(lead.mono, pr.lcm.mono, n_)) {
                return false;
            }
            const Monomial l1 = mono_lcm(basis_[pr.i].poly.front().mono, lead.mono, n_);
            const Monomial l2 = mono_lcm(basis_[pr.j].poly.front().mono, lead.mono, n_);
            return !(l1 == pr.lcm.mono) && !(l2 == pr.lcm.mono);
        });
        const std::uint32_t lead_w = term_weight(lead);
        for (const auto& c : cands) {
            if (!c.keep) {
                continue;
            }
            const Elem& e = basis_[c.i];
            Pair pr;
            pr.i = c.i;
            pr.j = k;
            pr.lcm = Term{c.lcm, lead.comp, 1};
            const std::uint32_t wi = term_weight(e.poly.front());
            const std::uint32_t sl = term_weight(pr.lcm);
            pr.sugar = std::max(e.sugar + (sl - wi), sugar + (sl - lead_w));
            pairs_.push_back(pr);
        }
        for (auto& e : basis_) {
            if (!e.redundant && e.poly.front().comp == lead.comp && mono_divides(lead.mono, e.poly.front().mono, n_)) {
                e.redundant = true;
            }
        }
        Elem e;
        e.mask = mono_divmask(lead.mono, n_);
        e.sugar = sugar;
        e.poly = std::move(h);
        basis_.push_back(std::move(e));
    }

    std::vector<TermList> finish() {
        std::vector<TermList> minimal;
        for (auto& e : basis_) {
            if (!e.redundant) {
                minimal.push_back(std::move(e.poly));
            }
        }
        std::sort(minimal.begin(), minimal.end(),
                  [&](const TermList& a, const TermList& b) { return ord_.greater(a.front(), b.front()); });
        Reducer red(ring_, ord_, &minimal);
        std::vector<TermList> out;
        out.reserve(minimal.size());
        for (const auto& g : minimal) {
            TermList tail(g.begin() + 1, g.end());
            TermList r = red.reduce_full(std::move(tail));
            TermList full;
            full.reserve(r.size() + 1);
            full.push_back(g.front());
            full.insert(full.end(), r.begin(), r.end());
            out.push_back(std::move(full));
        }
        return out;
    }

    const Ring& ring_;
    TermOrder ord_;
    std::size_t n_;
    bool ideal_case_;
    GroebnerLimits limits_;
    std::vector<TermList> inputs_;
    std::vector<Elem> basis_;
    std::vector<Pair> pairs_;
};

} // namespace

std::vector<TermList> groebner_basis_terms(const Ring& ring, std::vector<TermList> gens, const TermOrder& ord) {
    bool ideal_case = ord.split == 0;
    for (const auto& g : gens) {
        for (const auto& t : g) {
            if (t.comp != 0) {
                ideal_case = false;
                break;
            }
        }
    }
    return Buchberger(ring, ord, ideal_case).run(std::move(gens));
}

// ---------------------------------------------------------------- Submodule

struct Submodule::Cache {
    std::mutex mu;
    bool have_basis = false;
    std::vector<TermList> basis_terms;
    std::vector<FreeVector> basis;
    // Lifting data: basis of (g_i (+) e_i) over R^(rank + ngens) with the first block dominant.
    bool have_lift = false;
    std::vector<std::int32_t> lift_shifts;
    std::vector<TermList> lift_basis;
};

Submodule::Submodule(RingPtr ring, std::size_t rank)
    : ring_(std::move(ring)), rank_(rank), cache_(std::make_shared<Cache>()) {}

Submodule::Submodule(RingPtr ring, std::size_t rank, std::vector<FreeVector> generators)
    : ring_(std::move(ring)), rank_(rank), cache_(std::make_shared<Cache>()) {
    gens_.reserve(generators.size());
    for (auto& g : generators) {
        check_same_ring(ring_, g.ring());
        if (g.rank() != rank_) {
            throw Error("generator of rank " + std::to_string(g.rank()) + " in a submodule of R^" +
                        std::to_string(rank_));
        }
        gens_.push_back(std::move(g));
    }
}

Submodule Submodule::ideal(RingPtr ring, const std::vector<Polynomial>& gens) {
    std::vector<FreeVector> vs;
    vs.reserve(gens.size());
    for (const auto& g : gens) {
        vs.push_back(FreeVector::from_poly(g));
    }
    return Submodule(std::move(ring), 1, std::move(vs));
}

Submodule Submodule::full(RingPtr ring, std::size_t rank) {
    std::vector<FreeVector> vs;
    for (std::size_t i = 0; i < rank; ++i) {
        vs.push_back(FreeVector::unit(ring, rank, i));
    }
    return Submodule(ring, rank, std::move(vs));
}

const Submodule::Cache& Submodule::cache() const {
    std::lock_guard lock(cache_->mu);
    if (!cache_->have_basis) {
        std::vector<TermList> gens;
        gens.reserve(gens_.size());
        for (const auto& g : gens_) {
            if (!g.is_zero()) {
                gens.push_back(g.terms());
            }
        }
        cache_->basis_terms = groebner_basis_terms(*ring_, std::move(gens), plain_order(*ring_));
        cache_->basis.clear();
        for (const auto& t : cache_->basis_terms) {
            cache_->basis.emplace_back(ring_, rank_, t);
        }
        cache_->have_basis = true;
    }
    return *cache_;
}

const std::vector<FreeVector>& Submodule::basis() const { return cache().basis; }

Submodule Submodule::reduced() const {
    const Cache& c = cache();
    Submodule r(ring_, rank_, c.basis);
    r.cache_->basis_terms = c.basis_terms;
    r.cache_->basis = c.basis;
    r.cache_->have_basis = true;
    return r;
}

bool Submodule::is_full() const {
    const auto& b = basis();
    if (b.size() != rank_) {
        return false;
    }
    for (const auto& v : b) {
        if (!v.terms().front().mono.is_one()) {
            return false;
        }
    }
    return true;
}

FreeVector Submodule::normal_form(const FreeVector& v) const {
    check_same_ring(ring_, v.ring());
    if (v.rank() != rank_) {
        throw Error("normal form of a vector of rank " + std::to_string(v.rank()) + " modulo a submodule of R^" +
                    std::to_string(rank_));
    }
    const Cache& c = cache();
    Reducer red(*ring_, plain_order(*ring_), &c.basis_terms);
    FreeVector out(ring_, rank_, red.reduce_full(v.terms()));
    return out;
}

bool Submodule::contains(const FreeVector& v) const {
    check_same_ring(ring_, v.ring());
    if (v.rank() != rank_) {
        throw Error("membership test with mismatched rank");
    }
    if (v.is_zero()) {
        return true;
    }
    const Cache& c = cache();
    Reducer red(*ring_, plain_order(*ring_), &c.basis_terms);
    return red.reduce_full(v.terms()).empty();
}

bool Submodule::contains(const Submodule& other) const {
    if (other.rank_ != rank_) {
        throw Error("inclusion test with mismatched rank");
    }
    for (const auto& g : other.gens_) {
        if (!contains(g)) {
            return false;
        }
    }
    return true;
}

bool Submodule::operator==(const Submodule& other) const {
    check_same_ring(ring_, other.ring_);
    if (rank_ != other.rank_) {
        return false;
    }
    return cache().basis_terms == other.cache().basis_terms;
}

void Submodule::ensure_lift_data() const {
    std::lock_guard lock(cache_->mu);
    if (cache_->have_lift) {
        return;
    }
    const std::size_t s = gens_.size();
    std::vector<std::int32_t> shifts(rank_ + s, 0);
    std::vector<TermList> aug;
    aug.reserve(s);
    for (std::size_t i = 0; i < s; ++i) {
        shifts[rank_ + i] = std::int32_t(weighted_degree(gens_[i].terms()));
        TermList t = gens_[i].terms();
        t.push_back(Term{Monomial{}, std::uint32_t(rank_ + i), 1});
        aug.push_back(std::move(t));
    }
    cache_->lift_shifts = std::move(shifts);
    TermOrder ord{ring_.get(), std::uint32_t(rank_), cache_->lift_shifts};
    cache_->lift_basis = groebner_basis_terms(*ring_, std::move(aug), ord);
    cache_->have_lift = true;
}

std::optional<std::vector<Polynomial>> Submodule::lift(const FreeVector& v) const {
    check_same_ring(ring_, v.ring());
    if (v.rank() != rank_) {
        throw Error("lift of a vector with mismatched rank");
    }
    const std::size_t s = gens_.size();
    if (v.is_zero()) {
        return std::vector<Polynomial>(s, Polynomial(ring_));
    }
    ensure_lift_data();
    const TermOrder ord{ring_.get(), std::uint32_t(rank_), cache_->lift_shifts};
    TermList f = v.terms();
    terms::normalize(f, ord);
    // Only basis elements led in the first block matter while the lead stays there.
    std::vector<TermList> first;
    for (const auto& g : cache_->lift_basis) {
        if (g.front().comp < rank_) {
            first.push_back(g);
        }
    }
    Reducer red(*ring_, ord, &first);
    red.reduce_top(f);
    if (!f.empty() && f.front().comp < rank_) {
        return std::nullopt;
    }
    std::vector<TermList> parts(s);
    for (const auto& t : f) {
        parts[t.comp - rank_].push_back(Term{t.mono, 0, ring_->neg(t.coef)});
    }
    std::vector<Polynomial> out;
    out.reserve(s);
    for (auto& part : parts) {
        out.emplace_back(ring_, std::move(part));
    }
    return out;
}

Submodule Submodule::syzygies() const {
    const std::size_t s = gens_.size();
    ensure_lift_data();
    std::vector<FreeVector> syz;
    for (const auto& g : cache_->lift_basis) {
        if (g.front().comp < rank_) {
            continue;
        }
        TermList t = g;
        for (auto& term : t) {
            term.comp -= std::uint32_t(rank_);
        }
        syz.emplace_back(ring_, s, std::move(t));
    }
    return Submodule(ring_, s, std::move(syz));
}

Submodule Submodule::frobenius(unsigned e) const {
    std::vector<FreeVector> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) {
        gens.push_back(g.frobenius(e));
    }
    Submodule r(ring_, rank_, std::move(gens));
    std::lock_guard lock(cache_->mu);
    if (cache_->have_basis) {
        // Lead terms scale with the exponents, so the image of a reduced basis is again reduced.
        for (const auto& t : cache_->basis_terms) {
            r.cache_->basis_terms.push_back(terms::frobenius(t, e, *ring_));
            r.cache_->basis.emplace_back(ring_, rank_, r.cache_->basis_terms.back());
        }
        r.cache_->have_basis = true;
    }
    return r;
}

std::vector<Polynomial> Submodule::ideal_generators() const {
    if (rank_ != 1) {
        throw Error("ideal generators requested from a submodule of rank " + std::to_string(rank_));
    }
    std::vector<Polynomial> out;
    out.reserve(gens_.size());
    for (const auto& g : gens_) {
        out.push_back(g.coord(0));
    }
    return out;
}

std::string Submodule::to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i != 0) {
            s += ", ";
        }
        s += rank_ == 1 ? gens_[i].coord(0).to_string() : gens_[i].to_string();
    }
    return s + ">";
}

Submodule sub_sum(const Submodule& a, const Submodule& b) {
    check_same_ring(a.ring(), b.ring());
    if (a.rank() != b.rank()) {
        throw Error("sum of submodules with different ranks");
    }
    std::vector<FreeVector> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Submodule(a.ring(), a.rank(), std::move(gens));
}

std::vector<FreeVector> eliminate_first_block(const RingPtr& ring, std::size_t r, std::size_t s,
                                              std::vector<TermList> gens, std::vector<std::int32_t> shifts) {
    if (!shifts.empty() && shifts.size() != r + s) {
        throw Error("elimination shift vector has the wrong length");
    }
    const TermOrder ord{ring.get(), std::uint32_t(r), shifts};
    const auto basis = groebner_basis_terms(*ring, std::move(gens), ord);
    std::vector<FreeVector> out;
    for (const auto& g : basis) {
        if (g.front().comp < r) {
            continue;
        }
        TermList t = g;
        for (auto& term : t) {
            term.comp -= std::uint32_t(r);
        }
        out.emplace_back(ring, s, std::move(t));
    }
    return out;
}

} // namespace lyz
