#pragma once

#include <hyplat/lattice.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hyplat {

/// A named configuration of integral curve classes on one lattice, with the
/// pairwise intersection matrix cached.
class CurveConfig {
  public:
    CurveConfig() = default;
    CurveConfig(Lattice lat, std::vector<std::pair<std::string, LatticeVector>> entries)
        : lattice_(std::move(lat)) {
        std::set<std::string> seen;
        for (auto& [name, v] : entries) {
            if (!seen.insert(name).second)
                throw ContractViolation("duplicate curve name '" + name + "'");
            if (!lattice_.same_as(v.lattice))
                throw MismatchedLattices("curve '" + name + "' lies in another lattice");
            if (!v.is_integral())
                throw ContractViolation("curve '" + name + "' has non-integral coordinates");
            names_.push_back(name);
            curves_.push_back(std::move(v));
        }
        gram_ = RatMat(curves_.size(), curves_.size());
        for (std::size_t i = 0; i < curves_.size(); ++i)
            for (std::size_t j = i; j < curves_.size(); ++j)
                gram_(i, j) = gram_(j, i) = pair(curves_[i], curves_[j]);
    }

    const Lattice& lattice() const { return lattice_; }
    std::size_t size() const { return curves_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<LatticeVector>& curves() const { return curves_; }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const LatticeVector& curve(std::size_t i) const { return curves_[i]; }
    const Rat& pairing(std::size_t i, std::size_t j) const { return gram_(i, j); }

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return i;
        throw ContractViolation("unknown curve name '" + name + "'");
    }

  private:
    Lattice lattice_;
    std::vector<std::string> names_;
    std::vector<LatticeVector> curves_;
    RatMat gram_;
};

/// Exact negative-definiteness of the Gram matrix of a curve subset.
inline bool is_negative_definite(const std::vector<std::string>& subset, const CurveConfig& cfg) {
    RatMat g(subset.size(), subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = 0; j < subset.size(); ++j)
            g(i, j) = cfg.pairing(cfg.index_of(subset[i]), cfg.index_of(subset[j]));
    return is_negative_definite(g);
}

/// D = P + N with N = sum a_i N_i, a_i > 0, negative definite support,
/// P . C >= 0 for all C in the configuration and P . N_i = 0 on the support.
struct ZariskiPair {
    LatticeVector p, n;
    std::vector<std::pair<std::string, Rat>> components;  // support coefficients, cfg order
    std::vector<std::string> support;
};

namespace detail {

struct FujitaOptions {
    std::vector<std::size_t> order;       // processing order of curve indices
    std::vector<std::size_t> extra_seed;  // extra initial support (probe mode)
    bool drop_nonpositive = false;        // probe mode: discard seeded junk
};

inline ZariskiPair fujita_iterate(const LatticeVector& d, const CurveConfig& cfg,
                                  const FujitaOptions& opt) {
    if (!d.lattice.same_as(cfg.lattice()))
        throw MismatchedLattices("divisor lies outside the configuration's lattice");
    const std::size_t m = cfg.size();
    std::vector<std::size_t> order = opt.order;
    if (order.empty())
        for (std::size_t i = 0; i < m; ++i) order.push_back(i);

    std::vector<Rat> d_dot(m);
    for (std::size_t i = 0; i < m; ++i) d_dot[i] = pair(d, cfg.curve(i));

    std::vector<bool> mandatory(m, false), in_support(m, false);
    std::vector<std::size_t> support;
    for (std::size_t i : order)
        if (d_dot[i] < 0) {
            mandatory[i] = true;
            in_support[i] = true;
            support.push_back(i);
        }
    for (std::size_t i : opt.extra_seed)
        if (!in_support[i]) {
            in_support[i] = true;
            support.push_back(i);
        }

    std::vector<Rat> coeff(m, Rat(0));
    const std::size_t round_cap = 4 * (m + 2);
    for (std::size_t round = 0;; ++round) {
        if (round > round_cap) throw ContractViolation("support did not stabilize");
        const std::size_t size_at_round_start = support.size();
        std::fill(coeff.begin(), coeff.end(), Rat(0));
        if (!support.empty()) {
            RatMat g(support.size(), support.size());
            std::vector<Rat> rhs(support.size());
            for (std::size_t a = 0; a < support.size(); ++a) {
                rhs[a] = d_dot[support[a]];
                for (std::size_t b = 0; b < support.size(); ++b)
                    g(a, b) = cfg.pairing(support[a], support[b]);
            }
            if (!is_negative_definite(g))
                throw NotPseudoEffectiveRelative(
                    "support Gram matrix is not negative definite");
            auto sol = solve(g, rhs);
            if (!sol) throw ContractViolation("negative definite system failed to solve");
            // a_i <= 0 on a forced component means D is not decomposable here;
            // in probe mode, seeded extras with a_i <= 0 are simply discarded
            std::vector<std::size_t> keep;
            bool dropped = false;
            for (std::size_t a = 0; a < support.size(); ++a) {
                if ((*sol)[a] <= 0) {
                    if (!opt.drop_nonpositive || mandatory[support[a]])
                        throw NotPseudoEffectiveRelative(
                            "component '" + cfg.name(support[a]) +
                            "' received coefficient " + to_string((*sol)[a]));
                    in_support[support[a]] = false;
                    dropped = true;
                } else {
                    keep.push_back(support[a]);
                    coeff[support[a]] = (*sol)[a];
                }
            }
            if (dropped) {
                support = std::move(keep);
                continue;
            }
        }
        // P = D - N; enlarge the support by every curve P meets negatively
        LatticeVector n{cfg.lattice(), std::vector<Rat>(d.coords.size(), Rat(0))};
        for (std::size_t i : support) n = n + cfg.curve(i) * coeff[i];
        LatticeVector p = d - n;
        bool grew = false;
        for (std::size_t i : order) {
            if (in_support[i]) continue;
            if (pair(p, cfg.curve(i)) < 0) {
                in_support[i] = true;
                support.push_back(i);
                grew = true;
            }
        }
        // monotone growth of the Fujita support (drops above restart the round)
        if (support.size() < size_at_round_start)
            throw ContractViolation("support shrank during iteration");
        if (!grew) {
            ZariskiPair out{p, n, {}, {}};
            std::vector<std::size_t> sorted = support;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i : sorted) {
                out.components.emplace_back(cfg.name(i), coeff[i]);
                out.support.push_back(cfg.name(i));
            }
            // contract clauses, asserted before returning
            if (!(p + n == d)) throw ContractViolation("P + N != D");
            for (std::size_t i = 0; i < m; ++i)
                if (pair(p, cfg.curve(i)) < 0) throw ContractViolation("P is not cfg-nef");
            for (std::size_t i : support)
                if (pair(p, cfg.curve(i)) != 0)
                    throw ContractViolation("P . N_i != 0 on the support");
            return out;
        }
    }
}

}  // namespace detail

/// Fujita iteration for the Zariski decomposition of D relative to cfg.
/// Rationality is automatic: all arithmetic is exact.
inline ZariskiPair zariski_decompose(const LatticeVector& d, const CurveConfig& cfg) {
    return detail::fujita_iterate(d, cfg, {});
}

/// Idempotence helper: P decomposes as (P, 0).
inline bool decomposes_trivially(const LatticeVector& p, const CurveConfig& cfg) {
    ZariskiPair z = zariski_decompose(p, cfg);
    return z.n.is_zero();
}

struct ProbeReport {
    unsigned trials = 0;
    bool decomposable = false;  // false: every trial failed consistently
};

/// Re-runs the decomposition under shuffled curve orders and randomized
/// initial support supersets; throws NonUniqueResult on any divergence.
inline ProbeReport zariski_uniqueness_probe(const LatticeVector& d, const CurveConfig& cfg,
                                            unsigned trials, std::uint64_t seed = 0x5eed) {
    std::mt19937_64 rng(seed);
    bool have_ref = false, ref_failed = false;
    ZariskiPair ref;
    try {
        ref = zariski_decompose(d, cfg);
        have_ref = true;
    } catch (const NotPseudoEffectiveRelative&) {
        ref_failed = true;
    }
    for (unsigned t = 0; t < trials; ++t) {
        detail::FujitaOptions opt;
        for (std::size_t i = 0; i < cfg.size(); ++i) opt.order.push_back(i);
        std::shuffle(opt.order.begin(), opt.order.end(), rng);
        opt.drop_nonpositive = true;
        // seed extra curves, keeping the seeded support Gram negative definite
        std::vector<std::size_t> seeded;
        for (std::size_t i = 0; i < cfg.size(); ++i)
            if (pair(d, cfg.curve(i)) < 0) seeded.push_back(i);
        std::vector<std::size_t> extras;
        for (std::size_t i : opt.order) {
            if (std::find(seeded.begin(), seeded.end(), i) != seeded.end()) continue;
            if (rng() % 2) continue;
            std::vector<std::size_t> candidate = seeded;
            candidate.insert(candidate.end(), extras.begin(), extras.end());
            candidate.push_back(i);
            RatMat g(candidate.size(), candidate.size());
            for (std::size_t a = 0; a < candidate.size(); ++a)
                for (std::size_t b = 0; b < candidate.size(); ++b)
                    g(a, b) = cfg.pairing(candidate[a], candidate[b]);
            if (is_negative_definite(g)) extras.push_back(i);
        }
        opt.extra_seed = std::move(extras);
        try {
            ZariskiPair z = detail::fujita_iterate(d, cfg, opt);
            if (ref_failed)
                throw NonUniqueResult("trial succeeded where the reference failed");
            if (!(z.n == ref.n))
                throw NonUniqueResult("trial " + std::to_string(t) +
                                      " produced a different negative part");
        } catch (const NotPseudoEffectiveRelative&) {
            if (have_ref)
                throw NonUniqueResult("trial " + std::to_string(t) +
                                      " failed where the reference succeeded");
        }
    }
    return {trials, have_ref};
}

/// Lemma-level predicate: for a cfg-nef class M (M != 0) and a decomposable
/// D (D != 0) with M . D = 0, checks D^2 <= 0, and in the equality case that
/// M^2 = 0 with D proportional to M. Returns true when every clause holds.
inline bool verify_orthogonal_negativity(const LatticeVector& m, const LatticeVector& d) {
    if (m.is_zero() || d.is_zero()) throw ContractViolation("classes must be nonzero");
    if (pair(m, d) != 0) throw ContractViolation("M . D must vanish");
    Rat d2 = self_pair(d);
    if (d2 > 0) return false;
    if (d2 == 0) {
        if (self_pair(m) != 0) return false;
        // proportionality: cross products of coordinates vanish
        for (std::size_t i = 0; i < m.coords.size(); ++i)
            for (std::size_t j = i + 1; j < m.coords.size(); ++j)
                if (m.coords[i] * d.coords[j] != m.coords[j] * d.coords[i]) return false;
    }
    return true;
}

}  // namespace hyplat
