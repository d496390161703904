/*
   Copyright 2026 The polydiam authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file charsum.hpp
 * @brief Multiplicative characters of the extension field's unit group,
 *        weighted and unweighted character sums over the polynomial
 *        catalogs, their bound checks, Cayley spectra, and the exact
 *        k-fold representation counters.
 *
 * Characters are indexed by j in [0, N) with N = q^n - 1:
 * chi_j(gamma^t) = exp(2*pi*i*j*t/N) for the table's primitive gamma.
 * All evaluations go through one precomputed root-of-unity table, so floats
 * enter only at the final complex-exponential step; everything before that
 * is exact index arithmetic mod N.
 */

#ifndef POLYDIAM_CHARSUM_HPP
#define POLYDIAM_CHARSUM_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polydiam/cayley.hpp"
#include "polydiam/common.hpp"
#include "polydiam/dlog.hpp"
#include "polydiam/ff.hpp"
#include "polydiam/poly_enum.hpp"

namespace polydiam {

/// Root-of-unity table over the dlog group; the character evaluation engine.
class CharTable {
public:
    explicit CharTable(const DlogTable& dlog) : dlog_(&dlog), order_(dlog.order()) {
        roots_.resize(order_);
        for (std::uint64_t r = 0; r < order_; ++r) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(order_);
            roots_[r] = std::complex<double>(std::cos(angle), std::sin(angle));
        }
    }

    const DlogTable& dlog() const { return *dlog_; }
    const FieldContext& context() const { return dlog_->context(); }
    std::uint64_t order() const { return order_; }

    const std::complex<double>& root(std::uint64_t r) const { return roots_[r % order_]; }

    /// chi_j evaluated at gamma^t.
    std::complex<double> chi_at_exponent(std::uint64_t j, std::uint64_t t) const {
        return roots_[mul_mod(j, t)];
    }

    std::complex<double> chi(std::uint64_t j, const ExtElem& x) const {
        return chi_at_exponent(j, dlog_->log(x));
    }

    std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % order_);
    }

private:
    const DlogTable* dlog_;
    std::uint64_t order_;
    std::vector<std::complex<double>> roots_;
};

/// One character as a callable value.
struct Character {
    const CharTable* table = nullptr;
    std::uint64_t j = 0;

    std::complex<double> operator()(const ExtElem& x) const { return table->chi(j, x); }
    std::complex<double> at_exponent(std::uint64_t t) const { return table->chi_at_exponent(j, t); }
    bool is_principal() const { return j == 0; }
};

/// Sparse support of a sum: (exponent of the evaluation, integer weight).
using ExponentSupport = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

/// Exponents of all prime-power evaluations with their weights lambda.
/// Distinct catalog entries always land on distinct exponents: two monic
/// degree-d polynomials with equal evaluations differ by a polynomial of
/// degree < n vanishing at the root, which must be zero.
inline ExponentSupport weighted_support(const FieldContext& ctx, const PolyCatalog& catalog,
                                        const DlogTable& dlog) {
    if (catalog.d >= ctx.n()) throw precondition_error("weighted_support: catalog degree must be < n");
    ExponentSupport out;
    out.reserve(catalog.prime_powers.size());
    for (const WeightedPoly& w : catalog.prime_powers) {
        out.emplace_back(dlog.log(ctx.evaluate_at_alpha(w.poly)), w.lambda);
    }
    return out;
}

/// Exponents of the irreducible evaluations, all with weight 1.
inline ExponentSupport irreducible_support(const FieldContext& ctx, const PolyCatalog& catalog,
                                           const DlogTable& dlog) {
    if (catalog.d >= ctx.n()) throw precondition_error("irreducible_support: catalog degree must be < n");
    ExponentSupport out;
    out.reserve(catalog.irreducibles.size());
    for (const FqPoly& h : catalog.irreducibles) {
        out.emplace_back(dlog.log(ctx.evaluate_at_alpha(h)), 1);
    }
    return out;
}

/// All N character sums over one support in a single pass.  For entry
/// (t, w), character j receives w * root[(j*t) mod N]; iterating j with a
/// stepped index avoids the inner modulo entirely.
inline std::vector<std::complex<double>> char_sums_over_support(const CharTable& chars,
                                                                const ExponentSupport& support) {
    const std::uint64_t N = chars.order();
    std::vector<std::complex<double>> sums(N, {0.0, 0.0});
    for (const auto& [t, w] : support) {
        const double weight = static_cast<double>(w);
        std::uint64_t idx = 0;
        for (std::uint64_t j = 0; j < N; ++j) {
            sums[j] += weight * chars.root(idx);
            idx += t;
            if (idx >= N) idx -= N;
        }
    }
    return sums;
}

/// Weighted sum over the degree-d prime powers for one character index.
inline std::complex<double> compute_S(const FieldContext& ctx, const PolyCatalog& catalog,
                                      const CharTable& chars, std::uint64_t j) {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& [t, w] : weighted_support(ctx, catalog, chars.dlog())) {
        sum += static_cast<double>(w) * chars.chi_at_exponent(j, t);
    }
    return sum;
}

/// Unweighted sum over the degree-d irreducibles for one character index.
inline std::complex<double> compute_T(const FieldContext& ctx, const PolyCatalog& catalog,
                                      const CharTable& chars, std::uint64_t j) {
    std::complex<double> sum{0.0, 0.0};
    for (const auto& [t, w] : irreducible_support(ctx, catalog, chars.dlog())) {
        sum += chars.chi_at_exponent(j, t);
    }
    return sum;
}

struct CharSumRecord {
    std::uint64_t j = 0;
    std::complex<double> S{0.0, 0.0};
    std::complex<double> T{0.0, 0.0};
    double abs_S = 0.0;
    double abs_T = 0.0;
};

inline CharSumRecord compute_charsum_record(const FieldContext& ctx, const PolyCatalog& catalog,
                                            const CharTable& chars, std::uint64_t j) {
    CharSumRecord rec;
    rec.j = j;
    rec.S = compute_S(ctx, catalog, chars, j);
    rec.T = compute_T(ctx, catalog, chars, j);
    rec.abs_S = std::abs(rec.S);
    rec.abs_T = std::abs(rec.T);
    return rec;
}

// ---------------------------------------------------------------------------
// Bound verification reports.
// ---------------------------------------------------------------------------

/// Max of |S| over non-principal characters against the bound (n-1) q^{d/2}.
struct WeilReport {
    std::uint32_t d = 0;
    double max_abs_S = 0.0;
    std::uint64_t argmax_j = 0;
    double bound = 0.0;
    double ratio = 0.0;  // max_abs_S / bound, in [0, 1] when the bound holds
    bool pass = false;
};

inline WeilReport verify_weil(const FieldContext& ctx, const PolyCatalog& catalog, const CharTable& chars,
                              std::uint64_t char_cap = kDefaultCharCap) {
    const std::uint64_t N = chars.order();
    if (N > char_cap) {
        throw resource_error("verify_weil: group order " + std::to_string(N) + " exceeds character cap " +
                             std::to_string(char_cap) + " (POLYDIAM_CHAR_CAP)");
    }
    auto sums = char_sums_over_support(chars, weighted_support(ctx, catalog, chars.dlog()));
    WeilReport rep;
    rep.d = catalog.d;
    for (std::uint64_t j = 1; j < N; ++j) {
        const double a = std::abs(sums[j]);
        if (a > rep.max_abs_S) {
            rep.max_abs_S = a;
            rep.argmax_j = j;
        }
    }
    rep.bound = static_cast<double>(ctx.n() - 1) *
                std::pow(static_cast<double>(ctx.q()), static_cast<double>(catalog.d) / 2.0);
    rep.ratio = N > 1 ? rep.max_abs_S / rep.bound : 0.0;
    rep.pass = rep.max_abs_S <= rep.bound * (1.0 + 1e-6);
    return rep;
}

namespace detail {

/// Collision count by multiset combinatorics: products of m same-degree
/// irreducibles evaluated at the root collide exactly when the factor
/// multisets agree (degrees stay below n, so polynomial identity applies,
/// and factorization into irreducibles is unique).  A multiset with
/// multiplicities (m_1, ..., m_r) admits m!/prod(m_i!) orderings, so it
/// contributes the square of that.  Enumerate integer partitions of m (the
/// multiplicity shapes) and count labeled assignments per shape.
inline BigInt moment_collisions_by_multiset(std::uint64_t icount, std::uint32_t m) {
    const BigInt m_fact = factorial_big(m);
    BigInt total = 0;
    std::vector<std::uint32_t> parts;
    auto process = [&]() {
        const std::size_t r = parts.size();
        if (icount < r) return;  // not enough distinct irreducibles for this shape
        BigInt assignments = 1;  // falling factorial icount * ... * (icount - r + 1)
        for (std::size_t i = 0; i < r; ++i) assignments *= BigInt(icount - i);
        BigInt shape_sym = 1;  // parts of equal size are interchangeable
        std::size_t i = 0;
        while (i < r) {
            std::size_t jm = i;
            while (jm < r && parts[jm] == parts[i]) ++jm;
            shape_sym *= factorial_big(static_cast<std::uint32_t>(jm - i));
            i = jm;
        }
        BigInt denom = 1;
        for (std::uint32_t p : parts) denom *= factorial_big(p);
        const BigInt ways = m_fact / denom;  // orderings of one tuple with this multiset
        total += (assignments / shape_sym) * ways * ways;
    };
    auto walk = [&](auto&& self, std::uint32_t remaining, std::uint32_t max_part) -> void {
        if (remaining == 0) {
            process();
            return;
        }
        for (std::uint32_t p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            self(self, remaining - p, p);
            parts.pop_back();
        }
    };
    walk(walk, m, m);
    return total;
}

}  // namespace detail

/// The 2m-th moment identity: sum over all characters of |T|^{2m} equals
/// (q^n - 1) * N where N counts ordered pairs of m-tuples of irreducibles
/// whose products at the root coincide.  N is computed by two independent
/// exact routes (group convolution and multiset combinatorics) and the float
/// route must match within 1e-6 relative.
struct MomentReport {
    std::uint32_t m = 0;
    std::uint64_t icount = 0;
    double lhs = 0.0;                // float route: sum_j |T_j|^{2m}
    BigInt collision_count = 0;      // multiset route
    BigInt collision_count_conv = 0; // convolution route; must equal collision_count
    BigInt upper_bound = 0;          // m! * icount^m
    double rel_error = 0.0;          // |lhs - (q^n-1)*collision_count| / ((q^n-1)*collision_count)
    bool float_pass = false;
    bool exact_pass = false;  // conv route == multiset route
    bool upper_pass = false;  // collision_count <= m! * icount^m
    bool pass = false;
};

inline MomentReport verify_moment(const FieldContext& ctx, const PolyCatalog& catalog, const CharTable& chars,
                                  std::uint64_t char_cap = kDefaultCharCap) {
    const std::uint64_t N = chars.order();
    if (N > char_cap) {
        throw resource_error("verify_moment: group order " + std::to_string(N) + " exceeds character cap " +
                             std::to_string(char_cap) + " (POLYDIAM_CHAR_CAP)");
    }
    MomentReport rep;
    rep.m = moment_exponent(ctx.n(), catalog.d);
    if (rep.m == 0) throw precondition_error("verify_moment: needs d < n so that m >= 1");
    const ExponentSupport support = irreducible_support(ctx, catalog, chars.dlog());
    rep.icount = support.size();

    // guard for the u64 convolution counters: values are bounded by icount^m
    BigInt count_cap = boost::multiprecision::pow(BigInt(rep.icount), rep.m);
    if (count_cap > (BigInt(1) << 31)) {
        throw resource_error("verify_moment: icount^m exceeds the convolution counter guard 2^31");
    }

    // float route
    auto sums = char_sums_over_support(chars, support);
    double lhs = 0.0;
    for (const auto& s : sums) lhs += std::pow(std::norm(s), static_cast<double>(rep.m));
    rep.lhs = lhs;

    // convolution route: m-fold convolution of the exponent indicator over
    // Z_N, then sum of squares (coincidences of independent m-products)
    std::vector<std::uint64_t> conv(N, 0);
    conv[0] = 1;
    for (std::uint32_t step = 0; step < rep.m; ++step) {
        std::vector<std::uint64_t> next(N, 0);
        for (std::uint64_t v = 0; v < N; ++v) {
            if (!conv[v]) continue;
            for (const auto& [t, w] : support) {
                std::uint64_t target = v + t;
                if (target >= N) target -= N;
                next[target] += conv[v];
            }
        }
        conv = std::move(next);
    }
    BigInt conv_sq = 0;
    for (std::uint64_t v = 0; v < N; ++v) conv_sq += BigInt(conv[v]) * conv[v];
    rep.collision_count_conv = conv_sq;

    // multiset route (independent of the group entirely)
    rep.collision_count = detail::moment_collisions_by_multiset(rep.icount, rep.m);

    rep.upper_bound = factorial_big(rep.m) * count_cap;
    const BigInt rhs_exact = BigInt(N) * rep.collision_count;
    const double rhs = rhs_exact.convert_to<double>();
    rep.rel_error = rhs > 0 ? std::abs(lhs - rhs) / rhs : std::abs(lhs);
    rep.float_pass = rep.rel_error <= 1e-6;
    rep.exact_pass = (rep.collision_count == rep.collision_count_conv);
    rep.upper_pass = (rep.collision_count <= rep.upper_bound);
    rep.pass = rep.float_pass && rep.exact_pass && rep.upper_pass;
    return rep;
}

/// Orthogonality of every character against the principal one: the full sum
/// over the group is N for j = 0 and 0 otherwise.  The float route bounds
/// the numeric sums; the exact route counts how often each root index is
/// hit: for gcd g = (j, N), index r is hit g times when g | r and never
/// otherwise, which forces the sum to vanish by the symmetry of the
/// (N/g)-th roots of unity.  Both routes are quadratic in N.
struct OrthogonalityReport {
    double principal = 0.0;
    double max_abs_offprincipal = 0.0;
    double tol = 0.0;
    bool float_pass = false;
    bool exact_pass = false;
    bool pass = false;
};

inline OrthogonalityReport verify_orthogonality(const CharTable& chars, std::uint64_t quad_cap = 16384) {
    const std::uint64_t N = chars.order();
    if (N > quad_cap) {
        throw resource_error("verify_orthogonality: quadratic check; group order " + std::to_string(N) +
                             " exceeds cap " + std::to_string(quad_cap));
    }
    OrthogonalityReport rep;
    rep.tol = 1e-6 * static_cast<double>(N);
    bool exact_ok = true;
    std::vector<std::uint32_t> hits(N);
    for (std::uint64_t j = 0; j < N; ++j) {
        std::complex<double> sum{0.0, 0.0};
        std::fill(hits.begin(), hits.end(), 0);
        std::uint64_t idx = 0;
        for (std::uint64_t t = 0; t < N; ++t) {
            sum += chars.root(idx);
            hits[idx] += 1;
            idx += j;
            if (idx >= N) idx -= N;
        }
        if (j == 0) {
            rep.principal = sum.real();
        } else {
            rep.max_abs_offprincipal = std::max(rep.max_abs_offprincipal, std::abs(sum));
        }
        const std::uint64_t g = std::gcd(j, N);
        for (std::uint64_t r = 0; r < N; ++r) {
            const std::uint32_t expected = (r % g == 0) ? static_cast<std::uint32_t>(g) : 0;
            if (hits[r] != expected) exact_ok = false;
        }
    }
    rep.float_pass = std::abs(rep.principal - static_cast<double>(N)) <= rep.tol &&
                     rep.max_abs_offprincipal <= rep.tol;
    rep.exact_pass = exact_ok;
    rep.pass = rep.float_pass && rep.exact_pass;
    return rep;
}

/// Multiplicativity of every character on every pair of group elements.
/// Verified through two exhaustive exact lemmas plus a direct float check:
/// (1) the dlog is a homomorphism onto Z_N (all pairs, exact integers);
/// (2) the root table is additive: root[a]*root[b] = root[(a+b) mod N]
///     (all pairs, float);
/// together these give chi_j(xy) = chi_j(x) chi_j(y) for every j and every
/// pair, since chi_j(x) is defined as root[(j*log x) mod N].  The direct
/// check re-evaluates that composition for every j on a coarse pair grid.
struct MultiplicativityReport {
    std::uint64_t log_hom_mismatches = 0;
    double max_root_additivity_err = 0.0;
    double max_direct_err = 0.0;
    bool pass = false;
};

inline MultiplicativityReport verify_multiplicativity(const CharTable& chars, std::uint64_t quad_cap = 16384) {
    const std::uint64_t N = chars.order();
    if (N > quad_cap) {
        throw resource_error("verify_multiplicativity: quadratic check; group order " + std::to_string(N) +
                             " exceeds cap " + std::to_string(quad_cap));
    }
    const DlogTable& dlog = chars.dlog();
    const FieldContext& ctx = chars.context();
    MultiplicativityReport rep;

    for (std::uint64_t a = 0; a < N; ++a) {
        const std::uint64_t la = a;  // exponents enumerate the group
        const ExtElem ea = dlog.exp(a);
        for (std::uint64_t b = 0; b < N; ++b) {
            std::uint64_t expected = la + b;
            if (expected >= N) expected -= N;
            if (dlog.log(ctx.mul(ea, dlog.exp(b))) != expected) rep.log_hom_mismatches += 1;
        }
    }
    for (std::uint64_t a = 0; a < N; ++a) {
        for (std::uint64_t b = 0; b < N; ++b) {
            std::uint64_t c = a + b;
            if (c >= N) c -= N;
            rep.max_root_additivity_err =
                std::max(rep.max_root_additivity_err, std::abs(chars.root(a) * chars.root(b) - chars.root(c)));
        }
    }
    const std::uint64_t stride = std::max<std::uint64_t>(1, N / 16);
    for (std::uint64_t j = 0; j < N; ++j) {
        for (std::uint64_t ta = 0; ta < N; ta += stride) {
            for (std::uint64_t tb = 0; tb < N; tb += stride) {
                const ExtElem x = dlog.exp(ta), y = dlog.exp(tb);
                const double err = std::abs(chars.chi(j, ctx.mul(x, y)) - chars.chi(j, x) * chars.chi(j, y));
                rep.max_direct_err = std::max(rep.max_direct_err, err);
            }
        }
    }
    rep.pass = rep.log_hom_mismatches == 0 && rep.max_root_additivity_err <= 1e-9 && rep.max_direct_err <= 1e-9;
    return rep;
}

/// Eigenvalues of the Cayley digraph: for an abelian group the characters
/// diagonalize the adjacency operator, so lambda_j is the character sum over
/// the generator multiset.  lambda_0 equals the regularity.
inline std::vector<std::complex<double>> cayley_spectrum(const GeneratorSet& gens, const CharTable& chars) {
    ExponentSupport support;
    support.reserve(gens.elements.size());
    for (const auto& e : gens.elements) {
        support.emplace_back(chars.dlog().log(e.value), e.multiplicity);
    }
    return char_sums_over_support(chars, support);
}

// ---------------------------------------------------------------------------
// Exact k-fold representation counters.
// ---------------------------------------------------------------------------

/// Exact counts, one per group exponent, of weighted k-fold product
/// representations.  counts[t] refers to the element gamma^t.
struct RepCountVector {
    std::uint32_t k = 0;
    std::uint32_t m = 0;
    std::vector<BigInt> counts;
    BigInt total = 0;
    BigInt min_count = 0;
    BigInt max_count = 0;
    bool all_positive = false;
    long double mean = 0.0L;               // total / (q^n - 1)
    long double max_abs_deviation = 0.0L;  // max over v of |counts[v] - mean|
    long double deviation_bound = 0.0L;    // closed-form bound on the deviation
    bool deviation_ok = false;
};

namespace detail {

inline void convolve_in_place(std::vector<BigInt>& counts, const ExponentSupport& support, std::uint64_t N) {
    std::vector<BigInt> next(N, BigInt(0));
    for (std::uint64_t v = 0; v < N; ++v) {
        if (counts[v] == 0) continue;
        for (const auto& [t, w] : support) {
            std::uint64_t target = v + t;
            if (target >= N) target -= N;
            if (w == 1) {
                next[target] += counts[v];
            } else {
                next[target] += counts[v] * w;
            }
        }
    }
    counts = std::move(next);
}

inline void finalize_repcount(RepCountVector& rep, std::uint64_t N) {
    rep.total = 0;
    rep.min_count = rep.counts[0];
    rep.max_count = rep.counts[0];
    for (const BigInt& c : rep.counts) {
        rep.total += c;
        if (c < rep.min_count) rep.min_count = c;
        if (c > rep.max_count) rep.max_count = c;
    }
    rep.all_positive = rep.min_count > 0;
    rep.mean = rep.total.convert_to<long double>() / static_cast<long double>(N);
    const long double dev_hi = rep.max_count.convert_to<long double>() - rep.mean;
    const long double dev_lo = rep.mean - rep.min_count.convert_to<long double>();
    rep.max_abs_deviation = std::max(dev_hi, dev_lo);
}

}  // namespace detail

/// Lambda-weighted counter: representations of each v as a product of
/// (k - 2m) prime-power evaluations, weighted by lambda each, and 2m
/// unweighted irreducible evaluations.  Total mass is
/// q^{d(k-2m)} * (#I_d)^{2m}; the deviation from the mean is bounded by
/// m! (n-1)^{k-2m} q^{d(k/2-m)} (#I_d)^m.
inline RepCountVector rep_count_Mk(const FieldContext& ctx, const PolyCatalog& catalog, const DlogTable& dlog,
                                   std::uint32_t k, std::uint64_t rep_cap = kDefaultRepCountCap) {
    const std::uint64_t N = ctx.group_order();
    if (N > rep_cap) {
        throw resource_error("rep_count_Mk: group order " + std::to_string(N) + " exceeds cap " +
                             std::to_string(rep_cap) + " (POLYDIAM_REPCOUNT_CAP)");
    }
    RepCountVector rep;
    rep.k = k;
    rep.m = moment_exponent(ctx.n(), catalog.d);
    if (k <= 2 * rep.m) {
        throw precondition_error("rep_count_Mk: k must exceed 2m = " + std::to_string(2 * rep.m));
    }
    const ExponentSupport weighted = weighted_support(ctx, catalog, dlog);
    const ExponentSupport plain = irreducible_support(ctx, catalog, dlog);

    rep.counts.assign(N, BigInt(0));
    rep.counts[0] = 1;
    for (std::uint32_t i = 0; i < k - 2 * rep.m; ++i) detail::convolve_in_place(rep.counts, weighted, N);
    for (std::uint32_t i = 0; i < 2 * rep.m; ++i) detail::convolve_in_place(rep.counts, plain, N);
    detail::finalize_repcount(rep, N);

    const long double n1 = static_cast<long double>(ctx.n() - 1);
    const long double qf = static_cast<long double>(ctx.q());
    const long double icount = static_cast<long double>(plain.size());
    rep.deviation_bound = factorial_big(rep.m).convert_to<long double>() *
                          std::pow(n1, static_cast<long double>(k - 2 * rep.m)) *
                          std::pow(qf, static_cast<long double>(catalog.d) *
                                           (static_cast<long double>(k) / 2.0L - static_cast<long double>(rep.m))) *
                          std::pow(icount, static_cast<long double>(rep.m));
    rep.deviation_ok = rep.max_abs_deviation <= rep.deviation_bound;
    return rep;
}

/// Unweighted d = 1 counter: representations of each v as a k-fold product
/// of linear evaluations u + root, u over the base field.  Total mass is
/// q^k; the deviation bound specializes the weighted one at d = 1 with
/// m = n - 1.
inline RepCountVector rep_count_Nk(const FieldContext& ctx, const DlogTable& dlog, std::uint32_t k,
                                   std::uint64_t rep_cap = kDefaultRepCountCap) {
    if (ctx.n() < 2) throw precondition_error("rep_count_Nk: needs n >= 2 so that d = 1 < n");
    const std::uint64_t N = ctx.group_order();
    if (N > rep_cap) {
        throw resource_error("rep_count_Nk: group order " + std::to_string(N) + " exceeds cap " +
                             std::to_string(rep_cap) + " (POLYDIAM_REPCOUNT_CAP)");
    }
    RepCountVector rep;
    rep.k = k;
    rep.m = ctx.n() - 1;

    PolyCatalog cat1 = make_catalog(ctx.base(), 1);
    const ExponentSupport support = irreducible_support(ctx, cat1, dlog);

    rep.counts.assign(N, BigInt(0));
    rep.counts[0] = 1;
    for (std::uint32_t i = 0; i < k; ++i) detail::convolve_in_place(rep.counts, support, N);
    detail::finalize_repcount(rep, N);

    const long double n1 = static_cast<long double>(ctx.n() - 1);
    const long double qf = static_cast<long double>(ctx.q());
    rep.deviation_bound = factorial_big(rep.m).convert_to<long double>() *
                          std::pow(n1, static_cast<long double>(k) - 2.0L * static_cast<long double>(rep.m)) *
                          std::pow(qf, static_cast<long double>(k) / 2.0L);
    rep.deviation_ok = rep.max_abs_deviation <= rep.deviation_bound;
    return rep;
}

}  // namespace polydiam

#endif  // POLYDIAM_CHARSUM_HPP
