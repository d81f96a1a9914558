/*
   Copyright 2026 the spirs authors

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

#ifndef SPIRS_ANALYSIS_HPP
#define SPIRS_ANALYSIS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "spirs/errors.hpp"
#include "spirs/irs.hpp"
#include "spirs/rng.hpp"
#include "spirs/spi_solver.hpp"

namespace spirs {

/// Exact rational, used for the probability bounds (powers of q overflow
/// machine integers almost immediately).
struct Rational {
    boost::multiprecision::cpp_rational value;

    double to_double() const { return value.convert_to<double>(); }
    std::string str() const {
        return numerator(value).str() + "/" + denominator(value).str();
    }
};

namespace detail {

inline Rational q_power_over_qm1(std::uint64_t q, long exponent) {
    namespace mp = boost::multiprecision;
    mp::cpp_int qi(q);
    mp::cpp_rational r;
    if (exponent >= 0)
        r = mp::cpp_rational(mp::pow(qi, static_cast<unsigned>(exponent)), qi - 1);
    else
        r = mp::cpp_rational(1, mp::pow(qi, static_cast<unsigned>(-exponent)) * (qi - 1));
    return {r};
}

}  // namespace detail

/// Rank of an error pattern as a matrix over the field, by Gaussian
/// elimination.
inline int error_rank(const CodeSpec& code, const ArrayWord& e) {
    check_word(code, e);
    const FieldImpl* f = code.field.impl();
    std::vector<std::vector<std::uint32_t>> m = e.rows;
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    const long cols = code.n;
    for (long c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        const std::uint32_t inv = f->inv(m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)]);
        for (int r = rank + 1; r < rows; ++r) {
            std::uint32_t factor =
                f->mul(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], inv);
            if (factor == 0) continue;
            for (long cc = c; cc < cols; ++cc) {
                auto& cell = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)];
                cell = f->sub(cell, f->mul(factor, m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)]));
            }
        }
        ++rank;
    }
    return rank;
}

/// The four equivalent ways to pose the decoding inequalities whose SPI
/// solution the partial-inverse condition talks about.
enum class PicFormulation { error_pattern, received_word, syndrome, monomialized };

/// Monic SPI solution of the selected formulation. `word` is the error
/// pattern E for error_pattern/syndrome/monomialized and the received word
/// Y for received_word; `t` is the number of error columns |U_E|
/// (must satisfy t <= n - k_max so the instance is well posed).
inline Polynomial pic_spi_solution(const CodeSpec& code, const ArrayWord& word, long t,
                                   PicFormulation formulation) {
    if (t < 0 || t > code.n - code.k_max)
        raise(Errc::TOutOfRange, "need 0 <= t <= n - k_max for the SPI formulations");
    SpiInstance inst;
    SolveOptions opts;
    switch (formulation) {
        case PicFormulation::error_pattern:
        case PicFormulation::received_word:
            for (int i = 0; i < code.L; ++i)
                inst.entries.push_back(
                    SpiEntry{psi_inverse(code, word.rows[static_cast<std::size_t>(i)]), code.m,
                             code.k[static_cast<std::size_t>(i)] + t});
            opts.variant = SolverVariant::rbm;
            break;
        case PicFormulation::syndrome: {
            auto s = syndromes(code, word);
            for (int i = 0; i < code.L; ++i)
                inst.entries.push_back(SpiEntry{s[static_cast<std::size_t>(i)],
                                                code.m_tilde[static_cast<std::size_t>(i)], t});
            opts.variant = SolverVariant::rbm;
            break;
        }
        case PicFormulation::monomialized: {
            auto sb = monomialized_syndromes(code, syndromes(code, word));
            for (int i = 0; i < code.L; ++i)
                inst.entries.push_back(SpiEntry{
                    sb[static_cast<std::size_t>(i)],
                    Polynomial::monomial(code.field, code.n - code.k[static_cast<std::size_t>(i)]), t});
            opts.variant = SolverVariant::monomial;
            break;
        }
    }
    return solve_spi(inst, opts).lambda;
}

/// Ground truth: does E satisfy the partial-inverse condition, i.e. is the
/// SPI solution of the decoding inequalities exactly the true locator?
/// False by definition when |U_E| > n - k_max.
inline bool partial_inverse_condition(const CodeSpec& code, const ArrayWord& e,
                                      PicFormulation formulation = PicFormulation::error_pattern) {
    std::vector<long> support = column_support(code, e);
    const long t = static_cast<long>(support.size());
    if (t > code.n - code.k_max) return false;
    Polynomial lambda_e = error_locator_poly(code, support);
    return pic_spi_solution(code, e, t, formulation) == lambda_e;
}

/// Guaranteed-correction radius floor((n - k_max + r_E - 1) / 2).
inline long bound_roth_vontobel(long n, long k_max, long r_e) {
    if (r_e < 0) raise(Errc::RankOutOfRange, "rank must be >= 0");
    return (n - k_max + r_e - 1) / 2;
}

/// Pr(r_E != t) < q^(-L+t)/(q-1) for 0 < t <= L uniform nonzero columns.
inline Rational bound_full_rank(std::uint64_t q, int L, long t) {
    if (t <= 0 || t > L) raise(Errc::TOutOfRange, "need 0 < t <= L");
    return detail::q_power_over_qm1(q, t - L);
}

struct SsbBound {
    Rational p;               // q^(-L(n-k_avg)+(L+1)t) / (q-1)
    long feasibility_radius;  // floor min{n-k_max, L/(L+1)(n-k_avg)}
    bool vacuous;             // p >= 1
};

/// floor of min{n - k_max, L/(L+1) * (n - k_avg)}; k_sum = sum of the k[i]
/// so the second term is (L*n - k_sum)/(L+1) exactly.
inline long max_radius(long n, int L, long k_max, long k_sum) {
    return std::min(n - k_max, (static_cast<long>(L) * n - k_sum) / (L + 1));
}

/// Failure-probability bound for the partial-inverse condition under
/// uniform nonzero columns; exponent -L(n-k_avg)+(L+1)t stays integral as
/// -(L*n - k_sum) + (L+1)t.
inline SsbBound bound_ssb(std::uint64_t q, int L, long n, long k_max, long k_sum, long t) {
    if (L <= 1) raise(Errc::LNotGreaterThanOne, "the bound is stated for L > 1");
    if (t <= 0 || t > n - k_max) raise(Errc::TOutOfRange, "need 0 < t <= n - k_max");
    const long exponent = -(static_cast<long>(L) * n - k_sum) + (static_cast<long>(L) + 1) * t;
    SsbBound out{detail::q_power_over_qm1(q, exponent), max_radius(n, L, k_max, k_sum), false};
    out.vacuous = out.p.value >= 1;
    return out;
}

/// Parameters for sampling random SPI instances (fixture generation and
/// harness corpora). d_cap bounds D = sum(deg m - tau) so the brute-force
/// oracle stays affordable on the sampled instances.
struct SpiSampleParams {
    int l_max = 3;
    long degm_max = 6;
    long d_cap = 5;
};

inline SpiInstance random_spi_instance(Rng& rng, const Field& field, const SpiSampleParams& p = {}) {
    for (;;) {
        SpiInstance inst;
        int L = static_cast<int>(rng.range(1, p.l_max));
        long d_total = 0;
        for (int i = 0; i < L; ++i) {
            long dm = rng.range(1, p.degm_max);
            std::vector<std::uint32_t> mc(static_cast<std::size_t>(dm) + 1);
            for (auto& v : mc) v = rng.field_elem(field);
            mc.back() = rng.field_nonzero(field);
            Polynomial m(field, std::move(mc));
            long tau = rng.range(0, dm);
            d_total += dm - tau;
            long db = rng.range(-1, dm - 1);
            Polynomial b = Polynomial::zero(field);
            if (db >= 0) {
                std::vector<std::uint32_t> bc(static_cast<std::size_t>(db) + 1);
                for (auto& v : bc) v = rng.field_elem(field);
                bc.back() = rng.field_nonzero(field);
                b = Polynomial(field, std::move(bc));
            }
            inst.entries.push_back(SpiEntry{std::move(b), std::move(m), tau});
        }
        if (d_total <= p.d_cap) return inst;
    }
}

enum class ErrorModel { uniform, rank_constrained };

struct SimOptions {
    long t = 0;
    long trials = 1;
    std::uint64_t seed = 0;
    ErrorModel model = ErrorModel::uniform;
    int rank_r = 1;  // target rank for the rank-constrained model
    LocateStrategy strategy = LocateStrategy::fixed_iterations_monomial;
    DecodeOptions::Recovery recovery = DecodeOptions::Recovery::interpolation;
    /// run the (solver-backed) partial-inverse-condition checker per trial
    bool check_condition = false;
    /// transmit the zero codeword instead of random messages
    bool zero_codeword = false;
};

struct SimReport {
    long trials = 0;
    long failures_condition = 0;
    long failures_decode = 0;
    long miscorrections = 0;
    double empirical_rate = 0.0;  // failures_decode / trials
    double bound_value = 0.0;     // SSB bound when applicable, else NaN
    bool bound_applicable = false;
    long rv_radius_rank1 = 0;  // floor((n - k_max)/2)
    std::uint64_t seed = 0;
    double runtime_s = 0.0;
};

namespace detail {

inline bool columns_independent(const CodeSpec& code,
                                const std::vector<std::vector<std::uint32_t>>& cols) {
    ArrayWord w;
    w.role = WordRole::error;
    w.rows.assign(static_cast<std::size_t>(code.L),
                  std::vector<std::uint32_t>(static_cast<std::size_t>(code.n), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < code.L; ++i)
            w.rows[static_cast<std::size_t>(i)][j] = cols[j][static_cast<std::size_t>(i)];
    return error_rank(code, w) == static_cast<int>(cols.size());
}

/// Error pattern on a fresh support: uniform nonzero columns, or columns
/// confined to (and spanning) a random rank_r-dimensional subspace.
inline ArrayWord sample_error(Rng& rng, const CodeSpec& code, const SimOptions& opts) {
    ArrayWord e;
    e.role = WordRole::error;
    e.rows.assign(static_cast<std::size_t>(code.L),
                  std::vector<std::uint32_t>(static_cast<std::size_t>(code.n), 0));
    if (opts.t == 0) return e;
    std::vector<long> support = rng.support(code.n, opts.t);

    auto uniform_nonzero_column = [&] {
        std::vector<std::uint32_t> col(static_cast<std::size_t>(code.L));
        for (;;) {
            bool nz = false;
            for (auto& v : col) {
                v = rng.field_elem(code.field);
                if (v != 0) nz = true;
            }
            if (nz) return col;
        }
    };

    if (opts.model == ErrorModel::uniform) {
        for (long l : support) {
            std::vector<std::uint32_t> col = uniform_nonzero_column();
            for (int i = 0; i < code.L; ++i)
                e.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] =
                    col[static_cast<std::size_t>(i)];
        }
        return e;
    }

    const int r = opts.rank_r;
    if (r < 1 || r > code.L || r > opts.t)
        raise(Errc::RankOutOfRange, "need 1 <= r <= min(L, t) for the rank-constrained model");
    // pivot positions: r random members of the support
    std::vector<long> order = rng.support(opts.t, r);
    std::vector<bool> is_pivot(static_cast<std::size_t>(opts.t), false);
    for (long j : order) is_pivot[static_cast<std::size_t>(j)] = true;
    // pivot columns: resample until linearly independent
    std::vector<std::vector<std::uint32_t>> pivots;
    do {
        pivots.clear();
        for (int j = 0; j < r; ++j) pivots.push_back(uniform_nonzero_column());
    } while (!columns_independent(code, pivots));

    const FieldImpl* f = code.field.impl();
    int pivot_used = 0;
    for (long j = 0; j < opts.t; ++j) {
        std::vector<std::uint32_t> col;
        if (is_pivot[static_cast<std::size_t>(j)]) {
            col = pivots[static_cast<std::size_t>(pivot_used++)];
        } else {
            // nonzero coefficient vector over the pivot basis
            std::vector<std::uint32_t> coeff(static_cast<std::size_t>(r));
            for (;;) {
                bool nz = false;
                for (auto& v : coeff) {
                    v = rng.field_elem(code.field);
                    if (v != 0) nz = true;
                }
                if (nz) break;
            }
            col.assign(static_cast<std::size_t>(code.L), 0);
            for (int b = 0; b < r; ++b)
                for (int i = 0; i < code.L; ++i)
                    col[static_cast<std::size_t>(i)] =
                        f->add(col[static_cast<std::size_t>(i)],
                               f->mul(coeff[static_cast<std::size_t>(b)],
                                      pivots[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)]));
        }
        const long l = support[static_cast<std::size_t>(j)];
        for (int i = 0; i < code.L; ++i)
            e.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] =
                col[static_cast<std::size_t>(i)];
    }
    return e;
}

}  // namespace detail

/// Draw one error pattern under the harness's error model (exposed for
/// fixture generation and tests).
inline ArrayWord sample_error_pattern(Rng& rng, const CodeSpec& code, const SimOptions& opts) {
    return detail::sample_error(rng, code, opts);
}

/// Seeded Monte Carlo run: per trial, sample a codeword and an error
/// pattern, decode, and tally decode failures, miscorrections, and
/// (optionally) partial-inverse-condition failures. Per-trial derived
/// seeds make the tallies independent of trial execution order.
inline SimReport simulate(const CodeSpec& code, const SimOptions& opts) {
    if (opts.t < 0 || opts.t > code.n) raise(Errc::TOutOfRange, "need 0 <= t <= n");
    if (opts.trials < 1) raise(Errc::TOutOfRange, "need trials >= 1");
    const auto start = std::chrono::steady_clock::now();

    SimReport rep;
    rep.trials = opts.trials;
    rep.seed = opts.seed;
    rep.rv_radius_rank1 = bound_roth_vontobel(code.n, code.k_max, 1);
    if (code.L > 1 && opts.t > 0 && opts.t <= code.n - code.k_max) {
        rep.bound_value =
            bound_ssb(code.field.q(), code.L, code.n, code.k_max, code.k_sum, opts.t).p.to_double();
        rep.bound_applicable = true;
    } else {
        rep.bound_value = std::nan("");
        rep.bound_applicable = false;
    }

    DecodeOptions dopts;
    dopts.strategy = opts.strategy;
    dopts.recovery = opts.recovery;

    for (long trial = 0; trial < opts.trials; ++trial) {
        Rng rng = Rng::for_trial(opts.seed, static_cast<std::uint64_t>(trial));
        std::vector<Polynomial> msgs;
        for (int i = 0; i < code.L; ++i) {
            if (opts.zero_codeword) {
                msgs.push_back(Polynomial::zero(code.field));
                continue;
            }
            std::vector<std::uint32_t> c(
                static_cast<std::size_t>(code.k[static_cast<std::size_t>(i)]));
            for (auto& v : c) v = rng.field_elem(code.field);
            msgs.emplace_back(code.field, std::move(c));
        }
        ArrayWord cw = encode(code, msgs);
        ArrayWord e = detail::sample_error(rng, code, opts);
        ArrayWord y = cw;
        y.role = WordRole::received;
        const FieldImpl* f = code.field.impl();
        for (int i = 0; i < code.L; ++i)
            for (long l = 0; l < code.n; ++l) {
                auto& cell = y.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
                cell = f->add(cell, e.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)]);
            }

        if (opts.check_condition && !partial_inverse_condition(code, e)) ++rep.failures_condition;

        ErrorReport dec = decode(code, y, dopts);
        if (dec.status == ErrorReport::Status::decoding_failure)
            ++rep.failures_decode;
        else if (dec.corrected.rows != cw.rows)
            ++rep.miscorrections;
    }
    rep.empirical_rate = static_cast<double>(rep.failures_decode) / static_cast<double>(rep.trials);
    rep.runtime_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

/// Tally-field equality; runtime is wall-clock and excluded.
inline bool same_tallies(const SimReport& a, const SimReport& b) {
    return a.trials == b.trials && a.failures_condition == b.failures_condition &&
           a.failures_decode == b.failures_decode && a.miscorrections == b.miscorrections &&
           a.seed == b.seed;
}

}  // namespace spirs

#endif  // SPIRS_ANALYSIS_HPP
