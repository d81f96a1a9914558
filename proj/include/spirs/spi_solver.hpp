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

#ifndef SPIRS_SPI_SOLVER_HPP
#define SPIRS_SPI_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "spirs/errors.hpp"
#include "spirs/poly.hpp"
#include "spirs/spi.hpp"

namespace spirs {

/// The four solver variants. All of them run the same scan/swap/update
/// skeleton; they differ in how the kappa coefficient is obtained and in
/// which auxiliary registers are carried along.
///   rbm              - kappa read from a full b*Lambda mod m computation
///   monomial         - kappa from a direct convolution tap (moduli x^nu)
///   quotient_saving  - kappa from b,Lambda and stored quotients Q
///   remainder_saving - kappa read off stored remainders r (Euclidean form)
enum class SolverVariant { rbm, monomial, quotient_saving, remainder_saving };

inline const char* solver_variant_name(SolverVariant v) {
    switch (v) {
        case SolverVariant::rbm: return "rbm";
        case SolverVariant::monomial: return "monomial";
        case SolverVariant::quotient_saving: return "quotient_saving";
        case SolverVariant::remainder_saving: return "remainder_saving";
    }
    return "?";
}

/// Structured instrumentation event, emitted when SolveOptions::on_step is
/// set. scan_exit fires after the inner repeat loop found kappa != 0; swap
/// and update mirror the corresponding blocks.
struct SolveStep {
    enum class Kind { scan_exit, swap, update };
    Kind kind;
    long n_it = 0;
    int i = 0;
    long delta = 0;
    long d = 0;
    long d_reg_before = 0;  // swap only
    long d_reg_after = 0;   // swap only
    Degree deg_lambda;      // update only
};

struct SolveOptions {
    SolverVariant variant = SolverVariant::rbm;
    /// Verify the loop invariants (assertions (a)-(i) of the annotated
    /// algorithm) at runtime; each check recomputes residual degrees from
    /// scratch, so leave this off in production runs.
    bool check_assertions = false;
    std::ostream* trace = nullptr;
    std::function<void(const SolveStep&)> on_step;
};

namespace detail {

/// How the outer loop's only exit point behaves. `plain` is Algorithm 1's
/// "if delta <= 0 return"; the two locate modes realize the error-locating
/// algorithms: `tau_scan` decrements a uniform tau with an in-loop failure
/// check, `fixed_iterations` stops after exactly nit_stop kappa-line
/// executions (the degree check is then the caller's).
struct EngineConfig {
    enum class Mode { plain, tau_scan, fixed_iterations };
    Mode mode = Mode::plain;
    long tau_uniform = 0;  // initial uniform tau (locate modes)
    long fail_degree = 0;  // declare failure when deg Lambda exceeds this (tau_scan)
    long nit_stop = 0;     // stop count (fixed_iterations)
};

struct EngineResult {
    bool failure = false;  // tau_scan's in-loop "decoding failure"
    SpiSolution sol;
};

class SpiSolverEngine {
   public:
    SpiSolverEngine(const SpiInstance& inst, const SolveOptions& opts, EngineConfig cfg = {})
        : inst_(inst), opts_(opts), cfg_(cfg), f_(inst.field().impl()), L_(inst.L()) {}

    EngineResult run() {
        if (cfg_.mode == EngineConfig::Mode::plain) {
            spi_validate(inst_);
        } else {
            if (inst_.entries.empty()) raise(Errc::EmptyInstance, "L = 0");
            for (int i = 0; i < L_; ++i)
                if (!(b(i).deg() < m(i).deg()) || m(i).deg() < Degree(1))
                    raise(Errc::BadDegreeRelation, "locate input " + std::to_string(i), i);
        }
        if (opts_.variant == SolverVariant::monomial) {
            for (int i = 0; i < L_; ++i) {
                const Polynomial& mp = inst_.entries[idx(i)].m;
                for (long l = 0; l < mp.deg().value(); ++l)
                    if (mp.coeff_v(l) != 0)
                        raise(Errc::NonMonomialModulus,
                              "modulus of constraint " + std::to_string(i) + " is not a monomial", i);
            }
        }
        init();

        const long cap = iteration_cap();
        for (;;) {
            assert_loop_top();
            // inner repeat: scan for the next nonzero kappa
            std::uint32_t kappa = 0;
            for (;;) {
                if (i_ > 0) {
                    --i_;
                } else {
                    switch (cfg_.mode) {
                        case EngineConfig::Mode::plain:
                            if (delta_ <= 0) return {false, finalize()};
                            break;
                        case EngineConfig::Mode::tau_scan:
                            if (delta_ <= 0) {
                                if (lambda_.deg() > Degree(cfg_.fail_degree))
                                    return {true, SpiSolution{lambda_.monic(), n_it_, std::nullopt,
                                                              std::nullopt}};
                                if (Degree(d_) <= lambda_.deg()) return {false, finalize()};
                                --tau_uniform_;
                                ++delta_;
                            }
                            break;
                        case EngineConfig::Mode::fixed_iterations:
                            if (n_it_ == cfg_.nit_stop) return {false, finalize()};
                            break;
                    }
                    i_ = L_ - 1;
                    --delta_;
                }
                d_ = delta_ + tau(i_);
                if (cfg_.mode == EngineConfig::Mode::tau_scan && m(i_).deg() < Degree(tau_uniform_)) {
                    kappa = 0;  // constraint omitted from the scan at this tau
                    continue;
                }
                kappa = compute_kappa(i_, d_);
                ++n_it_;
                if (n_it_ > cap)
                    raise(Errc::AssertionFired, "iteration count exceeded the termination bound");
                if (kappa != 0) break;
            }
            emit_scan(kappa);
            assert_scan_exit();

            if (d_ < d_reg_[idx(i_)]) {
                assert_pre_swap();
                const long before = d_reg_[idx(i_)];
                std::swap(lambda_, lambda_reg_[idx(i_)]);
                std::swap(d_, d_reg_[idx(i_)]);
                std::swap(kappa, kappa_reg_[idx(i_)]);
                if (opts_.variant == SolverVariant::quotient_saving)
                    for (int j = 0; j < L_; ++j) std::swap(quo_[idx(j)], quo_store_[idx(i_)][idx(j)]);
                if (opts_.variant == SolverVariant::remainder_saving)
                    for (int j = 0; j < L_; ++j) std::swap(rem_[idx(j)], rem_store_[idx(i_)][idx(j)]);
                delta_ = d_ - tau(i_);
                emit_swap(before);
                assert_post_swap();
            }

            const FieldElement k_reg{kappa_reg_[idx(i_)], f_};
            const FieldElement k_cur{kappa, f_};
            const long shift = d_ - d_reg_[idx(i_)];
            lambda_ = linear_update(k_reg, lambda_, k_cur, shift, lambda_reg_[idx(i_)]);
            if (opts_.variant == SolverVariant::quotient_saving)
                for (int j = 0; j < L_; ++j)
                    quo_[idx(j)] = linear_update(k_reg, quo_[idx(j)], k_cur, shift, quo_store_[idx(i_)][idx(j)]);
            if (opts_.variant == SolverVariant::remainder_saving)
                for (int j = 0; j < L_; ++j)
                    rem_[idx(j)] = linear_update(k_reg, rem_[idx(j)], k_cur, shift, rem_store_[idx(i_)][idx(j)]);
            emit_update();
            assert_post_update();
        }
    }

   private:
    static std::size_t idx(int i) { return static_cast<std::size_t>(i); }
    long tau(int i) const {
        return cfg_.mode == EngineConfig::Mode::plain ? inst_.entries[idx(i)].tau : tau_uniform_;
    }
    const Polynomial& b(int i) const { return inst_.entries[idx(i)].b; }
    const Polynomial& m(int i) const { return inst_.entries[idx(i)].m; }

    void init() {
        const Field& fld = inst_.field();
        tau_uniform_ = cfg_.mode == EngineConfig::Mode::tau_scan ? cfg_.tau_uniform : 0;
        lambda_ = Polynomial::one(fld);
        lambda_reg_.assign(idx(L_), Polynomial::zero(fld));
        d_reg_.resize(idx(L_));
        kappa_reg_.resize(idx(L_));
        delta_ = 0;
        for (int i = 0; i < L_; ++i) {
            d_reg_[idx(i)] = m(i).deg().value();
            kappa_reg_[idx(i)] = m(i).lcf().value();
            delta_ = std::max(delta_, m(i).deg().value() - tau(i));
        }
        i_ = 0;
        n_it_ = 0;
        d_ = cfg_.mode == EngineConfig::Mode::plain ? 0 : cfg_.tau_uniform;
        if (opts_.variant == SolverVariant::quotient_saving) {
            quo_.assign(idx(L_), Polynomial::zero(fld));
            quo_store_.assign(idx(L_), std::vector<Polynomial>(idx(L_), Polynomial::zero(fld)));
            for (int i = 0; i < L_; ++i)
                quo_store_[idx(i)][idx(i)] = Polynomial::constant(fld, -fld.one());
        }
        if (opts_.variant == SolverVariant::remainder_saving) {
            rem_.clear();
            for (int i = 0; i < L_; ++i) rem_.push_back(b(i));
            rem_store_.assign(idx(L_), std::vector<Polynomial>(idx(L_), Polynomial::zero(fld)));
            for (int i = 0; i < L_; ++i) rem_store_[idx(i)][idx(i)] = m(i);
        }
    }

    long iteration_cap() const {
        switch (cfg_.mode) {
            case EngineConfig::Mode::plain: {
                // Theorem-7 exact count is D_hat + L*deg Lambda <= D_hat + L*D
                long dmax = 0, dsum = 0;
                for (int i = 0; i < L_; ++i) {
                    dmax = std::max(dmax, m(i).deg().value() - tau(i));
                    dsum += m(i).deg().value() - tau(i);
                }
                return L_ * dmax + L_ * dsum + 1;
            }
            case EngineConfig::Mode::fixed_iterations:
                return cfg_.nit_stop + L_;
            case EngineConfig::Mode::tau_scan: {
                // loose bound: every swap jumps delta by at most S levels
                long s = 0;
                for (int i = 0; i < L_; ++i) s = std::max(s, m(i).deg().value());
                return L_ * (2 + s + L_ * s * s) + 64;
            }
        }
        return 1;
    }

    std::uint32_t compute_kappa(int i, long d) const {
        switch (opts_.variant) {
            case SolverVariant::rbm:
                return mulmod(b(i), lambda_, m(i)).coeff_v(d);
            case SolverVariant::monomial: {
                if (d >= m(i).deg().value()) return 0;
                return convolution_tap(b(i), lambda_, d);
            }
            case SolverVariant::quotient_saving: {
                std::uint32_t s = convolution_tap(b(i), lambda_, d);
                return f_->sub(s, convolution_tap(m(i), quo_[idx(i)], d));
            }
            case SolverVariant::remainder_saving:
                return rem_[idx(i)].coeff_v(d);
        }
        return 0;
    }

    /// Coefficient of x^d in a*c, summed over the support of c.
    std::uint32_t convolution_tap(const Polynomial& a, const Polynomial& c, long d) const {
        std::uint32_t s = 0;
        const auto& cc = c.coeffs();
        for (std::size_t l = 0; l < cc.size(); ++l) {
            if (cc[l] == 0) continue;
            std::uint32_t av = a.coeff_v(d - static_cast<long>(l));
            if (av != 0) s = f_->add(s, f_->mul(av, cc[l]));
        }
        return s;
    }

    SpiSolution finalize() {
        SpiSolution out{lambda_.monic(), n_it_, std::nullopt, std::nullopt};
        const FieldElement scale = lambda_.lcf().inv();
        if (opts_.variant == SolverVariant::quotient_saving) {
            std::vector<Polynomial> q;
            for (int j = 0; j < L_; ++j) q.push_back(scale * quo_[idx(j)]);
            out.quotients = std::move(q);
        }
        if (opts_.variant == SolverVariant::remainder_saving) {
            std::vector<Polynomial> r;
            for (int j = 0; j < L_; ++j) r.push_back(scale * rem_[idx(j)]);
            out.remainders = std::move(r);
        }
        return out;
    }

    // --- instrumentation -------------------------------------------------

    void emit_scan(std::uint32_t kappa) {
        if (opts_.trace)
            (*opts_.trace) << "scan  i=" << i_ << " delta=" << delta_ << " d=" << d_
                           << " kappa=" << kappa << " n_it=" << n_it_ << '\n';
        if (opts_.on_step)
            opts_.on_step(SolveStep{SolveStep::Kind::scan_exit, n_it_, i_, delta_, d_, 0, 0, Degree()});
    }

    void emit_swap(long d_before) {
        if (opts_.trace)
            (*opts_.trace) << "swap  i=" << i_ << " d_reg " << d_before << " -> " << d_reg_[idx(i_)]
                           << '\n';
        if (opts_.on_step)
            opts_.on_step(SolveStep{SolveStep::Kind::swap, n_it_, i_, delta_, d_, d_before,
                                    d_reg_[idx(i_)], Degree()});
    }

    void emit_update() {
        if (opts_.trace)
            (*opts_.trace) << "update deg_lambda=" << lambda_.deg().str() << '\n';
        if (opts_.on_step)
            opts_.on_step(SolveStep{SolveStep::Kind::update, n_it_, i_, delta_, d_, 0, 0, lambda_.deg()});
    }

    // --- runtime assertions ----------------------------------------------

    [[noreturn]] void fire(const char* which, const std::string& detail) const {
        raise(Errc::AssertionFired, std::string("solver assertion (") + which + "): " + detail);
    }

    void assert_loop_top() const {
        if (!opts_.check_assertions) return;
        long sum = 0;
        for (int i = 0; i < L_; ++i) sum += m(i).deg().value() - d_reg_[idx(i)];
        if (lambda_.is_zero() || lambda_.deg() != Degree(sum))
            fire("a", "deg Lambda != sum(deg m - d_reg)");
        for (int i = 0; i < L_; ++i)
            if (!(lambda_.deg() > lambda_reg_[idx(i)].deg()))
                fire("b", "deg Lambda <= deg Lambda_reg[" + std::to_string(i) + "]");
    }

    /// Residual polynomial the kappa line of this variant reads from. For
    /// rbm/monomial it is the true remainder; the register-saving variants
    /// work on b*Lambda - Q*m (resp. the stored r), whose degree may
    /// transiently reach deg m until the scan's division steps clean it.
    Polynomial variant_residual(int j) const {
        switch (opts_.variant) {
            case SolverVariant::rbm:
            case SolverVariant::monomial:
                return mulmod(b(j), lambda_, m(j));
            case SolverVariant::quotient_saving:
                return b(j) * lambda_ - quo_[idx(j)] * m(j);
            case SolverVariant::remainder_saving:
                return rem_[idx(j)];
        }
        return Polynomial::zero(inst_.field());
    }

    void assert_scan_exit() const {
        if (!opts_.check_assertions) return;
        // (c) holds w.r.t. the residuals the variant's kappa line reads
        Degree dmax = Degree::neg_inf();
        int imax = 0;
        for (int j = 0; j < L_; ++j) {
            Degree delta = variant_residual(j).deg() - tau(j);
            if (j == 0 || delta >= dmax) {
                dmax = delta;
                imax = j;
            }
        }
        if (imax != i_ || dmax != Degree(delta_) || delta_ < 0)
            fire("c", "scan exit is not at (i_max, delta_max) or delta < 0");
        if (opts_.variant == SolverVariant::remainder_saving) {
            // the stored remainders must stay congruent to b*Lambda mod m
            for (int j = 0; j < L_; ++j)
                if (!poly_mod(rem_[idx(j)] - b(j) * lambda_, m(j)).is_zero())
                    fire("c", "remainder register incongruent with b*Lambda");
        }
    }

    void assert_pre_swap() const {
        if (!opts_.check_assertions) return;
        if (!(d_reg_[idx(i_)] > d_ && d_ >= tau(i_))) fire("d", "d_reg > d >= tau violated before swap");
    }

    void assert_post_swap() const {
        if (!opts_.check_assertions) return;
        if (!(d_ > d_reg_[idx(i_)] && d_reg_[idx(i_)] >= tau(i_)))
            fire("e", "d > d_reg >= tau violated after swap");
        if (!(lambda_reg_[idx(i_)].deg() > lambda_.deg())) fire("f", "deg Lambda_reg[i] <= deg Lambda");
        for (int j = 0; j < L_; ++j)
            if (j != i_ && !(lambda_reg_[idx(i_)].deg() > lambda_reg_[idx(j)].deg()))
                fire("g", "deg Lambda_reg[i] <= deg Lambda_reg[" + std::to_string(j) + "]");
        SpiCheck c = spi_check(inst_, lambda_reg_[idx(i_)]);
        if (c.i_max != i_ || c.delta_max < Degree(0))
            fire("h", "i_max(Lambda_reg[i]) != i or delta_max < 0");
    }

    void assert_post_update() const {
        if (!opts_.check_assertions) return;
        if (lambda_.is_zero()) fire("i", "Lambda vanished after the update");
        Degree rd = mulmod(b(i_), lambda_, m(i_)).deg();
        if (!(rd < Degree(d_))) fire("i", "rd_i(Lambda) >= d after the update");
        if (opts_.variant == SolverVariant::quotient_saving ||
            opts_.variant == SolverVariant::remainder_saving)
            if (!(variant_residual(i_).deg() < Degree(d_)))
                fire("i", "variant residual degree >= d after the update");
    }

    const SpiInstance& inst_;
    const SolveOptions& opts_;
    const EngineConfig cfg_;
    const FieldImpl* f_;
    const int L_;
    long tau_uniform_ = 0;

    Polynomial lambda_{Field(FieldSpec::prime(2))};  // re-initialized in init()
    std::vector<Polynomial> lambda_reg_;
    std::vector<long> d_reg_;
    std::vector<std::uint32_t> kappa_reg_;
    std::vector<Polynomial> quo_, rem_;
    std::vector<std::vector<Polynomial>> quo_store_, rem_store_;
    long delta_ = 0, d_ = 0, n_it_ = 0;
    int i_ = 0;
};

}  // namespace detail

/// Solve an SPI instance with the selected variant. The returned lambda is
/// monic; quotient/remainder registers (when present) are rescaled by the
/// same factor, so b^(i)*lambda = Q^(i)*m^(i) + r^(i) holds exactly.
inline SpiSolution solve_spi(const SpiInstance& inst, const SolveOptions& opts = {}) {
    detail::SpiSolverEngine engine(inst, opts);
    return engine.run().sol;
}

inline SpiSolution solve_rbm(const SpiInstance& inst, SolveOptions opts = {}) {
    opts.variant = SolverVariant::rbm;
    return solve_spi(inst, opts);
}

inline SpiSolution solve_monomial(const SpiInstance& inst, SolveOptions opts = {}) {
    opts.variant = SolverVariant::monomial;
    return solve_spi(inst, opts);
}

inline SpiSolution solve_quotient_saving(const SpiInstance& inst, SolveOptions opts = {}) {
    opts.variant = SolverVariant::quotient_saving;
    return solve_spi(inst, opts);
}

inline SpiSolution solve_remainder_saving(const SpiInstance& inst, SolveOptions opts = {}) {
    opts.variant = SolverVariant::remainder_saving;
    return solve_spi(inst, opts);
}

/// Convenience path: monomialize with the default bound, then run the
/// monomial solver (the preferred production pipeline). The solution of
/// the transformed instance is the solution of the original one.
inline SpiSolution solve_auto(const SpiInstance& inst, SolveOptions opts = {}) {
    Monomialized mono = spi_monomialize(inst, spi_default_u(inst));
    opts.variant = SolverVariant::monomial;
    return solve_spi(mono.inst, opts);
}

struct IterationCheck {
    long n_it = 0;
    long predicted = 0;
};

/// Measured vs predicted kappa-line executions: predicted =
/// D_hat + L*deg lambda with D_hat = L*max_i(deg m^(i) - tau^(i)).
inline IterationCheck iteration_count(const SpiSolution& sol, const SpiInstance& inst) {
    if (!sol.iterations) raise(Errc::MissingCounter, "solution carries no iteration counter");
    long dmax = 0;
    for (const SpiEntry& e : inst.entries) dmax = std::max(dmax, e.m.deg().value() - e.tau);
    const long d_hat = inst.L() * dmax;
    const long deg_lambda = sol.lambda.is_zero() ? 0 : sol.lambda.deg().value();
    return {*sol.iterations, d_hat + static_cast<long>(inst.L()) * deg_lambda};
}

}  // namespace spirs

#endif  // SPIRS_SPI_SOLVER_HPP
