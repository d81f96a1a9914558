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

#ifndef SPIRS_IRS_HPP
#define SPIRS_IRS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spirs/errors.hpp"
#include "spirs/gf.hpp"
#include "spirs/poly.hpp"
#include "spirs/spi.hpp"
#include "spirs/spi_solver.hpp"

namespace spirs {

/// An interleaved Reed-Solomon code: L rows of blocklength n over a common
/// field, row i of dimension k[i], all rows evaluated at the same distinct
/// points beta. Construction precomputes everything decoding needs:
/// m(x) = prod(x - beta_l), its derivative, the truncated moduli
/// m_tilde[i] (coefficients m_{k[i]}..m_n of m), the per-row power-series
/// inverses w[i] used to monomialize syndromes, and the Lagrange basis of
/// the evaluation isomorphism. Immutable after construction.
struct CodeSpec {
    explicit CodeSpec(Field f) : field(std::move(f)), m(field), m_deriv(field) {}

    Field field;
    long n = 0;
    int L = 0;
    std::vector<long> k;
    std::vector<std::uint32_t> beta;

    Polynomial m;
    Polynomial m_deriv;
    std::vector<Polynomial> m_tilde;
    std::vector<Polynomial> w;
    std::vector<Polynomial> lagrange;  // lagrange[l] maps to the unit vector e_l

    long k_max = 0, k_min = 0, k_sum = 0;

    double k_avg() const { return static_cast<double>(k_sum) / L; }
    FieldElement beta_at(long l) const { return {beta[static_cast<std::size_t>(l)], field.impl()}; }
};

enum class WordRole { codeword, received, error };

/// L x n array over the code's field.
struct ArrayWord {
    std::vector<std::vector<std::uint32_t>> rows;
    WordRole role = WordRole::received;
};

/// Sparse error values: (row i, column l) -> value.
using ErrorMap = std::map<std::pair<int, long>, std::uint32_t>;

inline CodeSpec make_code(const Field& field, long n, int L, std::vector<long> k,
                          std::vector<std::uint32_t> beta) {
    if (n < 1 || L < 1) raise(Errc::DimensionOutOfRange, "need n >= 1 and L >= 1");
    if (static_cast<long>(beta.size()) != n)
        raise(Errc::DimensionOutOfRange, "need exactly n evaluation points");
    if (static_cast<int>(k.size()) != L)
        raise(Errc::DimensionOutOfRange, "need one dimension k per row");
    for (std::uint32_t b : beta)
        if (b >= field.q()) raise(Errc::InvalidElement, "evaluation point not in the field");
    for (std::size_t a = 0; a < beta.size(); ++a)
        for (std::size_t b = a + 1; b < beta.size(); ++b)
            if (beta[a] == beta[b])
                raise(Errc::DuplicateEvalPoint, "evaluation points must be pairwise distinct");

    CodeSpec code{field};
    code.n = n;
    code.L = L;
    code.k = std::move(k);
    code.beta = std::move(beta);
    code.k_max = *std::max_element(code.k.begin(), code.k.end());
    code.k_min = *std::min_element(code.k.begin(), code.k.end());
    code.k_sum = 0;
    for (long ki : code.k) {
        if (ki < 1) raise(Errc::DimensionOutOfRange, "row dimensions must be >= 1");
        code.k_sum += ki;
    }
    if (!(code.k_max < n)) raise(Errc::KMaxNotLessThanN, "k_max must be < n");

    const FieldImpl* f = field.impl();
    // m(x) = prod (x - beta_l)
    std::vector<std::uint32_t> mc{1};
    for (std::uint32_t b : code.beta) {
        std::vector<std::uint32_t> next(mc.size() + 1, 0);
        const std::uint32_t nb = f->neg(b);
        for (std::size_t j = 0; j < mc.size(); ++j) {
            next[j + 1] = f->add(next[j + 1], mc[j]);
            next[j] = f->add(next[j], f->mul(mc[j], nb));
        }
        mc = std::move(next);
    }
    code.m = Polynomial(field, mc);
    code.m_deriv = derivative(code.m);

    for (int i = 0; i < L; ++i) {
        long ki = code.k[static_cast<std::size_t>(i)];
        std::vector<std::uint32_t> t(mc.begin() + ki, mc.end());
        code.m_tilde.emplace_back(field, std::move(t));
        // deg m_tilde = n - k[i] since m is monic
        const long window = n - ki;
        code.w.push_back(inv_mod_xk(reverse(code.m_tilde.back(), window), window));
    }

    // Lagrange basis: lagrange[l] = (m / (x - beta_l)) / m'(beta_l)
    for (long l = 0; l < n; ++l) {
        const std::uint32_t b = code.beta[static_cast<std::size_t>(l)];
        std::vector<std::uint32_t> q(static_cast<std::size_t>(n), 0);
        std::uint32_t carry = mc[static_cast<std::size_t>(n)];
        for (long j = n - 1; j >= 0; --j) {
            q[static_cast<std::size_t>(j)] = carry;
            carry = f->add(mc[static_cast<std::size_t>(j)], f->mul(b, carry));
        }
        const std::uint32_t scale = f->inv(eval(code.m_deriv, code.beta_at(l)).value());
        for (auto& c : q) c = f->mul(c, scale);
        code.lagrange.emplace_back(field, std::move(q));
    }
    return code;
}

inline void check_word(const CodeSpec& code, const ArrayWord& word) {
    if (static_cast<int>(word.rows.size()) != code.L)
        raise(Errc::DimensionOutOfRange, "word must have L rows");
    for (const auto& row : word.rows) {
        if (static_cast<long>(row.size()) != code.n)
            raise(Errc::DimensionOutOfRange, "rows must have length n");
        for (std::uint32_t v : row)
            if (v >= code.field.q()) raise(Errc::InvalidElement, "entry not in the field");
    }
}

/// Row i = (a^(i)(beta_0), ..., a^(i)(beta_{n-1})) with deg a^(i) < k^(i).
inline ArrayWord encode(const CodeSpec& code, const std::vector<Polynomial>& messages) {
    if (static_cast<int>(messages.size()) != code.L)
        raise(Errc::DimensionOutOfRange, "need one message polynomial per row");
    ArrayWord out;
    out.role = WordRole::codeword;
    for (int i = 0; i < code.L; ++i) {
        const Polynomial& a = messages[static_cast<std::size_t>(i)];
        if (!(a.deg() < Degree(code.k[static_cast<std::size_t>(i)])))
            raise(Errc::MessageDegreeTooHigh, "message " + std::to_string(i), i);
        std::vector<std::uint32_t> row;
        row.reserve(static_cast<std::size_t>(code.n));
        for (long l = 0; l < code.n; ++l) row.push_back(eval(a, code.beta_at(l)).value());
        out.rows.push_back(std::move(row));
    }
    return out;
}

/// The inverse of the evaluation isomorphism: the unique polynomial of
/// degree < n through the n points (Lagrange interpolation).
inline Polynomial psi_inverse(const CodeSpec& code, const std::vector<std::uint32_t>& row) {
    if (static_cast<long>(row.size()) != code.n)
        raise(Errc::DimensionOutOfRange, "row must have length n");
    const FieldImpl* f = code.field.impl();
    std::vector<std::uint32_t> acc(static_cast<std::size_t>(code.n), 0);
    for (long l = 0; l < code.n; ++l) {
        const std::uint32_t v = row[static_cast<std::size_t>(l)];
        if (v == 0) continue;
        const auto& base = code.lagrange[static_cast<std::size_t>(l)].coeffs();
        for (std::size_t j = 0; j < base.size(); ++j) acc[j] = f->add(acc[j], f->mul(v, base[j]));
    }
    return Polynomial(code.field, std::move(acc));
}

/// Syndrome of row i: the coefficient window k^(i)..n-1 of psi_inverse,
/// as a polynomial of degree < n - k^(i). Vanishes on codewords.
inline std::vector<Polynomial> syndromes(const CodeSpec& code, const ArrayWord& received) {
    check_word(code, received);
    std::vector<Polynomial> out;
    for (int i = 0; i < code.L; ++i) {
        Polynomial y = psi_inverse(code, received.rows[static_cast<std::size_t>(i)]);
        const auto& c = y.coeffs();
        const long ki = code.k[static_cast<std::size_t>(i)];
        std::vector<std::uint32_t> s;
        if (static_cast<long>(c.size()) > ki) s.assign(c.begin() + ki, c.end());
        out.emplace_back(code.field, std::move(s));
    }
    return out;
}

/// Transform the syndromes into the monomial domain: the key equation
/// modulus becomes x^(n-k^(i)). Independent of the number of errors.
inline std::vector<Polynomial> monomialized_syndromes(const CodeSpec& code,
                                                      const std::vector<Polynomial>& s) {
    if (static_cast<int>(s.size()) != code.L)
        raise(Errc::DimensionOutOfRange, "need one syndrome per row");
    std::vector<Polynomial> out;
    for (int i = 0; i < code.L; ++i) {
        const long window = code.n - code.k[static_cast<std::size_t>(i)];
        Polynomial rev = reverse(s[static_cast<std::size_t>(i)], window - 1);
        Polynomial prod = truncated(code.w[static_cast<std::size_t>(i)] * rev, window);
        out.push_back(reverse(prod, window - 1));
    }
    return out;
}

/// Which error-locating algorithm drives the solver. The spi_* strategies
/// scan tau downward with an in-loop failure check; the fixed_iterations_*
/// strategies stop after exactly L*(n-k_min) kappa-line executions with the
/// degree check applied afterwards. *_monomial variants take monomialized
/// syndromes, the others plain syndromes.
enum class LocateStrategy {
    spi_general,
    spi_monomial,
    fixed_iterations_general,
    fixed_iterations_monomial,
};

inline const char* locate_strategy_name(LocateStrategy s) {
    switch (s) {
        case LocateStrategy::spi_general: return "spi-general";
        case LocateStrategy::spi_monomial: return "spi-monomial";
        case LocateStrategy::fixed_iterations_general: return "fixed-general";
        case LocateStrategy::fixed_iterations_monomial: return "fixed-monomial";
    }
    return "?";
}

inline bool locate_strategy_monomial(LocateStrategy s) {
    return s == LocateStrategy::spi_monomial || s == LocateStrategy::fixed_iterations_monomial;
}

struct LocateResult {
    bool ok = false;
    Polynomial lambda;
    long iterations = 0;
};

struct LocateOptions {
    bool check_assertions = false;
    std::ostream* trace = nullptr;
};

/// Run the selected error-locating algorithm on the (plain or
/// monomialized, matching the strategy) syndromes. On success lambda is
/// the monic locator candidate with deg <= n - k_max; otherwise ok=false
/// signals a decoding failure (degree too high).
inline LocateResult locate_errors(const CodeSpec& code, const std::vector<Polynomial>& synd,
                                  LocateStrategy strategy, const LocateOptions& opts = {}) {
    if (static_cast<int>(synd.size()) != code.L)
        raise(Errc::DimensionOutOfRange, "need one syndrome per row");
    const bool monomial = locate_strategy_monomial(strategy);
    SpiInstance inst;
    for (int i = 0; i < code.L; ++i) {
        const long window = code.n - code.k[static_cast<std::size_t>(i)];
        Polynomial modulus = monomial ? Polynomial::monomial(code.field, window)
                                      : code.m_tilde[static_cast<std::size_t>(i)];
        inst.entries.push_back(SpiEntry{synd[static_cast<std::size_t>(i)], std::move(modulus), 0});
    }
    detail::EngineConfig cfg;
    if (strategy == LocateStrategy::spi_general || strategy == LocateStrategy::spi_monomial) {
        cfg.mode = detail::EngineConfig::Mode::tau_scan;
        cfg.tau_uniform = code.n - code.k_min;
        cfg.fail_degree = code.n - code.k_max;
    } else {
        cfg.mode = detail::EngineConfig::Mode::fixed_iterations;
        cfg.nit_stop = static_cast<long>(code.L) * (code.n - code.k_min);
    }
    SolveOptions sopts;
    sopts.variant = monomial ? SolverVariant::monomial : SolverVariant::rbm;
    sopts.check_assertions = opts.check_assertions;
    sopts.trace = opts.trace;
    detail::SpiSolverEngine engine(inst, sopts, cfg);
    detail::EngineResult r = engine.run();
    if (r.failure) return {false, r.sol.lambda, r.sol.iterations.value_or(0)};
    if (cfg.mode == detail::EngineConfig::Mode::fixed_iterations &&
        r.sol.lambda.deg() > Degree(code.n - code.k_max))
        return {false, r.sol.lambda, r.sol.iterations.value_or(0)};  // external degree check
    return {true, r.sol.lambda, r.sol.iterations.value_or(0)};
}

/// True iff m mod lambda = 0, i.e. lambda is (up to scale) a product of
/// distinct factors (x - beta_l).
inline bool validate_locator(const CodeSpec& code, const Polynomial& lambda) {
    if (lambda.is_zero()) raise(Errc::ZeroLambda, "locator must be nonzero");
    return poly_mod(code.m, lambda).is_zero();
}

/// Column indices l with lambda(beta_l) = 0.
inline std::vector<long> locator_support(const CodeSpec& code, const Polynomial& lambda) {
    std::vector<long> out;
    for (long l = 0; l < code.n; ++l)
        if (eval(lambda, code.beta_at(l)).is_zero()) out.push_back(l);
    return out;
}

/// The true locator of an error pattern: prod over nonzero columns of
/// (x - beta_l).
inline Polynomial error_locator_poly(const CodeSpec& code, const std::vector<long>& support) {
    Polynomial lam = Polynomial::one(code.field);
    for (long l : support) {
        Polynomial factor(code.field, {code.field.impl()->neg(code.beta[static_cast<std::size_t>(l)]), 1});
        lam = lam * factor;
    }
    return lam;
}

/// Nonzero-column index set of an error word.
inline std::vector<long> column_support(const CodeSpec& code, const ArrayWord& word) {
    std::vector<long> out;
    for (long l = 0; l < code.n; ++l) {
        bool nonzero = false;
        for (int i = 0; i < code.L; ++i)
            if (word.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] != 0) nonzero = true;
        if (nonzero) out.push_back(l);
    }
    return out;
}

enum class InterpolationFormula {
    mod_reduced,  // C = Y mod (m / lambda); cheaper for large L
    ratio,        // C = (Y*lambda mod m) / lambda
};

/// Recover the per-row information polynomials given a validated locator.
inline std::vector<Polynomial> recover_by_interpolation(
    const CodeSpec& code, const ArrayWord& received, const Polynomial& lambda,
    InterpolationFormula formula = InterpolationFormula::mod_reduced) {
    if (!validate_locator(code, lambda) || lambda.deg() > Degree(code.n - code.k_max))
        raise(Errc::LocatorNotValidated, "lambda does not divide m or its degree is too high");
    check_word(code, received);
    std::vector<Polynomial> out;
    Polynomial m_reduced = poly_div(code.m, lambda);
    for (int i = 0; i < code.L; ++i) {
        Polynomial y = psi_inverse(code, received.rows[static_cast<std::size_t>(i)]);
        Polynomial c(code.field);
        if (formula == InterpolationFormula::mod_reduced) {
            c = poly_mod(y, m_reduced);
        } else {
            auto [q, r] = divmod(mulmod(y, lambda, code.m), lambda);
            if (!r.is_zero())
                raise(Errc::InexactDivision, "(Y*lambda mod m) is not divisible by lambda", i);
            c = std::move(q);
        }
        if (!(c.deg() < Degree(code.k[static_cast<std::size_t>(i)])))
            raise(Errc::DegreeOverflow, "recovered row " + std::to_string(i) + " is not a codeword", i);
        out.push_back(std::move(c));
    }
    return out;
}

enum class SyndromeDomain { plain, monomialized };

/// Error values at the locator roots from the quotient polynomials
/// Q^(i) = S^(i)*lambda div m_tilde^(i) (plain domain) or
/// Q^(i) = S_breve^(i)*lambda div x^(n-k^(i)) (monomial domain), combined
/// with the formal derivatives: e^(i)_l = Q^(i)(b_l) m'(b_l) / lambda'(b_l).
inline ErrorMap forney(const CodeSpec& code, const std::vector<Polynomial>& synd,
                       const Polynomial& lambda, SyndromeDomain domain) {
    if (!validate_locator(code, lambda) || lambda.deg() > Degree(code.n - code.k_max))
        raise(Errc::LocatorNotValidated, "lambda does not divide m or its degree is too high");
    if (static_cast<int>(synd.size()) != code.L)
        raise(Errc::DimensionOutOfRange, "need one syndrome per row");
    ErrorMap out;
    std::vector<long> support = locator_support(code, lambda);
    if (support.empty()) return out;
    Polynomial lam_deriv = derivative(lambda);
    for (int i = 0; i < code.L; ++i) {
        const long window = code.n - code.k[static_cast<std::size_t>(i)];
        Polynomial modulus = domain == SyndromeDomain::plain
                                 ? code.m_tilde[static_cast<std::size_t>(i)]
                                 : Polynomial::monomial(code.field, window);
        Polynomial q = poly_div(synd[static_cast<std::size_t>(i)] * lambda, modulus);
        for (long l : support) {
            FieldElement bl = code.beta_at(l);
            FieldElement v = eval(q, bl) * eval(code.m_deriv, bl) / eval(lam_deriv, bl);
            if (!v.is_zero()) out[{i, l}] = v.value();
        }
    }
    return out;
}

struct DecodeOptions {
    LocateStrategy strategy = LocateStrategy::fixed_iterations_monomial;
    enum class Recovery { interpolation, forney } recovery = Recovery::interpolation;
    InterpolationFormula formula = InterpolationFormula::mod_reduced;
    bool check_assertions = false;
};

struct ErrorReport {
    enum class Status { corrected, decoding_failure };
    Status status = Status::decoding_failure;
    std::string reason;  // failing stage on decoding_failure
    Polynomial locator;
    std::vector<long> support;
    ArrayWord corrected;
    ErrorMap error_values;
    long iterations = 0;
};

/// Full pipeline: syndromes -> (monomialization) -> locate -> validate ->
/// recover -> re-encode verification. Every stage failure turns into a
/// decoding_failure report carrying the stage name; miscorrections that
/// pass all checks are detectable only by a harness that knows the
/// transmitted word.
inline ErrorReport decode(const CodeSpec& code, const ArrayWord& received,
                          const DecodeOptions& opts = {}) {
    ErrorReport report{ErrorReport::Status::decoding_failure, "", Polynomial::one(code.field)};
    std::vector<Polynomial> s = syndromes(code, received);
    std::vector<Polynomial> synd =
        locate_strategy_monomial(opts.strategy) ? monomialized_syndromes(code, s) : s;

    LocateOptions lopts;
    lopts.check_assertions = opts.check_assertions;
    LocateResult loc = locate_errors(code, synd, opts.strategy, lopts);
    report.iterations = loc.iterations;
    report.locator = loc.lambda;
    if (!loc.ok) {
        report.reason = "locate: locator degree exceeds n - k_max";
        return report;
    }
    if (!validate_locator(code, loc.lambda)) {
        report.reason = "validate: m mod lambda != 0";
        return report;
    }
    report.support = locator_support(code, loc.lambda);

    try {
        if (opts.recovery == DecodeOptions::Recovery::interpolation) {
            std::vector<Polynomial> info =
                recover_by_interpolation(code, received, loc.lambda, opts.formula);
            report.corrected = encode(code, info);
        } else {
            SyndromeDomain domain = locate_strategy_monomial(opts.strategy)
                                        ? SyndromeDomain::monomialized
                                        : SyndromeDomain::plain;
            ErrorMap errs = forney(code, synd, loc.lambda, domain);
            report.corrected = received;
            const FieldImpl* f = code.field.impl();
            for (const auto& [pos, v] : errs) {
                auto& cell = report.corrected.rows[static_cast<std::size_t>(pos.first)]
                                                 [static_cast<std::size_t>(pos.second)];
                cell = f->sub(cell, v);
            }
        }
    } catch (const Error& e) {
        if (e.code() == Errc::InexactDivision || e.code() == Errc::DegreeOverflow ||
            e.code() == Errc::MessageDegreeTooHigh) {
            report.reason = std::string("recover: ") + e.what();
            return report;
        }
        throw;
    }
    report.corrected.role = WordRole::codeword;

    // re-encode verification: every corrected row must be a codeword
    const FieldImpl* f = code.field.impl();
    for (int i = 0; i < code.L; ++i) {
        Polynomial info = psi_inverse(code, report.corrected.rows[static_cast<std::size_t>(i)]);
        if (!(info.deg() < Degree(code.k[static_cast<std::size_t>(i)]))) {
            report.reason = "re-encode: corrected row " + std::to_string(i) + " is not a codeword";
            report.status = ErrorReport::Status::decoding_failure;
            return report;
        }
    }
    // error values relative to the received word
    report.error_values.clear();
    for (int i = 0; i < code.L; ++i)
        for (long l = 0; l < code.n; ++l) {
            std::uint32_t rv = received.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
            std::uint32_t cv =
                report.corrected.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
            if (rv != cv) report.error_values[{i, l}] = f->sub(rv, cv);
        }
    report.status = ErrorReport::Status::corrected;
    report.reason.clear();
    return report;
}

}  // namespace spirs

#endif  // SPIRS_IRS_HPP
