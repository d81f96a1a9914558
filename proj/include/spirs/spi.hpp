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

#ifndef SPIRS_SPI_HPP
#define SPIRS_SPI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spirs/errors.hpp"
#include "spirs/gf.hpp"
#include "spirs/poly.hpp"

namespace spirs {

/// One constraint of a simultaneous partial-inverse problem:
/// deg(b(x) Lambda(x) mod m(x)) < tau.
struct SpiEntry {
    Polynomial b;
    Polynomial m;
    long tau = 0;
};

/// The whole problem: find the nonzero Lambda of smallest degree
/// satisfying every entry's constraint.
struct SpiInstance {
    std::vector<SpiEntry> entries;

    int L() const noexcept { return static_cast<int>(entries.size()); }

    const Field& field() const {
        if (entries.empty()) raise(Errc::EmptyInstance, "instance has no constraints");
        return entries.front().b.field();
    }
};

/// Result of solving an SPI problem. `lambda` is always monic (the
/// canonical representative of the scale-factor class). `iterations` is
/// the kappa-line execution count when produced by an iterative solver;
/// absent for the oracle. `quotients`/`remainders` are filled by the
/// register-saving solver variants, rescaled to match the monic lambda.
struct SpiSolution {
    Polynomial lambda;
    std::optional<long> iterations;
    std::optional<std::vector<Polynomial>> quotients;
    std::optional<std::vector<Polynomial>> remainders;
};

/// Checks all SpiInstance invariants; throws on the first violation.
inline void spi_validate(const SpiInstance& inst) {
    if (inst.entries.empty()) raise(Errc::EmptyInstance, "L = 0");
    const FieldImpl* f = inst.entries.front().b.field().impl();
    for (int i = 0; i < inst.L(); ++i) {
        const SpiEntry& e = inst.entries[static_cast<std::size_t>(i)];
        if (!same_field(e.b.field().impl(), f) || !same_field(e.m.field().impl(), f))
            raise(Errc::MixedFields, "constraint " + std::to_string(i) + " over a different field", i);
        if (e.m.deg() < Degree(1))
            raise(Errc::BadDegreeRelation, "deg m must be >= 1 at constraint " + std::to_string(i), i);
        if (!(e.b.deg() < e.m.deg()))
            raise(Errc::BadDegreeRelation, "deg b must be < deg m at constraint " + std::to_string(i), i);
        if (e.tau < 0 || Degree(e.tau) > e.m.deg())
            raise(Errc::TauOutOfRange, "tau must be in [0, deg m] at constraint " + std::to_string(i), i);
    }
}

/// Residual diagnostics of a candidate Lambda:
/// rd[i]   = deg(b^(i) Lambda mod m^(i)),
/// delta_max = max_i(rd[i] - tau[i]),
/// i_max   = the largest index attaining the max (0-based).
struct SpiCheck {
    bool satisfies = false;
    std::vector<Degree> rd;
    Degree delta_max = Degree::neg_inf();
    int i_max = 0;
};

inline SpiCheck spi_check(const SpiInstance& inst, const Polynomial& lambda) {
    if (lambda.is_zero()) raise(Errc::ZeroLambda, "Lambda must be nonzero");
    SpiCheck out;
    out.satisfies = true;
    out.rd.reserve(inst.entries.size());
    for (int i = 0; i < inst.L(); ++i) {
        const SpiEntry& e = inst.entries[static_cast<std::size_t>(i)];
        Degree rd = mulmod(e.b, lambda, e.m).deg();
        out.rd.push_back(rd);
        Degree delta = rd - e.tau;
        if (i == 0 || delta >= out.delta_max) {
            out.delta_max = delta;
            out.i_max = i;  // ties break toward the largest index
        }
        if (!(rd < Degree(e.tau))) out.satisfies = false;
    }
    return out;
}

/// D = sum_i (deg m^(i) - tau^(i)), the always-valid degree bound on the
/// solution.
inline long spi_degree_bound(const SpiInstance& inst) {
    long d = 0;
    for (const SpiEntry& e : inst.entries) d += e.m.deg().value() - e.tau;
    return d;
}

struct OracleOptions {
    // budget on candidate checks; enumeration over degrees 0..D costs at
    // most (q^(D+1)-1)/(q-1) checks
    std::uint64_t budget = 5'000'000;
};

namespace detail {

/// Fast satisfaction test used by the oracle's enumeration: checks that
/// every coefficient of index >= tau of (b*cand mod m) vanishes.
/// `cand` is the raw coefficient vector of a monic candidate.
inline bool oracle_satisfies(const SpiInstance& inst, const std::vector<std::uint32_t>& cand,
                             std::vector<std::uint32_t>& scratch) {
    const FieldImpl* f = inst.field().impl();
    for (const SpiEntry& e : inst.entries) {
        const auto& b = e.b.coeffs();
        if (b.empty()) continue;  // 0 * Lambda mod m = 0 always satisfies
        const auto& m = e.m.coeffs();
        const std::size_t dm = m.size() - 1;
        scratch.assign(b.size() + cand.size() - 1, 0);
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] == 0) continue;
            for (std::size_t j = 0; j < cand.size(); ++j)
                if (cand[j] != 0) scratch[i + j] = f->add(scratch[i + j], f->mul(b[i], cand[j]));
        }
        const std::uint32_t inv_lcf = f->inv(m.back());
        for (std::size_t d = scratch.size(); d-- > dm;) {
            std::uint32_t top = scratch[d];
            if (top == 0) continue;
            std::uint32_t qc = f->mul(top, inv_lcf);
            for (std::size_t j = 0; j <= dm; ++j)
                scratch[d - dm + j] = f->sub(scratch[d - dm + j], f->mul(qc, m[j]));
        }
        const std::size_t lim = std::min(scratch.size(), dm);
        for (std::size_t l = static_cast<std::size_t>(e.tau); l < lim; ++l)
            if (scratch[l] != 0) return false;
    }
    return true;
}

}  // namespace detail

/// Brute-force SPI oracle: enumerates monic polynomials by increasing
/// degree and returns the first satisfier. Intended for tiny instances;
/// the enumeration stops with an error once `budget` candidate checks are
/// spent. Existence is guaranteed at degree <= sum deg m^(i), and the
/// minimal-degree monic satisfier is unique, so enumeration order within
/// a degree does not matter.
inline SpiSolution spi_oracle(const SpiInstance& inst, const OracleOptions& opts = {}) {
    spi_validate(inst);
    const Field& fld = inst.field();
    const std::uint64_t q = fld.q();
    long existence_bound = 0;
    for (const SpiEntry& e : inst.entries) existence_bound += e.m.deg().value();

    std::uint64_t used = 0;
    std::vector<std::uint32_t> cand, scratch;
    for (long d = 0; d <= existence_bound; ++d) {
        cand.assign(static_cast<std::size_t>(d) + 1, 0);
        cand.back() = 1;
        for (;;) {
            if (used++ >= opts.budget)
                raise(Errc::InstanceTooLargeForOracle,
                      "oracle budget of " + std::to_string(opts.budget) + " candidate checks exceeded");
            if (detail::oracle_satisfies(inst, cand, scratch))
                return SpiSolution{Polynomial(fld, cand), std::nullopt, std::nullopt, std::nullopt};
            // next monic candidate of degree d: increment free coefficients
            long pos = 0;
            while (pos < d && cand[static_cast<std::size_t>(pos)] == q - 1) {
                cand[static_cast<std::size_t>(pos)] = 0;
                ++pos;
            }
            if (pos >= d) break;
            ++cand[static_cast<std::size_t>(pos)];
        }
    }
    raise(Errc::InvalidInstance, "oracle exhausted the existence bound without a satisfier");
}

/// Degree reduction: strips the coefficients that provably cannot affect
/// the solution once u >= deg Lambda is known. Solution- and
/// quotient-preserving.
inline SpiInstance spi_reduce_degree(const SpiInstance& inst, long u) {
    spi_validate(inst);
    if (u <= 0) raise(Errc::NonPositiveU, "u must be > 0");
    SpiInstance out;
    out.entries.reserve(inst.entries.size());
    for (const SpiEntry& e : inst.entries) {
        long s = e.tau - u > 0 ? e.tau - u : 0;
        if (s == 0) {
            out.entries.push_back(e);
            continue;
        }
        const auto& bc = e.b.coeffs();
        const auto& mc = e.m.coeffs();
        std::vector<std::uint32_t> bt(bc.begin() + std::min<std::size_t>(bc.size(), s), bc.end());
        std::vector<std::uint32_t> mt(mc.begin() + static_cast<std::size_t>(s), mc.end());
        out.entries.push_back(SpiEntry{Polynomial(e.b.field(), std::move(bt)),
                                       Polynomial(e.m.field(), std::move(mt)), e.tau - s});
    }
    return out;
}

/// Per-constraint data recorded by the monomialization so that quotients
/// and evaluator polynomials can be carried between the two domains.
struct MonomializationMeta {
    long u = 0;
    std::vector<long> n;          // original deg m^(i)
    std::vector<long> tau;        // original tau^(i)
    std::vector<Polynomial> w;    // inverse of the reversed modulus mod x^(n-tau+u)
};

struct Monomialized {
    SpiInstance inst;
    MonomializationMeta meta;
};

/// Transforms the instance into an equivalent one whose moduli are all
/// monomials x^(n^(i)-tau^(i)+u) with uniform tau = u. Requires
/// u >= deg Lambda (caller-supplied bound; u = D always qualifies) and
/// n^(i)-tau^(i)+u > 0 for all i.
inline Monomialized spi_monomialize(const SpiInstance& inst, long u) {
    spi_validate(inst);
    if (u < 0) raise(Errc::PreconditionViolated, "u must be >= 0");
    Monomialized out;
    out.meta.u = u;
    for (const SpiEntry& e : inst.entries) {
        const long n = e.m.deg().value();
        const long window = n - e.tau + u;
        if (window <= 0)
            raise(Errc::PreconditionViolated,
                  "n - tau + u must be > 0 (u = 0 is admissible only for the trivial instance)");
        Polynomial b_rev = reverse(e.b, n - 1);
        Polynomial m_rev = reverse(e.m, n);  // m_rev(0) = lcf m != 0
        Polynomial w = inv_mod_xk(m_rev, window);
        Polynomial s = truncated(w * b_rev, window);
        Polynomial b_tilde = reverse(s, window - 1);
        out.inst.entries.push_back(
            SpiEntry{std::move(b_tilde), Polynomial::monomial(e.m.field(), window), u});
        out.meta.n.push_back(n);
        out.meta.tau.push_back(e.tau);
        out.meta.w.push_back(std::move(w));
    }
    return out;
}

/// Default transformation bound: the Prop-3 bound D, bumped to 1 when the
/// instance forces D = 0 (there u = 0 would violate the window condition).
inline long spi_default_u(const SpiInstance& inst) {
    long d = spi_degree_bound(inst);
    return d > 0 ? d : 1;
}

}  // namespace spirs

#endif  // SPIRS_SPI_HPP
