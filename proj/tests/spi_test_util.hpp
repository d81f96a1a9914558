#ifndef SPIRS_TESTS_SPI_TEST_UTIL_HPP
#define SPIRS_TESTS_SPI_TEST_UTIL_HPP

#include <vector>

#include "spirs/rng.hpp"
#include "spirs/spi.hpp"

namespace spirs::testutil {

inline Polynomial random_poly_deg_below(Rng& rng, const Field& f, long bound) {
    // uniform degree in [-1, bound-1]; -1 means the zero polynomial
    long d = rng.range(-1, bound - 1);
    if (d < 0) return Polynomial::zero(f);
    std::vector<std::uint32_t> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = rng.field_elem(f);
    c.back() = rng.field_nonzero(f);
    return Polynomial(f, std::move(c));
}

inline Polynomial random_monic(Rng& rng, const Field& f, long deg) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(deg) + 1);
    for (auto& v : c) v = rng.field_elem(f);
    c.back() = 1;
    return Polynomial(f, std::move(c));
}

/// Random valid SPI instance with D = sum(deg m - tau) capped so the
/// brute-force oracle stays cheap.
inline SpiInstance random_instance(Rng& rng, const Field& f, int l_max, long degm_max, long d_cap) {
    for (;;) {
        SpiInstance inst;
        int L = static_cast<int>(rng.range(1, l_max));
        long d_total = 0;
        for (int i = 0; i < L; ++i) {
            long dm = rng.range(1, degm_max);
            std::vector<std::uint32_t> mc(static_cast<std::size_t>(dm) + 1);
            for (auto& v : mc) v = rng.field_elem(f);
            mc.back() = rng.field_nonzero(f);
            Polynomial m(f, std::move(mc));
            long tau = rng.range(0, dm);
            d_total += dm - tau;
            inst.entries.push_back(SpiEntry{random_poly_deg_below(rng, f, dm), std::move(m), tau});
        }
        if (d_total <= d_cap) return inst;
    }
}

/// All monic satisfiers of a given degree (enumeration independent of the
/// oracle's search loop); used to check the uniqueness property.
inline std::vector<Polynomial> monic_satisfiers_of_degree(const SpiInstance& inst, long deg) {
    const Field& f = inst.field();
    const std::uint64_t q = f.q();
    std::vector<Polynomial> found;
    std::vector<std::uint32_t> cand(static_cast<std::size_t>(deg) + 1, 0);
    cand.back() = 1;
    for (;;) {
        Polynomial lam(f, cand);
        if (spi_check(inst, lam).satisfies) found.push_back(lam);
        long pos = 0;
        while (pos < deg && cand[static_cast<std::size_t>(pos)] == q - 1) {
            cand[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos >= deg) break;
        ++cand[static_cast<std::size_t>(pos)];
    }
    return found;
}

}  // namespace spirs::testutil

#endif
