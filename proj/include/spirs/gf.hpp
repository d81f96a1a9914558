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

#ifndef SPIRS_GF_HPP
#define SPIRS_GF_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "spirs/errors.hpp"

namespace spirs {

/// Description of a finite field: a prime field F_p (2 <= p < 2^31) or a
/// binary extension F_{2^m} (1 <= m <= 16) given by a degree-m reduction
/// polynomial over F_2, encoded as a bit mask (bit i = coefficient of x^i).
struct FieldSpec {
    enum class Kind { prime, binary_ext };

    Kind kind = Kind::prime;
    std::uint32_t p = 0;               // prime modulus (prime kind)
    std::uint32_t m = 0;               // extension degree (binary_ext kind)
    std::uint32_t reduction_bits = 0;  // reduction polynomial bits (binary_ext kind)
    std::uint64_t q = 0;               // cardinality

    static FieldSpec prime(std::uint64_t p) {
        FieldSpec s;
        s.kind = Kind::prime;
        if (p >= (1ull << 31)) raise(Errc::UnsupportedSize, "prime modulus must be < 2^31");
        s.p = static_cast<std::uint32_t>(p);
        s.q = p;
        return s;
    }

    static FieldSpec binary_ext(std::uint32_t m, std::uint32_t reduction_bits) {
        FieldSpec s;
        s.kind = Kind::binary_ext;
        s.m = m;
        s.reduction_bits = reduction_bits;
        s.q = 1ull << m;
        return s;
    }

    bool operator==(const FieldSpec&) const = default;
};

namespace detail {

inline bool is_prime_u32(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

/// Carry-less multiplication of F_2[x] polynomials given as bit masks.
inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

inline int bit_degree(std::uint64_t a) {
    int d = -1;
    while (a) {
        ++d;
        a >>= 1;
    }
    return d;
}

/// Remainder of F_2[x] division, bit-mask representation.
inline std::uint64_t clmod(std::uint64_t a, std::uint64_t mod) {
    const int dm = bit_degree(mod);
    for (int d = bit_degree(a); d >= dm; d = bit_degree(a)) a ^= mod << (d - dm);
    return a;
}

inline bool is_irreducible_f2(std::uint32_t bits, std::uint32_t m) {
    // Exhaustive check: no divisor of degree 1..m/2.
    for (std::uint32_t d = 1; 2 * d <= m; ++d)
        for (std::uint64_t cand = (1ull << d); cand < (2ull << d); ++cand)
            if (clmod(bits, cand) == 0) return false;
    return true;
}

}  // namespace detail

/// Immutable field descriptor. All arithmetic on canonical representatives
/// in [0, q). Binary extensions precompute log/antilog tables over a
/// generator of the multiplicative group.
class FieldImpl {
   public:
    explicit FieldImpl(const FieldSpec& spec) : spec_(spec) {
        if (spec.kind == FieldSpec::Kind::prime) {
            if (spec.p >= (1u << 31)) raise(Errc::UnsupportedSize, "prime modulus must be < 2^31");
            if (!detail::is_prime_u32(spec.p))
                raise(Errc::NonPrimeModulus, "modulus " + std::to_string(spec.p) + " is not prime");
        } else {
            if (spec.m < 1 || spec.m > 16)
                raise(Errc::UnsupportedSize, "extension degree m must be in [1,16]");
            if (detail::bit_degree(spec.reduction_bits) != static_cast<int>(spec.m))
                raise(Errc::ReducibleReductionPoly, "reduction polynomial must have degree exactly m");
            if (!detail::is_irreducible_f2(spec.reduction_bits, spec.m))
                raise(Errc::ReducibleReductionPoly, "reduction polynomial is reducible over F_2");
            build_tables();
        }
    }

    const FieldSpec& spec() const noexcept { return spec_; }
    std::uint64_t q() const noexcept { return spec_.q; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (spec_.kind == FieldSpec::Kind::binary_ext) return a ^ b;
        std::uint64_t s = std::uint64_t(a) + b;
        if (s >= spec_.p) s -= spec_.p;
        return static_cast<std::uint32_t>(s);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        if (spec_.kind == FieldSpec::Kind::binary_ext) return a ^ b;
        return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t(a) + spec_.p - b);
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (spec_.kind == FieldSpec::Kind::binary_ext) return a;
        return a == 0 ? 0 : spec_.p - a;
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (spec_.kind == FieldSpec::Kind::prime)
            return static_cast<std::uint32_t>(std::uint64_t(a) * b % spec_.p);
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        const std::uint32_t ord = static_cast<std::uint32_t>(spec_.q - 1);
        if (s >= ord) s -= ord;
        return exp_[s];
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) raise(Errc::DivisionByZero, "inverse of zero");
        if (spec_.kind == FieldSpec::Kind::binary_ext) {
            const std::uint32_t ord = static_cast<std::uint32_t>(spec_.q - 1);
            std::uint32_t e = (ord - log_[a]) % ord;
            return exp_[e];
        }
        // extended Euclid on (a, p)
        std::int64_t t = 0, newt = 1, r = spec_.p, newr = a;
        while (newr != 0) {
            std::int64_t quot = r / newr;
            std::int64_t tmp = t - quot * newt;
            t = newt;
            newt = tmp;
            tmp = r - quot * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += spec_.p;
        return static_cast<std::uint32_t>(t);
    }

   private:
    void build_tables() {
        const std::uint32_t q = static_cast<std::uint32_t>(spec_.q);
        const std::uint32_t ord = q - 1;
        exp_.assign(ord, 0);
        log_.assign(q, 0);
        const std::uint32_t g = find_generator();
        std::uint32_t acc = 1;
        for (std::uint32_t j = 0; j < ord; ++j) {
            exp_[j] = acc;
            log_[acc] = j;
            acc = mul_slow(acc, g);
        }
    }

    std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(
            detail::clmod(detail::clmul(a, b), spec_.reduction_bits));
    }

    std::uint32_t pow_slow(std::uint32_t a, std::uint32_t e) const {
        std::uint32_t r = 1;
        while (e) {
            if (e & 1) r = mul_slow(r, a);
            a = mul_slow(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t find_generator() const {
        const std::uint32_t ord = static_cast<std::uint32_t>(spec_.q - 1);
        if (ord == 1) return 1;
        std::vector<std::uint32_t> prime_factors;
        std::uint32_t n = ord;
        for (std::uint32_t d = 2; d * d <= n; ++d) {
            if (n % d == 0) {
                prime_factors.push_back(d);
                while (n % d == 0) n /= d;
            }
        }
        if (n > 1) prime_factors.push_back(n);
        for (std::uint32_t g = 2; g < spec_.q; ++g) {
            bool ok = true;
            for (std::uint32_t pf : prime_factors) {
                if (pow_slow(g, ord / pf) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) return g;
        }
        raise(Errc::ReducibleReductionPoly, "no generator found (reduction polynomial invalid?)");
    }

    FieldSpec spec_;
    std::vector<std::uint32_t> exp_, log_;
};

class Field;

/// Field identity: the same descriptor, or independently constructed
/// descriptors of the same spec (their arithmetic coincides).
inline bool same_field(const FieldImpl* a, const FieldImpl* b) {
    return a == b || (a && b && a->spec() == b->spec());
}

/// A field element: canonical value plus the descriptor it belongs to.
/// Lightweight view type; valid while some Field handle keeps the
/// descriptor alive. Mixing elements of different fields is a reported
/// error, never undefined behavior.
struct FieldElement {
    std::uint32_t v = 0;
    const FieldImpl* f = nullptr;

    std::uint32_t value() const noexcept { return v; }
    bool is_zero() const noexcept { return v == 0; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        check_same(a, b);
        return {a.f->add(a.v, b.v), a.f};
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        check_same(a, b);
        return {a.f->sub(a.v, b.v), a.f};
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        check_same(a, b);
        return {a.f->mul(a.v, b.v), a.f};
    }
    friend FieldElement operator/(FieldElement a, FieldElement b) {
        check_same(a, b);
        return {a.f->mul(a.v, b.f->inv(b.v)), a.f};
    }
    FieldElement operator-() const { return {f->neg(v), f}; }
    FieldElement inv() const { return {f->inv(v), f}; }

    friend bool operator==(FieldElement a, FieldElement b) {
        check_same(a, b);
        return a.v == b.v;
    }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

   private:
    static void check_same(FieldElement a, FieldElement b) {
        if (!same_field(a.f, b.f)) raise(Errc::MixedFields, "elements belong to different fields");
    }
};

/// Shared, immutable field handle. Construction validates the spec; the
/// descriptor is safe to share across threads afterwards.
class Field {
   public:
    explicit Field(const FieldSpec& spec) : impl_(std::make_shared<const FieldImpl>(spec)) {}

    std::uint64_t q() const noexcept { return impl_->q(); }
    const FieldSpec& spec() const noexcept { return impl_->spec(); }
    const FieldImpl* impl() const noexcept { return impl_.get(); }

    FieldElement zero() const noexcept { return {0, impl_.get()}; }
    FieldElement one() const noexcept { return {1, impl_.get()}; }

    FieldElement elem(std::uint64_t v) const {
        if (v >= q()) raise(Errc::InvalidElement, "value " + std::to_string(v) + " not in [0,q)");
        return {static_cast<std::uint32_t>(v), impl_.get()};
    }

    /// Reduce an arbitrary integer into the field: mod p for prime fields;
    /// binary extensions require the value to already be canonical.
    FieldElement from_int(std::int64_t v) const {
        if (spec().kind == FieldSpec::Kind::prime) {
            std::int64_t p = spec().p;
            std::int64_t r = v % p;
            if (r < 0) r += p;
            return {static_cast<std::uint32_t>(r), impl_.get()};
        }
        if (v < 0 || static_cast<std::uint64_t>(v) >= q())
            raise(Errc::InvalidElement, "value " + std::to_string(v) + " not in [0,q)");
        return {static_cast<std::uint32_t>(v), impl_.get()};
    }

    friend bool operator==(const Field& a, const Field& b) { return a.impl_ == b.impl_; }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

   private:
    std::shared_ptr<const FieldImpl> impl_;
};

inline Field field_new(const FieldSpec& spec) { return Field(spec); }

}  // namespace spirs

#endif  // SPIRS_GF_HPP
