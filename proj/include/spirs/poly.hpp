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

#ifndef SPIRS_POLY_HPP
#define SPIRS_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spirs/errors.hpp"
#include "spirs/gf.hpp"

namespace spirs {

/// Degree of a polynomial. The zero polynomial has the distinguished degree
/// NEG_INF, which compares strictly less than every integer, so strict
/// inequalities like deg r < tau hold literally when r = 0.
class Degree {
   public:
    constexpr Degree() : finite_(false), v_(0) {}
    constexpr Degree(long v) : finite_(true), v_(v) {}

    static constexpr Degree neg_inf() { return Degree(); }

    constexpr bool is_neg_inf() const { return !finite_; }
    constexpr bool finite() const { return finite_; }

    constexpr long value() const {
        // callers must check finite(); NEG_INF has no integer value
        return v_;
    }

    friend constexpr bool operator==(Degree a, Degree b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.v_ == b.v_;
    }
    friend constexpr bool operator!=(Degree a, Degree b) { return !(a == b); }
    friend constexpr bool operator<(Degree a, Degree b) {
        if (!a.finite_) return b.finite_;
        if (!b.finite_) return false;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator>(Degree a, Degree b) { return b < a; }
    friend constexpr bool operator<=(Degree a, Degree b) { return !(b < a); }
    friend constexpr bool operator>=(Degree a, Degree b) { return !(a < b); }

    friend constexpr Degree operator+(Degree a, Degree b) {
        if (!a.finite_ || !b.finite_) return neg_inf();
        return Degree(a.v_ + b.v_);
    }
    friend constexpr Degree operator+(Degree a, long b) {
        return a.finite_ ? Degree(a.v_ + b) : neg_inf();
    }
    friend constexpr Degree operator-(Degree a, long b) {
        return a.finite_ ? Degree(a.v_ - b) : neg_inf();
    }

    std::string str() const { return finite_ ? std::to_string(v_) : "-inf"; }

   private:
    bool finite_;
    long v_;
};

/// Dense univariate polynomial over a field. Coefficient l of x^l sits at
/// index l; the vector is normalized so the last entry is nonzero, with the
/// zero polynomial represented by an empty vector. Immutable value type.
class Polynomial {
   public:
    explicit Polynomial(Field f) : f_(std::move(f)) {}

    Polynomial(Field f, std::vector<std::uint32_t> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
        for (std::uint32_t v : c_)
            if (v >= f_.q()) raise(Errc::InvalidElement, "coefficient not in [0,q)");
        normalize();
    }

    static Polynomial zero(const Field& f) { return Polynomial(f); }
    static Polynomial one(const Field& f) { return Polynomial(f, {1}); }
    static Polynomial constant(const Field& f, FieldElement c) { return Polynomial(f, {c.value()}); }

    /// c * x^d (c defaults to 1)
    static Polynomial monomial(const Field& f, long d, std::uint32_t c = 1) {
        if (c == 0 || d < 0) return zero(f);
        std::vector<std::uint32_t> v(static_cast<std::size_t>(d) + 1, 0);
        v.back() = c;
        return Polynomial(f, std::move(v));
    }

    const Field& field() const noexcept { return f_; }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept { return c_.empty(); }

    Degree deg() const noexcept {
        return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long>(c_.size()) - 1);
    }

    /// Coefficient of x^l as a raw canonical value; 0 outside the support
    /// (including l < 0).
    std::uint32_t coeff_v(long l) const noexcept {
        if (l < 0 || l >= static_cast<long>(c_.size())) return 0;
        return c_[static_cast<std::size_t>(l)];
    }

    FieldElement coeff(long l) const noexcept { return {coeff_v(l), f_.impl()}; }

    FieldElement lcf() const {
        if (c_.empty()) raise(Errc::ZeroPolynomial, "lcf of the zero polynomial");
        return {c_.back(), f_.impl()};
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        const FieldImpl* f = a.f_.impl();
        std::vector<std::uint32_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = f->add(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
        return Polynomial(a.f_, std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        const FieldImpl* f = a.f_.impl();
        std::vector<std::uint32_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = f->sub(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
        return Polynomial(a.f_, std::move(r));
    }

    Polynomial operator-() const {
        const FieldImpl* f = f_.impl();
        std::vector<std::uint32_t> r(c_);
        for (auto& v : r) v = f->neg(v);
        Polynomial out(f_);
        out.c_ = std::move(r);
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_same(a, b);
        if (a.is_zero() || b.is_zero()) return zero(a.f_);
        const FieldImpl* f = a.f_.impl();
        std::vector<std::uint32_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = f->add(r[i + j], f->mul(a.c_[i], b.c_[j]));
        }
        Polynomial out(a.f_);
        out.c_ = std::move(r);
        // lcf(a)*lcf(b) != 0 over a field, so no normalization needed
        return out;
    }

    friend Polynomial operator*(FieldElement s, const Polynomial& a) {
        if (!same_field(s.f, a.f_.impl())) raise(Errc::MixedFields, "scalar from a different field");
        if (s.is_zero()) return zero(a.f_);
        std::vector<std::uint32_t> r(a.c_);
        for (auto& v : r) v = s.f->mul(s.v, v);
        Polynomial out(a.f_);
        out.c_ = std::move(r);
        return out;
    }

    /// Monic representative (scale by lcf^-1); input must be nonzero.
    Polynomial monic() const {
        FieldElement l = lcf();
        if (l.value() == 1) return *this;
        return l.inv() * (*this);
    }

   private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    static void check_same(const Polynomial& a, const Polynomial& b) {
        if (!same_field(a.f_.impl(), b.f_.impl()))
            raise(Errc::MixedFields, "polynomials over different fields");
    }

    Field f_;
    std::vector<std::uint32_t> c_;
};

/// x^s * a for s >= 0.
inline Polynomial shifted(const Polynomial& a, long s) {
    if (a.is_zero() || s == 0) return a;
    std::vector<std::uint32_t> r(static_cast<std::size_t>(s), 0);
    r.insert(r.end(), a.coeffs().begin(), a.coeffs().end());
    return Polynomial(a.field(), std::move(r));
}

/// a mod x^k (low-order truncation), k >= 0.
inline Polynomial truncated(const Polynomial& a, long k) {
    if (k <= 0) return Polynomial::zero(a.field());
    if (a.deg() < Degree(k)) return a;
    std::vector<std::uint32_t> r(a.coeffs().begin(), a.coeffs().begin() + k);
    return Polynomial(a.field(), std::move(r));
}

/// c1*a - c2*x^s*b in one pass; the workhorse of the solver update line.
inline Polynomial linear_update(FieldElement c1, const Polynomial& a, FieldElement c2, long s,
                                const Polynomial& b) {
    const FieldImpl* f = a.field().impl();
    if (!same_field(c1.f, f) || !same_field(c2.f, f) || !same_field(b.field().impl(), f))
        raise(Errc::MixedFields, "linear_update operands over different fields");
    const long da = a.is_zero() ? -1 : a.deg().value();
    const long db = b.is_zero() ? -1 : b.deg().value() + s;
    const long dr = std::max(da, db);
    if (dr < 0) return Polynomial::zero(a.field());
    std::vector<std::uint32_t> r(static_cast<std::size_t>(dr) + 1, 0);
    for (long i = 0; i <= da; ++i) r[i] = f->mul(c1.v, a.coeff_v(i));
    for (long i = s > 0 ? s : 0; i <= db; ++i)
        r[i] = f->sub(r[i], f->mul(c2.v, b.coeff_v(i - s)));
    return Polynomial(a.field(), std::move(r));
}

/// Quotient and remainder: a = q*m + r with deg r < deg m.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& m) {
    if (m.is_zero()) raise(Errc::DivisionByZeroPoly, "division by the zero polynomial");
    if (!same_field(a.field().impl(), m.field().impl()))
        raise(Errc::MixedFields, "polynomials over different fields");
    const Field& fld = a.field();
    const FieldImpl* f = fld.impl();
    const long dm = m.deg().value();
    if (a.deg() < Degree(dm)) return {Polynomial::zero(fld), a};

    std::vector<std::uint32_t> rem(a.coeffs());
    const long da = a.deg().value();
    std::vector<std::uint32_t> quo(static_cast<std::size_t>(da - dm) + 1, 0);
    const std::uint32_t inv_lcf = f->inv(m.coeffs().back());
    for (long d = da; d >= dm; --d) {
        std::uint32_t top = rem[static_cast<std::size_t>(d)];
        if (top == 0) continue;
        std::uint32_t qc = f->mul(top, inv_lcf);
        quo[static_cast<std::size_t>(d - dm)] = qc;
        for (long j = 0; j <= dm; ++j) {
            auto idx = static_cast<std::size_t>(d - dm + j);
            rem[idx] = f->sub(rem[idx], f->mul(qc, m.coeff_v(j)));
        }
    }
    rem.resize(static_cast<std::size_t>(dm));
    return {Polynomial(fld, std::move(quo)), Polynomial(fld, std::move(rem))};
}

inline Polynomial poly_mod(const Polynomial& a, const Polynomial& m) { return divmod(a, m).second; }
inline Polynomial poly_div(const Polynomial& a, const Polynomial& m) { return divmod(a, m).first; }

/// (a*b) mod m.
inline Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m) {
    if (m.is_zero()) raise(Errc::DivisionByZeroPoly, "modulus is the zero polynomial");
    return poly_mod(a * b, m);
}

/// Horner evaluation at x0.
inline FieldElement eval(const Polynomial& a, FieldElement x0) {
    const FieldImpl* f = a.field().impl();
    if (!same_field(x0.f, f)) raise(Errc::MixedFields, "evaluation point from a different field");
    std::uint32_t acc = 0;
    const auto& c = a.coeffs();
    for (std::size_t i = c.size(); i-- > 0;) acc = f->add(f->mul(acc, x0.v), c[i]);
    return {acc, f};
}

/// Formal derivative; the integer factor l is realized by repeated
/// addition, so characteristic-p cancellation comes out right.
inline Polynomial derivative(const Polynomial& a) {
    if (a.deg() < Degree(1)) return Polynomial::zero(a.field());
    const FieldImpl* f = a.field().impl();
    const long da = a.deg().value();
    std::vector<std::uint32_t> r(static_cast<std::size_t>(da), 0);
    for (long l = 1; l <= da; ++l) {
        std::uint32_t c = a.coeff_v(l);
        std::uint32_t s = 0;
        for (long t = 0; t < l; ++t) s = f->add(s, c);
        r[static_cast<std::size_t>(l - 1)] = s;
    }
    return Polynomial(a.field(), std::move(r));
}

/// x^target_deg * a(1/x): coefficient l of the result is coefficient
/// (target_deg - l) of a. Requires target_deg >= deg a; a = 0 maps to 0.
inline Polynomial reverse(const Polynomial& a, long target_deg) {
    if (a.is_zero()) return a;
    if (Degree(target_deg) < a.deg())
        raise(Errc::TargetDegreeTooSmall, "target degree " + std::to_string(target_deg) +
                                              " below deg a = " + a.deg().str());
    std::vector<std::uint32_t> r(static_cast<std::size_t>(target_deg) + 1, 0);
    for (long l = 0; l <= target_deg; ++l) r[static_cast<std::size_t>(l)] = a.coeff_v(target_deg - l);
    return Polynomial(a.field(), std::move(r));
}

/// Inverse of a in F[x]/x^k: w with a*w = 1 mod x^k, deg w < k.
/// Solved coefficient by coefficient; the result is unique.
inline Polynomial inv_mod_xk(const Polynomial& a, long k) {
    if (k < 1) raise(Errc::TargetDegreeTooSmall, "k must be >= 1");
    if (a.coeff_v(0) == 0) raise(Errc::NotInvertibleAtZero, "a(0) = 0 has no inverse mod x^k");
    const FieldImpl* f = a.field().impl();
    const std::uint32_t a0inv = f->inv(a.coeff_v(0));
    std::vector<std::uint32_t> w(static_cast<std::size_t>(k), 0);
    w[0] = a0inv;
    for (long j = 1; j < k; ++j) {
        std::uint32_t s = 0;
        for (long t = 1; t <= j; ++t) s = f->add(s, f->mul(a.coeff_v(t), w[static_cast<std::size_t>(j - t)]));
        w[static_cast<std::size_t>(j)] = f->mul(f->neg(s), a0inv);
    }
    return Polynomial(a.field(), std::move(w));
}

}  // namespace spirs

#endif  // SPIRS_POLY_HPP
