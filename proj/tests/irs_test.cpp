#include "spirs/irs.hpp"

#include <gtest/gtest.h>

#include <functional>

#include "spirs/rng.hpp"

using namespace spirs;

namespace {

Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    throw std::logic_error("expected an spirs::Error");
}

// GF(8) with x^3 + x + 1; beta = powers of x, so m = x^7 - 1 (cyclic)
CodeSpec gf8_cyclic(std::vector<long> k) {
    Field f = field_new(FieldSpec::binary_ext(3, 0b1011));
    std::vector<std::uint32_t> beta;
    std::uint32_t a = 1;
    for (int l = 0; l < 7; ++l) {
        beta.push_back(a);
        a = (f.elem(a) * f.elem(2)).value();
    }
    const int L = static_cast<int>(k.size());
    return make_code(f, 7, L, std::move(k), std::move(beta));
}

CodeSpec gf7_tiny() {
    Field f = field_new(FieldSpec::prime(7));
    return make_code(f, 3, 1, {2}, {1, 2, 3});
}

std::vector<Polynomial> random_messages(Rng& rng, const CodeSpec& code) {
    std::vector<Polynomial> out;
    for (int i = 0; i < code.L; ++i) {
        std::vector<std::uint32_t> c(static_cast<std::size_t>(code.k[static_cast<std::size_t>(i)]));
        for (auto& v : c) v = rng.field_elem(code.field);
        out.emplace_back(code.field, std::move(c));
    }
    return out;
}

// error word with exactly the given support; every support column nonzero
ArrayWord random_error(Rng& rng, const CodeSpec& code, const std::vector<long>& support) {
    ArrayWord e;
    e.role = WordRole::error;
    e.rows.assign(static_cast<std::size_t>(code.L),
                  std::vector<std::uint32_t>(static_cast<std::size_t>(code.n), 0));
    for (long l : support) {
        for (;;) {
            bool nonzero = false;
            for (int i = 0; i < code.L; ++i) {
                std::uint32_t v = rng.field_elem(code.field);
                e.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] = v;
                if (v != 0) nonzero = true;
            }
            if (nonzero) break;
        }
    }
    return e;
}

ArrayWord add_words(const CodeSpec& code, const ArrayWord& a, const ArrayWord& b) {
    ArrayWord out = a;
    out.role = WordRole::received;
    const FieldImpl* f = code.field.impl();
    for (int i = 0; i < code.L; ++i)
        for (long l = 0; l < code.n; ++l) {
            auto& cell = out.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
            cell = f->add(cell, b.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)]);
        }
    return out;
}

bool rows_equal(const ArrayWord& a, const ArrayWord& b) { return a.rows == b.rows; }

const LocateStrategy kAllStrategies[] = {
    LocateStrategy::spi_general, LocateStrategy::spi_monomial,
    LocateStrategy::fixed_iterations_general, LocateStrategy::fixed_iterations_monomial};

std::vector<Polynomial> strategy_syndromes(const CodeSpec& code, const ArrayWord& y,
                                           LocateStrategy s) {
    auto synd = syndromes(code, y);
    return locate_strategy_monomial(s) ? monomialized_syndromes(code, synd) : synd;
}

}  // namespace

TEST(CodeSpecTest, Gf7Construction) {
    CodeSpec code = gf7_tiny();
    EXPECT_EQ(code.m, Polynomial(code.field, {1, 4, 1, 1}));  // x^3 + x^2 + 4x + 1
    EXPECT_EQ(code.k_max, 2);
    EXPECT_EQ(code.m_tilde[0].deg(), Degree(1));
}

TEST(CodeSpecTest, CyclicCodeHasMonomialTruncatedModulus) {
    CodeSpec code = gf8_cyclic({3, 3});
    // m = x^7 + 1 over GF(8) (char 2)
    Polynomial expect_m(code.field, {1, 0, 0, 0, 0, 0, 0, 1});
    EXPECT_EQ(code.m, expect_m);
    for (int i = 0; i < 2; ++i) {
        EXPECT_EQ(code.m_tilde[static_cast<std::size_t>(i)], Polynomial::monomial(code.field, 4));
        EXPECT_EQ(code.w[static_cast<std::size_t>(i)], Polynomial::one(code.field));
    }
}

TEST(CodeSpecTest, RejectsBadParameters) {
    Field f = field_new(FieldSpec::prime(7));
    EXPECT_EQ(code_of([&] { make_code(f, 3, 1, {2}, {1, 2, 1}); }), Errc::DuplicateEvalPoint);
    EXPECT_EQ(code_of([&] { make_code(f, 3, 1, {3}, {1, 2, 3}); }), Errc::KMaxNotLessThanN);
    EXPECT_EQ(code_of([&] { make_code(f, 3, 1, {0}, {1, 2, 3}); }), Errc::DimensionOutOfRange);
    EXPECT_EQ(code_of([&] { make_code(f, 3, 2, {2}, {1, 2, 3}); }), Errc::DimensionOutOfRange);
}

TEST(CodecTest, EncodeExamples) {
    CodeSpec code = gf7_tiny();
    ArrayWord w = encode(code, {Polynomial(code.field, {1, 1})});
    EXPECT_EQ(w.rows[0], (std::vector<std::uint32_t>{2, 3, 4}));
    ArrayWord z = encode(code, {Polynomial::zero(code.field)});
    EXPECT_EQ(z.rows[0], (std::vector<std::uint32_t>{0, 0, 0}));
    ArrayWord c = encode(code, {Polynomial(code.field, {5})});
    EXPECT_EQ(c.rows[0], (std::vector<std::uint32_t>{5, 5, 5}));
    EXPECT_EQ(code_of([&] { encode(code, {Polynomial(code.field, {1, 1, 1})}); }),
              Errc::MessageDegreeTooHigh);
}

TEST(CodecTest, PsiInverseRoundTrip) {
    CodeSpec code = gf7_tiny();
    EXPECT_EQ(psi_inverse(code, {2, 3, 4}), Polynomial(code.field, {1, 1}));
    EXPECT_TRUE(psi_inverse(code, {0, 0, 0}).is_zero());

    Rng rng(31);
    CodeSpec big = gf8_cyclic({3, 4});
    for (int t = 0; t < 200; ++t) {
        std::vector<std::uint32_t> row(7);
        for (auto& v : row) v = rng.field_elem(big.field);
        Polynomial y = psi_inverse(big, row);
        ASSERT_TRUE(y.deg() < Degree(big.n));
        for (long l = 0; l < big.n; ++l)
            ASSERT_EQ(eval(y, big.beta_at(l)).value(), row[static_cast<std::size_t>(l)]);
    }
}

TEST(CodecTest, SyndromesVanishOnCodewordsAndDependOnlyOnError) {
    Rng rng(32);
    CodeSpec code = gf8_cyclic({3, 3});
    for (int t = 0; t < 50; ++t) {
        ArrayWord c = encode(code, random_messages(rng, code));
        for (const Polynomial& s : syndromes(code, c)) ASSERT_TRUE(s.is_zero());
        ArrayWord e = random_error(rng, code, rng.support(code.n, rng.range(0, 4)));
        ArrayWord y = add_words(code, c, e);
        auto sy = syndromes(code, y);
        auto se = syndromes(code, e);
        for (int i = 0; i < code.L; ++i) ASSERT_EQ(sy[static_cast<std::size_t>(i)], se[static_cast<std::size_t>(i)]);
    }
}

TEST(CodecTest, SyndromeIsCoefficientWindow) {
    // n = 5, k = 2 over GF(7): S = y2 + y3 x + y4 x^2
    Field f = field_new(FieldSpec::prime(7));
    CodeSpec code = make_code(f, 5, 1, {2}, {1, 2, 3, 4, 5});
    Polynomial y(f, {6, 5, 4, 3, 2});
    ArrayWord w;
    w.rows.push_back({});
    for (long l = 0; l < 5; ++l) w.rows[0].push_back(eval(y, code.beta_at(l)).value());
    auto s = syndromes(code, w);
    EXPECT_EQ(s[0], Polynomial(f, {4, 3, 2}));
}

TEST(CodecTest, MonomializedSyndromesCyclicIdentity) {
    Rng rng(33);
    CodeSpec code = gf8_cyclic({3, 3});
    for (int t = 0; t < 50; ++t) {
        ArrayWord e = random_error(rng, code, rng.support(code.n, rng.range(0, 4)));
        auto s = syndromes(code, e);
        auto sb = monomialized_syndromes(code, s);
        for (int i = 0; i < code.L; ++i)
            ASSERT_EQ(sb[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i)]);
    }
    // and zero maps to zero
    auto sb0 = monomialized_syndromes(code, {Polynomial::zero(code.field), Polynomial::zero(code.field)});
    EXPECT_TRUE(sb0[0].is_zero());
    EXPECT_TRUE(sb0[1].is_zero());
}

TEST(CodecTest, MonomializedSyndromesPreserveSpiSolution) {
    // non-cyclic code: beta includes 0, m is not x^n - 1
    Rng rng(34);
    Field f = field_new(FieldSpec::binary_ext(3, 0b1011));
    CodeSpec code = make_code(f, 6, 2, {2, 3}, {0, 1, 2, 3, 4, 5});
    for (int t = 0; t < 40; ++t) {
        long nerr = rng.range(0, code.n - code.k_max);
        ArrayWord e = random_error(rng, code, rng.support(code.n, nerr));
        long te = static_cast<long>(column_support(code, e).size());
        auto s = syndromes(code, e);
        auto sb = monomialized_syndromes(code, s);
        SpiInstance plain, mono;
        for (int i = 0; i < code.L; ++i) {
            plain.entries.push_back(
                SpiEntry{s[static_cast<std::size_t>(i)], code.m_tilde[static_cast<std::size_t>(i)], te});
            mono.entries.push_back(SpiEntry{
                sb[static_cast<std::size_t>(i)],
                Polynomial::monomial(f, code.n - code.k[static_cast<std::size_t>(i)]), te});
        }
        ASSERT_EQ(spi_oracle(plain).lambda, spi_oracle(mono).lambda);
    }
}

TEST(LocateTest, ZeroSyndromesGiveTrivialLocator) {
    CodeSpec code = gf8_cyclic({3, 3});
    ArrayWord c = encode(code, {Polynomial::one(code.field), Polynomial::monomial(code.field, 2)});
    for (LocateStrategy s : kAllStrategies) {
        LocateResult r = locate_errors(code, strategy_syndromes(code, c, s), s);
        ASSERT_TRUE(r.ok);
        EXPECT_EQ(r.lambda, Polynomial::one(code.field)) << locate_strategy_name(s);
        EXPECT_EQ(r.iterations, code.L * (code.n - code.k_min)) << locate_strategy_name(s);
    }
}

TEST(LocateTest, SingleColumnError) {
    Rng rng(35);
    CodeSpec code = gf8_cyclic({3, 3});
    for (long l = 0; l < code.n; ++l) {
        ArrayWord c = encode(code, random_messages(rng, code));
        ArrayWord e = random_error(rng, code, {l});
        ArrayWord y = add_words(code, c, e);
        Polynomial expect = error_locator_poly(code, {l});
        for (LocateStrategy s : kAllStrategies) {
            LocateResult r = locate_errors(code, strategy_syndromes(code, y, s), s);
            ASSERT_TRUE(r.ok);
            ASSERT_EQ(r.lambda, expect) << locate_strategy_name(s);
        }
    }
}

TEST(LocateTest, HalfDistancePatternsAlwaysLocatedWithFixedIterationCount) {
    Rng rng(36);
    CodeSpec code = gf8_cyclic({3, 3});
    LocateOptions opts;
    opts.check_assertions = true;
    for (int t = 0; t < 60; ++t) {
        long nerr = rng.range(1, (code.n - code.k_max) / 2);
        std::vector<long> sup = rng.support(code.n, nerr);
        ArrayWord c = encode(code, random_messages(rng, code));
        ArrayWord y = add_words(code, c, random_error(rng, code, sup));
        Polynomial expect = error_locator_poly(code, sup);
        for (LocateStrategy s : kAllStrategies) {
            LocateResult r = locate_errors(code, strategy_syndromes(code, y, s), s, opts);
            ASSERT_TRUE(r.ok);
            ASSERT_EQ(r.lambda, expect) << locate_strategy_name(s);
            // complexity accounting under the partial-inverse condition
            ASSERT_EQ(r.iterations, code.L * (code.n - code.k_min)) << locate_strategy_name(s);
        }
    }
}

TEST(LocateTest, ValidateLocator) {
    CodeSpec code = gf8_cyclic({3, 3});
    EXPECT_TRUE(validate_locator(code, Polynomial::one(code.field)));
    Polynomial good = error_locator_poly(code, {0, 3});
    EXPECT_TRUE(validate_locator(code, good));
    Polynomial sq = error_locator_poly(code, {0}) * error_locator_poly(code, {0});
    EXPECT_FALSE(validate_locator(code, sq));
    EXPECT_EQ(code_of([&] { validate_locator(code, Polynomial::zero(code.field)); }), Errc::ZeroLambda);
}

TEST(RecoverTest, TrivialLocatorReturnsInformation) {
    Rng rng(37);
    CodeSpec code = gf8_cyclic({3, 3});
    auto msgs = random_messages(rng, code);
    ArrayWord c = encode(code, msgs);
    auto rec = recover_by_interpolation(code, c, Polynomial::one(code.field));
    for (int i = 0; i < code.L; ++i) ASSERT_EQ(rec[static_cast<std::size_t>(i)], msgs[static_cast<std::size_t>(i)]);
}

TEST(RecoverTest, BothFormulasAgreeUnderPartialInverseCondition) {
    Rng rng(38);
    CodeSpec code = gf8_cyclic({3, 3});
    for (int t = 0; t < 60; ++t) {
        long nerr = rng.range(0, 2);
        std::vector<long> sup = rng.support(code.n, nerr);
        auto msgs = random_messages(rng, code);
        ArrayWord y = add_words(code, encode(code, msgs), random_error(rng, code, sup));
        Polynomial lam = error_locator_poly(code, column_support(code, add_words(code, y, encode(code, msgs))));
        auto a = recover_by_interpolation(code, y, lam, InterpolationFormula::mod_reduced);
        auto b = recover_by_interpolation(code, y, lam, InterpolationFormula::ratio);
        for (int i = 0; i < code.L; ++i) {
            ASSERT_EQ(a[static_cast<std::size_t>(i)], msgs[static_cast<std::size_t>(i)]);
            ASSERT_EQ(b[static_cast<std::size_t>(i)], msgs[static_cast<std::size_t>(i)]);
        }
    }
}

TEST(RecoverTest, ForneyMatchesInterpolationDifference) {
    Rng rng(39);
    CodeSpec code = gf8_cyclic({3, 3});
    const FieldImpl* f = code.field.impl();
    for (int t = 0; t < 60; ++t) {
        long nerr = rng.range(0, 2);
        std::vector<long> sup = rng.support(code.n, nerr);
        ArrayWord c = encode(code, random_messages(rng, code));
        ArrayWord e = random_error(rng, code, sup);
        ArrayWord y = add_words(code, c, e);
        Polynomial lam = error_locator_poly(code, column_support(code, e));
        auto s = syndromes(code, y);
        auto sb = monomialized_syndromes(code, s);
        ErrorMap plain = forney(code, s, lam, SyndromeDomain::plain);
        ErrorMap mono = forney(code, sb, lam, SyndromeDomain::monomialized);
        ASSERT_EQ(plain, mono);
        // against the direct difference y - c
        ErrorMap expect;
        for (int i = 0; i < code.L; ++i)
            for (long l = 0; l < code.n; ++l) {
                std::uint32_t ev = e.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)];
                if (ev != 0) expect[{i, l}] = ev;
            }
        ASSERT_EQ(plain, expect);
        (void)f;
    }
}

TEST(RecoverTest, ForneySingleErrorValue) {
    CodeSpec code = gf8_cyclic({3, 3});
    ArrayWord c = encode(code, {Polynomial::one(code.field), Polynomial::zero(code.field)});
    ArrayWord e;
    e.role = WordRole::error;
    e.rows.assign(2, std::vector<std::uint32_t>(7, 0));
    e.rows[1][4] = 6;
    ArrayWord y = add_words(code, c, e);
    Polynomial lam = error_locator_poly(code, {4});
    ErrorMap m = forney(code, syndromes(code, y), lam, SyndromeDomain::plain);
    ASSERT_EQ(m.size(), 1u);
    EXPECT_EQ((m[{1, 4}]), 6u);
    // trivial locator yields the empty map
    EXPECT_TRUE(forney(code, syndromes(code, c), Polynomial::one(code.field), SyndromeDomain::plain)
                    .empty());
}

TEST(RecoverTest, QuotientIdentitiesUnderPartialInverseCondition) {
    Rng rng(40);
    CodeSpec code = gf8_cyclic({3, 4});
    for (int t = 0; t < 40; ++t) {
        long nerr = rng.range(0, (code.n - code.k_max) / 2);
        std::vector<long> sup = rng.support(code.n, nerr);
        ArrayWord c = encode(code, random_messages(rng, code));
        ArrayWord e = random_error(rng, code, sup);
        ArrayWord y = add_words(code, c, e);
        Polynomial lam = error_locator_poly(code, column_support(code, e));
        auto s = syndromes(code, y);
        auto sb = monomialized_syndromes(code, s);
        for (int i = 0; i < code.L; ++i) {
            Polynomial yi = psi_inverse(code, y.rows[static_cast<std::size_t>(i)]);
            Polynomial q_full = poly_div(yi * lam, code.m);
            Polynomial q_synd =
                poly_div(s[static_cast<std::size_t>(i)] * lam, code.m_tilde[static_cast<std::size_t>(i)]);
            Polynomial q_mono = poly_div(
                sb[static_cast<std::size_t>(i)] * lam,
                Polynomial::monomial(code.field, code.n - code.k[static_cast<std::size_t>(i)]));
            ASSERT_EQ(q_full, q_synd);
            ASSERT_EQ(q_full, q_mono);
        }
    }
}

TEST(CodecInvariants, ShiozakiGaoIdentity) {
    Rng rng(41);
    CodeSpec code = gf8_cyclic({3, 3});
    for (int t = 0; t < 60; ++t) {
        ArrayWord e = random_error(rng, code, rng.support(code.n, rng.range(0, code.n)));
        Polynomial lam = error_locator_poly(code, column_support(code, e));
        for (int i = 0; i < code.L; ++i) {
            Polynomial ei = psi_inverse(code, e.rows[static_cast<std::size_t>(i)]);
            ASSERT_TRUE(mulmod(ei, lam, code.m).is_zero());
        }
    }
}

TEST(CodecInvariants, KeyEquationCharacterization) {
    // under the partial-inverse condition, Lambda_E is the minimal-degree
    // nonzero Lambda with deg(S Lambda mod m_tilde) < deg Lambda for all i
    Rng rng(42);
    CodeSpec code = gf8_cyclic({3, 3});
    const std::uint64_t q = code.field.q();
    for (int t = 0; t < 20; ++t) {
        long nerr = rng.range(1, 2);
        std::vector<long> sup = rng.support(code.n, nerr);
        ArrayWord e = random_error(rng, code, sup);
        Polynomial lam_e = error_locator_poly(code, column_support(code, e));
        auto s = syndromes(code, e);
        long found_deg = -1;
        Polynomial found = Polynomial::one(code.field);
        int found_count = 0;
        for (long d = 0; d <= code.n - code.k_max && found_deg < 0; ++d) {
            std::vector<std::uint32_t> cand(static_cast<std::size_t>(d) + 1, 0);
            cand.back() = 1;
            for (;;) {
                Polynomial lam(code.field, cand);
                bool ok = true;
                for (int i = 0; i < code.L && ok; ++i)
                    if (!(mulmod(s[static_cast<std::size_t>(i)], lam,
                                 code.m_tilde[static_cast<std::size_t>(i)])
                              .deg() < lam.deg()))
                        ok = false;
                if (ok) {
                    found_deg = d;
                    found = lam;
                    ++found_count;
                }
                long pos = 0;
                while (pos < d && cand[static_cast<std::size_t>(pos)] == q - 1) {
                    cand[static_cast<std::size_t>(pos)] = 0;
                    ++pos;
                }
                if (pos >= d) break;
                ++cand[static_cast<std::size_t>(pos)];
            }
        }
        ASSERT_EQ(found_deg, lam_e.deg().value());
        ASSERT_EQ(found_count, 1);
        ASSERT_EQ(found, lam_e);
    }
}

TEST(CodecInvariants, MlfsrCharacterization) {
    // smallest kappa admitting deg Lambda <= kappa with
    // deg(S_breve Lambda mod x^(n-k)) < kappa equals deg Lambda_E
    Rng rng(43);
    CodeSpec code = gf8_cyclic({3, 3});
    const std::uint64_t q = code.field.q();
    for (int t = 0; t < 20; ++t) {
        long nerr = rng.range(1, 2);
        std::vector<long> sup = rng.support(code.n, nerr);
        ArrayWord e = random_error(rng, code, sup);
        Polynomial lam_e = error_locator_poly(code, column_support(code, e));
        auto sb = monomialized_syndromes(code, syndromes(code, e));
        long smallest_kappa = -1;
        for (long kappa = 0; kappa <= code.n - code.k_max && smallest_kappa < 0; ++kappa) {
            for (long d = 0; d <= kappa && smallest_kappa < 0; ++d) {
                std::vector<std::uint32_t> cand(static_cast<std::size_t>(d) + 1, 0);
                cand.back() = 1;
                for (;;) {
                    Polynomial lam(code.field, cand);
                    bool ok = true;
                    for (int i = 0; i < code.L && ok; ++i)
                        if (!(mulmod(sb[static_cast<std::size_t>(i)], lam,
                                     Polynomial::monomial(code.field,
                                                          code.n - code.k[static_cast<std::size_t>(i)]))
                                  .deg() < Degree(kappa)))
                            ok = false;
                    if (ok) {
                        smallest_kappa = kappa;
                        break;
                    }
                    long pos = 0;
                    while (pos < d && cand[static_cast<std::size_t>(pos)] == q - 1) {
                        cand[static_cast<std::size_t>(pos)] = 0;
                        ++pos;
                    }
                    if (pos >= d) break;
                    ++cand[static_cast<std::size_t>(pos)];
                }
            }
        }
        ASSERT_EQ(smallest_kappa, lam_e.deg().value());
    }
}

TEST(DecodeTest, CodewordPassesThrough) {
    Rng rng(44);
    CodeSpec code = gf8_cyclic({3, 3});
    ArrayWord c = encode(code, random_messages(rng, code));
    ErrorReport rep = decode(code, c);
    ASSERT_EQ(rep.status, ErrorReport::Status::corrected);
    EXPECT_EQ(rep.locator, Polynomial::one(code.field));
    EXPECT_TRUE(rep.support.empty());
    EXPECT_TRUE(rep.error_values.empty());
    EXPECT_TRUE(rows_equal(rep.corrected, c));
}

TEST(DecodeTest, HalfDistanceExactAcrossStrategiesAndRecoveries) {
    Rng rng(45);
    CodeSpec code = gf8_cyclic({3, 3});
    for (int t = 0; t < 40; ++t) {
        long nerr = rng.range(1, 2);
        std::vector<long> sup = rng.support(code.n, nerr);
        ArrayWord c = encode(code, random_messages(rng, code));
        ArrayWord y = add_words(code, c, random_error(rng, code, sup));
        for (LocateStrategy s : kAllStrategies) {
            for (auto rec : {DecodeOptions::Recovery::interpolation, DecodeOptions::Recovery::forney}) {
                DecodeOptions opts;
                opts.strategy = s;
                opts.recovery = rec;
                ErrorReport rep = decode(code, y, opts);
                ASSERT_EQ(rep.status, ErrorReport::Status::corrected) << locate_strategy_name(s);
                ASSERT_TRUE(rows_equal(rep.corrected, c));
                ASSERT_EQ(static_cast<long>(rep.support.size()), nerr);
            }
        }
    }
}

TEST(DecodeTest, BeyondNecessaryRadiusMostlyFails) {
    // max radius = min{4, (2/3)*4} = 2; beyond it the partial-inverse
    // condition never holds, so the decoder usually declares failure. A
    // small fraction of patterns still decode (to the transmitted word via
    // a larger valid locator containing the support, or to a wrong one);
    // an exact decode requires deg lambda <= n - k_max, impossible at t=4.
    Rng rng(46);
    CodeSpec code = gf8_cyclic({3, 3});
    for (long nerr : {3L, 4L}) {
        int failures = 0, exact = 0, total = 0;
        for (int t = 0; t < 150; ++t) {
            std::vector<long> sup = rng.support(code.n, nerr);
            ArrayWord c = encode(code, random_messages(rng, code));
            ArrayWord y = add_words(code, c, random_error(rng, code, sup));
            ErrorReport rep = decode(code, y);
            ++total;
            if (rep.status == ErrorReport::Status::decoding_failure)
                ++failures;
            else if (rows_equal(rep.corrected, c))
                ++exact;
        }
        EXPECT_GT(failures * 4, total * 3);
        if (nerr == 4) EXPECT_EQ(exact, 0);
    }
}

TEST(DecodeTest, UnequalRowDimensions) {
    Rng rng(47);
    CodeSpec code = gf8_cyclic({2, 4});
    for (int t = 0; t < 40; ++t) {
        long nerr = rng.range(0, (code.n - code.k_max) / 2);
        std::vector<long> sup = rng.support(code.n, nerr);
        ArrayWord c = encode(code, random_messages(rng, code));
        ArrayWord y = add_words(code, c, random_error(rng, code, sup));
        for (LocateStrategy s : kAllStrategies) {
            DecodeOptions opts;
            opts.strategy = s;
            ErrorReport rep = decode(code, y, opts);
            ASSERT_EQ(rep.status, ErrorReport::Status::corrected) << locate_strategy_name(s);
            ASSERT_TRUE(rows_equal(rep.corrected, c));
        }
    }
}

TEST(DecodeTest, BetaMayContainZeroAndCodeNeedNotBeCyclic) {
    Rng rng(48);
    Field f = field_new(FieldSpec::prime(13));
    CodeSpec code = make_code(f, 6, 2, {2, 2}, {0, 1, 2, 3, 4, 5});
    for (int t = 0; t < 40; ++t) {
        long nerr = rng.range(0, 2);
        std::vector<long> sup = rng.support(code.n, nerr);
        ArrayWord c = encode(code, random_messages(rng, code));
        ArrayWord y = add_words(code, c, random_error(rng, code, sup));
        for (auto rec : {DecodeOptions::Recovery::interpolation, DecodeOptions::Recovery::forney}) {
            DecodeOptions opts;
            opts.recovery = rec;
            ErrorReport rep = decode(code, y, opts);
            ASSERT_EQ(rep.status, ErrorReport::Status::corrected);
            ASSERT_TRUE(rows_equal(rep.corrected, c));
        }
    }
}
