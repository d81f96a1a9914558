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

#ifndef SPIRS_IO_HPP
#define SPIRS_IO_HPP

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "spirs/errors.hpp"
#include "spirs/gf.hpp"
#include "spirs/irs.hpp"
#include "spirs/poly.hpp"
#include "spirs/spi.hpp"

namespace spirs {

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

inline std::uint64_t parse_uint(const std::string& raw, const std::string& what) {
    std::string s = trim(raw);
    if (s.empty()) raise(Errc::ParseError, "empty integer for " + what);
    int base = 10;
    std::size_t off = 0;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        base = 16;
        off = 2;
    }
    std::uint64_t v = 0;
    for (std::size_t i = off; i < s.size(); ++i) {
        int digit;
        char c = s[i];
        if (c >= '0' && c <= '9')
            digit = c - '0';
        else if (base == 16 && c >= 'a' && c <= 'f')
            digit = 10 + c - 'a';
        else if (base == 16 && c >= 'A' && c <= 'F')
            digit = 10 + c - 'A';
        else
            raise(Errc::ParseError, "bad integer '" + s + "' for " + what);
        v = v * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(digit);
        if (v > (1ull << 40)) raise(Errc::ParseError, "integer out of range for " + what);
    }
    if (s.size() == off) raise(Errc::ParseError, "bad integer '" + s + "' for " + what);
    return v;
}

/// next significant line: blank lines and '#' comments skipped
inline bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty() && line[0] != '#') return true;
    }
    return false;
}

}  // namespace detail

/// `p:7` for prime fields, `b:4:0x13` for binary extensions (m, then the
/// reduction polynomial bits, decimal or 0x hex). Anything else is a
/// reported parse error.
inline FieldSpec parse_field_spec(const std::string& text) {
    std::string s = detail::trim(text);
    auto parts = detail::split(s, ':');
    if (parts.size() == 2 && parts[0] == "p")
        return FieldSpec::prime(detail::parse_uint(parts[1], "prime modulus"));
    if (parts.size() == 3 && parts[0] == "b")
        return FieldSpec::binary_ext(
            static_cast<std::uint32_t>(detail::parse_uint(parts[1], "extension degree")),
            static_cast<std::uint32_t>(detail::parse_uint(parts[2], "reduction polynomial")));
    raise(Errc::ParseError, "bad field spec '" + s + "' (expected p:<p> or b:<m>:<bits>)");
}

inline std::string format_field_spec(const FieldSpec& spec) {
    if (spec.kind == FieldSpec::Kind::prime) return "p:" + std::to_string(spec.p);
    std::ostringstream os;
    os << "b:" << spec.m << ":0x" << std::hex << spec.reduction_bits;
    return os.str();
}

/// Comma-separated canonical coefficients, low order first; the empty
/// string is the zero polynomial.
inline Polynomial parse_poly(const std::string& text, const Field& field) {
    std::string s = detail::trim(text);
    if (s.empty()) return Polynomial::zero(field);
    std::vector<std::uint32_t> coeffs;
    for (const std::string& part : detail::split(s, ',')) {
        std::uint64_t v = detail::parse_uint(part, "coefficient");
        if (v >= field.q()) raise(Errc::ParseError, "coefficient " + std::to_string(v) + " not in [0,q)");
        coeffs.push_back(static_cast<std::uint32_t>(v));
    }
    return Polynomial(field, std::move(coeffs));
}

inline std::string format_poly(const Polynomial& p) {
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.coeffs()[i]);
    }
    return out;
}

/// Instance file: one field-spec line, then one line per constraint of the
/// form `b=<coeffs>; m=<coeffs>; tau=<int>`. Blank lines and '#' comments
/// are ignored. Round-trips losslessly through format_spi_instance.
inline SpiInstance parse_spi_instance(std::istream& in) {
    std::string line;
    if (!detail::next_line(in, line)) raise(Errc::ParseError, "missing field spec line");
    Field field(parse_field_spec(line));
    SpiInstance inst;
    while (detail::next_line(in, line)) {
        auto parts = detail::split(line, ';');
        if (parts.size() != 3) raise(Errc::ParseError, "expected 'b=...; m=...; tau=...' got '" + line + "'");
        auto expect_key = [&](const std::string& part, const std::string& key) -> std::string {
            std::string t = detail::trim(part);
            if (t.rfind(key + "=", 0) != 0)
                raise(Errc::ParseError, "expected '" + key + "=' in '" + t + "'");
            return t.substr(key.size() + 1);
        };
        Polynomial b = parse_poly(expect_key(parts[0], "b"), field);
        Polynomial m = parse_poly(expect_key(parts[1], "m"), field);
        long tau = static_cast<long>(detail::parse_uint(expect_key(parts[2], "tau"), "tau"));
        inst.entries.push_back(SpiEntry{std::move(b), std::move(m), tau});
    }
    if (inst.entries.empty()) raise(Errc::ParseError, "instance has no constraints");
    return inst;
}

inline std::string format_spi_instance(const SpiInstance& inst) {
    std::string out = format_field_spec(inst.field().spec()) + "\n";
    for (const SpiEntry& e : inst.entries)
        out += "b=" + format_poly(e.b) + "; m=" + format_poly(e.m) +
               "; tau=" + std::to_string(e.tau) + "\n";
    return out;
}

/// Code config: `field <spec>`, `n <int>`, `L <int>`, `k <list|int>`,
/// `beta <list>` in any order; a single k broadcasts to all rows.
inline CodeSpec parse_code_config(std::istream& in) {
    std::string line;
    std::string field_text, k_text, beta_text;
    long n = -1;
    int L = -1;
    while (detail::next_line(in, line)) {
        std::size_t sp = line.find_first_of(" \t");
        if (sp == std::string::npos) raise(Errc::ParseError, "expected 'key value' got '" + line + "'");
        std::string key = line.substr(0, sp);
        std::string value = detail::trim(line.substr(sp));
        if (key == "field")
            field_text = value;
        else if (key == "n")
            n = static_cast<long>(detail::parse_uint(value, "n"));
        else if (key == "L")
            L = static_cast<int>(detail::parse_uint(value, "L"));
        else if (key == "k")
            k_text = value;
        else if (key == "beta")
            beta_text = value;
        else
            raise(Errc::ParseError, "unknown config key '" + key + "'");
    }
    if (field_text.empty() || n < 0 || L < 0 || k_text.empty() || beta_text.empty())
        raise(Errc::ParseError, "config must set field, n, L, k, beta");
    Field field(parse_field_spec(field_text));
    std::vector<long> k;
    for (const std::string& part : detail::split(k_text, ','))
        k.push_back(static_cast<long>(detail::parse_uint(part, "k")));
    if (static_cast<int>(k.size()) == 1 && L > 1) k.assign(static_cast<std::size_t>(L), k[0]);
    std::vector<std::uint32_t> beta;
    for (const std::string& part : detail::split(beta_text, ','))
        beta.push_back(static_cast<std::uint32_t>(detail::parse_uint(part, "beta")));
    return make_code(field, n, L, std::move(k), std::move(beta));
}

inline std::string format_code_config(const CodeSpec& code) {
    std::string out = "field " + format_field_spec(code.field.spec()) + "\n";
    out += "n " + std::to_string(code.n) + "\n";
    out += "L " + std::to_string(code.L) + "\n";
    out += "k ";
    for (std::size_t i = 0; i < code.k.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(code.k[i]);
    }
    out += "\nbeta ";
    for (std::size_t i = 0; i < code.beta.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(code.beta[i]);
    }
    out += "\n";
    return out;
}

/// Rows of comma-separated integers, one row per line.
inline std::vector<std::vector<std::uint32_t>> parse_rows(std::istream& in) {
    std::vector<std::vector<std::uint32_t>> rows;
    std::string line;
    while (detail::next_line(in, line)) {
        std::vector<std::uint32_t> row;
        for (const std::string& part : detail::split(line, ','))
            row.push_back(static_cast<std::uint32_t>(detail::parse_uint(part, "entry")));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ArrayWord parse_word(std::istream& in, const CodeSpec& code, WordRole role) {
    ArrayWord w;
    w.role = role;
    w.rows = parse_rows(in);
    check_word(code, w);
    return w;
}

inline std::string format_word(const ArrayWord& w) {
    std::string out;
    for (const auto& row : w.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(row[i]);
        }
        out += '\n';
    }
    return out;
}

/// Message polynomials: one coefficient list per row (low order first);
/// deg < k[i] enforced.
inline std::vector<Polynomial> parse_messages(std::istream& in, const CodeSpec& code) {
    std::vector<Polynomial> msgs;
    std::string line;
    while (detail::next_line(in, line)) msgs.push_back(parse_poly(line, code.field));
    if (static_cast<int>(msgs.size()) != code.L)
        raise(Errc::ParseError, "expected " + std::to_string(code.L) + " message rows");
    for (int i = 0; i < code.L; ++i)
        if (!(msgs[static_cast<std::size_t>(i)].deg() < Degree(code.k[static_cast<std::size_t>(i)])))
            raise(Errc::MessageDegreeTooHigh, "message row " + std::to_string(i), i);
    return msgs;
}

}  // namespace spirs

#endif  // SPIRS_IO_HPP
