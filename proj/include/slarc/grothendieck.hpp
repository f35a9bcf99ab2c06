#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "slarc/combinat.hpp"

namespace slarc {

enum class PolyBasis : uint8_t { projective, standard };  // {x^n} / {(x-1)^n}

/// Element of K_0 = Z[x]: integer coefficients over one of the two
/// distinguished bases, trailing zeros trimmed.
struct PolyClass {
    std::vector<long long> c;
    PolyBasis basis = PolyBasis::projective;

    PolyClass() = default;
    PolyClass(std::vector<long long> coeff, PolyBasis b) : c(std::move(coeff)), basis(b) {
        trim();
    }
    static PolyClass monomial(int n, PolyBasis b = PolyBasis::projective) {
        std::vector<long long> v(static_cast<size_t>(n) + 1, 0);
        v[n] = 1;
        return PolyClass(std::move(v), b);
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    long long coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
    }
    bool is_zero() const { return c.empty(); }

    friend bool operator==(const PolyClass& a, const PolyClass& b) {
        return a.basis == b.basis && a.c == b.c;
    }
    PolyClass& operator+=(const PolyClass& o) {
        if (basis != o.basis) throw std::invalid_argument("PolyClass: mixed bases");
        if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    PolyClass& operator-=(const PolyClass& o) {
        if (basis != o.basis) throw std::invalid_argument("PolyClass: mixed bases");
        if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
        for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }
    friend PolyClass operator+(PolyClass a, const PolyClass& b) { return a += b; }
    friend PolyClass operator-(PolyClass a, const PolyClass& b) { return a -= b; }
    PolyClass operator*(long long s) const {
        PolyClass r = *this;
        for (auto& x : r.c) x *= s;
        r.trim();
        return r;
    }

    std::string str() const {
        if (c.empty()) return "0";
        std::string var = basis == PolyBasis::projective ? "x" : "(x-1)";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            long long a = c[i];
            if (a == 0) continue;
            std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
            std::string mag = std::to_string(a < 0 ? -a : a);
            std::string coeffpart = (mag == "1" && i != 0) ? "" : mag;
            if (out.empty())
                out += (a < 0 ? "-" : "") + coeffpart;
            else
                out += (a < 0 ? " - " : " + ") + coeffpart;
            if (!coeffpart.empty() && !mono.empty()) out += "*";
            out += mono;
        }
        return out;
    }
};

/// Basis change through the triangular binomial matrices:
/// x^n = sum_m C(n,m) (x-1)^m and (x-1)^n = sum_m (-1)^{n+m} C(n,m) x^m.
inline PolyClass convert(const PolyClass& f, PolyBasis to) {
    if (f.basis == to) return f;
    std::vector<long long> out(f.c.size(), 0);
    for (int n = 0; n < static_cast<int>(f.c.size()); ++n) {
        if (f.c[n] == 0) continue;
        for (int m = 0; m <= n; ++m) {
            long long t = binom(n, m) * f.c[n];
            if (to == PolyBasis::projective && (n + m) % 2 != 0) t = -t;
            out[m] += t;
        }
    }
    return PolyClass(std::move(out), to);
}

/// Inner product on the projective basis: (x^n, x^m) = C(n+m, m), extended
/// bilinearly. Both arguments are required in the projective basis.
inline long long inner_product(const PolyClass& f, const PolyClass& g) {
    if (f.basis != PolyBasis::projective || g.basis != PolyBasis::projective)
        throw std::invalid_argument("inner_product: projective basis required");
    long long acc = 0;
    for (int n = 0; n < static_cast<int>(f.c.size()); ++n)
        for (int m = 0; m < static_cast<int>(g.c.size()); ++m)
            acc += f.c[n] * g.c[m] * binom(n + m, m);
    return acc;
}

/// Product in Z[x] (both factors converted to the projective basis, result
/// in the projective basis).
inline PolyClass poly_mul(const PolyClass& f0, const PolyClass& g0) {
    PolyClass f = convert(f0, PolyBasis::projective);
    PolyClass g = convert(g0, PolyBasis::projective);
    if (f.is_zero() || g.is_zero()) return PolyClass({}, PolyBasis::projective);
    std::vector<long long> out(f.c.size() + g.c.size() - 1, 0);
    for (size_t i = 0; i < f.c.size(); ++i)
        for (size_t j = 0; j < g.c.size(); ++j) out[i + j] += f.c[i] * g.c[j];
    return PolyClass(std::move(out), PolyBasis::projective);
}

/// Decategorified width truncation: keep the first k+1 coefficients in the
/// standard basis. Idempotent; returns in the caller's basis.
inline PolyClass op_Fk(const PolyClass& f, int k) {
    PolyClass s = convert(f, PolyBasis::standard);
    if (static_cast<int>(s.c.size()) > k + 1) s.c.resize(static_cast<size_t>(k) + 1);
    s.trim();
    return convert(s, f.basis);
}

/// Decategorified induction: multiplication by x.
inline PolyClass op_Ind(const PolyClass& f) {
    PolyClass p = convert(f, PolyBasis::projective);
    p.c.insert(p.c.begin(), 0);
    p.trim();
    return convert(p, f.basis);
}

/// Decategorified restriction: f(x) |-> (x f(x) - f(1)) / (x - 1), computed
/// as exact synthetic division; the numerator vanishes at 1 so the remainder
/// is checked to be zero.
inline PolyClass op_Res(const PolyClass& f) {
    PolyClass p = convert(f, PolyBasis::projective);
    long long f1 = 0;
    for (long long a : p.c) f1 += a;
    std::vector<long long> num(p.c.size() + 1, 0);  // x*f(x) - f(1)
    for (size_t i = 0; i < p.c.size(); ++i) num[i + 1] = p.c[i];
    num[0] -= f1;
    // divide by (x - 1): synthetic division from the top
    std::vector<long long> quot(num.size() > 1 ? num.size() - 1 : 0, 0);
    long long carry = 0;
    for (int i = static_cast<int>(num.size()) - 1; i >= 1; --i) {
        carry += num[i];
        quot[i - 1] = carry;
    }
    if (carry + num[0] != 0) throw std::logic_error("op_Res: nonzero remainder");
    return convert(PolyClass(std::move(quot), PolyBasis::projective), f.basis);
}

/// Number of ways to pick n numbers in {1..ki} hitting each of the i
/// consecutive k-blocks at least once, as the composition sum
/// sum_{lambda} prod_j C(k, lambda_j).
inline long long S_count(int n, int k, int i) {
    if (n == 0) return i == 0 ? 1 : 0;
    if (i <= 0) return 0;
    long long acc = 0;
    for (const auto& lam : compositions(n, i, k)) {
        long long prod = 1;
        for (int part : lam) prod *= binom(k, part);
        acc += prod;
    }
    return acc;
}

/// Independent route: direct enumeration of the selections.
inline long long S_count_direct(int n, int k, int i) {
    if (n == 0) return i == 0 ? 1 : 0;
    if (i <= 0 || static_cast<long long>(k) * i > kMaxPoints) {
        if (i <= 0) return 0;
        throw std::invalid_argument("S_count_direct: range too large to enumerate");
    }
    long long count = 0;
    for (uint64_t sel : subsets_lex(k * i, n)) {
        bool all_hit = true;
        for (int b = 0; b < i && all_hit; ++b) {
            uint64_t block = ((~uint64_t{0}) >> (64 - k)) << (static_cast<uint64_t>(b) * k);
            if ((sel & block) == 0) all_hit = false;
        }
        count += all_hit;
    }
    return count;
}

/// Decategorified cabling: (x-1)^n |-> sum_i S(n,k,i) (x-1)^i.
inline PolyClass op_cable(const PolyClass& f, int k) {
    PolyClass s = convert(f, PolyBasis::standard);
    std::vector<long long> out;
    for (int n = 0; n < static_cast<int>(s.c.size()); ++n) {
        if (s.c[n] == 0) continue;
        for (int i = (n + k - 1) / k; i <= n; ++i) {
            if (static_cast<int>(out.size()) <= i) out.resize(i + 1, 0);
            out[i] += s.c[n] * S_count(n, k, i);
        }
    }
    return convert(PolyClass(std::move(out), PolyBasis::standard), f.basis);
}

/// Dimension of the weight-p space of a class with the given standard-basis
/// expansion: every (x-1)^i contributes C(p,i).
inline long long dims_of_class(const PolyClass& f, int p) {
    PolyClass s = convert(f, PolyBasis::standard);
    long long acc = 0;
    for (int i = 0; i < static_cast<int>(s.c.size()); ++i) acc += s.c[i] * binom(p, i);
    return acc;
}

/// Recover the standard-basis class from a table of weight dimensions
/// (triangular solve); returns the class only if it reproduces every given
/// dimension exactly.
inline PolyClass class_from_dims(const std::vector<long long>& dims, int max_degree) {
    std::vector<long long> a(static_cast<size_t>(max_degree) + 1, 0);
    for (int i = 0; i <= max_degree && i < static_cast<int>(dims.size()); ++i) {
        long long acc = 0;
        for (int j = 0; j < i; ++j) acc += a[j] * binom(i, j);
        a[i] = dims[i] - acc;
    }
    PolyClass f(std::move(a), PolyBasis::standard);
    for (int p = 0; p < static_cast<int>(dims.size()); ++p)
        if (dims_of_class(f, p) != dims[p])
            throw std::invalid_argument("class_from_dims: dimensions are not polynomial");
    return f;
}

/// Parser for expressions like "x^3 - 2*x + 1" (projective basis).
inline PolyClass parse_poly(const std::string& text) {
    PolyClass out({}, PolyBasis::projective);
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip();
    bool first = true;
    while (i < text.size()) {
        long long sign = 1;
        skip();
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            throw std::invalid_argument("parse_poly: expected + or - at '" + text.substr(i) + "'");
        }
        first = false;
        skip();
        long long coeff = 1;
        bool saw_number = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                coeff = coeff * 10 + (text[i++] - '0');
            saw_number = true;
        }
        skip();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip();
        }
        int exp = 0;
        if (i < text.size() && text[i] == 'x') {
            ++i;
            exp = 1;
            skip();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip();
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw std::invalid_argument("parse_poly: exponent expected");
                exp = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    exp = exp * 10 + (text[i++] - '0');
            }
        } else if (!saw_number) {
            throw std::invalid_argument("parse_poly: term expected in '" + text + "'");
        }
        if (static_cast<int>(out.c.size()) <= exp) out.c.resize(exp + 1, 0);
        out.c[exp] += sign * coeff;
        skip();
    }
    out.trim();
    return out;
}

}  // namespace slarc
