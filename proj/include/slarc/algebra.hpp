#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slarc/diagram.hpp"

namespace slarc {

/// Floating-arc rule selector: a floating arc evaluates to 0 in the minus
/// flavor and to 1 in the plus flavor.
enum class Flavor : uint8_t { minus, plus };

inline const char* flavor_name(Flavor f) { return f == Flavor::minus ? "minus" : "plus"; }

/// Finite formal linear combination of diagrams over the scalar field K.
/// Terms with heterogeneous weight blocks are allowed; zero coefficients are
/// never stored and terms are kept in the canonical diagram order.
template <class K>
class AlgebraElement {
public:
    using Terms = std::map<Diagram, K, DiagramOrder>;

    explicit AlgebraElement(Flavor f = Flavor::minus) : flavor_(f) {}

    static AlgebraElement from_diagram(const Diagram& d, Flavor f = Flavor::minus,
                                       K coeff = K(1)) {
        AlgebraElement e(f);
        e.add_term(d, coeff);
        return e;
    }

    Flavor flavor() const { return flavor_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Diagram& d, const K& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(d, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    K coeff(const Diagram& d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? K() : it->second;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        require_same_flavor(o);
        for (const auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        require_same_flavor(o);
        for (const auto& [d, c] : o.terms_) add_term(d, -c);
        return *this;
    }
    AlgebraElement operator-() const {
        AlgebraElement r(flavor_);
        for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
        return r;
    }
    AlgebraElement& operator*=(const K& s) {
        if (s.is_zero()) { terms_.clear(); return *this; }
        for (auto& [d, c] : terms_) c *= s;
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const K& s) { return a *= s; }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.flavor_ == b.flavor_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [d, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.str() + "*" + d.str();
        }
        return s;
    }

private:
    void require_same_flavor(const AlgebraElement& o) const {
        if (flavor_ != o.flavor_) throw std::invalid_argument("mixed algebra flavors");
    }

    Flavor flavor_;
    Terms terms_;
};

/// Product of two basis diagrams under the given flavor: zero on inner-count
/// mismatch, and a floating arc kills the term (minus) or is erased at value
/// one (plus).
template <class K>
AlgebraElement<K> multiply_diagrams(const Diagram& x, const Diagram& y, Flavor f) {
    AlgebraElement<K> r(f);
    if (x.right != y.left) return r;
    Composition c = compose(x, y);
    if (c.floating_count > 0 && f == Flavor::minus) return r;
    r.add_term(c.larc_result, K(1));
    return r;
}

template <class K>
AlgebraElement<K> multiply(const AlgebraElement<K>& a, const AlgebraElement<K>& b) {
    if (a.flavor() != b.flavor()) throw std::invalid_argument("mixed algebra flavors");
    AlgebraElement<K> r(a.flavor());
    for (const auto& [dx, cx] : a.terms())
        for (const auto& [dy, cy] : b.terms()) {
            if (dx.right != dy.left) continue;
            Composition c = compose(dx, dy);
            if (c.floating_count > 0 && a.flavor() == Flavor::minus) continue;
            r.add_term(c.larc_result, cx * cy);
        }
    return r;
}

template <class K>
AlgebraElement<K> operator*(const AlgebraElement<K>& a, const AlgebraElement<K>& b) {
    return multiply(a, b);
}

template <class K>
AlgebraElement<K> unit_idempotent(int n, Flavor f = Flavor::minus) {
    return AlgebraElement<K>::from_diagram(identity_diagram(n), f);
}

/// Projection onto the (m,n) weight block; summing component over all blocks
/// that occur recovers the element.
template <class K>
AlgebraElement<K> component(const AlgebraElement<K>& a, int m, int n) {
    AlgebraElement<K> r(a.flavor());
    for (const auto& [d, c] : a.terms())
        if (d.left == m && d.right == n) r.add_term(d, c);
    return r;
}

/// Termwise reflection; extends to an anti-involution in both flavors.
template <class K>
AlgebraElement<K> reflect(const AlgebraElement<K>& a) {
    AlgebraElement<K> r(a.flavor());
    for (const auto& [d, c] : a.terms()) r.add_term(reflect(d), c);
    return r;
}

/// Termwise iota; an injective algebra homomorphism.
template <class K>
AlgebraElement<K> iota(const AlgebraElement<K>& a) {
    AlgebraElement<K> r(a.flavor());
    for (const auto& [d, c] : a.terms()) r.add_term(iota(d), c);
    return r;
}

/// Bilinear tensor of algebra elements: diagrams stack with the FIRST factor
/// at the bottom, so strand positions of the first factor are unchanged and
/// the second factor shifts up.
template <class K>
AlgebraElement<K> tensor(const AlgebraElement<K>& a, const AlgebraElement<K>& b) {
    if (a.flavor() != b.flavor()) throw std::invalid_argument("mixed algebra flavors");
    AlgebraElement<K> r(a.flavor());
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) r.add_term(stack(db, da), ca * cb);
    return r;
}

// --- A+ sign idempotents -------------------------------------------------

enum class Sign : uint8_t { plus, minus };
using SignSequence = std::vector<Sign>;

inline SignSequence all_minus(int n) { return SignSequence(static_cast<size_t>(n), Sign::minus); }

inline int minus_count(const SignSequence& eps) {
    int m = 0;
    for (Sign s : eps) m += (s == Sign::minus);
    return m;
}

inline std::string sign_sequence_str(const SignSequence& eps) {
    std::string s = "(";
    for (size_t i = 0; i < eps.size(); ++i)
        s += std::string(i ? "," : "") + (eps[i] == Sign::plus ? "+" : "-");
    return s + ")";
}

/// The width-zero diagram c in _1B_1; e_+ = c is idempotent in A+.
inline Diagram cup_cap() { return Diagram{1, 1, 0, 0}; }

template <class K>
AlgebraElement<K> e_plus() {
    return AlgebraElement<K>::from_diagram(cup_cap(), Flavor::plus);
}

template <class K>
AlgebraElement<K> e_minus() {
    auto e = unit_idempotent<K>(1, Flavor::plus);
    e -= e_plus<K>();
    return e;
}

/// e_eps = tensor of e_+ / e_- factors; entry i of the sequence sits at
/// strand height i (bottom to top). Plus flavor only.
template <class K>
AlgebraElement<K> sign_idempotent(const SignSequence& eps, Flavor f = Flavor::plus) {
    if (f != Flavor::plus)
        throw std::invalid_argument("sign_idempotent: defined for the plus flavor only");
    AlgebraElement<K> r = unit_idempotent<K>(0, Flavor::plus);
    for (Sign s : eps) r = tensor(r, s == Sign::plus ? e_plus<K>() : e_minus<K>());
    return r;
}

/// The pair (d_{eps->m}, d_{m->eps}) realizing the equivalence of e_eps with
/// e_{(-^m)}, m = number of minuses: larcs run from the minus strands on the
/// left down to 1..m on the right, every other left point gets a left sarc;
/// the second witness is the reflection of the first.
template <class K>
std::pair<AlgebraElement<K>, AlgebraElement<K>> equivalence_witness(const SignSequence& eps,
                                                                    Flavor f = Flavor::plus) {
    if (f != Flavor::plus)
        throw std::invalid_argument("equivalence_witness: defined for the plus flavor only");
    int n = static_cast<int>(eps.size());
    int m = minus_count(eps);
    uint64_t lmask = 0;
    for (int i = 0; i < n; ++i)
        if (eps[i] == Sign::minus) lmask |= uint64_t{1} << i;
    Diagram fwd = make_diagram(n, m, lmask, m == 0 ? 0 : (~uint64_t{0} >> (64 - m)));
    return {AlgebraElement<K>::from_diagram(fwd, Flavor::plus),
            AlgebraElement<K>::from_diagram(reflect(fwd), Flavor::plus)};
}

}  // namespace slarc
