#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace slarc {

/// Exact rational scalar. Values are kept canonical (reduced fraction,
/// positive denominator); there is no floating point anywhere in the library.
class Rat {
public:
    Rat() : v_(0) {}
    explicit Rat(long n) : v_(n) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    bool is_zero() const { return sgn(v_) == 0; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    std::string str() const { return v_.get_str(); }
    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }

    static Rat from_string(const std::string& num, const std::string& den) {
        mpq_class q{mpz_class(num), mpz_class(den)};
        if (sgn(q.get_den()) == 0) throw std::invalid_argument("Rat: zero denominator");
        q.canonicalize();
        return Rat(q);
    }

    static const char* field_name() { return "q"; }

private:
    mpq_class v_;
};

/// Prime-field scalar with a process-wide modulus, fixed once per run
/// (default 65521). Division uses the extended Euclid inverse.
class Fp {
public:
    Fp() : v_(0) {}
    explicit Fp(long n) {
        long m = n % static_cast<long>(modulus_);
        if (m < 0) m += modulus_;
        v_ = static_cast<uint32_t>(m);
    }

    static void set_modulus(uint32_t p) {
        if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
        modulus_ = p;
    }
    static uint32_t modulus() { return modulus_; }

    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return raw(v_ == 0 ? 0 : modulus_ - v_); }
    Fp& operator+=(const Fp& o) {
        uint64_t s = static_cast<uint64_t>(v_) + o.v_;
        v_ = static_cast<uint32_t>(s >= modulus_ ? s - modulus_ : s);
        return *this;
    }
    Fp& operator-=(const Fp& o) { return *this += -o; }
    Fp& operator*=(const Fp& o) {
        v_ = static_cast<uint32_t>(static_cast<uint64_t>(v_) * o.v_ % modulus_);
        return *this;
    }
    Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    Fp inverse() const {
        if (v_ == 0) throw std::invalid_argument("Fp: division by zero");
        // extended Euclid on (v_, modulus_)
        int64_t a = v_, m = modulus_, x0 = 1, x1 = 0;
        while (m != 0) {
            int64_t q = a / m;
            int64_t t = a - q * m; a = m; m = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        if (a != 1) throw std::invalid_argument("Fp: modulus not prime to value");
        if (x0 < 0) x0 += modulus_;
        return raw(static_cast<uint32_t>(x0));
    }

    std::string str() const { return std::to_string(v_); }
    uint32_t value() const { return v_; }

    static std::string field_name() { return "fp:" + std::to_string(modulus_); }

private:
    static Fp raw(uint32_t v) { Fp r; r.v_ = v; return r; }
    uint32_t v_;
    inline static uint32_t modulus_ = 65521;
};

}  // namespace slarc
