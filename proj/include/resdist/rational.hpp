#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace resdist {

// Exact rational number backed by GMP. Always in lowest terms with a
// positive denominator; zero is 0/1.
class Rat {
  public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(n) {}
    Rat(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : q_(n) {}
    explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) != 0; }
    friend bool operator<(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) >= 0; }

    /// Serializes as "p/q", or just "p" when the denominator is 1.
    std::string to_string() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    /// Fixed-point rendering with `places` fractional digits, rounding
    /// half to even. Exact zero after rounding never carries a sign.
    std::string to_decimal(int places) const {
        if (places < 1) throw std::invalid_argument("to_decimal: places must be >= 1");
        const bool neg = sign() < 0;
        mpz_class pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(places));
        mpz_class scaled = abs(q_.get_num()) * pow10;
        mpz_class quo, rem;
        mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(),
                    q_.get_den().get_mpz_t());
        const int half = cmp(rem * 2, q_.get_den());
        if (half > 0 || (half == 0 && mpz_odd_p(quo.get_mpz_t()))) ++quo;
        mpz_class ip = quo / pow10;
        mpz_class fp = quo % pow10;
        std::string frac = fp.get_str();
        frac.insert(0, static_cast<size_t>(places) - frac.size(), '0');
        std::string out;
        if (neg && quo != 0) out += '-';
        out += ip.get_str();
        out += '.';
        out += frac;
        return out;
    }

    /// Parses "p/q", an integer, or a plain decimal such as "-0.275".
    static Rat from_string(std::string_view sv) {
        auto is_space = [](char c) { return c == ' ' || c == '\t'; };
        while (!sv.empty() && is_space(sv.front())) sv.remove_prefix(1);
        while (!sv.empty() && is_space(sv.back())) sv.remove_suffix(1);
        if (sv.empty()) throw std::invalid_argument("Rat: empty string");
        const std::string s(sv);
        try {
            // Base 10 everywhere: gmp's default base 0 would read a leading
            // zero ("0.275" -> digits "0275") as octal.
            if (auto slash = s.find('/'); slash != std::string::npos) {
                mpz_class num(s.substr(0, slash), 10);
                mpz_class den(s.substr(slash + 1), 10);
                if (den == 0) throw std::invalid_argument("Rat: zero denominator");
                mpq_class q(num);
                q /= mpq_class(den);
                return Rat(std::move(q));
            }
            if (auto dot = s.find('.'); dot != std::string::npos) {
                std::string digits = s.substr(0, dot) + s.substr(dot + 1);
                const size_t frac_len = s.size() - dot - 1;
                if (frac_len == 0 || digits.empty())
                    throw std::invalid_argument("Rat: malformed decimal '" + s + "'");
                mpz_class num(digits, 10);
                mpz_class pow10;
                mpz_ui_pow_ui(pow10.get_mpz_t(), 10, frac_len);
                mpq_class q(num);
                q /= mpq_class(pow10);
                return Rat(std::move(q));
            }
            return Rat(mpz_class(s, 10));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("Rat: cannot parse '" + s + "'");
        }
    }

  private:
    mpq_class q_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

}  // namespace resdist
