#ifndef QPT_RATIONAL_HPP
#define QPT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qpt {

// Exact rational arithmetic on 64-bit numerator/denominator. All coefficient
// arithmetic in this library is exact; there is no floating point anywhere.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    Rat operator-() const { return Rat(-num_, den_, already_normal{}); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(checked(__int128(a.num_) * b.den_ + __int128(b.num_) * a.den_),
                   checked(__int128(a.den_) * b.den_));
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(checked(__int128(a.num_) * b.num_), checked(__int128(a.den_) * b.den_));
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat(checked(__int128(a.num_) * b.den_), checked(__int128(a.den_) * b.num_));
    }

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    Rat inv() const {
        if (num_ == 0) throw std::domain_error("Rat: inverse of zero");
        return Rat(den_, num_);
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return __int128(a.num_) * b.den_ < __int128(b.num_) * a.den_;
    }

    // "p" or "p/q"
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    static Rat parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(std::stoll(s));
        return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }

private:
    struct already_normal {};
    Rat(long long n, long long d, already_normal) : num_(n), den_(d) {}

    static long long checked(__int128 v) {
        if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rat: overflow");
        return (long long)v;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

} // namespace qpt

#endif
