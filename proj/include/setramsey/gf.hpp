#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "setramsey/errors.hpp"

namespace setramsey {

inline constexpr int kMaxFieldOrder = 16;

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int i = 2; i * i <= p; ++i)
        if (p % i == 0) return false;
    return true;
}

/// Returns the prime p with q = p^e, or 0 when q is not a prime power.
inline int prime_base(int q) {
    for (int p = 2; p <= q; ++p) {
        if (!is_prime(p)) continue;
        int x = q;
        while (x % p == 0) x /= p;
        if (x == 1) return p;
    }
    return 0;
}

/// Table-driven arithmetic for F_q, q a prime power up to 16. Elements are
/// integers 0..q-1; for q = p^e the integer encodes the coefficient vector of
/// a polynomial over F_p in base p, and multiplication reduces modulo a fixed
/// irreducible polynomial.
class GaloisField {
public:
    explicit GaloisField(int q) : q_(q) {
        if (q < 2 || q > kMaxFieldOrder)
            throw ResourceLimitError("GaloisField: supported orders are 2.." +
                                     std::to_string(kMaxFieldOrder));
        p_ = prime_base(q);
        if (p_ == 0) throw std::invalid_argument("GaloisField: order must be a prime power");
        e_ = 0;
        for (int x = q; x > 1; x /= p_) ++e_;
        build_tables();
    }

    int order() const { return q_; }
    int characteristic() const { return p_; }

    int add(int a, int b) const { return add_[index(a, b)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int neg(int a) const { return neg_[static_cast<std::size_t>(a)]; }
    int mul(int a, int b) const { return mul_[index(a, b)]; }

    int inv(int a) const {
        if (a == 0) throw std::invalid_argument("GaloisField: inverse of zero");
        return inv_[static_cast<std::size_t>(a)];
    }

private:
    std::size_t index(int a, int b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) +
               static_cast<std::size_t>(b);
    }

    // Irreducible polynomials over F_p with coefficients encoded in base p
    // (leading term included): x^2+x+1, x^3+x+1, x^4+x+1 over F_2,
    // x^2+1 over F_3.
    static int modulus_poly(int p, int e) {
        if (p == 2 && e == 2) return 0b111;
        if (p == 2 && e == 3) return 0b1011;
        if (p == 2 && e == 4) return 0b10011;
        if (p == 3 && e == 2) return 9 + 1; // x^2 + 1
        return 0;
    }

    std::vector<int> digits(int x) const {
        std::vector<int> d(static_cast<std::size_t>(e_), 0);
        for (int i = 0; i < e_; ++i) {
            d[static_cast<std::size_t>(i)] = x % p_;
            x /= p_;
        }
        return d;
    }

    int from_digits(const std::vector<int>& d) const {
        int x = 0;
        for (int i = e_ - 1; i >= 0; --i) x = x * p_ + d[static_cast<std::size_t>(i)];
        return x;
    }

    void build_tables() {
        const std::size_t qq = static_cast<std::size_t>(q_) * static_cast<std::size_t>(q_);
        add_.resize(qq);
        mul_.resize(qq);
        neg_.resize(static_cast<std::size_t>(q_));
        inv_.resize(static_cast<std::size_t>(q_), 0);

        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) {
                const auto da = digits(a), db = digits(b);
                std::vector<int> sum(static_cast<std::size_t>(e_));
                for (int i = 0; i < e_; ++i)
                    sum[static_cast<std::size_t>(i)] =
                        (da[static_cast<std::size_t>(i)] + db[static_cast<std::size_t>(i)]) % p_;
                add_[index(a, b)] = from_digits(sum);
            }
        for (int a = 0; a < q_; ++a) {
            const auto da = digits(a);
            std::vector<int> n(static_cast<std::size_t>(e_));
            for (int i = 0; i < e_; ++i)
                n[static_cast<std::size_t>(i)] = (p_ - da[static_cast<std::size_t>(i)]) % p_;
            neg_[static_cast<std::size_t>(a)] = from_digits(n);
        }

        if (e_ == 1) {
            for (int a = 0; a < q_; ++a)
                for (int b = 0; b < q_; ++b) mul_[index(a, b)] = (a * b) % p_;
        } else {
            const int mod = modulus_poly(p_, e_);
            if (mod == 0)
                throw std::invalid_argument("GaloisField: no modulus table for this order");
            for (int a = 0; a < q_; ++a)
                for (int b = 0; b < q_; ++b) mul_[index(a, b)] = poly_mul_mod(a, b, mod);
        }

        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul_[index(a, b)] == 1) inv_[static_cast<std::size_t>(a)] = b;
    }

    // Polynomial product over F_p reduced modulo `mod` (both encoded base p).
    int poly_mul_mod(int a, int b, int mod) const {
        std::vector<int> prod(static_cast<std::size_t>(2 * e_ - 1), 0);
        const auto da = digits(a), db = digits(b);
        for (int i = 0; i < e_; ++i)
            for (int j = 0; j < e_; ++j)
                prod[static_cast<std::size_t>(i + j)] =
                    (prod[static_cast<std::size_t>(i + j)] +
                     da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) %
                    p_;
        // digits of the modulus, degree e_
        std::vector<int> md(static_cast<std::size_t>(e_ + 1), 0);
        {
            int x = mod;
            for (int i = 0; i <= e_; ++i) {
                md[static_cast<std::size_t>(i)] = x % p_;
                x /= p_;
            }
        }
        for (int deg = 2 * e_ - 2; deg >= e_; --deg) {
            const int coeff = prod[static_cast<std::size_t>(deg)];
            if (coeff == 0) continue;
            // leading coefficient of the modulus is 1, so subtract coeff * x^(deg-e) * mod
            for (int i = 0; i <= e_; ++i) {
                auto& slot = prod[static_cast<std::size_t>(deg - e_ + i)];
                slot = ((slot - coeff * md[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
            }
        }
        std::vector<int> out(static_cast<std::size_t>(e_));
        for (int i = 0; i < e_; ++i) out[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
        return from_digits(out);
    }

    int q_;
    int p_;
    int e_;
    std::vector<int> add_, mul_, neg_, inv_;
};

} // namespace setramsey
