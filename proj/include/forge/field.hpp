#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace forge {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_probable_prime(std::uint64_t n);

namespace fieldops {
// Field operations executed on this thread since the last reset. Used to
// assert the locality contract of the strongly explicit neighbor oracle.
std::uint64_t count();
void reset();
void bump();
}  // namespace fieldops

// An element of Z_q for prime q. Immutable after construction; all
// operations are pure.
class FieldElem {
public:
    FieldElem(std::uint64_t value, std::uint64_t q);

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return q_; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;  // throws std::domain_error on zero

    bool is_zero() const { return v_ == 0; }
    bool operator==(const FieldElem& o) const { return v_ == o.v_ && q_ == o.q_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    static FieldElem zero(std::uint64_t q) { return FieldElem(0, q); }
    static FieldElem one(std::uint64_t q) { return FieldElem(1, q); }

private:
    void check_same(const FieldElem& o) const;
    std::uint64_t v_;
    std::uint64_t q_;
};

// Element of Z_q[x]/(x^(r+1)): coefficients of x^0 .. x^r.
class TruncPoly {
public:
    TruncPoly(std::vector<FieldElem> coeffs);
    static TruncPoly zero(std::uint64_t q, int r);
    static TruncPoly one(std::uint64_t q, int r);

    int degree_bound() const { return static_cast<int>(c_.size()) - 1; }  // r
    std::uint64_t modulus() const { return c_.front().modulus(); }
    const FieldElem& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    void set(int i, FieldElem v);

    TruncPoly operator+(const TruncPoly& o) const;
    TruncPoly operator-(const TruncPoly& o) const;
    TruncPoly operator*(const TruncPoly& o) const;  // truncated at degree r

    // Multiplicative inverse; requires invertible constant coefficient.
    // O(r^2) triangular back-substitution.
    TruncPoly inverse() const;

    bool operator==(const TruncPoly& o) const { return c_ == o.c_; }

private:
    void check_compatible(const TruncPoly& o) const;
    std::vector<FieldElem> c_;
};

}  // namespace forge
