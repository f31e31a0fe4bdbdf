#pragma once

#include <homex/bigint.hpp>
#include <homex/errors.hpp>

#include <string>
#include <vector>

namespace homex {

// Dense integer-coefficient polynomial in q; index = power.  All chromatic
// and bound polynomials in the library are carried exactly in this form.
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) { normalize(); }

    static IntPolynomial constant(BigInt c) { return IntPolynomial({std::move(c)}); }

    // The monomial q + shift, the building block for falling factorials.
    static IntPolynomial linear(BigInt shift) { return IntPolynomial({std::move(shift), 1}); }

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }   // -1 for the zero polynomial

    BigInt coefficient(int power) const
    {
        if (power < 0 || power >= static_cast<int>(coefficients_.size()))
            return 0;
        return coefficients_[power];
    }

    const std::vector<BigInt> & coefficients() const { return coefficients_; }

    bool is_zero() const { return coefficients_.empty(); }

    IntPolynomial operator+(const IntPolynomial & other) const
    {
        std::vector<BigInt> out(std::max(coefficients_.size(), other.coefficients_.size()), 0);
        for (std::size_t i = 0; i < coefficients_.size(); ++i)
            out[i] += coefficients_[i];
        for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
            out[i] += other.coefficients_[i];
        return IntPolynomial(std::move(out));
    }

    IntPolynomial operator-(const IntPolynomial & other) const
    {
        std::vector<BigInt> out(std::max(coefficients_.size(), other.coefficients_.size()), 0);
        for (std::size_t i = 0; i < coefficients_.size(); ++i)
            out[i] += coefficients_[i];
        for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
            out[i] -= other.coefficients_[i];
        return IntPolynomial(std::move(out));
    }

    IntPolynomial operator*(const IntPolynomial & other) const
    {
        if (is_zero() || other.is_zero())
            return IntPolynomial();
        std::vector<BigInt> out(coefficients_.size() + other.coefficients_.size() - 1, 0);
        for (std::size_t i = 0; i < coefficients_.size(); ++i) {
            if (coefficients_[i] == 0)
                continue;
            for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
                out[i + j] += coefficients_[i] * other.coefficients_[j];
        }
        return IntPolynomial(std::move(out));
    }

    IntPolynomial & operator+=(const IntPolynomial & other) { return *this = *this + other; }
    IntPolynomial & operator-=(const IntPolynomial & other) { return *this = *this - other; }
    IntPolynomial & operator*=(const IntPolynomial & other) { return *this = *this * other; }

    bool operator==(const IntPolynomial & other) const { return coefficients_ == other.coefficients_; }

    IntPolynomial pow(unsigned exponent) const
    {
        IntPolynomial result = constant(1);
        IntPolynomial base = *this;
        while (exponent > 0) {
            if (exponent & 1u)
                result *= base;
            exponent >>= 1;
            if (exponent > 0)
                base *= base;
        }
        return result;
    }

    BigInt eval(const BigInt & q) const
    {
        BigInt value = 0;
        for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it)
            value = value * q + *it;
        return value;
    }

    // Coefficient list lowest degree first, as decimal strings (the CLI
    // serialization; counts overflow 64-bit range at modest sizes).
    std::vector<std::string> decimal_coefficients() const
    {
        std::vector<std::string> out;
        out.reserve(coefficients_.size());
        for (const auto & c : coefficients_)
            out.push_back(c.str());
        return out;
    }

private:
    void normalize()
    {
        while (! coefficients_.empty() && coefficients_.back() == 0)
            coefficients_.pop_back();
    }

    std::vector<BigInt> coefficients_;
};

// q(q-1)(q-2)...(q-count+1): the number of injections of count labels into q
// colors, as a polynomial.
inline IntPolynomial falling_factorial(int count)
{
    if (count < 0)
        throw usage_error("falling factorial length must be nonnegative");
    IntPolynomial result = IntPolynomial::constant(1);
    for (int i = 0; i < count; ++i)
        result *= IntPolynomial::linear(BigInt(-i));
    return result;
}

// Stirling subset numbers S(n, k): partitions of an n-set into k nonempty
// blocks, via the standard recurrence.
inline BigInt stirling_subset(int n, int k)
{
    if (n < 0 || k < 0)
        throw usage_error("stirling parameters must be nonnegative");
    if (k > n)
        return 0;
    std::vector<std::vector<BigInt>> table(n + 1, std::vector<BigInt>(k + 1, 0));
    table[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j)
            table[i][j] = table[i - 1][j - 1] + BigInt(j) * table[i - 1][j];
    return table[n][k];
}

}
