#pragma once

#include <homex/bigint.hpp>
#include <homex/errors.hpp>
#include <homex/graph.hpp>

#include <vector>

namespace homex {

// Adjacency matrix of a target graph with exact integer entries, specialized
// for walk generating counts.  A loop contributes a single diagonal 1.
class TransferMatrix {
public:
    explicit TransferMatrix(const Graph & h) : n_(h.vertex_count()), entries_(static_cast<std::size_t>(n_) * n_, 0)
    {
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (h.adjacent(u, v))
                    at(u, v) = 1;
    }

    int dimension() const { return n_; }

    BigInt & at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const BigInt & at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }

    std::vector<BigInt> apply(const std::vector<BigInt> & x) const
    {
        std::vector<BigInt> y(n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (at(i, j) != 0)
                    y[i] += at(i, j) * x[j];
        return y;
    }

    TransferMatrix multiply(const TransferMatrix & other) const
    {
        TransferMatrix out(*this);
        for (auto & e : out.entries_)
            e = 0;
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const BigInt & a = at(i, k);
                if (a == 0)
                    continue;
                for (int j = 0; j < n_; ++j)
                    out.at(i, j) += a * other.at(k, j);
            }
        return out;
    }

    TransferMatrix power(unsigned long long e) const
    {
        TransferMatrix result(*this);
        for (auto & v : result.entries_)
            v = 0;
        for (int i = 0; i < n_; ++i)
            result.at(i, i) = 1;
        TransferMatrix base(*this);
        while (e > 0) {
            if (e & 1)
                result = result.multiply(base);
            e >>= 1;
            if (e > 0)
                base = base.multiply(base);
        }
        return result;
    }

    BigInt trace() const
    {
        BigInt t = 0;
        for (int i = 0; i < n_; ++i)
            t += at(i, i);
        return t;
    }

    BigInt entry_sum() const
    {
        BigInt s = 0;
        for (const auto & e : entries_)
            s += e;
        return s;
    }

private:
    int n_;
    std::vector<BigInt> entries_;
};

// Walk counts drive path and cycle homomorphism counts: a map from the
// k-vertex path into h is exactly a walk of k-1 steps, and a map from the
// k-cycle is a closed walk of length k.
inline BigInt count_walks(const Graph & h, int steps)
{
    if (steps < 0)
        throw usage_error("walk length must be nonnegative");
    if (steps == 0)
        return h.vertex_count();
    return TransferMatrix(h).power(static_cast<unsigned long long>(steps)).entry_sum();
}

inline BigInt count_closed_walks(const Graph & h, int length)
{
    if (length < 1)
        throw usage_error("closed walk length must be positive");
    return TransferMatrix(h).power(static_cast<unsigned long long>(length)).trace();
}

}
