#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "oddzeta/rational.hpp"

namespace oddzeta {

// Bernoulli numbers B_n as exact rationals, grown on demand through the
// defining recurrence sum(j=0..n) C(n+1,j) B_j = 0 for n >= 1.
// Only even indices are materialized; B_1 = -1/2 and the vanishing odd
// values are answered directly. Growth happens under a lock and appends
// only, so lookups below the high-water mark can run concurrently.
class BernoulliCache {
  public:
    BernoulliCache() = default;
    BernoulliCache(const BernoulliCache&) = delete;
    BernoulliCache& operator=(const BernoulliCache&) = delete;
    BernoulliCache(BernoulliCache&& o) noexcept {
        std::lock_guard<std::mutex> lock(o.mu_);
        even_ = std::move(o.even_);
    }
    BernoulliCache& operator=(BernoulliCache&& o) noexcept {
        if (this != &o) {
            std::scoped_lock lock(mu_, o.mu_);
            even_ = std::move(o.even_);
        }
        return *this;
    }

    // B_n; grows the table as needed.
    BigRational get(unsigned n);
    // Largest index the table covers, -1 when empty.
    long high_water() const;
    void ensure(unsigned n);

    // Text snapshot, one even-index record per line: "n<TAB>num<TAB>den".
    void save(const std::string& path) const;
    // Loads a snapshot and re-validates every entry against the recurrence;
    // throws IntegrityError (naming the offending line) on parse errors,
    // header mismatch, gaps, or tampered values. An empty file is an empty
    // cache.
    static BernoulliCache load(const std::string& path);

  private:
    BigRational get_locked(unsigned n) const;
    void ensure_locked(unsigned n);

    mutable std::mutex mu_;
    std::vector<BigRational> even_; // even_[k] = B_{2k}
};

// Harmonic numbers H_m = 1 + 1/2 + ... + 1/m, H_0 = 0, grown on demand.
class HarmonicTable {
  public:
    HarmonicTable() { h_.emplace_back(0); }
    BigRational get(unsigned m);

  private:
    mutable std::mutex mu_;
    std::vector<BigRational> h_;
};

// Process-wide instances backing the free functions below.
BernoulliCache& shared_bernoulli_cache();
HarmonicTable& shared_harmonic_table();

// B_n (shared cache).
BigRational bernoulli_number(unsigned n);
// B_n(x) = sum(k=0..n) C(n,k) B_k x^(n-k).
BigRational bernoulli_polynomial(unsigned n, const BigRational& x);
// H_m (shared table).
BigRational harmonic(unsigned m);

} // namespace oddzeta
