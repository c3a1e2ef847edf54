#include "oddzeta/bernoulli.hpp"

#include <fstream>
#include <sstream>

#include "oddzeta/errors.hpp"

namespace oddzeta {

namespace {

const char* const kCacheHeader = "bernoulli-cache v1";

// Recurrence residual sum(j=0..n) C(n+1,j) B_j for even n >= 2, with B
// values supplied by `lookup` for even j and the fixed odd values inline.
// Must be zero for a consistent table.
template <typename Lookup>
BigRational recurrence_residual(unsigned n, Lookup&& lookup) {
    BigRational acc(0);
    for (unsigned j = 0; j <= n; j += 2)
        acc += BigRational(BigInt::binomial(n + 1, j)) * lookup(j);
    // j = 1 contributes C(n+1,1) * (-1/2); higher odd j contribute nothing
    acc += BigRational(BigInt::binomial(n + 1, 1)) * BigRational(-1, 2);
    return acc;
}

} // namespace

BigRational BernoulliCache::get_locked(unsigned n) const {
    if (n % 2 == 1) return n == 1 ? BigRational(-1, 2) : BigRational(0);
    return even_[n / 2];
}

void BernoulliCache::ensure_locked(unsigned n) {
    if (even_.empty()) even_.emplace_back(1); // B_0
    for (unsigned t = static_cast<unsigned>(even_.size()) * 2; t <= n; t += 2) {
        // B_t = -(sum over j < t) / C(t+1, t)
        BigRational acc(0);
        for (unsigned j = 0; j + 2 <= t; j += 2)
            acc += BigRational(BigInt::binomial(t + 1, j)) * even_[j / 2];
        acc += BigRational(BigInt::binomial(t + 1, 1)) * BigRational(-1, 2);
        even_.push_back(-acc / BigRational(static_cast<long>(t) + 1));
    }
}

BigRational BernoulliCache::get(unsigned n) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_locked(n);
    return get_locked(n);
}

void BernoulliCache::ensure(unsigned n) {
    std::lock_guard<std::mutex> lock(mu_);
    ensure_locked(n);
}

long BernoulliCache::high_water() const {
    std::lock_guard<std::mutex> lock(mu_);
    if (even_.empty()) return -1;
    return static_cast<long>(even_.size()) * 2 - 2;
}

void BernoulliCache::save(const std::string& path) const {
    std::lock_guard<std::mutex> lock(mu_);
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IntegrityError("cannot write cache file: " + path);
    out << kCacheHeader << "\n";
    for (size_t k = 0; k < even_.size(); ++k)
        out << 2 * k << "\t" << even_[k].numerator().to_string() << "\t"
            << even_[k].denominator().to_string() << "\n";
    out.flush();
    if (!out) throw IntegrityError("write failed: " + path);
}

BernoulliCache BernoulliCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IntegrityError("cannot read cache file: " + path);

    BernoulliCache cache;
    std::string line;
    if (!std::getline(in, line)) return cache; // empty file, empty cache
    if (line != kCacheHeader)
        throw IntegrityError("line 1: unsupported cache header '" + line + "'");

    size_t lineno = 1;
    unsigned expect = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::string where = "line " + std::to_string(lineno);
        size_t t1 = line.find('\t');
        size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t2 == std::string::npos)
            throw IntegrityError(where + ": expected n<TAB>num<TAB>den");
        unsigned long n = 0;
        try {
            size_t used = 0;
            n = std::stoul(line.substr(0, t1), &used);
            if (used != t1) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw IntegrityError(where + ": bad index field");
        }
        if (n % 2 != 0) throw IntegrityError(where + ": odd index " + std::to_string(n));
        if (n != expect)
            throw IntegrityError(where + ": expected index " + std::to_string(expect) +
                                 ", found " + std::to_string(n));
        BigRational value(0);
        try {
            value = BigRational::from_strings(line.substr(t1 + 1, t2 - t1 - 1),
                                              line.substr(t2 + 1));
        } catch (const Error&) {
            throw IntegrityError(where + ": bad rational fields");
        }
        if (n == 0) {
            if (value != BigRational(1)) throw IntegrityError(where + ": B_0 must be 1");
        } else {
            BigRational residual = recurrence_residual(
                static_cast<unsigned>(n),
                [&](unsigned j) { return j == n ? value : cache.even_[j / 2]; });
            if (!residual.is_zero())
                throw IntegrityError(where + ": B_" + std::to_string(n) +
                                     " fails the recurrence check");
        }
        cache.even_.push_back(std::move(value));
        expect += 2;
    }
    return cache;
}

BernoulliCache& shared_bernoulli_cache() {
    static BernoulliCache cache;
    return cache;
}

HarmonicTable& shared_harmonic_table() {
    static HarmonicTable table;
    return table;
}

BigRational HarmonicTable::get(unsigned m) {
    std::lock_guard<std::mutex> lock(mu_);
    while (h_.size() <= m) {
        long next = static_cast<long>(h_.size());
        h_.push_back(h_.back() + BigRational(1, next));
    }
    return h_[m];
}

BigRational bernoulli_number(unsigned n) { return shared_bernoulli_cache().get(n); }

BigRational bernoulli_polynomial(unsigned n, const BigRational& x) {
    BigRational acc(0);
    BigRational xp(1); // x^(n-k), built from the top down
    // accumulate from k = n down to 0 so the power of x grows by one each step
    for (unsigned k = n + 1; k-- > 0;) {
        const BigRational bk = bernoulli_number(k);
        if (!bk.is_zero()) acc += BigRational(BigInt::binomial(n, k)) * bk * xp;
        if (k > 0) xp *= x;
    }
    return acc;
}

BigRational harmonic(unsigned m) { return shared_harmonic_table().get(m); }

} // namespace oddzeta
