#include "pichar/symdeg.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace pichar {

int nu(const BigInt& m, int p) {
    if (m == 0) throw std::domain_error("nu: argument must be nonzero");
    BigInt v = m < 0 ? BigInt(-m) : m;
    int k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

int nu(long long m, int p) {
    if (m == 0) throw std::domain_error("nu: argument must be nonzero");
    if (m < 0) m = -m;
    int k = 0;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    return k;
}

int nu_factorial(int n, int p) {
    int total = 0;
    for (long long pw = p; pw <= n; pw *= p) total += n / static_cast<int>(pw);
    return total;
}

BigInt factorial(int n) {
    if (n < 0) throw std::domain_error("factorial: n must be >= 0");
    static std::mutex mutex;
    static std::vector<BigInt> cache{1};
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<int>(cache.size()) <= n)
        cache.push_back(cache.back() * static_cast<int>(cache.size()));
    return cache[static_cast<size_t>(n)];
}

PAdicDigits PAdicDigits::of(int n, int p) {
    if (p < 2) throw std::invalid_argument("PAdicDigits: p must be >= 2");
    if (n < 0) throw std::invalid_argument("PAdicDigits: n must be >= 0");
    PAdicDigits d;
    d.p = p;
    while (n > 0) {
        d.digits.push_back(n % p);
        n /= p;
    }
    return d;
}

int PAdicDigits::sum() const { return std::accumulate(digits.begin(), digits.end(), 0); }

int PAdicDigits::reconstruct() const {
    int value = 0;
    for (size_t j = digits.size(); j-- > 0;) value = value * p + digits[j];
    return value;
}

BigInt degree_hook_formula(const Partition& lambda) {
    BigInt hook_product = 1;
    for (int h : hook_multiset(lambda)) hook_product *= h;
    return exact_div(factorial(lambda.size()), hook_product, "degree_hook_formula");
}

int nu_p_from_tower(const Partition& lambda, int p) {
    const auto sizes = core_tower(lambda, p).layer_sizes();
    const int tower_sum = std::accumulate(sizes.begin(), sizes.end(), 0);
    const int digit_sum = PAdicDigits::of(lambda.size(), p).sum();
    const int diff = tower_sum - digit_sum;
    if (diff < 0 || diff % (p - 1) != 0)
        throw std::logic_error("nu_p_from_tower: layer sizes inconsistent with digits");
    return diff / (p - 1);
}

int nu_p_from_hooks(const Partition& lambda, int p) {
    int v = nu_factorial(lambda.size(), p);
    for (int h : hook_multiset(lambda)) v -= nu(static_cast<long long>(h), p);
    return v;
}

bool is_p_prime_degree(const Partition& lambda, int p) {
    const auto sizes = core_tower(lambda, p).layer_sizes();
    const auto digits = PAdicDigits::of(lambda.size(), p);
    // Both runs are indexed 0..floor(log_p n); compare elementwise.
    const size_t m = std::max(sizes.size(), digits.digits.size());
    for (size_t j = 0; j < m; ++j) {
        const int size_j = j < sizes.size() ? sizes[j] : 0;
        if (size_j != digits.digit(static_cast<int>(j))) return false;
    }
    return true;
}

bool is_p_prime_degree_top_hooks(const Partition& lambda, int p) {
    Partition current = lambda;
    while (current.size() > 0) {
        const int n = current.size();
        if (n < p) return true;  // the degree divides n!, coprime to p
        long long pk = p;
        while (pk * p <= n) pk *= p;
        const int top_digit = static_cast<int>(n / pk);
        if (static_cast<int>(e_hooks(current, static_cast<int>(pk)).size()) != top_digit)
            return false;
        current = e_core(current, static_cast<int>(pk));
    }
    return true;
}

bool is_pi_prime_degree(const Partition& lambda, std::span<const int> primes) {
    if (primes.empty()) throw std::invalid_argument("is_pi_prime_degree: empty prime set");
    return std::all_of(primes.begin(), primes.end(),
                       [&](int p) { return is_p_prime_degree(lambda, p); });
}

std::string AltLabel::to_string() const {
    std::string s = lambda.to_string();
    if (split) {
        s += '#';
        s += std::to_string(split_index);
    }
    return s;
}

std::vector<SymRecord> sym_degrees(int n) {
    if (n < 1) throw std::invalid_argument("sym_degrees: n must be >= 1");
    std::vector<SymRecord> records;
    for (auto& lambda : enumerate_partitions(n)) {
        BigInt d = degree_hook_formula(lambda);
        records.push_back({std::move(lambda), std::move(d), 1});
    }
    return records;
}

std::vector<AltRecord> alt_degrees(int n) {
    if (n < 3) throw std::invalid_argument("alt_degrees: n must be >= 3");
    std::vector<AltRecord> records;
    for (auto& lambda : enumerate_partitions(n)) {
        const Partition conj = lambda.conjugate();
        if (lambda < conj) continue;  // handled at the canonical representative
        BigInt d = degree_hook_formula(lambda);
        if (lambda == conj) {
            if (d % 2 != 0)
                throw std::logic_error("alt_degrees: self-conjugate label with odd degree");
            BigInt half = d / 2;
            records.push_back({AltLabel{lambda, true, 0}, half, 1});
            records.push_back({AltLabel{std::move(lambda), true, 1}, std::move(half), 1});
        } else {
            records.push_back({AltLabel{std::move(lambda), false, -1}, std::move(d), 1});
        }
    }
    return records;
}

std::string record_json_line(const std::string& label, const BigInt& degree, int mult, bool split) {
    std::string out = "{\"label\":\"";
    out += label;
    out += "\",\"degree\":\"";
    out += to_decimal(degree);
    out += "\",\"mult\":";
    out += std::to_string(mult);
    out += ",\"split\":";
    out += split ? "true" : "false";
    out += "}";
    return out;
}

std::string record_json_line(const SymRecord& r) {
    return record_json_line(r.label.to_string(), r.degree, r.mult, false);
}

std::string record_json_line(const AltRecord& r) {
    return record_json_line(r.label.to_string(), r.degree, r.mult, r.label.split);
}

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<int> primes_up_to(int n) {
    std::vector<int> primes;
    if (n < 2) return primes;
    std::vector<char> sieve(static_cast<size_t>(n + 1), 1);
    for (int i = 2; i <= n; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        primes.push_back(i);
        for (long long j = static_cast<long long>(i) * i; j <= n; j += i)
            sieve[static_cast<size_t>(j)] = 0;
    }
    return primes;
}

}  // namespace pichar
