#include "pichar/piclass.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pichar {

PrimePair::PrimePair(int p_, int q_) : p(p_), q(q_) {
    if (!is_prime(p) || !is_prime(q))
        throw std::invalid_argument("PrimePair: both members must be prime");
    if (p == q) throw std::invalid_argument("PrimePair: primes must be distinct");
}

bool PrimeGraph::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

bool PrimeGraph::complete() const {
    const size_t v = vertices.size();
    return edges.size() == v * (v - 1) / 2;
}

std::vector<std::pair<int, int>> PrimeGraph::missing_edges() const {
    std::vector<std::pair<int, int>> missing;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (!has_edge(vertices[i], vertices[j]))
                missing.emplace_back(vertices[i], vertices[j]);
    return missing;
}

std::string PrimeGraph::to_dot() const {
    std::string out = "graph gamma_prime {\n";
    for (int v : vertices) {
        out += "  ";
        out += std::to_string(v);
        out += ";\n";
    }
    for (const auto& [a, b] : edges) {
        out += "  ";
        out += std::to_string(a);
        out += " -- ";
        out += std::to_string(b);
        out += ";\n";
    }
    for (const auto& [a, b] : missing_edges()) {
        out += "  // missing: ";
        out += std::to_string(a);
        out += " -- ";
        out += std::to_string(b);
        out += "\n";
    }
    out += "}\n";
    return out;
}

std::string PrimeGraph::to_json() const {
    auto list = [](const std::vector<std::pair<int, int>>& pairs) {
        std::string s = "[";
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (i) s += ",";
            s += "[" + std::to_string(pairs[i].first) + "," + std::to_string(pairs[i].second) + "]";
        }
        return s + "]";
    };
    std::string out = "{\"vertices\":[";
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vertices[i]);
    }
    out += "],\"edges\":";
    out += list(edges);
    out += ",\"missing\":";
    out += list(missing_edges());
    out += "}";
    return out;
}

std::string PrimeGraph::to_tsv() const {
    std::string out;
    for (int v : vertices) out += "vertex\t" + std::to_string(v) + "\n";
    for (const auto& [a, b] : edges)
        out += "edge\t" + std::to_string(a) + "\t" + std::to_string(b) + "\n";
    for (const auto& [a, b] : missing_edges())
        out += "missing\t" + std::to_string(a) + "\t" + std::to_string(b) + "\n";
    return out;
}

PrimeGraph make_graph(std::vector<int> vertices, std::vector<std::pair<int, int>> edges) {
    std::sort(vertices.begin(), vertices.end());
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (const auto& [a, b] : edges) {
        if (a == b) throw std::invalid_argument("PrimeGraph: self-loop");
        if (!std::binary_search(vertices.begin(), vertices.end(), a) ||
            !std::binary_search(vertices.begin(), vertices.end(), b))
            throw std::invalid_argument("PrimeGraph: edge endpoint is not a vertex");
    }
    return PrimeGraph{std::move(vertices), std::move(edges)};
}

std::vector<Partition> irr_pi_prime_sym(int n, const PrimePair& pi) {
    if (n < 1) throw std::invalid_argument("irr_pi_prime_sym: n must be >= 1");
    const int primes[2] = {pi.p, pi.q};
    std::vector<Partition> out;
    for (auto& lambda : enumerate_partitions(n))
        if (is_pi_prime_degree(lambda, primes)) out.push_back(std::move(lambda));
    return out;
}

namespace {

// x == base^e for some e >= 1
bool is_positive_power(long long x, int base) {
    if (x < base) return false;
    while (x % base == 0) x /= base;
    return x == 1;
}

// Leading term a * p^m of the p-adic expansion of n (largest power first).
struct LeadingTerm {
    int prime;
    int coeff;      // 1 <= coeff < prime
    long long power;  // prime^m
    long long value() const { return coeff * power; }
};

LeadingTerm leading_term(int n, int p) {
    long long pw = 1;
    while (pw * p <= n) pw *= p;
    return {p, static_cast<int>(n / pw), pw};
}

Partition one_row_tail(int head, int ones) {
    std::vector<int> parts{head};
    parts.insert(parts.end(), static_cast<size_t>(ones), 1);
    return Partition(std::move(parts));
}

Partition two_rows_tail(int head, int second, int ones) {
    std::vector<int> parts{head, second};
    parts.insert(parts.end(), static_cast<size_t>(ones), 1);
    return Partition(std::move(parts));
}

}  // namespace

bool sym_only_linear_closed(int n, const PrimePair& pi) {
    if (pi.p != 2 && pi.q != 2) return false;
    const int p = pi.p == 2 ? pi.q : pi.p;
    const bool n_is_2k = is_positive_power(n, 2);
    if (n_is_2k && is_positive_power(n - 1, p)) return true;       // n = 2^k = p^m + 1
    if (is_positive_power(n - 1, 2) && is_positive_power(n, p)) return true;  // n = 2^k + 1 = p^m
    return false;
}

bool sym_only_linear_brute(int n, const PrimePair& pi) {
    const Partition row(std::vector<int>{n});
    const Partition column(std::vector<int>(static_cast<size_t>(n), 1));
    for (const auto& lambda : enumerate_partitions(n)) {
        if (lambda == row || lambda == column) continue;
        if (nu_p_from_hooks(lambda, pi.p) == 0 && nu_p_from_hooks(lambda, pi.q) == 0)
            return false;
    }
    return true;
}

bool sym_only_linear(int n, const PrimePair& pi) {
    if (n < 1) throw std::invalid_argument("sym_only_linear: n must be >= 1");
    return n >= 5 ? sym_only_linear_closed(n, pi) : sym_only_linear_brute(n, pi);
}

WitnessReport sym_witness(int n, const PrimePair& pi) {
    if (n < 1) throw std::invalid_argument("sym_witness: n must be >= 1");
    if (pi.p > n || pi.q > n)
        throw std::invalid_argument("sym_witness: both primes must be at most n");

    auto finish = [&](Partition witness) {
        const Partition row(std::vector<int>{n});
        const Partition column(std::vector<int>(static_cast<size_t>(n), 1));
        if (witness.size() != n || witness == row || witness == column)
            throw std::logic_error("sym_witness: constructed label is not a valid witness");
        const int primes[2] = {pi.p, pi.q};
        if (!is_pi_prime_degree(witness, primes))
            throw std::logic_error("sym_witness: constructed label fails the degree test");
        BigInt degree = degree_hook_formula(witness);
        return WitnessReport{WitnessReport::Kind::witness, std::move(witness), std::move(degree)};
    };

    LeadingTerm big = leading_term(n, pi.p);
    LeadingTerm small = leading_term(n, pi.q);
    if (big.value() < small.value()) std::swap(big, small);

    // Leading-term construction: valid unless it degenerates to (1^n).
    {
        const int head = n - static_cast<int>(small.value());
        const int second = n - static_cast<int>(big.value()) + 1;
        const int ones = static_cast<int>(small.value()) - second;
        if (!(head == 1 && second == 1))  // degenerate exactly when n = big and n = small + 1
            return finish(two_rows_tail(head, second, ones));
    }

    // Degenerate case: n = A*P^M = B*Q^K + 1.
    const int P = big.prime, A = big.coeff;
    const long long PM = big.power;
    const int Q = small.prime, B = small.coeff;
    const long long QK = small.power;

    if (P == 2) {
        // n = 2^M and n - 1 = B*Q^K with Q odd
        if (B == 1) return {};  // only the two linear characters
        return finish(one_row_tail(1 + (B - 1) * static_cast<int>(QK), static_cast<int>(QK)));
    }
    if (Q == 2) {
        // n = A*P^M = 2^K + 1 with P odd
        if (A == 1) return {};  // only the two linear characters
        return finish(two_rows_tail((A - 1) * static_cast<int>(PM), 2, static_cast<int>(PM) - 2));
    }
    // Both primes odd.
    if (B >= 2)
        return finish(one_row_tail(1 + (B - 1) * static_cast<int>(QK), static_cast<int>(QK)));
    // B = 1 forces A = 2c even (n = Q^K + 1 is even, P odd).
    const int c = A / 2;
    const int cpm = c * static_cast<int>(PM);
    return finish(two_rows_tail(cpm, 2, cpm - 2));
}

AltWitness alt_witness(int n, const PrimePair& pi) {
    if (n < 5) throw std::invalid_argument("alt_witness: n must be >= 5");

    auto finish = [&](const Partition& lambda) {
        const Partition conj = lambda.conjugate();
        const Partition canonical = std::max(lambda, conj);
        BigInt degree = degree_hook_formula(canonical);
        AltWitness w;
        if (lambda == conj) {
            if (degree % 2 != 0)
                throw std::logic_error("alt_witness: self-conjugate label with odd degree");
            w = AltWitness{AltLabel{canonical, true, 0}, degree / 2};
        } else {
            w = AltWitness{AltLabel{canonical, false, -1}, degree};
        }
        if (w.degree % pi.p == 0 || w.degree % pi.q == 0 || w.degree == 1)
            throw std::logic_error("alt_witness: constructed character fails the degree test");
        return w;
    };

    const WitnessReport sym = sym_witness(n, pi);
    if (sym.kind == WitnessReport::Kind::witness) return finish(*sym.witness);

    // Exceptional configurations: one prime is 2 and n = 2^k or n = 2^k + 1.
    // A self-conjugate label with exactly two 2^{k-1}-hooks splits into two
    // odd-degree halves, and its top hook takes care of the odd prime.
    long long half = 1;  // 2^{k-1}
    if (is_positive_power(n, 2)) {
        while (half * 4 <= n) half *= 2;
        return finish(two_rows_tail(static_cast<int>(half), 2, static_cast<int>(half) - 2));
    }
    while (half * 4 <= n - 1) half *= 2;
    return finish(one_row_tail(static_cast<int>(half) + 1, static_cast<int>(half)));
}

bool alt_extendible_closed(int n, const PrimePair& pi) {
    auto exceptional = [n](int p, int q) {
        for (long long twoqk = 2; twoqk <= static_cast<long long>(n) + 1; twoqk *= q) {
            if (twoqk == n && is_positive_power(n - 1, p)) return true;      // n = 2q^k = p^m + 1
            if (twoqk + 1 == n && is_positive_power(n, p)) return true;      // n = 2q^k + 1 = p^m
        }
        return false;
    };
    return !(exceptional(pi.p, pi.q) || exceptional(pi.q, pi.p));
}

bool alt_extendible_brute(int n, const PrimePair& pi) {
    const Partition row(std::vector<int>{n});
    const Partition column(std::vector<int>(static_cast<size_t>(n), 1));
    for (const auto& lambda : enumerate_partitions(n)) {
        if (lambda == row || lambda == column) continue;
        if (lambda == lambda.conjugate()) continue;
        if (nu_p_from_hooks(lambda, pi.p) == 0 && nu_p_from_hooks(lambda, pi.q) == 0)
            return true;
    }
    return false;
}

bool alt_extendible_exists(int n, const PrimePair& pi) {
    if (n < 5) throw std::invalid_argument("alt_extendible_exists: n must be >= 5");
    return alt_extendible_closed(n, pi);
}

PrimeGraph gamma_prime_sym(int n) {
    if (n < 2) throw std::invalid_argument("gamma_prime_sym: n must be >= 2");
    const auto primes = primes_up_to(n);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = i + 1; j < primes.size(); ++j)
            if (!sym_only_linear(n, PrimePair(primes[i], primes[j])))
                edges.emplace_back(primes[i], primes[j]);
    return make_graph(primes, std::move(edges));
}

PrimeGraph gamma_prime_alt(int n) {
    if (n < 5) throw std::invalid_argument("gamma_prime_alt: n must be >= 5");
    const auto primes = primes_up_to(n);
    // Coprimality mask per non-principal character, from the degree list.
    std::vector<std::vector<bool>> masks;
    for (const auto& record : alt_degrees(n)) {
        if (record.degree == 1) continue;
        std::vector<bool> mask(primes.size());
        for (size_t i = 0; i < primes.size(); ++i)
            mask[i] = record.degree % primes[i] != 0;
        masks.push_back(std::move(mask));
    }
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < primes.size(); ++i)
        for (size_t j = i + 1; j < primes.size(); ++j)
            for (const auto& mask : masks)
                if (mask[i] && mask[j]) {
                    edges.emplace_back(primes[i], primes[j]);
                    break;
                }
    return make_graph(primes, std::move(edges));
}

PrimeGraph gamma_prime_nilpotent(std::span<const SylowSpec> sylows) {
    if (sylows.empty()) throw std::invalid_argument("gamma_prime_nilpotent: no Sylow entries");
    std::set<int> seen;
    for (const auto& s : sylows) {
        if (!is_prime(s.p)) throw std::invalid_argument("gamma_prime_nilpotent: non-prime entry");
        if (!seen.insert(s.p).second)
            throw std::domain_error("gamma_prime_nilpotent: duplicate prime");
    }
    std::vector<int> vertices(seen.begin(), seen.end());
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j) {
            // Degrees multiply across the direct factors, so a witness must be
            // non-linear in some factor outside the pair.
            const bool edge = std::any_of(sylows.begin(), sylows.end(), [&](const SylowSpec& s) {
                return !s.abelian && s.p != vertices[i] && s.p != vertices[j];
            });
            if (edge) edges.emplace_back(vertices[i], vertices[j]);
        }
    return make_graph(std::move(vertices), std::move(edges));
}

}  // namespace pichar
