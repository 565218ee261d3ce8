#pragma once

#include <span>
#include <string>
#include <vector>

#include "pichar/bigint.hpp"
#include "pichar/partition.hpp"

namespace pichar {

/// nu(m, p): the exponent of the prime p in m; domain_error for m = 0.
int nu(const BigInt& m, int p);
int nu(long long m, int p);

/// Exponent of p in n! (Legendre's formula).
int nu_factorial(int n, int p);

/// n!, memoized per process; safe under concurrent first use.
BigInt factorial(int n);

/// Digits of n in base p, least significant first; empty for n = 0.
struct PAdicDigits {
    int p = 2;
    std::vector<int> digits;

    static PAdicDigits of(int n, int p);
    int digit(int j) const {
        return (j >= 0 && j < static_cast<int>(digits.size())) ? digits[static_cast<size_t>(j)] : 0;
    }
    int sum() const;
    int reconstruct() const;
};

/// Character degree of S_n at lambda: n! divided by the product of all hook
/// lengths. Exact arithmetic; integrality of the quotient is enforced.
BigInt degree_hook_formula(const Partition& lambda);

/// nu_p of the degree, computed from core-tower layer sizes and the p-adic
/// digits of n alone: (sum of layer sizes - digit sum) / (p - 1).
int nu_p_from_tower(const Partition& lambda, int p);

/// nu_p of the degree as nu_p(n!) minus the hook-length valuations.
/// Integer arithmetic only; independent of the tower construction.
int nu_p_from_hooks(const Partition& lambda, int p);

/// True iff the degree of lambda is coprime to p (tower layer sizes match the
/// p-adic digits of n).
bool is_p_prime_degree(const Partition& lambda, int p);

/// Same predicate through the top-hook recursion: strip the leading p-adic
/// term, demand exactly a_k hooks of length p^k, and recurse on the p^k-core.
bool is_p_prime_degree_top_hooks(const Partition& lambda, int p);

bool is_pi_prime_degree(const Partition& lambda, std::span<const int> primes);

/// Label of an irreducible character of A_n: the lexicographically largest of
/// {lambda, lambda'}, plus a split index when lambda is self-conjugate.
struct AltLabel {
    Partition lambda;
    bool split = false;
    int split_index = -1;  // 0 or 1 when split

    std::string to_string() const;
    friend bool operator==(const AltLabel&, const AltLabel&) = default;
};

struct SymRecord {
    Partition label;
    BigInt degree;
    int mult = 1;
};

struct AltRecord {
    AltLabel label;
    BigInt degree;
    int mult = 1;
};

/// One record per partition of n, in enumeration order. Sum of degree^2 is n!.
std::vector<SymRecord> sym_degrees(int n);

/// Degrees of Irr(A_n), n >= 3: one record per conjugate pair, two half-degree
/// records per self-conjugate label. Sum of degree^2 is n!/2.
std::vector<AltRecord> alt_degrees(int n);

/// JSON-lines serialization {"label":..., "degree":..., "mult":..., "split":...}.
std::string record_json_line(const std::string& label, const BigInt& degree, int mult, bool split);
std::string record_json_line(const SymRecord& r);
std::string record_json_line(const AltRecord& r);

bool is_prime(int n);
std::vector<int> primes_up_to(int n);

}  // namespace pichar
