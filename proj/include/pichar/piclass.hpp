#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pichar/bigint.hpp"
#include "pichar/partition.hpp"
#include "pichar/symdeg.hpp"

namespace pichar {

/// An unordered pair of distinct primes; validated on construction.
struct PrimePair {
    int p;
    int q;

    PrimePair(int p_, int q_);
    std::vector<int> as_vector() const { return {p, q}; }
};

/// Undirected graph on a sorted set of primes.
struct PrimeGraph {
    std::vector<int> vertices;                  // ascending
    std::vector<std::pair<int, int>> edges;     // (p, q) with p < q, lexicographic

    bool has_edge(int a, int b) const;
    bool complete() const;
    /// Vertex pairs that are not edges, lexicographic.
    std::vector<std::pair<int, int>> missing_edges() const;

    std::string to_dot() const;
    std::string to_json() const;
    std::string to_tsv() const;
};

PrimeGraph make_graph(std::vector<int> vertices, std::vector<std::pair<int, int>> edges);

/// Partitions of n whose S_n character degree is coprime to both primes,
/// in enumeration order. Contains (n) and (1^n) for every n >= 2.
std::vector<Partition> irr_pi_prime_sym(int n, const PrimePair& pi);

/// Closed-form criterion for Irr restricted to the pair being only the two
/// linear characters: one prime is 2 and n = 2^k = p^m + 1 or n = 2^k + 1 = p^m.
bool sym_only_linear_closed(int n, const PrimePair& pi);
/// Exhaustive statement: no partition outside {(n), (1^n)} has pair-coprime degree.
bool sym_only_linear_brute(int n, const PrimePair& pi);
/// Closed form for n >= 5; answers small n by exhaustion.
bool sym_only_linear(int n, const PrimePair& pi);

struct WitnessReport {
    enum class Kind { only_linear, witness };
    Kind kind = Kind::only_linear;
    std::optional<Partition> witness;
    std::optional<BigInt> degree;
};

/// Explicit non-linear pair-coprime label of S_n built from the leading terms
/// of the p-adic and q-adic expansions of n, following the documented case
/// order; only_linear exactly in the exceptional configurations.
WitnessReport sym_witness(int n, const PrimePair& pi);

struct AltWitness {
    AltLabel label;
    BigInt degree;  // degree of the A_n constituent
};

/// A non-principal pair-coprime character of A_n, n >= 5 (always exists):
/// the restricted S_n witness, or in the exceptional cases a self-conjugate
/// label whose half-degree split character does the job.
AltWitness alt_witness(int n, const PrimePair& pi);

/// Closed form: A_n has a non-trivial pair-coprime character extending to S_n
/// unless n = 2q^k = p^m + 1 or n = 2q^k + 1 = p^m (either ordering).
bool alt_extendible_closed(int n, const PrimePair& pi);
bool alt_extendible_brute(int n, const PrimePair& pi);
bool alt_extendible_exists(int n, const PrimePair& pi);  // n >= 5

/// Graph on the primes <= n; an edge means some non-linear S_n character has
/// degree coprime to both endpoints.
PrimeGraph gamma_prime_sym(int n);

/// Same for A_n (n >= 5), computed from the alternating degree list.
PrimeGraph gamma_prime_alt(int n);

struct SylowSpec {
    int p;
    bool abelian;
};

/// Graph for a nilpotent group given its Sylow structure: an edge joins two
/// primes exactly when some Sylow subgroup outside the pair is non-abelian.
PrimeGraph gamma_prime_nilpotent(std::span<const SylowSpec> sylows);

}  // namespace pichar
