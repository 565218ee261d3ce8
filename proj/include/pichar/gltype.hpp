#pragma once

#include <string>
#include <vector>

#include "pichar/bigint.hpp"
#include "pichar/partition.hpp"
#include "pichar/piclass.hpp"

namespace pichar {

/// Parameters of GL_n^eps(r^a): rank n, defining prime r, field F_{r^a},
/// eps = +1 (linear) or -1 (unitary).
struct GLParams {
    int n;
    int r;
    int a = 1;
    int eps = +1;

    BigInt field_order() const;  // r^a
    BigInt group_order() const;
};

/// |GL_n(q)| = q^{n(n-1)/2} * prod_{i=1..n} (q^i - 1).
BigInt gl_order(int n, const BigInt& q);
/// |GL_n^eps(q)|: for eps = -1 the factors are q^i - (-1)^i.
BigInt glu_order(int n, const BigInt& q, int eps);

/// Number of monic irreducible polynomials of degree d over F_q
/// (Moebius/necklace count). The degree-1 pool usable for GL excludes x.
BigInt count_irreducible_polys(const BigInt& q, int d);

/// Unipotent character degree of GL_m(Q) at lambda |- m:
/// Q^{sum (i-1) lambda_i} * prod_{i<=m}(Q^i - 1) / prod_cells (Q^{hook} - 1).
BigInt unipotent_degree(const Partition& lambda, const BigInt& Q);

/// One centralizer factor: m-fold repeated irreducible of degree d carrying a
/// unipotent label lambda |- m; the factor contributes GL_m(q^d).
struct ShapeFactor {
    int d;
    int m;
    Partition lambda;
};

/// A character shape: factors with sum d*m = n, plus the number of semisimple
/// classes realizing this decorated shape (choices of distinct irreducibles).
struct GLCharShape {
    std::vector<ShapeFactor> factors;
    BigInt class_multiplier;
};

/// Every decorated shape exactly once; shapes whose factor count exceeds the
/// polynomial pool are skipped. Sum of class multipliers over all shapes is
/// the number of irreducible characters (= class number) of GL_n(q).
std::vector<GLCharShape> enumerate_shapes(int n, const BigInt& q);

struct DegreeTable {
    std::vector<std::pair<BigInt, BigInt>> entries;  // (degree, count), degree ascending
    BigInt group_order;

    BigInt character_count() const;
    BigInt sum_degree_squares() const;
    BigInt count_of(const BigInt& degree) const;
    std::string to_tsv() const;
    std::string to_json() const;
};

/// Character degree of one shape: the r'-part of |G : C| times the product of
/// the factors' unipotent degrees.
BigInt shape_degree(const GLCharShape& shape, int n, const BigInt& q, int r);

/// Full degree multiset of Irr(GL_n(q)) by enumeration over shapes.
DegreeTable gl_character_degrees(int n, const BigInt& q, int r);
/// Convenience overload: factors q_f = r^a itself; domain_error when q_f is
/// not a prime power.
DegreeTable gl_character_degrees(int n, long long q_f);

/// Closed-form criterion: the pair-coprime irreducibles are exactly the
/// linear characters iff, up to reordering the pair, r is one member p,
/// n is a power q^k of the other member, and q divides p^a - eps.
/// domain_error when a member of the pair does not divide the group order.
bool gl_only_linear(const GLParams& params, const PrimePair& pi);

/// The same statement read off a degree table: no degree > 1 coprime to both.
bool gl_only_linear_from_table(const DegreeTable& table, const PrimePair& pi);

/// Primes dividing |GL_n^eps(r^a)|.
std::vector<int> gl_prime_divisors(const GLParams& params);

struct GlGraphResult {
    PrimeGraph graph;
    /// Degenerate small-group pairs where the closed form and the enumerated
    /// table disagree; the table decided the edge.
    std::vector<std::string> notes;
};

/// Graph on the primes dividing the group order; edges from the closed-form
/// criterion, overridden by the degree-table oracle for eps = +1 and n <= 4
/// (any disagreement is reported in notes, never silently dropped).
GlGraphResult gamma_prime_gl(const GLParams& params);

}  // namespace pichar
