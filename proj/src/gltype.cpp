#include "pichar/gltype.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace pichar {

BigInt GLParams::field_order() const { return big_pow(r, static_cast<unsigned>(a)); }
BigInt GLParams::group_order() const { return glu_order(n, field_order(), eps); }

BigInt gl_order(int n, const BigInt& q) { return glu_order(n, q, +1); }

BigInt glu_order(int n, const BigInt& q, int eps) {
    if (n < 1) throw std::invalid_argument("glu_order: n must be >= 1");
    if (q < 2) throw std::invalid_argument("glu_order: q must be >= 2");
    if (eps != 1 && eps != -1) throw std::invalid_argument("glu_order: eps must be +-1");
    BigInt order = big_pow(q, static_cast<unsigned>(n) * static_cast<unsigned>(n - 1) / 2);
    for (int i = 1; i <= n; ++i) {
        const int sign = (eps == 1 || i % 2 == 0) ? 1 : -1;  // eps^i
        order *= big_pow(q, static_cast<unsigned>(i)) - sign;
    }
    return order;
}

namespace {

std::vector<int> divisors_of(int d) {
    std::vector<int> divs;
    for (int e = 1; e <= d; ++e)
        if (d % e == 0) divs.push_back(e);
    return divs;
}

int moebius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

}  // namespace

BigInt count_irreducible_polys(const BigInt& q, int d) {
    if (q < 2 || d < 1) throw std::invalid_argument("count_irreducible_polys: bad arguments");
    BigInt sum = 0;
    for (int e : divisors_of(d)) sum += moebius(d / e) * big_pow(q, static_cast<unsigned>(e));
    return exact_div(sum, d, "count_irreducible_polys");
}

BigInt unipotent_degree(const Partition& lambda, const BigInt& Q) {
    if (Q < 2) throw std::invalid_argument("unipotent_degree: Q must be >= 2");
    const auto& parts = lambda.parts();
    unsigned diag = 0;  // sum (i-1) * lambda_i
    for (size_t i = 0; i < parts.size(); ++i) diag += static_cast<unsigned>(i) * static_cast<unsigned>(parts[i]);
    BigInt numerator = big_pow(Q, diag);
    for (int i = 1; i <= lambda.size(); ++i) numerator *= big_pow(Q, static_cast<unsigned>(i)) - 1;
    BigInt denominator = 1;
    for (int h : hook_multiset(lambda)) denominator *= big_pow(Q, static_cast<unsigned>(h)) - 1;
    return exact_div(numerator, denominator, "unipotent_degree");
}

namespace {

// Decorated multiplicity data for one polynomial degree: multiset of
// (multiplicity, label) slots, kept sorted for canonical grouping.
using SlotList = std::vector<std::pair<int, Partition>>;

// Ways to tag t distinct polynomials from a pool of size N with these slots:
// product of binomials over groups of identical slots. Zero when N < t.
BigInt slot_assignments(const BigInt& pool, const SlotList& slots) {
    BigInt ways = 1;
    BigInt remaining = pool;
    size_t i = 0;
    while (i < slots.size()) {
        size_t j = i;
        while (j < slots.size() && slots[j] == slots[i]) ++j;
        const size_t group = j - i;
        BigInt choose = 1;
        for (size_t t = 0; t < group; ++t) {
            if (remaining <= 0) return 0;
            choose *= remaining;
            remaining -= 1;
        }
        for (size_t t = 2; t <= group; ++t) choose = exact_div(choose, static_cast<int>(t), "slot_assignments");
        ways *= choose;
        i = j;
    }
    return ways;
}

// All decorated multiplicity multisets for total mass w at one degree:
// partitions of w, each part carrying a label |- part, identical slots unordered.
std::vector<SlotList> decorated_multisets(int w) {
    std::vector<SlotList> out;
    std::vector<std::vector<Partition>> label_pool(static_cast<size_t>(w) + 1);
    for (int m = 1; m <= w; ++m) label_pool[static_cast<size_t>(m)] = enumerate_partitions(m);
    for (const auto& rho : enumerate_partitions(w)) {
        const auto& mults = rho.parts();
        SlotList slots;
        // For each run of equal multiplicities choose a non-decreasing label
        // index sequence so that identical slots are produced exactly once.
        auto rec = [&](auto&& self, size_t pos, size_t min_label) -> void {
            if (pos == mults.size()) {
                out.push_back(slots);
                return;
            }
            const int m = mults[pos];
            const bool same_run = pos > 0 && mults[pos - 1] == m;
            const auto& labels = label_pool[static_cast<size_t>(m)];
            for (size_t li = same_run ? min_label : 0; li < labels.size(); ++li) {
                slots.emplace_back(m, labels[li]);
                self(self, pos + 1, li);
                slots.pop_back();
            }
        };
        rec(rec, 0, 0);
    }
    return out;
}

}  // namespace

std::vector<GLCharShape> enumerate_shapes(int n, const BigInt& q) {
    if (n < 1) throw std::invalid_argument("enumerate_shapes: n must be >= 1");
    if (q < 2) throw std::invalid_argument("enumerate_shapes: q must be >= 2");

    std::vector<GLCharShape> shapes;
    std::vector<std::pair<int, int>> masses;  // (degree d, mass w)

    auto emit = [&]() {
        // Cartesian product of decorated multisets across the used degrees.
        std::vector<std::vector<SlotList>> options;
        std::vector<BigInt> pools;
        for (const auto& [d, w] : masses) {
            options.push_back(decorated_multisets(w));
            BigInt pool = count_irreducible_polys(q, d);
            if (d == 1) pool -= 1;  // x is not invertible
            pools.push_back(std::move(pool));
        }
        std::vector<size_t> pick(masses.size(), 0);
        auto rec = [&](auto&& self, size_t level) -> void {
            if (level == masses.size()) {
                GLCharShape shape;
                shape.class_multiplier = 1;
                for (size_t i = 0; i < masses.size(); ++i) {
                    const auto& slots = options[i][pick[i]];
                    shape.class_multiplier *= slot_assignments(pools[i], slots);
                    for (const auto& [m, lambda] : slots)
                        shape.factors.push_back({masses[i].first, m, lambda});
                }
                if (shape.class_multiplier != 0) shapes.push_back(std::move(shape));
                return;
            }
            for (size_t i = 0; i < options[level].size(); ++i) {
                pick[level] = i;
                self(self, level + 1);
            }
        };
        rec(rec, 0);
    };

    // Assign masses to polynomial degrees, largest degree first.
    auto assign = [&](auto&& self, int remaining, int max_d) -> void {
        if (remaining == 0) {
            emit();
            return;
        }
        if (max_d == 0) return;
        for (int w = remaining / max_d; w >= 1; --w) {
            masses.emplace_back(max_d, w);
            self(self, remaining - w * max_d, max_d - 1);
            masses.pop_back();
        }
        self(self, remaining, max_d - 1);
    };
    assign(assign, n, n);
    return shapes;
}

BigInt DegreeTable::character_count() const {
    BigInt total = 0;
    for (const auto& [degree, count] : entries) total += count;
    return total;
}

BigInt DegreeTable::sum_degree_squares() const {
    BigInt total = 0;
    for (const auto& [degree, count] : entries) total += degree * degree * count;
    return total;
}

BigInt DegreeTable::count_of(const BigInt& degree) const {
    for (const auto& [d, count] : entries)
        if (d == degree) return count;
    return 0;
}

std::string DegreeTable::to_tsv() const {
    std::string out;
    for (const auto& [degree, count] : entries)
        out += to_decimal(degree) + "\t" + to_decimal(count) + "\n";
    return out;
}

std::string DegreeTable::to_json() const {
    std::string out = "{\"order\":\"" + to_decimal(group_order) + "\",\"degrees\":[";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ",";
        out += "{\"degree\":\"" + to_decimal(entries[i].first) + "\",\"count\":\"" +
               to_decimal(entries[i].second) + "\"}";
    }
    out += "]}";
    return out;
}

BigInt shape_degree(const GLCharShape& shape, int n, const BigInt& q, int r) {
    BigInt centralizer = 1;
    BigInt psi = 1;
    for (const auto& factor : shape.factors) {
        const BigInt qd = big_pow(q, static_cast<unsigned>(factor.d));
        centralizer *= gl_order(factor.m, qd);
        psi *= unipotent_degree(factor.lambda, qd);
    }
    BigInt index = exact_div(gl_order(n, q), centralizer, "shape_degree");
    while (index % r == 0) index /= r;  // strip the defining-characteristic part
    return index * psi;
}

DegreeTable gl_character_degrees(int n, const BigInt& q, int r) {
    std::map<BigInt, BigInt> counts;
    for (const auto& shape : enumerate_shapes(n, q))
        counts[shape_degree(shape, n, q, r)] += shape.class_multiplier;
    DegreeTable table;
    table.group_order = gl_order(n, q);
    table.entries.assign(counts.begin(), counts.end());
    return table;
}

namespace {

// q_f = r^a for a prime r; returns (r, a) or throws.
std::pair<int, int> prime_power_root(long long q_f) {
    if (q_f < 2) throw std::domain_error("q must be a prime power >= 2");
    for (int r = 2; static_cast<long long>(r) * r <= q_f; ++r) {
        if (q_f % r != 0) continue;
        int a = 0;
        long long rest = q_f;
        while (rest % r == 0) {
            rest /= r;
            ++a;
        }
        if (rest != 1) throw std::domain_error("q must be a prime power");
        return {r, a};
    }
    return {static_cast<int>(q_f), 1};  // q_f itself is prime
}

}  // namespace

DegreeTable gl_character_degrees(int n, long long q_f) {
    const auto [r, a] = prime_power_root(q_f);
    (void)a;
    return gl_character_degrees(n, BigInt(q_f), r);
}

bool gl_only_linear(const GLParams& params, const PrimePair& pi) {
    const BigInt order = params.group_order();
    if (order % pi.p != 0 || order % pi.q != 0)
        throw std::domain_error("gl_only_linear: prime does not divide the group order");
    auto matches = [&](int p, int q) {
        if (params.r != p) return false;
        int m = params.n;  // must be q^k, k >= 0
        while (m % q == 0) m /= q;
        if (m != 1) return false;
        const BigInt shifted = big_pow(p, static_cast<unsigned>(params.a)) - params.eps;
        return shifted % q == 0;
    };
    return matches(pi.p, pi.q) || matches(pi.q, pi.p);
}

bool gl_only_linear_from_table(const DegreeTable& table, const PrimePair& pi) {
    for (const auto& [degree, count] : table.entries)
        if (degree > 1 && degree % pi.p != 0 && degree % pi.q != 0) return false;
    return true;
}

namespace {

void collect_prime_factors(BigInt value, std::set<int>& out) {
    for (int p = 2; value > 1; ++p) {
        if (static_cast<BigInt>(p) * p > value) {
            // value itself is prime; desk-scale inputs keep it within int range
            if (value > std::numeric_limits<int>::max())
                throw std::domain_error("prime divisor out of supported range");
            out.insert(static_cast<int>(value));
            return;
        }
        while (value % p == 0) {
            out.insert(p);
            value /= p;
        }
    }
}

}  // namespace

std::vector<int> gl_prime_divisors(const GLParams& params) {
    std::set<int> primes;
    if (params.n >= 2) primes.insert(params.r);  // GL_1(q) has order q - 1
    const BigInt q = params.field_order();
    for (int i = 1; i <= params.n; ++i) {
        const int sign = (params.eps == 1 || i % 2 == 0) ? 1 : -1;  // eps^i
        collect_prime_factors(big_pow(q, static_cast<unsigned>(i)) - sign, primes);
    }
    return {primes.begin(), primes.end()};
}

GlGraphResult gamma_prime_gl(const GLParams& params) {
    if (params.eps != 1 && params.eps != -1)
        throw std::invalid_argument("gamma_prime_gl: eps must be +-1");
    const auto vertices = gl_prime_divisors(params);

    const bool use_table = params.eps == 1 && params.n <= 4;
    DegreeTable table;
    if (use_table) table = gl_character_degrees(params.n, params.field_order(), params.r);

    GlGraphResult result;
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j) {
            const PrimePair pi(vertices[i], vertices[j]);
            const bool closed_edge = !gl_only_linear(params, pi);
            bool edge = closed_edge;
            if (use_table) {
                const bool table_edge = !gl_only_linear_from_table(table, pi);
                if (table_edge != closed_edge) {
                    result.notes.push_back(
                        "pair {" + std::to_string(pi.p) + "," + std::to_string(pi.q) +
                        "}: closed-form criterion disagrees with the enumerated degree table; "
                        "the table decided (edge=" + (table_edge ? "yes" : "no") + ")");
                    edge = table_edge;
                }
            }
            if (edge) edges.emplace_back(vertices[i], vertices[j]);
        }
    result.graph = make_graph(vertices, std::move(edges));
    return result;
}

}  // namespace pichar
