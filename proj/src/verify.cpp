#include "pichar/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "pichar/gltype.hpp"
#include "pichar/piclass.hpp"
#include "pichar/symdeg.hpp"

namespace pichar::verify {

namespace {

int effective_max(int requested, int fallback) {
    int v = requested > 0 ? requested : fallback;
    if (const char* cap = std::getenv("PICHAR_MAX_N")) {
        const int c = std::atoi(cap);
        if (c > 0) v = std::min(v, c);
    }
    return v;
}

// Failure sink keyed by n: the reported counterexample is the one with the
// smallest key, independent of worker interleaving.
class Failures {
public:
    void add(int key, std::string message) {
        std::lock_guard<std::mutex> lock(mutex_);
        by_key_.emplace(key, std::move(message));
    }
    bool empty() const { return by_key_.empty(); }
    std::string first() const { return by_key_.empty() ? "" : by_key_.begin()->second; }

private:
    mutable std::mutex mutex_;
    std::map<int, std::string> by_key_;
};

void parallel_over(int lo, int hi, int jobs, Failures& failures,
                   const std::function<void(int)>& fn) {
    if (hi < lo) return;
    auto guarded = [&](int n) {
        try {
            fn(n);
        } catch (const std::exception& e) {
            failures.add(n, "exception at n=" + std::to_string(n) + ": " + e.what());
        }
    };
    if (jobs <= 1) {
        for (int n = lo; n <= hi; ++n) guarded(n);
        return;
    }
    std::atomic<int> next{lo};
    const int workers = std::max(1, std::min(jobs, hi - lo + 1));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (int n; (n = next.fetch_add(1)) <= hi;) guarded(n);
        });
    for (auto& th : pool) th.join();
}

SuiteResult finish(const std::string& name, const Failures& failures, const std::string& ok_detail) {
    if (failures.empty()) return {name, true, ok_detail};
    return {name, false, failures.first()};
}

// Per-partition coprimality masks over the primes <= n, degree via the
// hook-valuation route. Linear labels (n) and (1^n) are excluded.
struct NonLinearScan {
    std::vector<int> primes;
    std::vector<Partition> labels;
    std::vector<uint32_t> coprime;  // bit i set: degree coprime to primes[i]
    std::vector<char> self_conjugate;
};

NonLinearScan scan_nonlinear(int n) {
    NonLinearScan scan;
    scan.primes = primes_up_to(n);
    const Partition row(std::vector<int>{n});
    const Partition column(std::vector<int>(static_cast<size_t>(n), 1));
    for (auto& lambda : enumerate_partitions(n)) {
        if (lambda == row || lambda == column) continue;
        uint32_t mask = 0;
        for (size_t i = 0; i < scan.primes.size(); ++i)
            if (nu_p_from_hooks(lambda, scan.primes[i]) == 0) mask |= 1u << i;
        scan.coprime.push_back(mask);
        scan.self_conjugate.push_back(lambda == lambda.conjugate() ? 1 : 0);
        scan.labels.push_back(std::move(lambda));
    }
    return scan;
}

std::string pair_text(int p, int q) {
    return "{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

// ---------------------------------------------------------------------------

SuiteResult suite_valuation(int max_n, int jobs) {
    const int hi = effective_max(max_n, 30);
    Failures failures;
    parallel_over(1, hi, jobs, failures, [&](int n) {
        const auto primes = primes_up_to(n);
        for (const auto& lambda : enumerate_partitions(n)) {
            const BigInt degree = degree_hook_formula(lambda);
            for (int p : primes) {
                const int direct = nu(degree, p);
                const int tower = nu_p_from_tower(lambda, p);
                const int hooks = nu_p_from_hooks(lambda, p);
                const bool digits = is_p_prime_degree(lambda, p);
                const bool recursion = is_p_prime_degree_top_hooks(lambda, p);
                if (tower != direct || hooks != direct || digits != (direct == 0) ||
                    recursion != (direct == 0)) {
                    std::ostringstream os;
                    os << "n=" << n << " p=" << p << " lambda=" << lambda.to_string()
                       << " nu(degree)=" << direct << " tower=" << tower << " hooks=" << hooks
                       << " digits=" << digits << " recursion=" << recursion;
                    failures.add(n, os.str());
                    return;
                }
            }
        }
    });
    return finish("valuation", failures,
                  "tower/hook/recursive valuations agree with exact degrees for n <= " +
                      std::to_string(hi));
}

SuiteResult suite_sym_classify(int max_n, int jobs) {
    const int hi = effective_max(max_n, 40);
    Failures failures;
    parallel_over(2, hi, jobs, failures, [&](int n) {
        const auto scan = scan_nonlinear(n);
        for (size_t i = 0; i < scan.primes.size(); ++i)
            for (size_t j = i + 1; j < scan.primes.size(); ++j) {
                const uint32_t both = (1u << i) | (1u << j);
                bool brute_only_linear = true;
                for (uint32_t mask : scan.coprime)
                    if ((mask & both) == both) {
                        brute_only_linear = false;
                        break;
                    }
                const PrimePair pi(scan.primes[i], scan.primes[j]);
                const bool closed = sym_only_linear_closed(n, pi);
                const bool pub = sym_only_linear(n, pi);
                if (closed != brute_only_linear || pub != brute_only_linear) {
                    std::ostringstream os;
                    os << "n=" << n << " pair=" << pair_text(pi.p, pi.q) << " closed=" << closed
                       << " public=" << pub << " brute=" << brute_only_linear;
                    failures.add(n, os.str());
                    return;
                }
            }
    });
    return finish("sym-classify", failures,
                  "closed form matches exhaustive classification for 2 <= n <= " +
                      std::to_string(hi));
}

SuiteResult suite_a7(int, int) {
    Failures failures;
    const auto records = alt_degrees(7);
    int principal = 0, triple_coprime = 0;
    for (const auto& r : records) {
        if (r.degree == 1) ++principal;
        if (r.degree % 2 != 0 && r.degree % 3 != 0 && r.degree % 5 != 0) ++triple_coprime;
    }
    if (principal != 1 || triple_coprime != 1)
        failures.add(0, "expected exactly the principal character coprime to {2,3,5}, found " +
                            std::to_string(triple_coprime));
    const int pairs[3][2] = {{2, 3}, {2, 5}, {3, 5}};
    for (const auto& pr : pairs) {
        bool found = false;
        for (const auto& r : records)
            if (r.degree > 1 && r.degree % pr[0] != 0 && r.degree % pr[1] != 0) {
                found = true;
                break;
            }
        if (!found)
            failures.add(1, "no non-principal character coprime to " + pair_text(pr[0], pr[1]));
    }
    return finish("a7", failures,
                  "triple {2,3,5} leaves only the principal character; every sub-pair has a witness");
}

// Exceptional n <= 40 for the symmetric graph, with the unique missing edge.
// Derived from the closed form: 2^k = p^m + 1 gives 4, 8, 32;
// 2^k + 1 = p^m gives 3, 5, 9, 17.
const std::map<int, std::pair<int, int>>& sym_exceptional_edges() {
    static const std::map<int, std::pair<int, int>> table = {
        {3, {2, 3}}, {4, {2, 3}}, {5, {2, 5}}, {8, {2, 7}},
        {9, {2, 3}}, {17, {2, 17}}, {32, {2, 31}},
    };
    return table;
}

SuiteResult suite_sym_graph(int max_n, int jobs) {
    const int hi = effective_max(max_n, 40);
    Failures failures;
    parallel_over(2, hi, jobs, failures, [&](int n) {
        const PrimeGraph graph = gamma_prime_sym(n);
        // Independent edge set from the exhaustive scan.
        const auto scan = scan_nonlinear(n);
        std::vector<std::pair<int, int>> brute_edges;
        for (size_t i = 0; i < scan.primes.size(); ++i)
            for (size_t j = i + 1; j < scan.primes.size(); ++j) {
                const uint32_t both = (1u << i) | (1u << j);
                for (uint32_t mask : scan.coprime)
                    if ((mask & both) == both) {
                        brute_edges.emplace_back(scan.primes[i], scan.primes[j]);
                        break;
                    }
            }
        if (graph.edges != brute_edges) {
            failures.add(n, "n=" + std::to_string(n) + ": graph differs from exhaustive edge set");
            return;
        }
        const auto missing = graph.missing_edges();
        if (missing.size() > 1) {
            failures.add(n, "n=" + std::to_string(n) + ": more than one missing edge");
            return;
        }
        if (missing.size() == 1 &&
            (missing[0].first != 2 ||
             !sym_only_linear_closed(n, PrimePair(missing[0].first, missing[0].second)))) {
            failures.add(n, "n=" + std::to_string(n) + ": missing edge " +
                                pair_text(missing[0].first, missing[0].second) +
                                " is not of the exceptional form");
            return;
        }
        if (n <= 40) {
            const auto& exceptional = sym_exceptional_edges();
            const auto it = exceptional.find(n);
            if (it == exceptional.end()) {
                if (!missing.empty())
                    failures.add(n, "n=" + std::to_string(n) + ": expected complete graph, missing " +
                                        pair_text(missing[0].first, missing[0].second));
            } else if (missing.size() != 1 || missing[0] != it->second) {
                failures.add(n, "n=" + std::to_string(n) + ": expected exactly one missing edge " +
                                    pair_text(it->second.first, it->second.second));
            }
        }
    });
    return finish("sym-graph", failures,
                  "graphs match exhaustive scans; missing edges exactly at the exceptional n");
}

SuiteResult suite_alt_graph(int max_n, int jobs) {
    const int hi = effective_max(max_n, 40);
    Failures failures;
    parallel_over(5, hi, jobs, failures, [&](int n) {
        if (!gamma_prime_alt(n).complete()) {
            failures.add(n, "n=" + std::to_string(n) + ": alternating graph is not complete");
            return;
        }
        const auto records = alt_degrees(n);
        const auto primes = primes_up_to(n);
        for (size_t i = 0; i < primes.size(); ++i)
            for (size_t j = i + 1; j < primes.size(); ++j) {
                const PrimePair pi(primes[i], primes[j]);
                const AltWitness w = alt_witness(n, pi);
                const bool member =
                    std::any_of(records.begin(), records.end(), [&](const AltRecord& r) {
                        return r.label == w.label && r.degree == w.degree && r.degree > 1 &&
                               r.degree % pi.p != 0 && r.degree % pi.q != 0;
                    });
                if (!member) {
                    failures.add(n, "n=" + std::to_string(n) + " pair=" + pair_text(pi.p, pi.q) +
                                        ": witness " + w.label.to_string() +
                                        " is not in the exhaustive witness set");
                    return;
                }
            }
        if (n == 9) {
            const AltWitness w = alt_witness(9, PrimePair(2, 3));
            if (w.label.to_string() != "5,1^4#0" || w.degree != 35)
                failures.add(n, "n=9 pair={2,3}: expected split witness 5,1^4 of degree 35, got " +
                                    w.label.to_string() + " of degree " + to_decimal(w.degree));
        }
    });
    return finish("alt-graph", failures,
                  "alternating graphs complete for 5 <= n <= " + std::to_string(hi) +
                      "; constructed witnesses verified against exhaustive sets");
}

SuiteResult suite_alt_extend(int max_n, int jobs) {
    const int hi = effective_max(max_n, 40);
    Failures failures;
    parallel_over(5, hi, jobs, failures, [&](int n) {
        const auto scan = scan_nonlinear(n);
        for (size_t i = 0; i < scan.primes.size(); ++i)
            for (size_t j = i + 1; j < scan.primes.size(); ++j) {
                const uint32_t both = (1u << i) | (1u << j);
                bool brute = false;
                for (size_t t = 0; t < scan.coprime.size(); ++t)
                    if (!scan.self_conjugate[t] && (scan.coprime[t] & both) == both) {
                        brute = true;
                        break;
                    }
                const PrimePair pi(scan.primes[i], scan.primes[j]);
                const bool closed = alt_extendible_closed(n, pi);
                const bool pub = alt_extendible_exists(n, pi);
                if (closed != brute || pub != brute) {
                    std::ostringstream os;
                    os << "n=" << n << " pair=" << pair_text(pi.p, pi.q) << " closed=" << closed
                       << " brute=" << brute;
                    failures.add(n, os.str());
                    return;
                }
            }
    });
    return finish("alt-extend", failures,
                  "extendibility criterion matches exhaustive scans for 5 <= n <= " +
                      std::to_string(hi));
}

SuiteResult suite_prime_power_hooks(int max_n, int) {
    Failures failures;
    const int powers[] = {4, 8, 16, 32, 9, 27, 25};
    const int cap = effective_max(max_n, 32);
    for (int s : powers) {
        if (s > cap) continue;
        int p = 2;
        while (s % p != 0) ++p;
        std::vector<Partition> coprime_labels;
        for (const auto& lambda : enumerate_partitions(s))
            if (is_p_prime_degree(lambda, p)) coprime_labels.push_back(lambda);
        auto hooks = hook_partitions(s);
        std::sort(coprime_labels.begin(), coprime_labels.end());
        std::sort(hooks.begin(), hooks.end());
        if (coprime_labels != hooks) {
            failures.add(s, "n=" + std::to_string(s) + " p=" + std::to_string(p) +
                                ": coprime-degree labels differ from the hook partitions");
        }
    }
    return finish("prime-power-hooks", failures,
                  "at prime powers the p-coprime labels are exactly the hook partitions");
}

SuiteResult suite_gl(int, int jobs) {
    Failures failures;
    std::mutex notes_mutex;
    std::vector<std::string> disagreements;

    struct Field {
        long long q;
        int r;
        int a;
    };
    const Field fields[] = {{2, 2, 1}, {3, 3, 1}, {4, 2, 2}, {5, 5, 1}, {7, 7, 1}, {8, 2, 3}, {9, 3, 2}};
    const std::set<long long> identity_fields = {2, 3, 4, 5};

    parallel_over(0, static_cast<int>(std::size(fields)) - 1, jobs, failures, [&](int fi) {
        const Field field = fields[static_cast<size_t>(fi)];
        for (int n = 1; n <= 4; ++n) {
            const DegreeTable table = gl_character_degrees(n, BigInt(field.q), field.r);

            if (table.sum_degree_squares() != table.group_order) {
                failures.add(fi * 10 + n, "GL_" + std::to_string(n) + "(" + std::to_string(field.q) +
                                              "): sum of degree squares differs from the group order");
                return;
            }
            if (identity_fields.count(field.q)) {
                // class numbers for small ranks
                const BigInt q = field.q;
                BigInt expected_classes = -1;
                if (n == 1) expected_classes = q - 1;
                if (n == 2) expected_classes = q * q - 1;
                if (n == 3) expected_classes = q * q * q - q;
                if (expected_classes >= 0 && table.character_count() != expected_classes) {
                    failures.add(fi * 10 + n, "GL_" + std::to_string(n) + "(" +
                                                  std::to_string(field.q) +
                                                  "): character count differs from the class number");
                    return;
                }
                const BigInt expected_linear = (n == 2 && field.q == 2) ? 2 : BigInt(field.q - 1);
                if (table.count_of(1) != expected_linear) {
                    failures.add(fi * 10 + n,
                                 "GL_" + std::to_string(n) + "(" + std::to_string(field.q) +
                                     "): linear character count " + to_decimal(table.count_of(1)) +
                                     " != " + to_decimal(expected_linear));
                    return;
                }
                // exactly one unipotent label of full q-power degree
                const BigInt steinberg =
                    big_pow(field.q, static_cast<unsigned>(n) * static_cast<unsigned>(n - 1) / 2);
                int full_power_labels = 0;
                for (const auto& lambda : enumerate_partitions(n))
                    if (unipotent_degree(lambda, field.q) == steinberg) ++full_power_labels;
                if (full_power_labels != 1) {
                    failures.add(fi * 10 + n, "GL_" + std::to_string(n) + "(" +
                                                  std::to_string(field.q) +
                                                  "): expected a unique label of full q-power degree");
                    return;
                }
            }

            const GLParams params{n, field.r, field.a, +1};
            const auto divisors = gl_prime_divisors(params);
            for (size_t i = 0; i < divisors.size(); ++i)
                for (size_t j = i + 1; j < divisors.size(); ++j) {
                    const PrimePair pi(divisors[i], divisors[j]);
                    const bool closed = gl_only_linear(params, pi);
                    const bool oracle = gl_only_linear_from_table(table, pi);
                    if (closed != oracle) {
                        std::lock_guard<std::mutex> lock(notes_mutex);
                        disagreements.push_back("GL_" + std::to_string(n) + "(" +
                                                std::to_string(field.q) + ") pair " +
                                                pair_text(pi.p, pi.q) + ": closed=" +
                                                (closed ? "only-linear" : "witness") + " table=" +
                                                (oracle ? "only-linear" : "witness"));
                    }
                }
        }
    });

    // fixtures
    {
        const DegreeTable t22 = gl_character_degrees(2, 2);
        const DegreeTable t23 = gl_character_degrees(2, 3);
        const DegreeTable t32 = gl_character_degrees(3, 2);
        auto expect = [&](const DegreeTable& t, std::vector<std::pair<int, int>> ref,
                          const std::string& name) {
            std::vector<std::pair<BigInt, BigInt>> want;
            for (auto [d, c] : ref) want.emplace_back(d, c);
            if (t.entries != want) failures.add(100, name + ": degree table differs from the fixture");
        };
        expect(t22, {{1, 2}, {2, 1}}, "GL_2(2)");
        expect(t23, {{1, 2}, {2, 3}, {3, 2}, {4, 1}}, "GL_2(3)");
        expect(t32, {{1, 1}, {3, 2}, {6, 1}, {7, 1}, {8, 1}}, "GL_3(2)");
    }

    std::sort(disagreements.begin(), disagreements.end());
    // Documented degenerate cases: GL_2(2) (its degree-2 polynomial character
    // is linear, so Lin is larger than the generic q-1) and the abelian
    // GL_1(7) (every character is linear whatever the pair).
    const std::vector<std::string> expected_disagreements = {
        "GL_1(7) pair {2,3}: closed=witness table=only-linear",
        "GL_2(2) pair {2,3}: closed=witness table=only-linear"};
    std::string note = "degenerate disagreements (table authoritative): ";
    if (disagreements.empty())
        note += "none";
    else {
        for (size_t i = 0; i < disagreements.size(); ++i) {
            if (i) note += "; ";
            note += disagreements[i];
        }
    }
    if (disagreements != expected_disagreements)
        failures.add(200, "unexpected closed-form/table disagreement set — " + note);

    return finish("gl", failures,
                  "order identity, fixtures and predicate agreement hold; " + note);
}

SuiteResult suite_partition_identities(int max_n, int jobs) {
    const int hi = effective_max(max_n, 25);
    Failures failures;
    parallel_over(1, hi, jobs, failures, [&](int n) {
        const auto primes = primes_up_to(n);
        for (const auto& lambda : enumerate_partitions(n)) {
            std::vector<std::vector<Cell>> hooks_by_e(static_cast<size_t>(n) + 1);
            for (int e = 2; e <= n; ++e) hooks_by_e[static_cast<size_t>(e)] = e_hooks(lambda, e);
            for (int e = 2; e <= n; ++e) {
                const Partition core = e_core(lambda, e);
                const int weight = e_weight(lambda, e);
                const auto& hooks = hooks_by_e[static_cast<size_t>(e)];
                int quotient_total = 0;
                for (const auto& component : e_quotient(lambda, e)) quotient_total += component.size();
                if (n != e * weight + core.size() ||
                    weight != static_cast<int>(hooks.size()) || quotient_total != weight) {
                    failures.add(n, "n=" + std::to_string(n) + " e=" + std::to_string(e) +
                                        " lambda=" + lambda.to_string() +
                                        ": size/weight/core/quotient identity fails");
                    return;
                }
            }
            // hook intersection counts: a hook of length e*f meets exactly f e-hooks
            for (int row = 1; row <= lambda.length(); ++row)
                for (int col = 1; col <= lambda.part(row); ++col) {
                    const Cell cell{row, col};
                    const int h = hook_length(lambda, cell);
                    const auto cells = hook_cells(lambda, cell);
                    for (int e = 2; e <= h; ++e) {
                        if (h % e != 0) continue;
                        const auto& divisible = hooks_by_e[static_cast<size_t>(e)];
                        int inside = 0;
                        for (const Cell& c : divisible)
                            if (std::find(cells.begin(), cells.end(), c) != cells.end()) ++inside;
                        if (inside != h / e) {
                            failures.add(n, "n=" + std::to_string(n) + " lambda=" +
                                                lambda.to_string() + " cell=(" +
                                                std::to_string(row) + "," + std::to_string(col) +
                                                ") e=" + std::to_string(e) +
                                                ": hook intersection count is wrong");
                            return;
                        }
                    }
                }
            // tower layer sizes against direct hook counts
            for (int p : primes) {
                const auto sizes = core_tower(lambda, p).layer_sizes();
                const auto q_tower = quotient_tower(lambda, p);
                long long reconstructed = 0, pk = 1;
                for (size_t j = 0; j < sizes.size(); ++j, pk *= p)
                    reconstructed += sizes[j] * pk;
                if (reconstructed != n) {
                    failures.add(n, "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                                        " lambda=" + lambda.to_string() +
                                        ": weighted layer sizes do not sum to n");
                    return;
                }
                pk = p;
                for (int k = 1; pk <= n; ++k, pk *= p) {
                    long long tail = 0, pw = 1;
                    for (size_t j = static_cast<size_t>(k); j < sizes.size(); ++j, pw *= p)
                        tail += sizes[j] * pw;
                    const auto layer_hooks = e_hooks(lambda, static_cast<int>(pk));
                    int quotient_layer = 0;
                    if (static_cast<size_t>(k) < q_tower.layers.size())
                        for (const auto& entry : q_tower.layers[static_cast<size_t>(k)])
                            quotient_layer += entry.size();
                    if (tail != static_cast<long long>(layer_hooks.size()) ||
                        quotient_layer != static_cast<int>(layer_hooks.size())) {
                        failures.add(n, "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                                            " k=" + std::to_string(k) + " lambda=" +
                                            lambda.to_string() + ": layer identity fails");
                        return;
                    }
                }
            }
        }
    });
    return finish("partition-identities", failures,
                  "core/weight/quotient, hook-intersection and tower identities hold for n <= " +
                      std::to_string(hi));
}

SuiteResult suite_core_order(int, int) {
    Failures failures;
    std::mt19937 rng(190237);
    std::vector<std::vector<Partition>> pool(26);
    for (int n = 1; n <= 25; ++n) pool[static_cast<size_t>(n)] = enumerate_partitions(n);

    auto random_removal = [&](Partition p, int e) {
        while (true) {
            const auto cells = e_hooks(p, e);
            if (cells.empty()) return p;
            const size_t pick = std::uniform_int_distribution<size_t>(0, cells.size() - 1)(rng);
            p = remove_hook(p, cells[pick]);
        }
    };

    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 25)(rng);
        const auto& candidates = pool[static_cast<size_t>(n)];
        const Partition lambda =
            candidates[std::uniform_int_distribution<size_t>(0, candidates.size() - 1)(rng)];
        const int e = std::uniform_int_distribution<int>(2, n + 2)(rng);
        const Partition a = random_removal(lambda, e);
        const Partition b = random_removal(lambda, e);
        const Partition core = e_core(lambda, e);
        if (a != core || b != core) {
            failures.add(trial, "lambda=" + lambda.to_string() + " e=" + std::to_string(e) +
                                    ": removal order changed the core");
            break;
        }
    }
    return finish("core-order", failures, "200 random removal orders all reach the abacus core");
}

SuiteResult suite_tower_injective(int max_n, int jobs) {
    const int hi = effective_max(max_n, 18);
    Failures failures;
    parallel_over(1, hi, jobs, failures, [&](int n) {
        for (int p : {2, 3, 5}) {
            std::map<std::string, std::string> seen;
            for (const auto& lambda : enumerate_partitions(n)) {
                std::string key;
                for (const auto& layer : core_tower(lambda, p).layers) {
                    for (const auto& entry : layer) {
                        key += entry.to_string();
                        key += '|';
                    }
                    key += '/';
                }
                auto [it, inserted] = seen.emplace(std::move(key), lambda.to_string());
                if (!inserted) {
                    failures.add(n, "n=" + std::to_string(n) + " p=" + std::to_string(p) + ": " +
                                        it->second + " and " + lambda.to_string() +
                                        " share a core tower");
                    return;
                }
            }
        }
    });
    return finish("tower-injective", failures,
                  "core towers separate all partitions for n <= " + std::to_string(hi) +
                      ", p in {2,3,5}");
}

SuiteResult suite_orthogonality(int max_n, int jobs) {
    const int hi = effective_max(max_n, 30);
    Failures failures;
    parallel_over(1, hi, jobs, failures, [&](int n) {
        BigInt sym_sum = 0;
        for (const auto& r : sym_degrees(n)) sym_sum += r.degree * r.degree;
        if (sym_sum != factorial(n)) {
            failures.add(n, "n=" + std::to_string(n) + ": symmetric degree squares do not sum to n!");
            return;
        }
        if (n >= 3) {
            BigInt alt_sum = 0;
            for (const auto& r : alt_degrees(n)) alt_sum += r.degree * r.degree;
            if (alt_sum * 2 != factorial(n))
                failures.add(n, "n=" + std::to_string(n) +
                                    ": alternating degree squares do not sum to n!/2");
        }
    });
    return finish("orthogonality", failures,
                  "degree-square sums match the group orders for n <= " + std::to_string(hi));
}

SuiteResult suite_two_hook_valuation(int max_n, int jobs) {
    const int hi = effective_max(max_n, 33);
    Failures failures;
    std::vector<int> targets;
    for (long long pw = 2; pw <= hi; pw *= 2) {
        targets.push_back(static_cast<int>(pw));
        if (pw + 1 <= hi) targets.push_back(static_cast<int>(pw) + 1);
    }
    parallel_over(0, static_cast<int>(targets.size()) - 1, jobs, failures, [&](int idx) {
        const int n = targets[static_cast<size_t>(idx)];
        long long pw = 2;
        while (pw * 2 <= n) pw *= 2;  // pw = 2^k with n = 2^k or 2^k + 1
        const int half = static_cast<int>(pw / 2);
        for (const auto& lambda : enumerate_partitions(n)) {
            if (!e_hooks(lambda, static_cast<int>(pw)).empty()) continue;
            const int half_count =
                half == 1 ? n : static_cast<int>(e_hooks(lambda, half).size());
            if (half_count != 2) continue;
            if (nu_p_from_tower(lambda, 2) != 1) {
                failures.add(n, "n=" + std::to_string(n) + " lambda=" + lambda.to_string() +
                                    ": expected 2-adic valuation 1");
                return;
            }
        }
    });
    return finish("two-hook-valuation", failures,
                  "two top-half hooks and no top hook force 2-adic valuation 1 (n <= " +
                      std::to_string(hi) + ")");
}

SuiteResult suite_split_even(int max_n, int jobs) {
    const int hi = effective_max(max_n, 30);
    Failures failures;
    parallel_over(3, hi, jobs, failures, [&](int n) {
        for (const auto& lambda : enumerate_partitions(n)) {
            if (lambda != lambda.conjugate()) continue;
            if (nu_p_from_hooks(lambda, 2) < 1) {
                failures.add(n, "n=" + std::to_string(n) + " lambda=" + lambda.to_string() +
                                    ": self-conjugate label with odd degree");
                return;
            }
        }
    });
    return finish("split-even", failures,
                  "every self-conjugate label has even degree for n <= " + std::to_string(hi));
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"valuation",      "sym-classify", "a7",
            "sym-graph",      "alt-graph",    "alt-extend",
            "prime-power-hooks", "gl",        "partition-identities",
            "core-order",     "tower-injective", "orthogonality",
            "two-hook-valuation", "split-even"};
}

namespace {

SuiteResult dispatch_suite(const std::string& name, int max_n, int jobs);

}  // namespace

SuiteResult run_suite(const std::string& name, int max_n, int jobs) {
    try {
        return dispatch_suite(name, max_n, jobs);
    } catch (const std::invalid_argument&) {
        throw;  // unknown suite name is a usage error, not a failed check
    } catch (const std::exception& e) {
        return {name, false, std::string("exception: ") + e.what()};
    }
}

namespace {

SuiteResult dispatch_suite(const std::string& name, int max_n, int jobs) {
    if (name == "valuation") return suite_valuation(max_n, jobs);
    if (name == "sym-classify") return suite_sym_classify(max_n, jobs);
    if (name == "a7") return suite_a7(max_n, jobs);
    if (name == "sym-graph") return suite_sym_graph(max_n, jobs);
    if (name == "alt-graph") return suite_alt_graph(max_n, jobs);
    if (name == "alt-extend") return suite_alt_extend(max_n, jobs);
    if (name == "prime-power-hooks") return suite_prime_power_hooks(max_n, jobs);
    if (name == "gl") return suite_gl(max_n, jobs);
    if (name == "partition-identities") return suite_partition_identities(max_n, jobs);
    if (name == "core-order") return suite_core_order(max_n, jobs);
    if (name == "tower-injective") return suite_tower_injective(max_n, jobs);
    if (name == "orthogonality") return suite_orthogonality(max_n, jobs);
    if (name == "two-hook-valuation") return suite_two_hook_valuation(max_n, jobs);
    if (name == "split-even") return suite_split_even(max_n, jobs);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

std::vector<SuiteResult> run(const std::string& name, int max_n, int jobs) {
    std::vector<SuiteResult> results;
    if (name == "all") {
        for (const auto& suite : suite_names()) results.push_back(run_suite(suite, max_n, jobs));
    } else {
        results.push_back(run_suite(name, max_n, jobs));
    }
    return results;
}

}  // namespace pichar::verify
