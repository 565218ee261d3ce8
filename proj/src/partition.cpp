#include "pichar/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace pichar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be non-increasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    const size_t m = std::max(a.parts_.size(), b.parts_.size());
    for (size_t i = 0; i < m; ++i) {
        const int x = i < a.parts_.size() ? a.parts_[i] : 0;
        const int y = i < b.parts_.size() ? b.parts_[i] : 0;
        if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
}

Partition Partition::parse(std::string_view text) {
    if (text == "[]") return Partition{};
    std::vector<int> parts;
    size_t pos = 0;
    auto read_int = [&](const char* what) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || ptr == text.data() + pos)
            throw std::invalid_argument(std::string("bad partition text: expected ") + what);
        pos = static_cast<size_t>(ptr - text.data());
        return value;
    };
    while (true) {
        const int part = read_int("part");
        int repeat = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            repeat = read_int("exponent");
            if (repeat < 1) throw std::invalid_argument("bad partition text: exponent < 1");
        }
        parts.insert(parts.end(), static_cast<size_t>(repeat), part);
        if (pos == text.size()) break;
        if (text[pos] != ',') throw std::invalid_argument("bad partition text: expected ','");
        ++pos;
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "[]";
    std::string out;
    for (size_t i = 0; i < parts_.size();) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(parts_[i]);
        if (j - i >= 2) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    if (!parts_.empty()) {
        conj.resize(static_cast<size_t>(parts_[0]));
        for (int col = 1; col <= parts_[0]; ++col) {
            int count = 0;
            for (int p : parts_) {
                if (p >= col)
                    ++count;
                else
                    break;
            }
            conj[static_cast<size_t>(col - 1)] = count;
        }
    }
    return Partition(std::move(conj));
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> current;
    // Descending first parts give reverse-lexicographic order directly.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(Partition(current));
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            current.push_back(k);
            self(self, remaining - k, k);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

namespace {

// First-column hook lengths padded to m entries (m >= length), strictly decreasing.
std::vector<int> beta_set(const Partition& p, int m) {
    std::vector<int> beta(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) beta[static_cast<size_t>(i - 1)] = p.part(i) + m - i;
    return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const int m = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 1; i <= m; ++i) {
        const int part = beta[static_cast<size_t>(i - 1)] - (m - i);
        if (part < 0) throw std::logic_error("invalid beta-set");
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

int round_up_multiple(int value, int factor) {
    const int rem = value % factor;
    return rem == 0 ? value : value + (factor - rem);
}

}  // namespace

int hook_length(const Partition& p, Cell c) {
    if (!p.contains(c)) throw std::domain_error("cell outside Young diagram");
    const int arm = p.part(c.row) - c.col;
    const int leg = p.conjugate().part(c.col) - c.row;
    return 1 + arm + leg;
}

std::vector<Cell> hook_cells(const Partition& p, Cell c) {
    if (!p.contains(c)) throw std::domain_error("cell outside Young diagram");
    std::vector<Cell> cells;
    for (int col = c.col; col <= p.part(c.row); ++col) cells.push_back({c.row, col});
    const int col_len = p.conjugate().part(c.col);
    for (int row = c.row + 1; row <= col_len; ++row) cells.push_back({row, c.col});
    return cells;
}

std::vector<int> hook_multiset(const Partition& p) {
    const int l = p.length();
    if (l == 0) return {};
    const auto beta = beta_set(p, l);
    std::vector<char> in_beta(static_cast<size_t>(beta[0] + 1), 0);
    for (int b : beta) in_beta[static_cast<size_t>(b)] = 1;
    std::vector<int> hooks;
    hooks.reserve(static_cast<size_t>(p.size()));
    // ascending y gives the columns left to right (hook lengths decrease)
    for (int b : beta)
        for (int y = 0; y < b; ++y)
            if (!in_beta[static_cast<size_t>(y)]) hooks.push_back(b - y);
    return hooks;
}

std::vector<Cell> e_hooks(const Partition& p, int e) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    const int l = p.length();
    if (l == 0) return {};
    const auto beta = beta_set(p, l);
    std::vector<char> in_beta(static_cast<size_t>(beta[0] + 1), 0);
    for (int b : beta) in_beta[static_cast<size_t>(b)] = 1;
    std::vector<Cell> cells;
    for (int row = 1; row <= l; ++row) {
        const int b = beta[static_cast<size_t>(row - 1)];
        int col = 0;
        for (int y = 0; y < b; ++y) {
            if (in_beta[static_cast<size_t>(y)]) continue;
            ++col;
            if ((b - y) % e == 0) cells.push_back({row, col});
        }
    }
    return cells;
}

Partition remove_hook(const Partition& p, Cell c) {
    const int h = hook_length(p, c);  // validates the cell
    auto beta = beta_set(p, p.length());
    int& moved = beta[static_cast<size_t>(c.row - 1)];
    moved -= h;
    if (std::count(beta.begin(), beta.end(), moved) > 1)
        throw std::logic_error("hook removal produced a clashing beta-number");
    return partition_from_beta(std::move(beta));
}

Partition e_core(const Partition& p, int e) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    if (p.empty()) return p;
    const int m = round_up_multiple(p.length(), e);
    const auto beta = beta_set(p, m);
    // Slide every bead to the bottom of its runner.
    std::vector<int> runner_count(static_cast<size_t>(e), 0);
    for (int b : beta) ++runner_count[static_cast<size_t>(b % e)];
    std::vector<int> core_beta;
    core_beta.reserve(beta.size());
    for (int r = 0; r < e; ++r)
        for (int t = 0; t < runner_count[static_cast<size_t>(r)]; ++t)
            core_beta.push_back(r + t * e);
    return partition_from_beta(std::move(core_beta));
}

int e_weight(const Partition& p, int e) {
    const int core = e_core(p, e).size();
    return (p.size() - core) / e;
}

std::vector<Partition> e_quotient(const Partition& p, int e) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    std::vector<Partition> components(static_cast<size_t>(e));
    if (p.empty()) return components;
    const int m = round_up_multiple(p.length(), e);
    const auto beta = beta_set(p, m);
    std::vector<std::vector<int>> runner(static_cast<size_t>(e));
    for (int b : beta) runner[static_cast<size_t>(b % e)].push_back(b / e);
    for (int r = 0; r < e; ++r)
        components[static_cast<size_t>(r)] = partition_from_beta(std::move(runner[static_cast<size_t>(r)]));
    return components;
}

std::vector<int> Tower::layer_sizes() const {
    std::vector<int> sizes;
    sizes.reserve(layers.size());
    for (const auto& layer : layers) {
        int s = 0;
        for (const auto& entry : layer) s += entry.size();
        sizes.push_back(s);
    }
    return sizes;
}

int Tower::total_size() const {
    int total = 0;
    for (const auto& layer : layers)
        for (const auto& entry : layer) total += entry.size();
    return total;
}

namespace {

Tower build_tower(const Partition& p, int e, bool cores) {
    if (e < 2) throw std::invalid_argument("e must be >= 2");
    Tower tower;
    tower.base = e;
    int max_layer = 0;
    for (long long pw = e; pw <= p.size(); pw *= e) ++max_layer;
    std::vector<Partition> current{p};
    for (int j = 0; j <= max_layer; ++j) {
        if (cores) {
            std::vector<Partition> layer;
            layer.reserve(current.size());
            for (const auto& entry : current) layer.push_back(e_core(entry, e));
            tower.layers.push_back(std::move(layer));
        } else {
            tower.layers.push_back(current);
        }
        if (j == max_layer) break;
        std::vector<Partition> next;
        next.reserve(current.size() * static_cast<size_t>(e));
        for (const auto& entry : current) {
            auto q = e_quotient(entry, e);
            std::move(q.begin(), q.end(), std::back_inserter(next));
        }
        current = std::move(next);
    }
    return tower;
}

}  // namespace

Tower core_tower(const Partition& p, int e) { return build_tower(p, e, true); }
Tower quotient_tower(const Partition& p, int e) { return build_tower(p, e, false); }

std::vector<Partition> hook_partitions(int n) {
    if (n < 1) throw std::invalid_argument("hook_partitions: n must be >= 1");
    std::vector<Partition> out;
    out.reserve(static_cast<size_t>(n));
    for (int x = 0; x <= n - 1; ++x) {
        std::vector<int> parts{n - x};
        parts.insert(parts.end(), static_cast<size_t>(x), 1);
        out.emplace_back(Partition(std::move(parts)));
    }
    return out;
}

}  // namespace pichar
