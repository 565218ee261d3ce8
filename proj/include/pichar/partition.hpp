#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace pichar {

/// A cell (row, col) of a Young diagram, both coordinates 1-based.
struct Cell {
    int row;
    int col;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// An integer partition: a non-increasing sequence of positive parts.
/// The empty sequence is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Parses the text format used by the CLI and fixtures:
    /// comma-separated parts with exponent shorthand, e.g. "5,1^4";
    /// "[]" denotes the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }      // n = sum of parts
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Part in the given 1-based row; 0 beyond the last row.
    int part(int row) const {
        return (row >= 1 && row <= length()) ? parts_[row - 1] : 0;
    }
    bool contains(Cell c) const {
        return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
    }

    Partition conjugate() const;
    bool is_self_conjugate() const { return *this == conjugate(); }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on part sequences (missing parts compare as 0).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order, (n) first, (1^n) last.
/// The count is the partition number p(n).
std::vector<Partition> enumerate_partitions(int n);

/// Hook length 1 + (arm) + (leg) at the given cell; domain_error outside the diagram.
int hook_length(const Partition& p, Cell c);

/// The cells of the hook at c: the cell itself, its arm, and its leg.
std::vector<Cell> hook_cells(const Partition& p, Cell c);

/// All hook lengths, row-major (row 1 left to right, then row 2, ...).
std::vector<int> hook_multiset(const Partition& p);

/// Cells whose hook length is divisible by e, row-major order.
std::vector<Cell> e_hooks(const Partition& p, int e);

/// Removes the hook at c (beta-number shift); domain_error outside the diagram.
Partition remove_hook(const Partition& p, Cell c);

Partition e_core(const Partition& p, int e);
int e_weight(const Partition& p, int e);

/// The e-quotient (lambda^(0), ..., lambda^(e-1)), computed on an e-runner
/// abacus with a beta-set whose size is a multiple of e. Component i is read
/// off runner i. Sum of component sizes equals the e-weight.
std::vector<Partition> e_quotient(const Partition& p, int e);

/// Layered tower of partitions for base e: layer j holds e^j entries.
/// Layers are stored up to the largest j with e^j <= max(|lambda|, 1);
/// all higher layers are empty by construction.
struct Tower {
    int base = 2;
    std::vector<std::vector<Partition>> layers;

    /// |T_j| = total size of the entries in layer j.
    std::vector<int> layer_sizes() const;
    int total_size() const;
};

/// Core tower: layer j holds the e-cores of the layer-j quotient-tower entries.
Tower core_tower(const Partition& p, int e);
/// Quotient tower: layer 0 is (lambda); layer j+1 concatenates the e-quotients
/// of the layer-j entries.
Tower quotient_tower(const Partition& p, int e);

/// The n hook partitions (n-x, 1^x), 0 <= x <= n-1, in that order.
std::vector<Partition> hook_partitions(int n);

}  // namespace pichar
