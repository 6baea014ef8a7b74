#ifndef SCHURTWIRL_TABLEAUX_HPP
#define SCHURTWIRL_TABLEAUX_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace schurtwirl {

// Young diagram: weakly decreasing positive row lengths summing to t.
struct Partition {
    std::vector<int> rows;

    int box_count() const;
    bool operator==(const Partition&) const = default;
    std::string to_string() const;  // e.g. "[3,1]"
};

// Filling of a partition with 1..t, strictly increasing along rows and columns.
// entries[r][c] is the number in row r, cell c.
struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> entries;

    bool is_standard() const;
    // Row-major concatenation of entries.
    std::vector<int> reading_word() const;
};

// All partitions of t with at most d rows, in lexicographically decreasing
// order of row vectors. This order fixes the block index used everywhere else.
std::vector<Partition> enumerate_partitions(int t, int d);

// GL(d) irrep dimension (Weyl character formula with rows zero-padded to
// length d).  Throws std::invalid_argument if the partition has more than
// d rows.
std::int64_t weyl_dimension(const Partition& p, int d);

// Number of standard tableaux of shape p (hook-length formula).
std::int64_t hook_dimension(const Partition& p);

// All standard tableaux of shape p, normal (row-major 1..t) tableau first,
// then lexicographic by reading word.
std::vector<StandardTableau> standard_tableaux(const Partition& p);

}  // namespace schurtwirl

#endif
