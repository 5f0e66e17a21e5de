#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace an {

enum class Parity { even, odd };

/// A permutation of the symbols {1..n}, stored in position order.
/// Construction validates that every symbol appears exactly once.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint8_t> symbols);

    static Permutation identity(int n);
    /// Parses "2314" (n <= 9) or dot-separated "2.3.1.4" (any n).
    static Permutation from_string(const std::string& text);

    int size() const { return static_cast<int>(symbols_.size()); }
    std::uint8_t operator[](int pos) const { return symbols_[pos]; }
    const std::vector<std::uint8_t>& symbols() const { return symbols_; }

    std::string to_string() const;

    bool operator==(const Permutation&) const = default;
    bool operator<(const Permutation& o) const { return symbols_ < o.symbols_; }

private:
    std::vector<std::uint8_t> symbols_;
};

/// Sign of the permutation, by inversion count.
Parity parity(const Permutation& p);

/// Number of even permutations of n symbols: n!/2 for n >= 2, else 1.
std::uint64_t even_permutation_count(int n);

/// Rank of an even permutation among all even permutations of its symbols,
/// ordered lexicographically by symbol sequence. Throws on odd input.
std::uint64_t rank_even(const Permutation& p);

/// Inverse of rank_even. Throws when rank >= even_permutation_count(n).
Permutation unrank_even(int n, std::uint64_t rank);

/// The vertices adjacent to p in the alternating group network:
/// the two rotations of the first three symbols, plus, for every
/// position i in {4..n}, the swap of the first two symbols combined
/// with the exchange of positions 3 and i. Requires p even, n >= 3.
std::vector<Permutation> an_neighbors(const Permutation& p);

}  // namespace an
