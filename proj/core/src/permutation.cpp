#include "an/permutation.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace an {

namespace {

// Factorials up to 20! (the largest that fits in 64 bits).
constexpr int kMaxRankDimension = 20;

std::uint64_t factorial(int m) {
    std::uint64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

void validate_symbols(const std::vector<std::uint8_t>& symbols) {
    const int n = static_cast<int>(symbols.size());
    if (n < 1 || n > kMaxRankDimension)
        throw std::invalid_argument("permutation size must be in [1, 20]");
    std::array<bool, kMaxRankDimension + 1> seen{};
    for (std::uint8_t s : symbols) {
        if (s < 1 || s > n)
            throw std::invalid_argument("permutation symbol out of range");
        if (seen[s]) throw std::invalid_argument("duplicate permutation symbol");
        seen[s] = true;
    }
}

}  // namespace

Permutation::Permutation(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
    validate_symbols(symbols_);
}

Permutation Permutation::identity(int n) {
    std::vector<std::uint8_t> s(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i + 1);
    return Permutation(std::move(s));
}

Permutation Permutation::from_string(const std::string& text) {
    std::vector<std::uint8_t> syms;
    if (text.find('.') != std::string::npos) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, '.')) {
            if (tok.empty()) throw std::invalid_argument("empty symbol in permutation string");
            syms.push_back(static_cast<std::uint8_t>(std::stoi(tok)));
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("permutation string must be digits 1-9 or dot-separated");
            syms.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    }
    return Permutation(std::move(syms));
}

std::string Permutation::to_string() const {
    std::string out;
    const bool dotted = size() > 9;
    for (int i = 0; i < size(); ++i) {
        if (dotted && i > 0) out += '.';
        out += std::to_string(static_cast<int>(symbols_[static_cast<std::size_t>(i)]));
    }
    return out;
}

Parity parity(const Permutation& p) {
    int inversions = 0;
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inversions;
    return (inversions % 2 == 0) ? Parity::even : Parity::odd;
}

std::uint64_t even_permutation_count(int n) {
    if (n < 0 || n > kMaxRankDimension)
        throw std::invalid_argument("dimension out of range for even_permutation_count");
    if (n < 2) return 1;
    return factorial(n) / 2;
}

std::uint64_t rank_even(const Permutation& p) {
    if (parity(p) != Parity::even)
        throw std::invalid_argument("rank_even requires an even permutation");
    const int n = p.size();
    std::array<bool, kMaxRankDimension + 1> used{};
    std::uint64_t rank = 0;
    int par = 0;  // parity of inversions contributed so far
    for (int i = 0; i < n; ++i) {
        const int s = p[i];
        // c = number of unused symbols smaller than s
        int c = 0;
        for (int t = 1; t < s; ++t)
            if (!used[t]) ++c;
        const int m = n - i - 1;  // symbols remaining after this position
        if (m >= 2) {
            // any prefix admits exactly m!/2 even completions
            rank += static_cast<std::uint64_t>(c) * (factorial(m) / 2);
        } else {
            // completion is forced (ascending remainder adds no inversions):
            // count smaller candidates t whose placement keeps the total even
            int idx = 0;
            for (int t = 1; t < s; ++t) {
                if (used[t]) continue;
                if ((par + idx) % 2 == 0) ++rank;
                ++idx;
            }
        }
        par = (par + c) % 2;
        used[s] = true;
    }
    return rank;
}

Permutation unrank_even(int n, std::uint64_t rank) {
    if (n < 1 || n > kMaxRankDimension)
        throw std::invalid_argument("unrank_even dimension out of range");
    if (rank >= even_permutation_count(n))
        throw std::invalid_argument("unrank_even rank out of range");
    std::array<bool, kMaxRankDimension + 1> used{};
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(n));
    int par = 0;
    for (int i = 0; i < n; ++i) {
        const int m = n - i - 1;
        int idx = 0;  // index of candidate among unused symbols
        bool placed = false;
        for (int t = 1; t <= n && !placed; ++t) {
            if (used[t]) continue;
            std::uint64_t cnt;
            if (m >= 2)
                cnt = factorial(m) / 2;
            else
                cnt = ((par + idx) % 2 == 0) ? 1 : 0;
            if (rank < cnt) {
                out.push_back(static_cast<std::uint8_t>(t));
                used[t] = true;
                par = (par + idx) % 2;
                placed = true;
            } else {
                rank -= cnt;
            }
            ++idx;
        }
        if (!placed) throw std::logic_error("unrank_even ran out of candidates");
    }
    return Permutation(std::move(out));
}

std::vector<Permutation> an_neighbors(const Permutation& p) {
    const int n = p.size();
    if (n < 3) throw std::invalid_argument("an_neighbors requires dimension >= 3");
    if (parity(p) != Parity::even)
        throw std::invalid_argument("an_neighbors requires an even permutation");

    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(n - 1));

    std::vector<std::uint8_t> q = p.symbols();
    // rotate first three symbols one way
    q[0] = p[2]; q[1] = p[0]; q[2] = p[1];
    out.emplace_back(q);
    // and the other way
    q[0] = p[1]; q[1] = p[2]; q[2] = p[0];
    out.emplace_back(q);
    // swap the first two symbols and exchange position 3 with position i
    for (int i = 3; i < n; ++i) {
        q = p.symbols();
        q[0] = p[1]; q[1] = p[0]; q[2] = p[i];
        q[static_cast<std::size_t>(i)] = p[2];
        out.emplace_back(q);
    }
    return out;
}

}  // namespace an
