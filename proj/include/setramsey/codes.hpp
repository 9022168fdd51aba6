#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "setramsey/bigint.hpp"
#include "setramsey/errors.hpp"

namespace setramsey {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 1u << 24;

using Word = std::vector<std::uint16_t>;

/// A q-ary block code: `words` of length `m` over {0..q-1}, pairwise
/// Hamming distance at least `claimed_distance`.
struct Code {
    int alphabet_size = 2;   // q
    int length = 1;          // m
    int claimed_distance = 1; // d
    std::vector<Word> words;

    bool operator==(const Code&) const = default;
};

/// Number of differing coordinates; words must have equal length.
inline int hamming_distance(const Word& u, const Word& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i] ? 1 : 0;
    return d;
}

/// Smallest pairwise distance; returns m+1 for codes with < 2 words.
inline int min_distance(const Code& code) {
    int best = code.length + 1;
    for (std::size_t i = 0; i < code.words.size(); ++i)
        for (std::size_t j = i + 1; j < code.words.size(); ++j)
            best = std::min(best, hamming_distance(code.words[i], code.words[j]));
    return best;
}

struct CodeValidation {
    bool ok = true;
    std::string message;
};

inline CodeValidation validate_code(const Code& code) {
    if (code.alphabet_size < 2) return {false, "alphabet size must be >= 2"};
    if (code.length < 1) return {false, "length must be >= 1"};
    if (code.claimed_distance < 1 || code.claimed_distance > code.length)
        return {false, "need 1 <= d <= m"};
    for (const Word& w : code.words) {
        if (static_cast<int>(w.size()) != code.length) return {false, "word of wrong length"};
        for (std::uint16_t sym : w)
            if (sym >= code.alphabet_size) return {false, "symbol outside alphabet"};
    }
    for (std::size_t i = 0; i < code.words.size(); ++i)
        for (std::size_t j = i + 1; j < code.words.size(); ++j) {
            const int d = hamming_distance(code.words[i], code.words[j]);
            if (d == 0) return {false, "duplicate codewords"};
            if (d < code.claimed_distance)
                return {false, "pair at distance " + std::to_string(d) +
                                   " below claimed distance"};
        }
    return {};
}

/// Volume of a Hamming ball: sum over i <= radius of C(m, i) (q-1)^i.
inline BigInt ball_volume(int q, int m, int radius) {
    if (q < 2 || m < 1 || radius < 0 || radius > m)
        throw std::invalid_argument("ball_volume: need q >= 2, 0 <= radius <= m");
    BigInt total = 0;
    for (int i = 0; i <= radius; ++i)
        total += big_binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(i)) *
                 big_pow(q - 1, static_cast<std::uint64_t>(i));
    return total;
}

/// ceil(q^m / B(d-1)): the size the greedy construction is guaranteed to reach.
inline BigInt gv_lower_bound(int q, int m, int d) {
    if (d < 1 || d > m) throw std::invalid_argument("gv_lower_bound: need 1 <= d <= m");
    return ceil_div(big_pow(q, static_cast<std::uint64_t>(m)), ball_volume(q, m, d - 1));
}

/// q^(m-d+1), an upper bound on the size of any (m, d) code over q symbols.
inline BigInt singleton_bound(int q, int m, int d) {
    if (d < 1 || d > m) throw std::invalid_argument("singleton_bound: need 1 <= d <= m");
    return big_pow(q, static_cast<std::uint64_t>(m - d + 1));
}

namespace detail {

// Words over q <= 16, m <= 16 pack into one uint64 at 4 bits per symbol;
// distance is then a couple of bitwise ops instead of a coordinate loop.
inline std::uint64_t pack_word(const Word& w) {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        x |= static_cast<std::uint64_t>(w[i] & 0xF) << (4 * i);
    return x;
}

inline int packed_distance(std::uint64_t a, std::uint64_t b) {
    std::uint64_t t = a ^ b;
    t |= t >> 1;
    t |= t >> 2;
    t &= 0x1111111111111111ull;
    return std::popcount(t);
}

inline bool distance_at_least(const Word& u, const Word& v, int d) {
    int diff = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        diff += u[i] != v[i] ? 1 : 0;
        if (diff >= d) return true;
    }
    return false;
}

} // namespace detail

/// All q^m words in lexicographic order (leftmost coordinate most significant).
inline std::vector<Word> all_words_lex(int q, int m,
                                       std::uint64_t enumeration_limit = kDefaultEnumerationLimit) {
    unsigned __int128 total = 1;
    for (int i = 0; i < m; ++i) {
        total *= static_cast<unsigned>(q);
        if (total > enumeration_limit)
            throw ResourceLimitError("word enumeration: q^m exceeds the limit of " +
                                     std::to_string(enumeration_limit));
    }
    std::vector<Word> words;
    words.reserve(static_cast<std::size_t>(total));
    Word w(static_cast<std::size_t>(m), 0);
    while (true) {
        words.push_back(w);
        int i = m - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == q - 1) {
            w[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
    }
    return words;
}

/// Greedy scan over an explicit candidate sequence: a word is kept iff it has
/// distance >= d to every word kept so far. The result is maximal within the
/// scanned set.
inline Code greedy_code_from(const std::vector<Word>& candidates, int q, int m, int d) {
    if (d < 1 || d > m) throw std::invalid_argument("greedy code: need 1 <= d <= m");
    Code code;
    code.alphabet_size = q;
    code.length = m;
    code.claimed_distance = d;
    if (q <= 16 && m <= 16) {
        std::vector<std::uint64_t> kept;
        for (const Word& w : candidates) {
            const std::uint64_t packed = detail::pack_word(w);
            bool ok = true;
            for (std::uint64_t other : kept)
                if (detail::packed_distance(packed, other) < d) {
                    ok = false;
                    break;
                }
            if (ok) {
                kept.push_back(packed);
                code.words.push_back(w);
            }
        }
        return code;
    }
    for (const Word& w : candidates) {
        bool ok = true;
        for (const Word& other : code.words)
            if (!detail::distance_at_least(w, other, d)) {
                ok = false;
                break;
            }
        if (ok) code.words.push_back(w);
    }
    return code;
}

/// The Gilbert-Varshamov greedy construction over [q]^m in lexicographic
/// order. Its size always reaches ceil(q^m / B(d-1)) and the result is
/// maximal: no further word of [q]^m can be added.
inline Code greedy_gv_code(int q, int m, int d,
                           std::uint64_t enumeration_limit = kDefaultEnumerationLimit) {
    const auto words = all_words_lex(q, m, enumeration_limit);
    if (d == 1) {
        // every pair of distinct words qualifies; the greedy scan keeps them all
        Code code;
        code.alphabet_size = q;
        code.length = m;
        code.claimed_distance = 1;
        code.words = words;
        return code;
    }
    return greedy_code_from(words, q, m, d);
}

/// Exact maximum code size via branch and bound over the lex word list.
/// Only sensible for tiny q^m; certifies A_q(m, d) when it completes.
inline Code max_code_exhaustive(int q, int m, int d, std::uint64_t node_budget = 50'000'000,
                                std::uint64_t enumeration_limit = 1u << 16) {
    if (q > 16 || m > 16)
        throw ResourceLimitError("max_code_exhaustive: supports q <= 16, m <= 16");
    const auto words = all_words_lex(q, m, enumeration_limit);
    std::vector<std::uint64_t> packed(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) packed[i] = detail::pack_word(words[i]);

    std::vector<std::size_t> chosen, best;
    std::uint64_t nodes = 0;
    // plain DFS: extend with any later word compatible with all chosen ones
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (chosen.size() > best.size()) best = chosen;
        for (std::size_t i = start; i < packed.size(); ++i) {
            if (chosen.size() + (packed.size() - i) <= best.size()) return;
            if (++nodes > node_budget)
                throw BudgetExceededError("max_code_exhaustive: node budget exhausted");
            bool ok = true;
            for (std::size_t j : chosen)
                if (detail::packed_distance(packed[i], packed[j]) < d) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);

    Code code;
    code.alphabet_size = q;
    code.length = m;
    code.claimed_distance = d;
    for (std::size_t i : best) code.words.push_back(words[i]);
    return code;
}

// ---------------------------------------------------------------------------
// Code file format: a JSON header line {"q":..,"m":..,"d":..}, then one word
// per line as space-separated symbols.
// ---------------------------------------------------------------------------

inline void write_code(std::ostream& out, const Code& code) {
    out << "{\"q\":" << code.alphabet_size << ",\"m\":" << code.length
        << ",\"d\":" << code.claimed_distance << "}\n";
    for (const Word& w : code.words) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i != 0) out << ' ';
            out << w[i];
        }
        out << '\n';
    }
}

inline std::string code_to_string(const Code& code) {
    std::ostringstream os;
    write_code(os, code);
    return os.str();
}

inline Code read_code(std::istream& in) {
    using nlohmann::json;
    std::string line;
    if (!std::getline(in, line)) throw FileFormatError("code file: missing header line");
    json header;
    try {
        header = json::parse(line);
    } catch (const json::exception& e) {
        throw FileFormatError(std::string("code file: bad header: ") + e.what());
    }
    for (const char* key : {"q", "m", "d"})
        if (!header.contains(key))
            throw FileFormatError(std::string("code file: header missing \"") + key + "\"");
    Code code;
    code.alphabet_size = header["q"].get<int>();
    code.length = header["m"].get<int>();
    code.claimed_distance = header["d"].get<int>();
    std::uint64_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        Word w;
        long long sym;
        while (ls >> sym) {
            if (sym < 0 || sym >= code.alphabet_size)
                throw FileFormatError("code file line " + std::to_string(line_no) +
                                      ": symbol outside alphabet");
            w.push_back(static_cast<std::uint16_t>(sym));
        }
        if (!ls.eof())
            throw FileFormatError("code file line " + std::to_string(line_no) + ": bad symbol");
        code.words.push_back(std::move(w));
    }
    const CodeValidation v = validate_code(code);
    if (!v.ok) throw FileFormatError("code file: " + v.message);
    return code;
}

inline Code code_from_string(const std::string& text) {
    std::istringstream is(text);
    return read_code(is);
}

} // namespace setramsey
