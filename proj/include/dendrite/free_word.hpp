#pragma once

#include <string>
#include <vector>

namespace dendrite {

// Freely reduced word over a_1..a_k; letter +i is a_i, letter -i its inverse.
// Construction reduces, so adjacent inverse pairs never survive.
struct FreeWord {
    int rank = 0;
    std::vector<int> letters;

    bool trivial() const { return letters.empty(); }
    int length() const { return static_cast<int>(letters.size()); }
    auto operator<=>(const FreeWord&) const = default;
};

FreeWord make_word(int rank, std::vector<int> letters);

// "abA" reads a b a^{-1}; '1' and spaces are ignored, so "1" is the identity
FreeWord parse_word(const std::string& text, int rank);
std::string word_text(const FreeWord& w); // inverse of parse_word; identity -> "1"

FreeWord concat(const FreeWord& x, const FreeWord& y);
FreeWord inverse_word(const FreeWord& w);
FreeWord power(const FreeWord& w, int k); // k may be negative

bool is_cyclically_reduced(const FreeWord& w);

// w = c r c^{-1} with r cyclically reduced; r returned, c written when asked.
// r is nonempty whenever w is.
FreeWord cyclic_reduction(const FreeWord& w, FreeWord* conjugator = nullptr);

// shortest p with w = p^j; requires w cyclically reduced
FreeWord primitive_root(const FreeWord& w);

} // namespace dendrite
