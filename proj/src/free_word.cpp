#include "dendrite/free_word.hpp"

#include <algorithm>
#include <cstdlib>

#include "dendrite/error.hpp"

namespace dendrite {

FreeWord make_word(int rank, std::vector<int> letters) {
    if (rank < 1 || rank > 26)
        throw input_error("rank must be between 1 and 26");
    FreeWord w;
    w.rank = rank;
    for (int l : letters) {
        if (l == 0 || std::abs(l) > rank)
            throw input_error("letter " + std::to_string(l) + " outside rank " +
                              std::to_string(rank));
        if (!w.letters.empty() && w.letters.back() == -l)
            w.letters.pop_back();
        else
            w.letters.push_back(l);
    }
    return w;
}

FreeWord parse_word(const std::string& text, int rank) {
    std::vector<int> letters;
    for (char c : text) {
        if (c == ' ' || c == '1')
            continue;
        if (c >= 'a' && c <= 'z')
            letters.push_back(c - 'a' + 1);
        else if (c >= 'A' && c <= 'Z')
            letters.push_back(-(c - 'A' + 1));
        else
            throw input_error(std::string("cannot read word character '") + c + "'");
    }
    return make_word(rank, std::move(letters));
}

std::string word_text(const FreeWord& w) {
    if (w.trivial())
        return "1";
    std::string s;
    for (int l : w.letters)
        s += static_cast<char>(l > 0 ? 'a' + l - 1 : 'A' - l - 1);
    return s;
}

FreeWord concat(const FreeWord& x, const FreeWord& y) {
    if (x.rank != y.rank)
        throw input_error("concatenating words of different ranks");
    std::vector<int> joined = x.letters;
    joined.insert(joined.end(), y.letters.begin(), y.letters.end());
    return make_word(x.rank, std::move(joined));
}

FreeWord inverse_word(const FreeWord& w) {
    FreeWord r;
    r.rank = w.rank;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(-*it);
    return r;
}

FreeWord power(const FreeWord& w, int k) {
    FreeWord base = k < 0 ? inverse_word(w) : w;
    FreeWord out;
    out.rank = w.rank;
    for (int i = 0; i < std::abs(k); ++i)
        out = concat(out, base);
    return out;
}

bool is_cyclically_reduced(const FreeWord& w) {
    return w.length() < 2 || w.letters.front() != -w.letters.back();
}

FreeWord cyclic_reduction(const FreeWord& w, FreeWord* conjugator) {
    FreeWord r = w;
    std::vector<int> conj;
    while (r.length() >= 2 && r.letters.front() == -r.letters.back()) {
        conj.push_back(r.letters.front());
        r.letters.erase(r.letters.begin());
        r.letters.pop_back();
    }
    if (conjugator) {
        conjugator->rank = w.rank;
        conjugator->letters = std::move(conj);
    }
    return r;
}

FreeWord primitive_root(const FreeWord& w) {
    if (!is_cyclically_reduced(w))
        throw input_error("primitive root wants a cyclically reduced word");
    const int n = w.length();
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        bool fits = true;
        for (int i = d; i < n && fits; ++i)
            fits = (w.letters[i] == w.letters[i % d]);
        if (fits) {
            FreeWord p;
            p.rank = w.rank;
            p.letters.assign(w.letters.begin(), w.letters.begin() + d);
            return p;
        }
    }
    return w; // unreachable: d = n always fits
}

} // namespace dendrite
