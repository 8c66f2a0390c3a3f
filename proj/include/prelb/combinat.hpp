#pragma once

#include <vector>

namespace prelb {

/// A (p,q)-shuffle: permutation of {1..p+q} increasing on positions 1..p and
/// on positions p+1..p+q. Values are 1-based.
struct Shuffle {
    int p = 0, q = 0;
    std::vector<int> perm;  // perm[t-1] = sigma(t)
    int sign = 1;
};

/// All (p,q)-shuffles in lexicographic order of the permutation word;
/// exactly binomial(p+q, p) of them.
std::vector<Shuffle> shuffles(int p, int q);

/// A color argument: a single color [r] of C_n, or the formal sum [1]+...+[n].
struct ColorIndex {
    bool all = false;
    int value = 0;  // meaningful only when !all

    static ColorIndex single(int r) { return {false, r}; }
    static ColorIndex sum() { return {true, 0}; }

    friend bool operator==(const ColorIndex&, const ColorIndex&) = default;
};

/// Box maps driving the colored composition. For sigma in Sh(i-1, n-1) the
/// colors of C_{m+n-1} are laid out over m boxes: boxes 1..i-1 hold
/// [sigma(1)]..[sigma(i-1)] singly, box i holds
/// [sigma(i)],...,[sigma(i+n-2)],[i+n-1], and boxes i+1..m hold
/// [i+n],...,[m+n-1] singly.
///
/// r_map gives the box containing [r]; s_map gives its position within box i,
/// or the formal sum when [r] lies elsewhere. Both throw std::invalid_argument
/// on out-of-range arguments or a shuffle of the wrong shape.
int r_map(int m, int i, int n, const Shuffle& s, int r);
ColorIndex s_map(int m, int i, int n, const Shuffle& s, int r);

}  // namespace prelb
