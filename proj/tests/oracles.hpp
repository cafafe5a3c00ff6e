// SPDX-License-Identifier: Apache-2.0
//
// Slow, independent reference implementations used only by the tests.

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

inline int mu(char a, char b) {
    const std::string p{a, b};
    if (p == "CG" || p == "GC")
        return -5;
    if (p == "AT" || p == "TA")
        return -4;
    if (p == "GT" || p == "TG")
        return -1;
    return 0;
}

// Longest run of consecutive nested pairs (i,j),(i+1,j-1),... with mu < 0,
// trying every outer pair and extending by brute force.
inline std::size_t stem(const std::string& x) {
    const std::size_t n = x.size();
    std::size_t best = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t t = 0;
            while (i + t < j - t && mu(x[i + t], x[j - t]) < 0)
                ++t;
            best = std::max(best, t);
        }
    return best;
}

// Minimum-energy non-crossing pairing on x[l..r] with every pair spanning at
// least two positions, by plain recursion on the first base.
inline int energy(const std::string& x, int l, int r) {
    if (r - l < 2)
        return 0;
    int best = energy(x, l + 1, r);
    for (int m = l + 2; m <= r; ++m) {
        const int e = mu(x[l], x[m]);
        if (e < 0)
            best = std::min(best, e + energy(x, l + 1, m - 1) + energy(x, m + 1, r));
    }
    return best;
}
inline int energy(const std::string& x) { return energy(x, 0, static_cast<int>(x.size()) - 1); }

// Run-breaking map computed position by position.
inline std::string flip(const std::string& x, std::size_t threshold = 4) {
    std::string out = x;
    for (std::size_t p = 0; p < x.size(); ++p) {
        std::size_t s = p;
        while (s > 0 && x[s - 1] == x[p])
            --s;
        std::size_t e = p;
        while (e + 1 < x.size() && x[e + 1] == x[p])
            ++e;
        if (e - s + 1 >= threshold && (p - s + 1) % 4 == 0)
            out[p] = 'T';
    }
    return out;
}

inline std::size_t longest_run(const std::string& x) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::size_t j = i;
        while (j < x.size() && x[j] == x[i])
            ++j;
        best = std::max(best, j - i);
    }
    return best;
}

inline std::size_t hamming(const std::string& a, const std::string& b) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += a[i] != b[i];
    return d;
}

inline std::string reversed(std::string s) {
    std::reverse(s.begin(), s.end());
    return s;
}

inline std::string complemented(std::string s) {
    for (char& c : s)
        c = c == 'A' ? 'T' : c == 'T' ? 'A' : c == 'C' ? 'G' : 'C';
    return s;
}

inline const char* block(int v) {
    static const char* table[] = {"CCC", "CCA", "CAC", "CAA", "ACC", "ACA", "AAC", "AAA", "TCC", "CTC", "TCA"};
    return table[v];
}

inline std::string phi(const std::vector<int>& w) {
    std::string s;
    for (int v : w)
        s += block(v);
    return s;
}

// Codewords of the code spanned by the rows of g (rows as int vectors mod 11).
inline std::vector<std::vector<int>> span(const std::vector<std::vector<int>>& g) {
    const std::size_t k = g.size();
    const std::size_t n = g.front().size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i)
        total *= 11;
    std::vector<std::vector<int>> out;
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<int> msg(k);
        std::size_t v = idx;
        for (std::size_t i = k; i-- > 0;) {
            msg[i] = static_cast<int>(v % 11);
            v /= 11;
        }
        std::vector<int> cw(n, 0);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j)
                cw[j] = (cw[j] + msg[i] * g[i][j]) % 11;
        out.push_back(cw);
    }
    return out;
}

} // namespace oracle
