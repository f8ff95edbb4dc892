#pragma once

#include "recforge/errors.hpp"
#include "recforge/testspec.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace recforge {

// A forbidden-factor system: circular words over {0..s-1} must avoid every
// listed word as a consecutive (wrap-around) factor. Words are digit
// strings, which limits the alphabet to s <= 10.
struct PatternSystem {
    unsigned s = 2;
    std::vector<std::string> forbidden;          // canonical: no word is a factor of another
    std::vector<std::string> trimmed_redundant;  // diagnostics from construction
    std::size_t max_len = 0;                     // L, over the canonical set
};

inline PatternSystem make_pattern_system(unsigned s, std::vector<std::string> forbidden) {
    if (s < 2 || s > 10) throw std::invalid_argument("pattern system: alphabet size must be in [2, 10]");
    if (forbidden.empty()) throw std::invalid_argument("pattern system: forbidden set must be non-empty");
    for (const std::string& w : forbidden) {
        if (w.empty()) throw std::invalid_argument("pattern system: forbidden words must be non-empty");
        for (char ch : w)
            if (ch < '0' || ch >= static_cast<char>('0' + s))
                throw std::invalid_argument("pattern system: word '" + w + "' uses letters outside 0.." +
                                            std::to_string(s - 1));
    }
    std::sort(forbidden.begin(), forbidden.end(), [](const std::string& a, const std::string& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());

    PatternSystem ps;
    ps.s = s;
    // A word containing a shorter forbidden word as factor is redundant.
    for (const std::string& w : forbidden) {
        bool redundant = false;
        for (const std::string& kept : ps.forbidden)
            if (w.find(kept) != std::string::npos) {
                redundant = true;
                break;
            }
        if (redundant)
            ps.trimmed_redundant.push_back(w);
        else
            ps.forbidden.push_back(w);
    }
    for (const std::string& w : ps.forbidden) ps.max_len = std::max(ps.max_len, w.size());
    return ps;
}

// 0/1 adjacency matrix on the allowed sliding windows: entry [u][v] is 1
// iff u and v overlap in L-2 letters and the fused length-L window avoids
// every forbidden factor. trace(T^n) counts circular words of length n.
// With only length-1 patterns the matrix is 1x1 over the reduced alphabet
// count; when everything is forbidden it is empty.
struct TransferMatrix {
    std::vector<std::string> states;  // lexicographic
    std::vector<std::vector<std::uint64_t>> m;

    std::size_t dim() const { return states.size(); }
};

inline constexpr std::uint64_t kTransferStateBudget = 4096;

inline TransferMatrix build_transfer(const PatternSystem& ps,
                                     std::uint64_t state_budget = kTransferStateBudget) {
    // Length-1 forbidden words reduce the alphabet up front; redundancy
    // trimming guarantees the remaining words avoid removed letters.
    std::vector<char> letters;
    for (unsigned a = 0; a < ps.s; ++a) {
        const char ch = static_cast<char>('0' + a);
        bool removed = false;
        for (const std::string& w : ps.forbidden)
            if (w.size() == 1 && w[0] == ch) removed = true;
        if (!removed) letters.push_back(ch);
    }
    std::vector<std::string> words;
    for (const std::string& w : ps.forbidden)
        if (w.size() >= 2) words.push_back(w);

    TransferMatrix t;
    if (letters.empty()) return t;  // everything forbidden: zero states
    if (words.empty()) {
        t.states.push_back("");
        t.m = {{letters.size()}};
        return t;
    }

    const std::size_t window = words.back().size();  // L (sorted by length)
    std::uint64_t count = 1;
    for (std::size_t i = 0; i + 1 < window; ++i) {
        count *= letters.size();
        if (count > state_budget)
            throw BudgetError("build_transfer: state count " + std::to_string(letters.size()) + "^" +
                              std::to_string(window - 1) + " exceeds the budget of " +
                              std::to_string(state_budget));
    }

    auto clean = [&words](const std::string& w) {
        for (const std::string& f : words)
            if (w.find(f) != std::string::npos) return false;
        return true;
    };

    // Lexicographic enumeration of allowed (L-1)-windows.
    std::string word(window - 1, letters.front());
    std::vector<std::size_t> idx(window - 1, 0);
    for (;;) {
        if (clean(word)) t.states.push_back(word);
        std::size_t i = window - 1;
        while (i > 0) {
            if (idx[i - 1] + 1 < letters.size()) {
                word[i - 1] = letters[++idx[i - 1]];
                break;
            }
            idx[i - 1] = 0;
            word[i - 1] = letters.front();
            --i;
        }
        if (i == 0) break;
    }

    const std::size_t dim = t.states.size();
    t.m.assign(dim, std::vector<std::uint64_t>(dim, 0));
    std::string fused(window, '0');
    for (std::size_t u = 0; u < dim; ++u) {
        for (std::size_t v = 0; v < dim; ++v) {
            if (window >= 3 &&
                t.states[u].compare(1, window - 2, t.states[v], 0, window - 2) != 0)
                continue;
            fused.assign(t.states[u]);
            fused.push_back(t.states[v].back());
            if (clean(fused)) t.m[u][v] = 1;
        }
    }
    return t;
}

namespace detail {

using BigMatrix = std::vector<std::vector<BigInt>>;

inline BigMatrix matmul(const BigMatrix& a, const BigMatrix& b) {
    const std::size_t n = a.size();
    BigMatrix c(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

inline BigMatrix to_big(const TransferMatrix& t) {
    BigMatrix m(t.dim(), std::vector<BigInt>(t.dim()));
    for (std::size_t i = 0; i < t.dim(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j) m[i][j] = t.m[i][j];
    return m;
}

}  // namespace detail

// trace(T^n) by exact integer matrix powering.
inline BigInt circular_count(const TransferMatrix& t, std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("circular_count: n must be >= 1");
    if (t.dim() == 0) return 0;
    detail::BigMatrix acc;
    detail::BigMatrix base = detail::to_big(t);
    std::uint64_t e = n;
    while (e) {
        if (e & 1) acc = acc.empty() ? base : detail::matmul(acc, base);
        e >>= 1;
        if (e) base = detail::matmul(base, base);
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < acc.size(); ++i) trace += acc[i][i];
    return trace;
}

inline BigInt circular_count(const PatternSystem& ps, std::uint64_t n) {
    return circular_count(build_transfer(ps), n);
}

inline constexpr std::uint64_t kBruteWordBudget = 1ull << 21;

// Direct enumeration oracle: every word of length n over the full alphabet,
// checking every cyclic window of every forbidden length (windows wrap as
// often as needed when the pattern is longer than the word).
inline std::uint64_t brute_circular_count(const PatternSystem& ps, std::uint64_t n,
                                          std::uint64_t word_budget = kBruteWordBudget) {
    if (n < 1) throw std::invalid_argument("brute_circular_count: n must be >= 1");
    std::uint64_t total = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        total *= ps.s;
        if (total > word_budget)
            throw BudgetError("brute_circular_count: " + std::to_string(ps.s) + "^" +
                              std::to_string(n) + " words exceed the budget of " +
                              std::to_string(word_budget));
    }
    std::string w(n, '0');
    std::uint64_t count = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t rest = code;
        for (std::uint64_t i = 0; i < n; ++i) {
            w[i] = static_cast<char>('0' + rest % ps.s);
            rest /= ps.s;
        }
        bool ok = true;
        for (const std::string& f : ps.forbidden) {
            for (std::uint64_t start = 0; start < n && ok; ++start) {
                bool match = true;
                for (std::size_t t = 0; t < f.size(); ++t)
                    if (w[(start + t) % n] != f[t]) {
                        match = false;
                        break;
                    }
                if (match) ok = false;
            }
            if (!ok) break;
        }
        if (ok) ++count;
    }
    return count;
}

// Characteristic polynomial of T from the exact power sums tr(T^i),
// inverted through Newton's identities. Monic, ascending coefficients.
inline IntPoly charpoly_trace_newton(const TransferMatrix& t) {
    const std::size_t d = t.dim();
    if (d == 0) throw std::invalid_argument("charpoly_trace_newton: dimension must be >= 1");
    std::vector<BigInt> p(d + 1);  // p[i] = tr(T^i)
    detail::BigMatrix base = detail::to_big(t);
    detail::BigMatrix m = base;
    for (std::size_t i = 1; i <= d; ++i) {
        BigInt trace = 0;
        for (std::size_t j = 0; j < d; ++j) trace += m[j][j];
        p[i] = trace;
        if (i < d) m = detail::matmul(m, base);
    }
    // n*e_n = (-1)^(n-1) (p_n - sum_{i=1..n-1} (-1)^(i+1) e_i p_{n-i})
    std::vector<BigInt> e(d + 1);
    for (std::size_t n = 1; n <= d; ++n) {
        BigInt s = p[n];
        for (std::size_t i = 1; i < n; ++i)
            s -= (i % 2 == 1 ? e[i] : -e[i]) * p[n - i];
        if (n % 2 == 0) s = -s;
        if (s % BigInt(n) != 0)
            throw std::logic_error("charpoly_trace_newton: non-integer coefficient");
        e[n] = s / BigInt(n);
    }
    std::vector<BigInt> coeffs(d + 1);
    coeffs[d] = 1;
    for (std::size_t i = 1; i <= d; ++i) coeffs[d - i] = i % 2 == 1 ? BigInt(-e[i]) : e[i];
    return IntPoly(std::move(coeffs));
}

// Derives a primality test from the pattern system: characteristic
// polynomial of the transfer matrix, zero roots stripped, reversed into a
// denominator. The resulting trace sequence equals trace(T^n) for n >= 1,
// so the congruence target is e_1 = trace(T).
inline TestSpec spec_from_patterns(const PatternSystem& ps, std::string label,
                                   std::uint64_t state_budget = kTransferStateBudget) {
    TransferMatrix t = build_transfer(ps, state_budget);
    if (t.dim() == 0)
        throw std::domain_error("spec_from_patterns: empty automaton, every word is forbidden");
    const IntPoly chi = charpoly_trace_newton(t);
    const std::vector<BigInt>& c = chi.coeffs();
    std::size_t z = 0;
    while (z < c.size() && c[z] == 0) ++z;
    if (z + 1 == c.size())
        throw std::domain_error("spec_from_patterns: nilpotent transfer matrix, no test exists");
    std::vector<BigInt> q(c.begin() + static_cast<std::ptrdiff_t>(z), c.end());
    std::reverse(q.begin(), q.end());
    return spec_from_denominator(IntPoly(std::move(q)), std::move(label));
}

}  // namespace recforge
