#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace ncg {

/// Alphabet of the unitary-generator algebra. DU stands for delta(u); there is
/// deliberately no letter for delta(u*): it is normalized to -u* DU u* at
/// construction, forced by Leibniz on u u* = 1.
enum class Tag : std::uint8_t { U = 0, Ustar = 1, Du = 2, Free = 3, DFree = 4 };

struct Letter {
    Tag tag{Tag::U};
    int id{0};  // symbol id for Free/DFree, 0 otherwise

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter lu() { return {Tag::U, 0}; }
inline Letter lustar() { return {Tag::Ustar, 0}; }
inline Letter ldu() { return {Tag::Du, 0}; }
inline Letter lfree(int id) { return {Tag::Free, id}; }
inline Letter ldfree(int id) { return {Tag::DFree, id}; }

/// Monomial: a reduced sequence of letters. The rewriting rules
/// U Ustar -> 1 and Ustar U -> 1 are length-reducing and confluent, so the
/// stack reduction below computes the unique normal form.
class Word {
public:
    Word() = default;
    explicit Word(const std::vector<Letter>& raw) { append(raw); }
    Word(std::initializer_list<Letter> raw) {
        for (const auto& l : raw) append(l);
    }

    static Word empty() { return Word(); }

    const std::vector<Letter>& letters() const { return ls_; }
    std::size_t size() const { return ls_.size(); }
    bool is_empty() const { return ls_.empty(); }

    /// Push letters one by one, cancelling U/Ustar pairs as they form.
    void append(const Letter& l) {
        if (!ls_.empty() && cancels(ls_.back(), l)) {
            ls_.pop_back();
        } else {
            ls_.push_back(l);
        }
    }
    void append(const std::vector<Letter>& raw) {
        for (const auto& l : raw) append(l);
    }
    void append(const Word& w) { append(w.ls_); }

    friend Word operator*(const Word& a, const Word& b) {
        Word r = a;
        r.append(b);
        return r;
    }

    /// Length-first, then lexicographic on (tag, id). Arbitrary but fixed.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.ls_.size() != b.ls_.size())
            return a.ls_.size() <=> b.ls_.size();
        return a.ls_ <=> b.ls_;
    }
    friend bool operator==(const Word& a, const Word& b) = default;

    int count(Tag t) const {
        return static_cast<int>(std::count_if(ls_.begin(), ls_.end(),
                                              [&](const Letter& l) { return l.tag == t; }));
    }
    /// Net u-exponent: U counts +1, Ustar -1, everything else 0.
    int net_u_power() const {
        int k = 0;
        for (const auto& l : ls_) {
            if (l.tag == Tag::U) ++k;
            if (l.tag == Tag::Ustar) --k;
        }
        return k;
    }

    /// Minimal representative of the cyclic class under rotation followed by
    /// rewriting. A rotation of a reduced word may become reducible, so the
    /// closure is taken until no new (shorter) words appear.
    Word cyclic_min() const {
        std::set<Word> seen{*this};
        std::vector<Word> frontier{*this};
        Word best = *this;
        while (!frontier.empty()) {
            std::vector<Word> next;
            for (const auto& w : frontier) {
                const auto& v = w.ls_;
                for (std::size_t i = 1; i < v.size(); ++i) {
                    Word r;
                    for (std::size_t j = 0; j < v.size(); ++j)
                        r.append(v[(i + j) % v.size()]);
                    if (seen.insert(r).second) {
                        next.push_back(r);
                        if (r < best) best = r;
                    }
                }
            }
            frontier = std::move(next);
        }
        return best;
    }

    std::string str() const {
        if (ls_.empty()) return "1";
        std::string s;
        for (const auto& l : ls_) {
            if (!s.empty()) s += ".";
            switch (l.tag) {
                case Tag::U: s += "u"; break;
                case Tag::Ustar: s += "u*"; break;
                case Tag::Du: s += "du"; break;
                case Tag::Free: s += "g" + std::to_string(l.id); break;
                case Tag::DFree: s += "dg" + std::to_string(l.id); break;
            }
        }
        return s;
    }

private:
    static bool cancels(const Letter& a, const Letter& b) {
        return (a.tag == Tag::U && b.tag == Tag::Ustar) ||
               (a.tag == Tag::Ustar && b.tag == Tag::U);
    }

    std::vector<Letter> ls_;
};

/// u^k as a word (k may be negative).
inline Word u_power(int k) {
    Word w;
    for (int i = 0; i < std::abs(k); ++i) w.append(k > 0 ? lu() : lustar());
    return w;
}

}  // namespace ncg
