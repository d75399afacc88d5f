#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "ncg/trigpoly.hpp"
#include "ncg/word.hpp"

namespace ncg {

/// Element of the unitary-generator algebra with TrigPoly coefficients.
/// Canonical form: words reduced, map sorted by the fixed word order, zero
/// coefficients pruned. Equality is structural.
class NCPoly {
public:
    using Terms = std::map<Word, TrigPoly>;

    NCPoly() = default;

    static NCPoly zero() { return NCPoly(); }
    static NCPoly one() { return monomial(Word::empty(), TrigPoly::one()); }
    static NCPoly scalar(TrigPoly c) { return monomial(Word::empty(), std::move(c)); }
    static NCPoly monomial(Word w, TrigPoly c) {
        NCPoly p;
        if (!c.is_zero()) p.terms_.emplace(std::move(w), std::move(c));
        return p;
    }
    static NCPoly u() { return monomial(Word({lu()}), TrigPoly::one()); }
    static NCPoly ustar() { return monomial(Word({lustar()}), TrigPoly::one()); }
    static NCPoly du() { return monomial(Word({ldu()}), TrigPoly::one()); }
    static NCPoly free_symbol(int id) { return monomial(Word({lfree(id)}), TrigPoly::one()); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const TrigPoly& c) {
        if (c.is_zero()) return;
        auto& dst = terms_[w];
        dst += c;
        if (dst.is_zero()) terms_.erase(w);
    }

    NCPoly& operator+=(const NCPoly& o) {
        for (auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        for (auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    NCPoly operator-() const {
        NCPoly r;
        for (auto& [w, c] : terms_) r.terms_[w] = -c;
        return r;
    }

    /// Algebra product; coefficients are central, words concatenate and reduce.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        NCPoly r;
        for (auto& [wa, ca] : a.terms_)
            for (auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
        return r;
    }
    NCPoly scaled(const TrigPoly& t) const {
        NCPoly r;
        for (auto& [w, c] : terms_) r.add_term(w, c * t);
        return r;
    }
    NCPoly scaled(const Gauss& g) const { return scaled(TrigPoly::constant(g)); }

    friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

    /// Antimultiplicative involution. (du)* = -u* du u*; free symbols are
    /// formally self-adjoint; coefficients conjugate.
    NCPoly star() const {
        NCPoly r;
        for (auto& [w, c] : terms_) {
            Word sw;
            bool negate = false;
            const auto& ls = w.letters();
            for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
                switch (it->tag) {
                    case Tag::U: sw.append(lustar()); break;
                    case Tag::Ustar: sw.append(lu()); break;
                    case Tag::Du:
                        sw.append(lustar());
                        sw.append(ldu());
                        sw.append(lustar());
                        negate = !negate;
                        break;
                    case Tag::Free: sw.append(*it); break;
                    case Tag::DFree: sw.append(*it); break;
                }
            }
            TrigPoly cc = c.conj();
            r.add_term(sw, negate ? -cc : cc);
        }
        return r;
    }

    /// Lie-direction derivation (Leibniz over letters): u -> du,
    /// u* -> -u* du u*, g -> dg. Coefficients carry no Lie dependence.
    /// Words already containing du (or dg) are outside this derivation's
    /// domain; the exterior calculus never needs a second delta because the
    /// wedge ep_X ^ ep_X vanishes.
    NCPoly delta() const {
        NCPoly r;
        for (auto& [w, c] : terms_) {
            const auto& ls = w.letters();
            for (std::size_t i = 0; i < ls.size(); ++i) {
                Word nw;
                bool negate = false;
                for (std::size_t j = 0; j < ls.size(); ++j) {
                    if (j != i) {
                        nw.append(ls[j]);
                        continue;
                    }
                    switch (ls[i].tag) {
                        case Tag::U: nw.append(ldu()); break;
                        case Tag::Ustar:
                            nw.append(lustar());
                            nw.append(ldu());
                            nw.append(lustar());
                            negate = true;
                            break;
                        case Tag::Free: nw.append(ldfree(ls[i].id)); break;
                        default:
                            throw std::domain_error(
                                "delta applied to a word already containing a derivative letter");
                    }
                }
                r.add_term(nw, negate ? -c : c);
            }
        }
        return r;
    }

    /// Circle-direction derivation: differentiates coefficients only.
    NCPoly dtheta() const {
        NCPoly r;
        for (auto& [w, c] : terms_) r.add_term(w, c.dtheta());
        return r;
    }

    /// Substitute the endpoint values theta = 0 / theta = 2pi into the
    /// coefficients, keeping the words.
    NCPoly at_zero() const {
        NCPoly r;
        for (auto& [w, c] : terms_) r.add_term(w, TrigPoly::constant(c.value_at_zero()));
        return r;
    }
    NCPoly at_two_pi() const {
        NCPoly r;
        for (auto& [w, c] : terms_) r.add_term(w, TrigPoly::constant(c.value_at_two_pi()));
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto& [w, c] : terms_) {
            if (!s.empty()) s += "  +  ";
            s += "[" + c.str() + "] " + w.str();
        }
        return s;
    }

private:
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const NCPoly& p) { return os << p.str(); }

}  // namespace ncg
