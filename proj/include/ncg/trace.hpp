#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "ncg/form.hpp"

namespace ncg {

/// Trace value: TrigPoly coefficients on cyclic word classes. Keys are the
/// minimal rotations under the fixed word order; with reducedModDelta set, the
/// delta-exact classes have been removed (see reduce_mod_delta_exact).
struct TraceClass {
    std::map<Word, TrigPoly> terms;
    bool reduced_mod_delta{false};

    bool is_zero() const { return terms.empty(); }

    void add(const Word& w, const TrigPoly& c) {
        if (c.is_zero()) return;
        auto& dst = terms[w];
        dst += c;
        if (dst.is_zero()) terms.erase(w);
    }

    TrigPoly coeff(const Word& w) const {
        auto it = terms.find(w);
        return it == terms.end() ? TrigPoly() : it->second;
    }

    friend bool operator==(const TraceClass& a, const TraceClass& b) {
        return a.terms == b.terms;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string s;
        for (auto& [w, c] : terms) {
            if (!s.empty()) s += "  +  ";
            s += "[" + c.str() + "] <" + w.str() + ">";
        }
        return s;
    }
};

/// Matrix trace followed by rotation of every word to its minimal cyclic
/// representative. This realizes tau(ab) = tau(ba) on the word level.
inline TraceClass trace_cyclic_normal_form(const NCMat& m) {
    TraceClass t;
    NCPoly tr = m.matrix_trace();
    for (auto& [w, c] : tr.terms()) t.add(w.cyclic_min(), c);
    return t;
}

inline TraceClass trace_cyclic_normal_form(const NCPoly& p) {
    TraceClass t;
    for (auto& [w, c] : p.terms()) t.add(w.cyclic_min(), c);
    return t;
}

/// Drops the delta-exact cyclic classes: a class with exactly one du letter
/// and net u-exponent k != -1 equals (1/(k+1)) delta(u^{k+1}) up to
/// cyclicity, hence is killed by any invariant trace.  Only multiples of
/// <u* du> survive.  Words with zero or several du letters (or free symbols)
/// are outside the rule.
inline TraceClass reduce_mod_delta_exact(const TraceClass& t) {
    TraceClass r;
    r.reduced_mod_delta = true;
    for (auto& [w, c] : t.terms) {
        if (w.count(Tag::Du) != 1 || w.count(Tag::Free) != 0 || w.count(Tag::DFree) != 0)
            throw std::domain_error("reduce_mod_delta_exact: unsupported word shape " + w.str());
        if (w.net_u_power() == -1) r.add(w, c);
        // k != -1: delta-exact, dropped
    }
    return r;
}

/// The canonical cyclic word u* du (survivor class of the reduction).
inline Word ustar_du_word() {
    Word w;
    w.append(lustar());
    w.append(ldu());
    return w;
}

/// Result of the odd-character reduction: the scalar integrand multiplying
/// <u* du>, and whatever survived besides it (expected empty).
struct OddCharacterIntegrand {
    TrigPoly f;
    TraceClass residual;
    TraceClass raw_classes;  // cyclic classes before the delta-exact reduction
};

/// Drives the full pipeline: T = Tr(p (dp ^ dp)) on (ep_X, ep_theta), cyclic
/// normal form, delta-exact reduction; the reduced trace must be f * <u* du>.
inline OddCharacterIntegrand compute_odd_character_integrand(const NCMat& p) {
    NCForm p0 = NCForm::from_matrix(p);
    NCForm dp = exterior_d(p0);
    NCForm dpdp = wedge(dp, dp);
    NCForm t = mat_times_form(p, dpdp);

    OddCharacterIntegrand out;
    out.raw_classes = trace_cyclic_normal_form(t.component(kXTheta));
    TraceClass reduced = reduce_mod_delta_exact(out.raw_classes);

    const Word survivor = ustar_du_word();
    out.f = reduced.coeff(survivor);
    out.residual = reduced;
    out.residual.terms.erase(survivor);
    return out;
}

}  // namespace ncg
