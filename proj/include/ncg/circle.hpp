#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace ncg {

using Cx = std::complex<double>;
using OpMat = Eigen::MatrixXcd;

/// Finitely supported Fourier series a(e^{i theta}) = sum_k a_k e^{ik theta}.
struct CircleFunction {
    std::map<long, Cx> fourier;

    static CircleFunction constant(Cx c) {
        CircleFunction f;
        if (c != 0.0) f.fourier[0] = c;
        return f;
    }
    static CircleFunction z_power(long m, Cx c = 1.0) {
        CircleFunction f;
        if (c != 0.0) f.fourier[m] = c;
        return f;
    }

    Cx coeff(long k) const {
        auto it = fourier.find(k);
        return it == fourier.end() ? Cx(0) : it->second;
    }
    Cx eval(double theta) const {
        Cx s = 0;
        for (auto& [k, c] : fourier) s += c * std::polar(1.0, k * theta);
        return s;
    }
    long bandwidth() const {
        long b = 0;
        for (auto& [k, c] : fourier) b = std::max(b, std::labs(k));
        return b;
    }
    bool is_zero() const { return fourier.empty(); }

    friend CircleFunction operator+(const CircleFunction& a, const CircleFunction& b) {
        CircleFunction r = a;
        for (auto& [k, c] : b.fourier) {
            r.fourier[k] += c;
            if (std::abs(r.fourier[k]) == 0.0) r.fourier.erase(k);
        }
        return r;
    }
    friend CircleFunction operator*(const CircleFunction& a, const CircleFunction& b) {
        CircleFunction r;
        for (auto& [ka, ca] : a.fourier)
            for (auto& [kb, cb] : b.fourier) r.fourier[ka + kb] += ca * cb;
        for (auto it = r.fourier.begin(); it != r.fourier.end();)
            it = (std::abs(it->second) == 0.0) ? r.fourier.erase(it) : std::next(it);
        return r;
    }
    CircleFunction scaled(Cx c) const {
        CircleFunction r;
        if (c == 0.0) return r;
        for (auto& [k, v] : fourier) r.fourier[k] = c * v;
        return r;
    }
    /// conj(a)(z) = conj(a(z)) on |z| = 1: coefficient k -> conj(coeff(-k)).
    CircleFunction conjugated() const {
        CircleFunction r;
        for (auto& [k, c] : fourier) r.fourier[-k] = std::conj(c);
        return r;
    }
    /// -a' with respect to theta: the symbol of the rotation derivation.
    CircleFunction minus_dtheta() const {
        CircleFunction r;
        for (auto& [k, c] : fourier)
            if (k != 0) r.fourier[k] = c * Cx(0, -static_cast<double>(k));
        return r;
    }
};

/// Eventually constant two-sided sequence: b_j = limit_plus for j > cutoff,
/// limit_minus for j < -cutoff; exceptional values live inside the window.
struct SequenceSymbol {
    std::map<long, Cx> exceptional;
    Cx limit_minus{0};
    Cx limit_plus{0};
    long cutoff{0};

    static SequenceSymbol constant(Cx c) { return {{}, c, c, 0}; }
    /// H(j) = 1 for j >= 0, 0 for j < 0.
    static SequenceSymbol hardy() { return {{}, 0.0, 1.0, 0}; }
    /// I - H.
    static SequenceSymbol one_minus_hardy() { return {{}, 1.0, 0.0, 0}; }

    Cx at(long j) const {
        auto it = exceptional.find(j);
        if (it != exceptional.end()) return it->second;
        return j >= 0 ? limit_plus : limit_minus;
    }
    SequenceSymbol conjugated() const {
        SequenceSymbol r{{}, std::conj(limit_minus), std::conj(limit_plus), cutoff};
        for (auto& [j, c] : exceptional) r.exceptional[j] = std::conj(c);
        return r;
    }
};

/// Symbol pair over the two boundary circles S^1 x {-inf} and S^1 x {+inf}.
struct PrincipalSymbol {
    CircleFunction at_minus;
    CircleFunction at_plus;

    friend PrincipalSymbol operator+(const PrincipalSymbol& a, const PrincipalSymbol& b) {
        return {a.at_minus + b.at_minus, a.at_plus + b.at_plus};
    }
    friend PrincipalSymbol operator*(const PrincipalSymbol& a, const PrincipalSymbol& b) {
        return {a.at_minus * b.at_minus, a.at_plus * b.at_plus};
    }
};

/// Finite algebraic combination of convolution and diagonal operators on the
/// Fourier lattice: a sum of products of generator factors.
class LatticeOperator {
public:
    struct Factor {
        std::variant<CircleFunction, SequenceSymbol> f;
        bool is_conv() const { return f.index() == 0; }
        const CircleFunction& conv() const { return std::get<0>(f); }
        const SequenceSymbol& diag() const { return std::get<1>(f); }
    };
    using Term = std::vector<Factor>;  // product, left to right

    LatticeOperator() = default;

    static LatticeOperator conv(CircleFunction a) {
        LatticeOperator op;
        op.terms_.push_back({Factor{std::move(a)}});
        return op;
    }
    static LatticeOperator diag(SequenceSymbol b) {
        LatticeOperator op;
        op.terms_.push_back({Factor{std::move(b)}});
        return op;
    }
    static LatticeOperator identity() { return conv(CircleFunction::constant(1.0)); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend LatticeOperator operator+(const LatticeOperator& a, const LatticeOperator& b) {
        LatticeOperator r = a;
        r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
        return r;
    }
    friend LatticeOperator operator*(const LatticeOperator& a, const LatticeOperator& b) {
        LatticeOperator r;
        for (const auto& ta : a.terms_)
            for (const auto& tb : b.terms_) {
                Term t = ta;
                t.insert(t.end(), tb.begin(), tb.end());
                r.terms_.push_back(std::move(t));
            }
        return r;
    }
    LatticeOperator scaled(Cx c) const {
        LatticeOperator r;
        for (const auto& t : terms_) {
            Term s = t;
            s.insert(s.begin(), Factor{CircleFunction::constant(c)});
            r.terms_.push_back(std::move(s));
        }
        return r;
    }
    friend LatticeOperator operator-(const LatticeOperator& a, const LatticeOperator& b) {
        return a + b.scaled(-1.0);
    }

    /// Adjoint: reverse each product; Conv(a)* = Conv(conj a), Diag(b)* = Diag(conj b).
    LatticeOperator adjoint() const {
        LatticeOperator r;
        for (const auto& t : terms_) {
            Term s;
            for (auto it = t.rbegin(); it != t.rend(); ++it) {
                if (it->is_conv())
                    s.push_back(Factor{it->conv().conjugated()});
                else
                    s.push_back(Factor{it->diag().conjugated()});
            }
            r.terms_.push_back(std::move(s));
        }
        return r;
    }

    /// Rotation derivation: delta(Conv(a)) = Conv(-a'), delta(Diag) = 0,
    /// extended by the product rule.
    LatticeOperator delta() const {
        LatticeOperator r;
        for (const auto& t : terms_) {
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (!t[i].is_conv()) continue;
                CircleFunction d = t[i].conv().minus_dtheta();
                if (d.is_zero()) continue;
                Term s = t;
                s[i] = Factor{std::move(d)};
                r.terms_.push_back(std::move(s));
            }
        }
        return r;
    }

    /// Max over terms of the summed convolution bandwidths.
    long bandwidth() const {
        long best = 0;
        for (const auto& t : terms_) {
            long b = 0;
            for (const auto& f : t)
                if (f.is_conv()) b += f.conv().bandwidth();
            best = std::max(best, b);
        }
        return best;
    }

    /// Dense window on Fourier modes -N..N. Conv(a) has entries a_{j-k};
    /// Diag(b) has b_j on the diagonal. Products multiply windowed factors, so
    /// boundary effects stay within `bandwidth` of the window edges.
    OpMat materialize(long n) const {
        const long dim = 2 * n + 1;
        OpMat acc = OpMat::Zero(dim, dim);
        for (const auto& t : terms_) {
            OpMat prod = OpMat::Identity(dim, dim);
            for (const auto& f : t) {
                OpMat m = OpMat::Zero(dim, dim);
                if (f.is_conv()) {
                    for (auto& [k, c] : f.conv().fourier)
                        for (long col = -n; col <= n; ++col) {
                            long row = col + k;
                            if (row >= -n && row <= n) m(row + n, col + n) = c;
                        }
                } else {
                    for (long j = -n; j <= n; ++j) m(j + n, j + n) = f.diag().at(j);
                }
                prod = prod * m;
            }
            acc += prod;
        }
        return acc;
    }

    /// Algebraic symbol: Conv(a) -> (a, a); Diag(b) -> (b(-inf), b(+inf)),
    /// extended multiplicatively and additively.
    PrincipalSymbol symbol() const {
        PrincipalSymbol total{CircleFunction{}, CircleFunction{}};
        for (const auto& t : terms_) {
            PrincipalSymbol prod{CircleFunction::constant(1.0), CircleFunction::constant(1.0)};
            for (const auto& f : t) {
                PrincipalSymbol s =
                    f.is_conv()
                        ? PrincipalSymbol{f.conv(), f.conv()}
                        : PrincipalSymbol{CircleFunction::constant(f.diag().limit_minus),
                                          CircleFunction::constant(f.diag().limit_plus)};
                prod = prod * s;
            }
            total = total + prod;
        }
        return total;
    }

private:
    std::vector<Term> terms_;
};

/// B = M_z (I - H(D)) + H(D): coordinatewise u_{k-1} for k < 0, u_0 + u_{-1}
/// at k = 0, u_k for k > 0; one-dimensional kernel spanned by e_{-1} - e_0.
inline LatticeOperator op_B() {
    return LatticeOperator::conv(CircleFunction::z_power(1)) *
               LatticeOperator::diag(SequenceSymbol::one_minus_hardy()) +
           LatticeOperator::diag(SequenceSymbol::hardy());
}

/// Winding number of a sampled closed loop from principal-branch argument
/// increments. Exact integer once the sampling resolves the curve.
inline int winding_number(const std::vector<Cx>& loop) {
    if (loop.size() < 2) throw std::invalid_argument("winding_number: too few samples");
    double total = 0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        Cx a = loop[i];
        Cx b = loop[(i + 1) % loop.size()];
        if (std::abs(a) < 1e-12 || std::abs(b) < 1e-12)
            throw std::domain_error("winding_number: loop passes through zero");
        total += std::arg(b / a);
    }
    double turns = total / (2 * std::numbers::pi);
    int w = static_cast<int>(std::lround(turns));
    if (std::abs(turns - w) > 1e-6)
        throw std::domain_error("winding_number: increments do not close to an integer");
    return w;
}

inline int winding_number(const CircleFunction& f, long samples = 0) {
    long m = samples > 0 ? samples : std::max<long>(64, 8 * f.bandwidth() + 8);
    std::vector<Cx> loop(m);
    for (long i = 0; i < m; ++i) loop[i] = f.eval(2 * std::numbers::pi * i / m);
    return winding_number(loop);
}

/// Fredholm index from boundary-symbol windings. The overall sign is a module
/// constant calibrated once by index(B) = +1 (the symbol of B winds once at
/// -inf and is flat at +inf).
inline int fredholm_index(const LatticeOperator& op) {
    PrincipalSymbol s = op.symbol();
    return winding_number(s.at_minus) - winding_number(s.at_plus);
}

/// Kernel dimension of the truncated window, with the outer `bandwidth`
/// columns masked: truncation manufactures kernel vectors supported at the
/// window edges, and restricting the domain to interior modes removes exactly
/// those. Kernel vectors of the full operator with compact support are
/// captured once N exceeds their support.
inline int kernel_dim_truncated(const LatticeOperator& op, long n, double tol) {
    long w = op.bandwidth();
    if (n <= w) throw std::invalid_argument("kernel_dim_truncated: window below bandwidth");
    OpMat m = op.materialize(n);
    OpMat interior = m.middleCols(w, 2 * n + 1 - 2 * w);
    Eigen::BDCSVD<OpMat> svd(interior);
    int count = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) < tol) ++count;
    return count;
}

/// tau(a) = c1 * mean of the symbol at +inf + c2 * mean at -inf ("dz" read as
/// normalized arclength; this is the reading under which tau(H(D)) = c1).
inline Cx trace_tau(const LatticeOperator& op, double c1, double c2) {
    PrincipalSymbol s = op.symbol();
    return c1 * s.at_plus.coeff(0) + c2 * s.at_minus.coeff(0);
}

/// 2x3 character matrix: rows (H^0, H^1) of the circle, columns the classes of
/// H(D), I - H(D), and the unitary z. Column 3 follows the mean-of-symbol
/// recipe and lands at zero.
struct CharacterMatrix {
    Cx entries[2][3];
};

inline CharacterMatrix character_matrix(double c1, double c2) {
    CharacterMatrix m{};
    m.entries[0][0] = trace_tau(LatticeOperator::diag(SequenceSymbol::hardy()), c1, c2);
    m.entries[0][1] =
        trace_tau(LatticeOperator::diag(SequenceSymbol::one_minus_hardy()), c1, c2);
    m.entries[0][2] = 0.0;
    m.entries[1][0] = 0.0;
    m.entries[1][1] = 0.0;
    // mean of sigma_z over each boundary circle
    m.entries[1][2] = trace_tau(LatticeOperator::conv(CircleFunction::z_power(1)), c1, c2);
    return m;
}

/// (1/2pi i) tau(u* delta(u)) for u = Conv(z): the derivation-based value,
/// reported alongside the matrix recipe without asserting agreement.
inline Cx odd_character_derivation(double c1, double c2) {
    LatticeOperator u = LatticeOperator::conv(CircleFunction::z_power(1));
    LatticeOperator ud = u.adjoint() * u.delta();
    return trace_tau(ud, c1, c2) / Cx(0, 2 * std::numbers::pi);
}

}  // namespace ncg
