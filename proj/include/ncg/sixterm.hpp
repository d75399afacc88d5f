#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncg/abelian.hpp"

namespace ncg {

/// One node of the cyclic six-term diagram. Cyclic positions follow the
/// hexagon: 0..2 along the K_0 row, 3..5 along the K_1 row, with the boundary
/// maps closing the cycle (2 -> 3 exponential, 5 -> 0 index).
struct DiagramNode {
    std::string name;
    bool known{false};
    FGAbelian group;
    std::vector<std::string> lift_labels;  // names for solved generators
};

/// Map from node i to node (i+1) mod 6.
struct DiagramMap {
    enum class Kind { Unknown, Zero, Matrix, SurjectiveFree } kind{Kind::Unknown};
    IntMat matrix;       // for Kind::Matrix, between free nodes
    std::string origin;  // where the matrix came from (reporting only)
};

struct SixTermInstance {
    std::string name;
    std::array<DiagramNode, 6> nodes;
    std::array<DiagramMap, 6> maps;
    std::vector<std::string> assumed_facts;
};

enum class NodeStatus { Known, Solved, Ambiguous };

struct SolvedNode {
    NodeStatus status{NodeStatus::Known};
    FGAbelian group;
    std::string provenance;  // human-readable derivation summary
};

struct SolvedSixTerm {
    SixTermInstance instance;
    std::array<SolvedNode, 6> solved;
    bool all_resolved{true};
    std::string extension_data;  // populated for ambiguous extensions
};

namespace sixterm_detail {

struct PartGroup {
    bool ok{false};
    FGAbelian group;
    std::string how;
};

/// coker(f) where f is the map into the predecessor node. The zero group as
/// codomain and zero/surjective map kinds need no matrix.
inline PartGroup cokernel_part(const DiagramMap& f, const DiagramNode& codomain) {
    PartGroup out;
    if (codomain.known && codomain.group.is_zero()) {
        out.ok = true;
        out.group = FGAbelian::zero();
        out.how = "coker into the zero group";
        return out;
    }
    switch (f.kind) {
        case DiagramMap::Kind::SurjectiveFree:
            out.ok = true;
            out.group = FGAbelian::zero();
            out.how = "coker of a surjection = 0";
            return out;
        case DiagramMap::Kind::Zero:
            if (!codomain.known) return out;
            out.ok = true;
            out.group = codomain.group;
            out.how = "coker of the zero map = " + codomain.name;
            return out;
        case DiagramMap::Kind::Matrix: {
            if (!codomain.known || !codomain.group.is_free()) return out;
            CokernelData ck = cokernel(f.matrix);
            out.ok = true;
            out.group = ck.group;
            out.how = "coker" + f.matrix.str();
            return out;
        }
        default:
            return out;
    }
}

/// ker(g) where g is the map out of the successor node.
inline PartGroup kernel_part(const DiagramMap& g, const DiagramNode& domain,
                             const DiagramNode& codomain) {
    PartGroup out;
    if (!domain.known) return out;
    if (domain.group.is_zero()) {
        out.ok = true;
        out.group = FGAbelian::zero();
        out.how = "ker inside the zero group";
        return out;
    }
    switch (g.kind) {
        case DiagramMap::Kind::Zero:
            out.ok = true;
            out.group = domain.group;
            out.how = "ker of the zero map = " + domain.name;
            return out;
        case DiagramMap::Kind::Matrix:
            if (!domain.group.is_free()) return out;
            out.ok = true;
            out.group = kernel_group(g.matrix);
            out.how = "ker" + g.matrix.str();
            return out;
        case DiagramMap::Kind::SurjectiveFree: {
            // kernel of a surjection of free groups is free of corank rank(codomain)
            if (!domain.group.is_free() || !codomain.known || !codomain.group.is_free())
                return out;
            int r = domain.group.free_rank - codomain.group.free_rank;
            if (r < 0) return out;
            out.ok = true;
            out.group = FGAbelian::free(r);
            out.how = "ker of a surjection of free groups (corank " +
                      std::to_string(codomain.group.free_rank) + ")";
            return out;
        }
        default:
            if (codomain.known && codomain.group.is_zero()) {
                out.ok = true;
                out.group = domain.group;
                out.how = "ker of the map into the zero group = " + domain.name;
            }
            return out;
    }
}

}  // namespace sixterm_detail

/// Resolve every unknown node from the short exact sequence
///   0 -> coker(f) -> K -> ker(g) -> 0,
/// f the known map into the predecessor, g the known map out of the successor.
/// A free quotient splits the extension; a zero cokernel needs no splitting.
/// Anything else is reported AMBIGUOUS with the extension data.
inline SolvedSixTerm solve_six_term(const SixTermInstance& inst) {
    SolvedSixTerm out;
    out.instance = inst;
    for (int i = 0; i < 6; ++i) {
        const DiagramNode& node = inst.nodes[i];
        if (node.known) {
            out.solved[i] = {NodeStatus::Known, node.group, "given"};
            continue;
        }
        const DiagramMap& f = inst.maps[(i + 4) % 6];  // node(i-2) -> node(i-1)
        const DiagramMap& g = inst.maps[(i + 1) % 6];  // node(i+1) -> node(i+2)
        auto ck = sixterm_detail::cokernel_part(f, inst.nodes[(i + 5) % 6]);
        auto kr = sixterm_detail::kernel_part(g, inst.nodes[(i + 1) % 6],
                                              inst.nodes[(i + 2) % 6]);
        if (!ck.ok || !kr.ok) {
            out.solved[i] = {NodeStatus::Ambiguous, FGAbelian::zero(),
                             "flanking maps insufficient"};
            out.all_resolved = false;
            out.extension_data += node.name + ": flanking data unavailable; ";
            continue;
        }
        FGAbelian result;
        std::string how;
        if (ck.group.is_zero()) {
            result = kr.group;
            how = kr.how + " (cokernel part vanishes)";
        } else if (kr.group.is_free()) {
            result = ck.group.direct_sum(kr.group);
            how = "0 -> " + ck.group.str() + " -> K -> " + kr.group.str() +
                  " -> 0 splits (free quotient)";
        } else if (kr.group.is_zero()) {
            result = ck.group;
            how = ck.how + " (kernel part vanishes)";
        } else {
            out.solved[i] = {NodeStatus::Ambiguous, FGAbelian::zero(),
                             "extension does not split by the free-quotient rule"};
            out.all_resolved = false;
            out.extension_data += node.name + ": 0 -> " + ck.group.str() + " -> K -> " +
                                  kr.group.str() + " -> 0; ";
            continue;
        }
        if (!node.lift_labels.empty() &&
            static_cast<int>(node.lift_labels.size()) == result.num_generators())
            result.labels = node.lift_labels;
        out.solved[i] = {NodeStatus::Solved, std::move(result), how};
    }
    return out;
}

/// Exactness of a chain of maps between free nodes: at every interior node the
/// image lattice of the incoming map equals the kernel lattice of the outgoing
/// one. Nodes are given by their ranks; map i goes from node i to node i+1.
/// When `cyclic`, the last map wraps around and every node is interior.
struct ExactnessResult {
    bool pass{true};
    std::vector<std::string> failures;
};

inline ExactnessResult verify_exactness(const std::vector<int>& ranks,
                                        const std::vector<IntMat>& maps,
                                        bool cyclic = false) {
    ExactnessResult res;
    std::size_t n = ranks.size();
    if (maps.size() != (cyclic ? n : n - 1))
        throw std::invalid_argument("verify_exactness: map count mismatch");
    for (std::size_t m = 0; m < maps.size(); ++m) {
        std::size_t from = m, to = (m + 1) % n;
        if (maps[m].rows() != ranks[to] || maps[m].cols() != ranks[from])
            throw std::invalid_argument("verify_exactness: map shape mismatch at " +
                                        std::to_string(m));
    }
    auto check_node = [&](std::size_t i, const IntMat& in, const IntMat& outm) {
        IntMat img = image_lattice(in);
        IntMat ker = kernel_basis(outm);
        if (!lattice_equal(img, ker)) {
            res.pass = false;
            res.failures.push_back("node " + std::to_string(i) + ": im " + img.str() +
                                   " != ker " + hermite_columns(ker).str());
        }
    };
    if (cyclic) {
        for (std::size_t i = 0; i < n; ++i) check_node(i, maps[(i + n - 1) % n], maps[i]);
    } else {
        for (std::size_t i = 1; i + 1 < n; ++i) check_node(i, maps[i - 1], maps[i]);
    }
    return res;
}

/// Induced map on K_1 of the torus for a coordinatewise monomial self-map:
/// each output coordinate +-z^a w^b (possibly conjugated) contributes its
/// exponent column; conjugation negates, the sign prefactor is homotopically
/// invisible.
struct MonomialCoordinate {
    long a{0};  // exponent of z
    long b{0};  // exponent of w
    bool conjugate{false};
    bool negate{false};
};

inline IntMat induced_monomial_map_K1(const MonomialCoordinate& first,
                                      const MonomialCoordinate& second) {
    IntMat m(2, 2);
    auto put = [&](int col, const MonomialCoordinate& c) {
        long a = c.conjugate ? -c.a : c.a;
        long b = c.conjugate ? -c.b : c.b;
        m(0, col) = a;
        m(1, col) = b;
    };
    put(0, first);
    put(1, second);
    return m;
}

}  // namespace ncg
