#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ncg/checks.hpp"
#include "ncg/circle.hpp"
#include "ncg/sixterm.hpp"

namespace ncg {

using json = nlohmann::ordered_json;

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

// ---- operator specs -------------------------------------------------------

inline Cx parse_complex(const json& j) {
    if (j.is_number()) return Cx(j.get<double>(), 0.0);
    if (j.is_array() && j.size() == 2)
        return Cx(j[0].get<double>(), j[1].get<double>());
    throw std::invalid_argument("complex value must be a number or [re, im]");
}

inline CircleFunction parse_circle_function(const json& j) {
    CircleFunction f;
    for (auto& [k, v] : j.at("fourier").items()) {
        Cx c = parse_complex(v);
        if (c != 0.0) f.fourier[std::stol(k)] = c;
    }
    return f;
}

inline SequenceSymbol parse_sequence_symbol(const json& j) {
    SequenceSymbol b;
    b.limit_minus = parse_complex(j.at("limitMinus"));
    b.limit_plus = parse_complex(j.at("limitPlus"));
    b.cutoff = j.value("cutoff", 0);
    if (j.contains("exceptional"))
        for (auto& [k, v] : j.at("exceptional").items())
            b.exceptional[std::stol(k)] = parse_complex(v);
    for (auto& [k, c] : b.exceptional)
        if (std::labs(k) > b.cutoff) b.cutoff = std::labs(k);
    return b;
}

/// Expression tree: {conv: {...}} | {diag: {...}} | {sum: [...]} | {product: [...]}.
inline LatticeOperator parse_operator(const json& j) {
    if (j.contains("conv")) return LatticeOperator::conv(parse_circle_function(j.at("conv")));
    if (j.contains("diag")) return LatticeOperator::diag(parse_sequence_symbol(j.at("diag")));
    if (j.contains("sum")) {
        const auto& arr = j.at("sum");
        if (arr.empty()) throw std::invalid_argument("empty sum");
        LatticeOperator op = parse_operator(arr[0]);
        for (std::size_t i = 1; i < arr.size(); ++i) op = op + parse_operator(arr[i]);
        return op;
    }
    if (j.contains("product")) {
        const auto& arr = j.at("product");
        if (arr.empty()) throw std::invalid_argument("empty product");
        LatticeOperator op = parse_operator(arr[0]);
        for (std::size_t i = 1; i < arr.size(); ++i) op = op * parse_operator(arr[i]);
        return op;
    }
    throw std::invalid_argument("operator node must be conv/diag/sum/product");
}

// ---- diagram files --------------------------------------------------------

inline IntMat parse_int_matrix(const json& j) {
    int rows = static_cast<int>(j.size());
    int cols = rows ? static_cast<int>(j[0].size()) : 0;
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw std::invalid_argument("ragged matrix");
        for (int c = 0; c < cols; ++c) m(i, c) = j[i][c].get<long>();
    }
    return m;
}

inline FGAbelian parse_group(const json& j) {
    FGAbelian g;
    g.free_rank = j.value("rank", 0);
    if (j.contains("factors"))
        for (auto& f : j.at("factors")) g.invariant_factors.push_back(mpz_class(f.get<long>()));
    if (j.contains("labels"))
        for (auto& l : j.at("labels")) g.labels.push_back(l.get<std::string>());
    return g;
}

inline SixTermInstance parse_six_term(const json& j) {
    SixTermInstance inst;
    inst.name = j.value("name", "");
    const auto& nodes = j.at("nodes");
    if (nodes.size() != 6) throw std::invalid_argument("six-term diagram needs 6 nodes");
    for (int i = 0; i < 6; ++i) {
        const auto& nj = nodes[i];
        DiagramNode& n = inst.nodes[i];
        n.name = nj.value("name", "node" + std::to_string(i));
        n.known = !nj.value("unknown", false);
        if (n.known) n.group = parse_group(nj);
        if (nj.contains("lift_labels"))
            for (auto& l : nj.at("lift_labels")) n.lift_labels.push_back(l.get<std::string>());
    }
    for (const auto& mj : j.at("maps")) {
        int from = mj.at("from").get<int>();
        int to = mj.at("to").get<int>();
        if ((from + 1) % 6 != to) throw std::invalid_argument("maps must follow the cycle");
        DiagramMap& m = inst.maps[from];
        if (mj.value("unknown", false)) {
            m.kind = DiagramMap::Kind::Unknown;
        } else if (mj.value("zero", false)) {
            m.kind = DiagramMap::Kind::Zero;
        } else if (mj.value("surjective", false)) {
            m.kind = DiagramMap::Kind::SurjectiveFree;
        } else if (mj.contains("matrix")) {
            m.kind = DiagramMap::Kind::Matrix;
            m.matrix = parse_int_matrix(mj.at("matrix"));
        } else {
            throw std::invalid_argument("map needs unknown/zero/surjective/matrix");
        }
        m.origin = mj.value("origin", "");
    }
    if (j.contains("assumed_facts"))
        for (auto& f : j.at("assumed_facts")) inst.assumed_facts.push_back(f.get<std::string>());
    return inst;
}

/// Iterated suspension chain: start groups plus the algebra names tagging each
/// split step.
struct SuspensionChain {
    std::string name;
    FGAbelian k0, k1;
    std::vector<std::string> steps;
    std::vector<std::pair<FGAbelian, FGAbelian>> run() const {
        std::vector<std::pair<FGAbelian, FGAbelian>> out;
        FGAbelian a = k0, b = k1;
        for (const auto& step : steps) {
            auto [na, nb] = suspension_split(a, b, step);
            a = std::move(na);
            b = std::move(nb);
            out.emplace_back(a, b);
        }
        return out;
    }
};

inline SuspensionChain parse_suspension_chain(const json& j) {
    SuspensionChain c;
    c.name = j.value("name", "");
    c.k0 = parse_group(j.at("start").at("k0"));
    c.k1 = parse_group(j.at("start").at("k1"));
    for (auto& s : j.at("steps")) c.steps.push_back(s.get<std::string>());
    return c;
}

// ---- reports --------------------------------------------------------------

inline json report_to_json(const CheckReport& r) {
    json j;
    j["name"] = r.name;
    j["thesis_ref"] = r.thesis_ref;
    j["pass"] = r.pass;
    j["symbolic_residual"] = r.symbolic_residual;
    j["numeric_residual"] = r.numeric_residual;
    j["seeds"] = r.seeds;
    j["notes"] = r.notes;
    return j;
}

inline std::string report_to_text(const CheckReport& r) {
    std::ostringstream os;
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  (" << r.thesis_ref << ")\n";
    if (r.symbolic_residual != "0")
        os << "       symbolic residual: " << r.symbolic_residual << "\n";
    os << "       numeric residual: " << r.numeric_residual;
    if (!r.seeds.empty()) os << "  over " << r.seeds.size() << " seeds";
    os << "\n";
    for (const auto& n : r.notes) os << "       - " << n << "\n";
    return os.str();
}

}  // namespace ncg
