#pragma once

// JSON and DOT serialization. Schema: matrix entries are decimal strings
// (arbitrary precision safe), letters are integers, diagram paths are words
// over {t,b,T,B}, generator words are arrays of [letter, sign].

#include <json.hpp>

#include <string>

#include "hyprv/hyp_diagram.hpp"
#include "hyprv/int_matrix.hpp"
#include "hyprv/packed_word.hpp"

namespace hyprv {

using nlohmann::json;

inline json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw Error("matrix json must be a non-empty array of rows");
    int n = static_cast<int>(j.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        const json& row = j.at(static_cast<size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != n) throw Error("matrix json must be square");
        for (int c = 0; c < n; ++c) {
            const json& e = row.at(static_cast<size_t>(c));
            m.at(i, c) = e.is_string() ? Int(e.get<std::string>()) : Int(e.get<long long>());
        }
    }
    return m;
}

inline json vector_to_json(const IntVec& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(x.str());
    return out;
}

inline IntVec vector_from_json(const json& j) {
    if (!j.is_array()) throw Error("vector json must be an array");
    IntVec v;
    for (const json& e : j) v.push_back(e.is_string() ? Int(e.get<std::string>()) : Int(e.get<long long>()));
    return v;
}

inline json generator_word_to_json(const GeneratorWord& w) {
    json out = json::array();
    for (auto& [p, s] : w) out.push_back(json::array({p, s}));
    return out;
}

inline GeneratorWord generator_word_from_json(const json& j) {
    GeneratorWord w;
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 2) throw Error("generator word entries are [letter, sign]");
        int sign = e.at(1).get<int>();
        if (sign != 1 && sign != -1) throw Error("generator word signs are +-1");
        w.emplace_back(e.at(0).get<int>(), sign);
    }
    return w;
}

inline json packed_word_to_json(const PackedWord& w) {
    json out = json::array();
    for (const PackedBlock& b : w) {
        json atoms = json::array();
        for (const PackedAtom& a : b.atoms) atoms.push_back(json::array({a.letter, a.exp.str()}));
        out.push_back(json{{"block", std::move(atoms)}, {"repeats", b.repeats.str()}});
    }
    return out;
}

inline json vertex_to_json(const HypDiagram& hyp, int id) {
    const PermutationPair& v = hyp.vertices()[static_cast<size_t>(id)];
    return json{{"id", id},
                {"word", hyp.words()[static_cast<size_t>(id)]},
                {"top", v.top()},
                {"bottom", v.bottom()}};
}

inline json diagram_to_json(const HypDiagram& hyp) {
    json vertices = json::array();
    for (size_t i = 0; i < hyp.size(); ++i) vertices.push_back(vertex_to_json(hyp, static_cast<int>(i)));
    json arrows = json::array();
    std::unordered_map<PermutationPair, int, PermutationPairHash> index;
    for (size_t i = 0; i < hyp.size(); ++i) index.emplace(hyp.vertices()[i], static_cast<int>(i));
    for (size_t i = 0; i < hyp.size(); ++i) {
        for (ArrowKind kind : {ArrowKind::Top, ArrowKind::Bottom}) {
            DiagramArrow a = make_arrow(hyp.vertices()[i], kind);
            arrows.push_back(json{{"from", static_cast<int>(i)},
                                  {"to", index.at(a.target)},
                                  {"kind", std::string(1, arrow_kind_char(kind))},
                                  {"winner", a.winner},
                                  {"loser", a.loser}});
        }
    }
    return json{{"d", hyp.d()},
                {"vertex_count", hyp.size()},
                {"arrow_count", arrows.size()},
                {"vertices", std::move(vertices)},
                {"arrows", std::move(arrows)}};
}

// DOT export: vertices labelled by their W_d word, arrows colored by kind
// and annotated with the same kind/winner/loser attributes as the JSON.
inline std::string diagram_to_dot(const HypDiagram& hyp) {
    json j = diagram_to_json(hyp);
    std::string out = "digraph R" + std::to_string(hyp.d()) + " {\n  rankdir=LR;\n";
    for (const json& v : j.at("vertices")) {
        std::string w = v.at("word").get<std::string>();
        out += "  v" + std::to_string(v.at("id").get<int>()) + " [label=\"" + (w.empty() ? "*" : w) + "\"];\n";
    }
    for (const json& a : j.at("arrows")) {
        std::string kind = a.at("kind").get<std::string>();
        out += "  v" + std::to_string(a.at("from").get<int>()) + " -> v" + std::to_string(a.at("to").get<int>()) +
               " [color=" + (kind == "t" ? "red" : "blue") + ", kind=\"" + kind +
               "\", winner=\"" + std::to_string(a.at("winner").get<int>()) + "\", loser=\"" +
               std::to_string(a.at("loser").get<int>()) + "\", label=\"" +
               std::to_string(a.at("winner").get<int>()) + "/" + std::to_string(a.at("loser").get<int>()) +
               "\"];\n";
    }
    out += "}\n";
    return out;
}

inline std::string diagram_to_text(const HypDiagram& hyp) {
    std::string out = "R_" + std::to_string(hyp.d()) + ": " + std::to_string(hyp.size()) + " vertices\n";
    for (size_t i = 0; i < hyp.size(); ++i) {
        const HypWord& w = hyp.words()[i];
        out += "  [" + std::to_string(i) + "] W=\"" + w + "\" " + hyp.vertices()[i].str() + "\n";
    }
    return out;
}

}  // namespace hyprv
