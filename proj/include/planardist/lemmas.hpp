// lemmas.hpp - active vertices, face-sharing graphs and the active-vertex lemma checks.
//
// For a root v and level i, A_i(v) holds the vertices of N_i(v) with a neighbor
// in N_{i+1}(v). H_i joins two vertices of A_i that lie on a common face walk.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planardist/embedding.hpp"
#include "planardist/graph.hpp"

namespace planardist {

struct ActiveStructure {
    Vertex root = 0;
    // active_sets[i - 1] = A_i(root) for 1 <= i <= ecc(root) - 1, sorted.
    std::vector<std::vector<Vertex>> active_sets;
    // face_sharing[i - 1] is H_i on local indices into active_sets[i - 1].
    // Empty when no embedding was available.
    std::vector<Graph> face_sharing;
    bool has_face_graphs = false;

    int levels() const { return static_cast<int>(active_sets.size()); }
    const std::vector<Vertex>& active(int level) const { return active_sets.at(level - 1); }
    const Graph& h(int level) const { return face_sharing.at(level - 1); }
};

// Uses the left-right embedding when g is planar; otherwise only A_i is filled.
ActiveStructure active_sets(const Graph& g, Vertex root);
// Face sharing over the given faces; `skip_face` (if >= 0) is ignored.
ActiveStructure active_sets(const Graph& g, Vertex root, const Embedding& emb, int skip_face = -1);

enum class LemmaId { L3_1a, L3_1b, L3_1c, L3_2, L3_3 };

std::string to_string(LemmaId id);
LemmaId parse_lemma_id(const std::string& text);

struct LemmaCounterexample {
    std::vector<Vertex> vertices;  // u, or the triple (u, w, x) for L3.1b
    int level = 0;
};

struct LemmaReport {
    LemmaId lemma = LemmaId::L3_1a;
    Vertex root = 0;
    int level = 0;
    bool pass = true;
    std::optional<LemmaCounterexample> counterexample;
};

// Throws std::invalid_argument naming the missing property if g is outside
// the class the lemma presumes.
void require_lemma_class(const Graph& g, LemmaId id);

// One report per (root, level), ordered by root then level.
std::vector<LemmaReport> check_lemma(const Graph& g, LemmaId id);

// Recomputes levels and faces from scratch and confirms that the reported
// vertices really violate the lemma.
bool verify_counterexample(const Graph& g, LemmaId id, Vertex root, const LemmaCounterexample& cx);

}  // namespace planardist
