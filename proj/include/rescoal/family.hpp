// Parametric graph families: spec types with validity constraints, a CLI
// parse syntax, and canonical builders whose vertex ordering matches the
// block structure of the closed-form resistance matrices.
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rescoal/graph.hpp"

namespace rescoal {

// K_{p1} o_k K_{p2}: two complete graphs sharing a k-clique. t = p1+p2-k.
struct KCoalComplete {
    int p1 = 0, p2 = 0, k = 0;
};

// W_{n+1}^t: t copies of K_{n+1} sharing one vertex.
struct Windmill {
    int n = 0, t = 0;
};

// R(3,3,3): three triangles at a common vertex; alias for Windmill(2,3).
struct Rose3 {};

// K_p o_k (G v K_k): the K_k part of the join is identified with a
// k-clique of K_p. g_desc is a human-readable tag carried into reports.
struct JoinCoal {
    int p = 0, k = 0;
    Graph g;
    std::string g_desc;
};

// K_{1,p-1} o_1 (G v K_1): star center identified with the joined vertex.
struct StarJoinCoal {
    int p = 0;
    Graph g;
    std::string g_desc;
};

// K_{p,q} o_1 K_{1,n}: star center identified with a p-side vertex.
struct BipartiteStar {
    int p = 0, q = 0, n = 0;
};

// K_{p,q} o_1 K_n: one K_n vertex identified with a p-side vertex.
struct BipartiteComplete {
    int p = 0, q = 0, n = 0;
};

// K_p^q: K_p with q pendant leaves at one vertex.
struct Pineapple {
    int p = 0, q = 0;
};

// K_p with a single pendant vertex (= KCoalComplete(p,2,1)).
struct Kite {
    int p = 0;
};

// D(n,l): path of l vertices whose end is the center of a star with
// n-l leaves.
struct Dandelion {
    int n = 0, l = 0;
};

using FamilySpec =
    std::variant<KCoalComplete, Windmill, Rose3, JoinCoal, StarJoinCoal,
                 BipartiteStar, BipartiteComplete, Pineapple, Kite, Dandelion>;

// Throws invalid_parameter_error naming the violated constraint.
void validate(const FamilySpec& spec);

// Tag used in CLI syntax and report rows: kcoal, windmill, rose3, joincoal,
// starcoal, bipartite_star, bipartite_complete, pineapple, kite, dandelion.
std::string family_name(const FamilySpec& spec);

// Semicolon-joined key=value list, e.g. "p1=3;p2=2;k=1". Join/star
// coalescence rows carry the inner-graph descriptor plus gn/gm/gconn.
std::string params_string(const FamilySpec& spec);

// Parse "name:key=value,..." (e.g. "kcoal:p1=4,p2=3,k=2"). Inner graphs
// for joincoal/starcoal: g=complete:N | path:N | cycle:N | star:N |
// complete_bipartite:P:Q | @FILE. Validates before returning.
FamilySpec parse_family(const std::string& text);

// Canonical construction: identified block first, then first-graph
// remainder, then second-graph remainder (dandelion: path from the center,
// then leaves). Always connected.
Graph build_family(const FamilySpec& spec);

} // namespace rescoal
