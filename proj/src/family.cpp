#include "rescoal/family.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rescoal/errors.hpp"

namespace rescoal {

namespace {

void need(bool cond, const std::string& constraint) {
    if (!cond) throw invalid_parameter_error("constraint violated: " + constraint);
}

std::string gparams(const Graph& g, const std::string& desc) {
    std::ostringstream os;
    os << "g=" << (desc.empty() ? "custom" : desc) << ";gn=" << g.n()
       << ";gm=" << g.m() << ";gconn=" << (is_connected(g) ? 1 : 0);
    return os.str();
}

int parse_int(const std::string& s, const std::string& what) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw parse_error("bad integer for " + what + ": '" + s + "'");
    }
    if (pos != s.size())
        throw parse_error("bad integer for " + what + ": '" + s + "'");
    return v;
}

std::pair<Graph, std::string> parse_inner_graph(const std::string& desc) {
    if (desc.empty()) throw parse_error("empty inner-graph descriptor");
    if (desc[0] == '@') return {read_edge_list_file(desc.substr(1)), desc};

    std::vector<std::string> parts;
    std::stringstream ss(desc);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    auto one_size = [&](StandardKind kind) {
        if (parts.size() != 2)
            throw parse_error("inner graph '" + desc + "' wants one size");
        return make_standard(kind, {parse_int(parts[1], "inner graph size")});
    };
    try {
        if (parts[0] == "complete") return {one_size(StandardKind::complete), desc};
        if (parts[0] == "path") return {one_size(StandardKind::path), desc};
        if (parts[0] == "cycle") return {one_size(StandardKind::cycle), desc};
        if (parts[0] == "star") return {one_size(StandardKind::star), desc};
        if (parts[0] == "complete_bipartite") {
            if (parts.size() != 3)
                throw parse_error("inner graph '" + desc + "' wants two sizes");
            return {make_standard(StandardKind::complete_bipartite,
                                  {parse_int(parts[1], "inner graph size"),
                                   parse_int(parts[2], "inner graph size")}),
                    desc};
        }
    } catch (const invalid_parameter_error& e) {
        throw parse_error("inner graph '" + desc + "': " + e.what());
    }
    throw parse_error("unknown inner-graph kind in '" + desc + "'");
}

// key=value pairs split on ',', validated against the expected key set.
std::map<std::string, std::string> parse_kv(const std::string& rest,
                                            const std::vector<std::string>& keys) {
    std::map<std::string, std::string> out;
    if (rest.empty()) {
        if (!keys.empty())
            throw parse_error("missing parameters (expected " + keys[0] + "=...)");
        return out;
    }
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw parse_error("expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq), val = item.substr(eq + 1);
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw parse_error("unknown parameter '" + key + "'");
        if (!out.emplace(key, val).second)
            throw parse_error("duplicate parameter '" + key + "'");
    }
    for (const auto& k : keys)
        if (!out.count(k)) throw parse_error("missing parameter '" + k + "'");
    return out;
}

} // namespace

void validate(const FamilySpec& spec) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, KCoalComplete>) {
                need(s.p1 >= 1 && s.p2 >= 1 && s.k >= 1,
                     "kcoal parameters must be positive");
                need(s.k <= std::min(s.p1, s.p2), "kcoal needs k <= min(p1,p2)");
                need(s.p1 + s.p2 - s.k >= 2, "kcoal needs t = p1+p2-k >= 2");
            } else if constexpr (std::is_same_v<T, Windmill>) {
                need(s.n >= 2, "windmill needs n >= 2");
                need(s.t >= 2, "windmill needs t >= 2");
            } else if constexpr (std::is_same_v<T, JoinCoal>) {
                need(s.k >= 1, "joincoal needs k >= 1");
                need(s.p >= s.k, "joincoal needs p >= k");
            } else if constexpr (std::is_same_v<T, StarJoinCoal>) {
                need(s.p >= 2, "starcoal needs p >= 2");
            } else if constexpr (std::is_same_v<T, BipartiteStar>) {
                need(s.p >= 1 && s.q >= 1 && s.n >= 1,
                     "bipartite_star needs p,q,n >= 1");
            } else if constexpr (std::is_same_v<T, BipartiteComplete>) {
                need(s.p >= 1 && s.q >= 1 && s.n >= 1,
                     "bipartite_complete needs p,q,n >= 1");
            } else if constexpr (std::is_same_v<T, Pineapple>) {
                need(s.p >= 2, "pineapple needs p >= 2");
                need(s.q >= 1, "pineapple needs q >= 1");
            } else if constexpr (std::is_same_v<T, Kite>) {
                need(s.p >= 2, "kite needs p >= 2");
            } else if constexpr (std::is_same_v<T, Dandelion>) {
                need(s.l >= 2, "dandelion needs l >= 2");
                need(s.l <= s.n - 1, "dandelion needs l <= n-1");
            }
            // Rose3 has no parameters.
        },
        spec);
}

std::string family_name(const FamilySpec& spec) {
    struct V {
        std::string operator()(const KCoalComplete&) { return "kcoal"; }
        std::string operator()(const Windmill&) { return "windmill"; }
        std::string operator()(const Rose3&) { return "rose3"; }
        std::string operator()(const JoinCoal&) { return "joincoal"; }
        std::string operator()(const StarJoinCoal&) { return "starcoal"; }
        std::string operator()(const BipartiteStar&) { return "bipartite_star"; }
        std::string operator()(const BipartiteComplete&) { return "bipartite_complete"; }
        std::string operator()(const Pineapple&) { return "pineapple"; }
        std::string operator()(const Kite&) { return "kite"; }
        std::string operator()(const Dandelion&) { return "dandelion"; }
    };
    return std::visit(V{}, spec);
}

std::string params_string(const FamilySpec& spec) {
    std::ostringstream os;
    std::visit(
        [&os](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, KCoalComplete>)
                os << "p1=" << s.p1 << ";p2=" << s.p2 << ";k=" << s.k;
            else if constexpr (std::is_same_v<T, Windmill>)
                os << "n=" << s.n << ";t=" << s.t;
            else if constexpr (std::is_same_v<T, JoinCoal>)
                os << "p=" << s.p << ";k=" << s.k << ";" << gparams(s.g, s.g_desc);
            else if constexpr (std::is_same_v<T, StarJoinCoal>)
                os << "p=" << s.p << ";" << gparams(s.g, s.g_desc);
            else if constexpr (std::is_same_v<T, BipartiteStar> ||
                               std::is_same_v<T, BipartiteComplete>)
                os << "p=" << s.p << ";q=" << s.q << ";n=" << s.n;
            else if constexpr (std::is_same_v<T, Pineapple>)
                os << "p=" << s.p << ";q=" << s.q;
            else if constexpr (std::is_same_v<T, Kite>)
                os << "p=" << s.p;
            else if constexpr (std::is_same_v<T, Dandelion>)
                os << "n=" << s.n << ";l=" << s.l;
            // Rose3: empty parameter list.
        },
        spec);
    return os.str();
}

FamilySpec parse_family(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const std::string rest =
        colon == std::string::npos ? "" : text.substr(colon + 1);

    FamilySpec spec;
    if (name == "kcoal") {
        auto kv = parse_kv(rest, {"p1", "p2", "k"});
        spec = KCoalComplete{parse_int(kv["p1"], "p1"), parse_int(kv["p2"], "p2"),
                             parse_int(kv["k"], "k")};
    } else if (name == "windmill") {
        auto kv = parse_kv(rest, {"n", "t"});
        spec = Windmill{parse_int(kv["n"], "n"), parse_int(kv["t"], "t")};
    } else if (name == "rose3") {
        parse_kv(rest, {});
        spec = Rose3{};
    } else if (name == "joincoal") {
        auto kv = parse_kv(rest, {"p", "k", "g"});
        auto [g, desc] = parse_inner_graph(kv["g"]);
        spec = JoinCoal{parse_int(kv["p"], "p"), parse_int(kv["k"], "k"),
                        std::move(g), desc};
    } else if (name == "starcoal") {
        auto kv = parse_kv(rest, {"p", "g"});
        auto [g, desc] = parse_inner_graph(kv["g"]);
        spec = StarJoinCoal{parse_int(kv["p"], "p"), std::move(g), desc};
    } else if (name == "bipartite_star") {
        auto kv = parse_kv(rest, {"p", "q", "n"});
        spec = BipartiteStar{parse_int(kv["p"], "p"), parse_int(kv["q"], "q"),
                             parse_int(kv["n"], "n")};
    } else if (name == "bipartite_complete") {
        auto kv = parse_kv(rest, {"p", "q", "n"});
        spec = BipartiteComplete{parse_int(kv["p"], "p"), parse_int(kv["q"], "q"),
                                 parse_int(kv["n"], "n")};
    } else if (name == "pineapple") {
        auto kv = parse_kv(rest, {"p", "q"});
        spec = Pineapple{parse_int(kv["p"], "p"), parse_int(kv["q"], "q")};
    } else if (name == "kite") {
        auto kv = parse_kv(rest, {"p"});
        spec = Kite{parse_int(kv["p"], "p")};
    } else if (name == "dandelion") {
        auto kv = parse_kv(rest, {"n", "l"});
        spec = Dandelion{parse_int(kv["n"], "n"), parse_int(kv["l"], "l")};
    } else {
        throw parse_error("unknown family '" + name + "'");
    }
    validate(spec);
    return spec;
}

namespace {

Graph relabel(Graph g, std::vector<std::string> labels) {
    return Graph(g.n(), g.edges(), std::move(labels));
}

Graph build_kcoal(int p1, int p2, int k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    Graph g = k_coalescence(make_standard(StandardKind::complete, {p1}), idx,
                            make_standard(StandardKind::complete, {p2}), idx);
    std::vector<std::string> labels(g.n());
    for (int i = 0; i < k; ++i) labels[i] = "identified";
    for (int i = k; i < p1; ++i) labels[i] = "left-block";
    for (int i = p1; i < g.n(); ++i) labels[i] = "right-block";
    return relabel(std::move(g), std::move(labels));
}

Graph build_windmill(int n, int t) {
    std::vector<std::pair<int, int>> e;
    std::vector<std::string> labels(1 + n * t);
    labels[0] = "identified";
    for (int b = 0; b < t; ++b) {
        const int base = 1 + b * n;
        for (int i = 0; i < n; ++i) {
            e.emplace_back(0, base + i);
            for (int j = i + 1; j < n; ++j) e.emplace_back(base + i, base + j);
        }
    }
    return Graph(1 + n * t, std::move(e), std::move(labels));
}

Graph build_joincoal(int p, int k, const Graph& g) {
    const int n = g.n();
    std::vector<std::pair<int, int>> e;
    // T u A spans K_p; T joined to all of G; G keeps its own edges.
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) e.emplace_back(i, j);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) e.emplace_back(i, p + j);
    for (const auto& [u, v] : g.edges()) e.emplace_back(p + u, p + v);
    std::vector<std::string> labels(p + n);
    for (int i = 0; i < k; ++i) labels[i] = "identified";
    for (int i = k; i < p; ++i) labels[i] = "left-block";
    return Graph(p + n, std::move(e), std::move(labels));
}

Graph build_starcoal(int p, const Graph& g) {
    const int n = g.n();
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < p; ++i) e.emplace_back(0, i);
    for (int j = 0; j < n; ++j) e.emplace_back(0, p + j);
    for (const auto& [u, v] : g.edges()) e.emplace_back(p + u, p + v);
    std::vector<std::string> labels(p + n);
    labels[0] = "identified";
    for (int i = 1; i < p; ++i) labels[i] = "pendant";
    return Graph(p + n, std::move(e), std::move(labels));
}

Graph build_bipartite_star(int p, int q, int n) {
    // u* = 0 (p-side), P remainder, Q side, then the n star leaves.
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
    for (int s = 0; s < n; ++s) e.emplace_back(0, p + q + s);
    std::vector<std::string> labels(p + q + n);
    labels[0] = "identified";
    for (int s = 0; s < n; ++s) labels[p + q + s] = "pendant";
    return Graph(p + q + n, std::move(e), std::move(labels));
}

Graph build_bipartite_complete(int p, int q, int n) {
    // u* = 0 doubles as a K_n vertex; N block holds the other n-1.
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
    const int base = p + q;
    for (int i = 0; i < n - 1; ++i) {
        e.emplace_back(0, base + i);
        for (int j = i + 1; j < n - 1; ++j) e.emplace_back(base + i, base + j);
    }
    std::vector<std::string> labels(p + q + n - 1);
    labels[0] = "identified";
    return Graph(p + q + n - 1, std::move(e), std::move(labels));
}

Graph build_pineapple(int p, int q) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) e.emplace_back(i, j);
    for (int s = 0; s < q; ++s) e.emplace_back(0, p + s);
    std::vector<std::string> labels(p + q);
    labels[0] = "identified";
    for (int s = 0; s < q; ++s) labels[p + s] = "pendant";
    return Graph(p + q, std::move(e), std::move(labels));
}

Graph build_dandelion(int n, int l) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < l; ++i) e.emplace_back(i, i + 1);
    for (int s = l; s < n; ++s) e.emplace_back(0, s);
    std::vector<std::string> labels(n);
    labels[0] = "identified";
    for (int i = 1; i < l; ++i) labels[i] = "path";
    for (int s = l; s < n; ++s) labels[s] = "pendant";
    return Graph(n, std::move(e), std::move(labels));
}

} // namespace

Graph build_family(const FamilySpec& spec) {
    validate(spec);
    struct V {
        Graph operator()(const KCoalComplete& s) {
            return build_kcoal(s.p1, s.p2, s.k);
        }
        Graph operator()(const Windmill& s) { return build_windmill(s.n, s.t); }
        Graph operator()(const Rose3&) { return build_windmill(2, 3); }
        Graph operator()(const JoinCoal& s) {
            return build_joincoal(s.p, s.k, s.g);
        }
        Graph operator()(const StarJoinCoal& s) {
            return build_starcoal(s.p, s.g);
        }
        Graph operator()(const BipartiteStar& s) {
            return build_bipartite_star(s.p, s.q, s.n);
        }
        Graph operator()(const BipartiteComplete& s) {
            return build_bipartite_complete(s.p, s.q, s.n);
        }
        Graph operator()(const Pineapple& s) { return build_pineapple(s.p, s.q); }
        Graph operator()(const Kite& s) {
            Graph g = build_kcoal(s.p, 2, 1);
            std::vector<std::string> labels(g.n());
            labels[0] = "identified";
            for (int i = 1; i < s.p; ++i) labels[i] = "left-block";
            labels[s.p] = "pendant";
            return relabel(std::move(g), std::move(labels));
        }
        Graph operator()(const Dandelion& s) {
            return build_dandelion(s.n, s.l);
        }
    };
    return std::visit(V{}, spec);
}

} // namespace rescoal
