#pragma once

#include <charconv>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "renlib/graph.hpp"

namespace renlib {

// ---------------------------------------------------------------------------
// Graph-level constructions
// ---------------------------------------------------------------------------

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph edgeless_graph(int n) {
    if (n < 1) throw std::invalid_argument("edgeless graph needs at least 1 vertex");
    return Graph(n);
}

/// Wheel with an n-vertex rim: rim cycle on 0..n-1, hub last (vertex n).
inline Graph wheel_graph(int rim) {
    if (rim < 3) throw std::invalid_argument("wheel rim needs at least 3 vertices");
    Graph g(rim + 1);
    for (int v = 0; v < rim; ++v) {
        g.add_edge(v, (v + 1) % rim);
        g.add_edge(v, rim);
    }
    return g;
}

/// Fan: path on 0..n-1 joined to hub n.
inline Graph fan_graph(int n) {
    if (n < 1) throw std::invalid_argument("fan needs a path of at least 1 vertex");
    Graph g(n + 1);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    for (int v = 0; v < n; ++v) g.add_edge(v, n);
    return g;
}

/// Jahangir: cycle on 0..nm-1 plus hub nm adjacent to positions 0, n, 2n, ...
inline Graph jahangir_graph(int n, int m) {
    if (n < 1 || m < 3) throw std::invalid_argument("jahangir needs step >= 1 and spokes >= 3");
    long long cyc = static_cast<long long>(n) * m;
    if (cyc + 1 > Graph::max_order)
        throw std::invalid_argument("jahangir order " + std::to_string(cyc + 1) + " above supported maximum");
    int c = static_cast<int>(cyc);
    Graph g(c + 1);
    for (int v = 0; v < c; ++v) g.add_edge(v, (v + 1) % c);
    for (int s = 0; s < m; ++s) g.add_edge(s * n, c);
    return g;
}

/// Mycielskian: originals 0..n-1, twin of v at n+v adjacent to N(v), root 2n
/// adjacent to every twin.
inline Graph mycielskian(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("mycielskian needs a nonempty graph");
    Graph out(2 * g.n + 1);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.neighbours(u)) {
            if (u < v) out.add_edge(u, v);
            out.add_edge(g.n + u, v);
        }
    for (int u = 0; u < g.n; ++u) out.add_edge(g.n + u, 2 * g.n);
    return out;
}

/// Shadow: two copies of g plus cross edges u ~ n+v for every edge uv of g.
inline Graph shadow(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("shadow needs a nonempty graph");
    Graph out(2 * g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.neighbours(u)) {
            if (u < v) {
                out.add_edge(u, v);
                out.add_edge(g.n + u, g.n + v);
            }
            out.add_edge(u, g.n + v);
        }
    return out;
}

/// Join: a's vertices first, then b's, with all cross edges.
inline Graph join_graphs(const Graph& a, const Graph& b) {
    Graph out(a.n + b.n);
    for (int u = 0; u < a.n; ++u)
        for (int v : a.neighbours(u))
            if (u < v) out.add_edge(u, v);
    for (int u = 0; u < b.n; ++u)
        for (int v : b.neighbours(u))
            if (u < v) out.add_edge(a.n + u, a.n + v);
    for (int u = 0; u < a.n; ++u)
        for (int v = 0; v < b.n; ++v) out.add_edge(u, a.n + v);
    return out;
}

/// Corona: g's vertices first; copy i of h occupies the contiguous block
/// g.n + i*h.n .. g.n + (i+1)*h.n - 1 and is completely joined to vertex i.
inline Graph corona(const Graph& g, const Graph& h) {
    if (g.n < 1 || h.n < 1) throw std::invalid_argument("corona needs nonempty operands");
    Graph out(g.n + g.n * h.n);
    for (int u = 0; u < g.n; ++u)
        for (int v : g.neighbours(u))
            if (u < v) out.add_edge(u, v);
    for (int i = 0; i < g.n; ++i) {
        int base = g.n + i * h.n;
        for (int u = 0; u < h.n; ++u) {
            out.add_edge(i, base + u);
            for (int v : h.neighbours(u))
                if (u < v) out.add_edge(base + u, base + v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Family specs and the CLI mini-grammar
// ---------------------------------------------------------------------------

enum class Family {
    path,
    cycle,
    complete,
    edgeless,
    wheel,
    fan,
    jahangir,
    mycielskian,
    shadow,
    join,
    corona,
};

/// A buildable description of one of the supported graph families, possibly
/// nested (mycielskian/shadow take one operand, join/corona take two).
struct FamilySpec {
    Family family = Family::path;
    int a = 0;
    int b = 0;
    std::vector<FamilySpec> parts;

    static FamilySpec path(int n) { return make(Family::path, n); }
    static FamilySpec cycle(int n) { return make(Family::cycle, n); }
    static FamilySpec complete(int n) { return make(Family::complete, n); }
    static FamilySpec edgeless(int n) { return make(Family::edgeless, n); }
    static FamilySpec wheel(int rim) { return make(Family::wheel, rim); }
    static FamilySpec fan(int n) { return make(Family::fan, n); }
    static FamilySpec jahangir(int n, int m) { return make(Family::jahangir, n, m); }
    static FamilySpec mycielskian(FamilySpec inner) { return wrap(Family::mycielskian, std::move(inner)); }
    static FamilySpec shadow(FamilySpec inner) { return wrap(Family::shadow, std::move(inner)); }
    static FamilySpec join(FamilySpec x, FamilySpec y) { return wrap2(Family::join, std::move(x), std::move(y)); }
    static FamilySpec corona(FamilySpec x, FamilySpec y) { return wrap2(Family::corona, std::move(x), std::move(y)); }

    std::string to_string() const;

    bool operator==(const FamilySpec&) const = default;

  private:
    static FamilySpec make(Family f, int a, int b = 0) {
        FamilySpec s;
        s.family = f;
        s.a = a;
        s.b = b;
        return s;
    }
    static FamilySpec wrap(Family f, FamilySpec inner) {
        FamilySpec s;
        s.family = f;
        s.parts.push_back(std::move(inner));
        return s;
    }
    static FamilySpec wrap2(Family f, FamilySpec x, FamilySpec y) {
        FamilySpec s;
        s.family = f;
        s.parts.push_back(std::move(x));
        s.parts.push_back(std::move(y));
        return s;
    }
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::complete: return "complete";
        case Family::edgeless: return "edgeless";
        case Family::wheel: return "wheel";
        case Family::fan: return "fan";
        case Family::jahangir: return "jahangir";
        case Family::mycielskian: return "mycielskian";
        case Family::shadow: return "shadow";
        case Family::join: return "join";
        case Family::corona: return "corona";
    }
    return "?";
}

inline std::string FamilySpec::to_string() const {
    std::string s = family_name(family);
    switch (family) {
        case Family::jahangir:
            return s + ":" + std::to_string(a) + "," + std::to_string(b);
        case Family::mycielskian:
        case Family::shadow:
            return s + ":(" + parts[0].to_string() + ")";
        case Family::join:
        case Family::corona:
            return s + ":(" + parts[0].to_string() + ")/(" + parts[1].to_string() + ")";
        default:
            return s + ":" + std::to_string(a);
    }
}

inline Graph build(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::path: return path_graph(spec.a);
        case Family::cycle: return cycle_graph(spec.a);
        case Family::complete: return complete_graph(spec.a);
        case Family::edgeless: return edgeless_graph(spec.a);
        case Family::wheel: return wheel_graph(spec.a);
        case Family::fan: return fan_graph(spec.a);
        case Family::jahangir: return jahangir_graph(spec.a, spec.b);
        case Family::mycielskian: return mycielskian(build(spec.parts.at(0)));
        case Family::shadow: return shadow(build(spec.parts.at(0)));
        case Family::join: return join_graphs(build(spec.parts.at(0)), build(spec.parts.at(1)));
        case Family::corona: return corona(build(spec.parts.at(0)), build(spec.parts.at(1)));
    }
    throw std::invalid_argument("unknown family");
}

namespace detail {

[[noreturn]] inline void bad_spec(std::string_view text, const std::string& why) {
    throw std::invalid_argument("bad family spec '" + std::string(text) + "': " + why);
}

inline int parse_spec_int(std::string_view text, std::string_view token) {
    int value = 0;
    auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || p != token.data() + token.size())
        bad_spec(text, "expected an integer, got '" + std::string(token) + "'");
    return value;
}

/// Strips one level of matching outer parentheses, if present.
inline std::string_view strip_parens(std::string_view t) {
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
        int depth = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] == '(') ++depth;
            if (t[i] == ')' && --depth == 0 && i + 1 != t.size()) return t;
        }
        return t.substr(1, t.size() - 2);
    }
    return t;
}

inline FamilySpec parse_spec_impl(std::string_view full, std::string_view t);

/// Splits on the single '/' at parenthesis depth zero.
inline std::pair<std::string_view, std::string_view> split_operands(std::string_view full,
                                                                    std::string_view t) {
    int depth = 0;
    std::size_t cut = std::string_view::npos;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] == '(') ++depth;
        else if (t[i] == ')') --depth;
        else if (t[i] == '/' && depth == 0) {
            if (cut != std::string_view::npos) bad_spec(full, "more than one top-level '/'");
            cut = i;
        }
    }
    if (depth != 0) bad_spec(full, "unbalanced parentheses");
    if (cut == std::string_view::npos) bad_spec(full, "expected two operands separated by '/'");
    return {t.substr(0, cut), t.substr(cut + 1)};
}

inline FamilySpec parse_spec_impl(std::string_view full, std::string_view t) {
    t = strip_parens(t);
    if (t.empty()) bad_spec(full, "empty spec");

    std::size_t colon = t.find(':');
    std::string name(colon == std::string_view::npos ? t : t.substr(0, colon));
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : t.substr(colon + 1);

    auto want_rest = [&] {
        if (rest.empty()) bad_spec(full, "'" + name + "' needs parameters");
    };

    if (name == "path" || name == "cycle" || name == "complete" || name == "edgeless" ||
        name == "wheel" || name == "fan") {
        want_rest();
        int n = parse_spec_int(full, rest);
        if (name == "path") return FamilySpec::path(n);
        if (name == "cycle") return FamilySpec::cycle(n);
        if (name == "complete") return FamilySpec::complete(n);
        if (name == "edgeless") return FamilySpec::edgeless(n);
        if (name == "wheel") return FamilySpec::wheel(n);
        return FamilySpec::fan(n);
    }
    if (name == "jahangir") {
        want_rest();
        std::size_t comma = rest.find(',');
        if (comma == std::string_view::npos) bad_spec(full, "jahangir needs two parameters n,m");
        return FamilySpec::jahangir(parse_spec_int(full, rest.substr(0, comma)),
                                    parse_spec_int(full, rest.substr(comma + 1)));
    }
    if (name == "mycielskian" || name == "shadow") {
        want_rest();
        FamilySpec inner = parse_spec_impl(full, rest);
        return name == "mycielskian" ? FamilySpec::mycielskian(std::move(inner))
                                     : FamilySpec::shadow(std::move(inner));
    }
    if (name == "join" || name == "corona") {
        want_rest();
        auto [left, right] = split_operands(full, rest);
        FamilySpec x = parse_spec_impl(full, left);
        FamilySpec y = parse_spec_impl(full, right);
        return name == "join" ? FamilySpec::join(std::move(x), std::move(y))
                              : FamilySpec::corona(std::move(x), std::move(y));
    }
    bad_spec(full, "unknown family '" + name + "'");
}

}  // namespace detail

/// Parses the CLI mini-grammar, e.g. "cycle:5", "jahangir:2,5",
/// "corona:(complete:4)/(complete:2)", "mycielskian:cycle:5".
inline FamilySpec parse_family_spec(std::string_view text) {
    return detail::parse_spec_impl(text, text);
}

}  // namespace renlib
