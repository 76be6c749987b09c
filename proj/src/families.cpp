#include "psum/families.hpp"

#include <cctype>

#include "psum/bigint.hpp"

namespace psum {

std::string to_string(BicyclicClass c) {
    switch (c) {
        case BicyclicClass::TypeB1: return "TypeB1";
        case BicyclicClass::TypeB2: return "TypeB2";
        case BicyclicClass::TypeB3: return "TypeB3";
    }
    return "?";
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw ParseError(msg);
}

// append a pendant path of k vertices, bridged to `at` by one new edge
Graph attach_path(const Graph& g, int at, int k) {
    if (k == 0) return g;
    return bridge(g, at, make_path(k), 0);
}

} // namespace

Graph make_empty(int n) { return Graph(n); }

Graph make_path(int n) {
    require(n >= 1, "P(n): n >= 1 required");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    require(n >= 3, "C(n): n >= 3 required");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_D(int r, int s) {
    require(r >= 3, "D(r,s): r >= 3 required");
    require(s >= 0, "D(r,s): s >= 0 required");
    return attach_path(make_cycle(r), 0, s);
}

Graph make_Dprime(int n, int r) {
    require(n >= 5, "DP(n,r): n >= 5 required");
    require(1 <= r && r <= n - 3, "DP(n,r): 1 <= r <= n-3 required");
    Graph g = disjoint_union(make_path(n - 3), make_cycle(3));
    g.add_edge(r - 1, n - 3);
    return g;
}

Graph make_B1(int p, int q) {
    require(p >= 3 && q >= 3, "B1(p,q): p,q >= 3 required");
    return identify(make_cycle(p), 0, make_cycle(q), 0);
}

Graph make_B2(int p, int q, int r) {
    require(p >= 3 && q >= 3, "B2(p,q,r): p,q >= 3 required");
    require(r >= 0, "B2(p,q,r): r >= 0 required");
    Graph g = disjoint_union(make_cycle(p), make_cycle(q));
    if (r == 0) {
        g.add_edge(0, p);
    } else {
        g = disjoint_union(g, make_path(r));
        g.add_edge(0, p + q);
        g.add_edge(p + q + r - 1, p);
    }
    return g;
}

Graph make_B3(int p, int q, int r) {
    require(p >= 0 && q >= 0 && r >= 0, "B3(p,q,r): nonnegative parameters required");
    require((p == 0) + (q == 0) + (r == 0) <= 1,
            "B3(p,q,r): at most one parameter may be 0");
    Graph g(p + q + r + 2);
    int off = 2;
    for (int len : {p, q, r}) {
        if (len == 0) {
            g.add_edge(0, 1);
        } else {
            g.add_edge(0, off);
            for (int i = 0; i + 1 < len; ++i) g.add_edge(off + i, off + i + 1);
            g.add_edge(off + len - 1, 1);
            off += len;
        }
    }
    return g;
}

Graph make_B1A(int p, int q, int r, B1Attach at) {
    require(r >= 1, "B1A(p,q,r,at): r >= 1 required");
    return attach_path(make_B1(p, q), at == B1Attach::Hub ? 0 : 1, r);
}

Graph make_B2P(int k) {
    require(k >= 1, "B2P(k): k >= 1 required");
    return attach_path(make_B2(3, 3, 1), 6, k);
}

Graph make_B3P(int k) {
    require(k >= 1, "B3P(k): k >= 1 required");
    return attach_path(make_B3(1, 1, 0), 2, k);
}

Graph make_B3H(int k) {
    require(k >= 1, "B3H(k): k >= 1 required");
    return attach_path(make_B3(1, 1, 0), 0, k);
}

BicyclicClass classify_bicyclic(const Graph& g) {
    if (!is_connected(g) || g.size() != g.order() + 1)
        throw std::invalid_argument("classify_bicyclic: graph is not connected bicyclic");
    Graph core = two_core(g).core;
    for (int v = 0; v < core.order(); ++v)
        if (core.degree(v) == 4) return BicyclicClass::TypeB1;
    if (all_cycles(core).size() == 3) return BicyclicClass::TypeB3;
    return BicyclicClass::TypeB2;
}

FamilySpec parse_family(std::string_view text) {
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])))) ++i;
    FamilySpec spec;
    spec.tag = std::string(text.substr(start, i - start));
    static const char* kTags[] = {"P", "C", "D", "DP", "B1", "B2", "B3", "B1A", "B2P", "B3P", "B3H"};
    bool known = false;
    for (auto* t : kTags) known = known || spec.tag == t;
    require(known, "unknown family tag '" + spec.tag + "'");
    skip_ws();
    require(i < text.size() && text[i] == '(', "family spec: expected '('");
    ++i;
    bool closed = false;
    while (i < text.size()) {
        skip_ws();
        if (i < text.size() && text[i] == ')') { ++i; closed = true; break; }
        if (std::isdigit(static_cast<unsigned char>(text[i])) ||
            (text[i] == '-' && i + 1 < text.size())) {
            std::size_t j = i + (text[i] == '-' ? 1 : 0);
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            require(j > i + (text[i] == '-' ? 1 : 0), "family spec: bad integer");
            spec.args.push_back(std::stoi(std::string(text.substr(i, j - i))));
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
            std::string word(text.substr(i, j - i));
            require(spec.tag == "B1A" && (word == "hub" || word == "rim"),
                    "family spec: unexpected token '" + word + "'");
            spec.attach = (word == "hub") ? B1Attach::Hub : B1Attach::Rim;
            spec.args.push_back(-1); // placeholder marking the attach token position
            i = j;
        } else {
            throw ParseError("family spec: unexpected character");
        }
        skip_ws();
        if (i < text.size() && text[i] == ',') { ++i; continue; }
    }
    require(closed, "family spec: expected ')'");
    skip_ws();
    require(i == text.size(), "family spec: trailing characters");
    return spec;
}

Graph build_family(const FamilySpec& spec) {
    const auto& a = spec.args;
    auto arity = [&](std::size_t k) {
        require(a.size() == k, spec.tag + ": expected " + std::to_string(k) + " arguments");
    };
    if (spec.tag == "P") { arity(1); return make_path(a[0]); }
    if (spec.tag == "C") { arity(1); return make_cycle(a[0]); }
    if (spec.tag == "D") { arity(2); return make_D(a[0], a[1]); }
    if (spec.tag == "DP") { arity(2); return make_Dprime(a[0], a[1]); }
    if (spec.tag == "B1") { arity(2); return make_B1(a[0], a[1]); }
    if (spec.tag == "B2") { arity(3); return make_B2(a[0], a[1], a[2]); }
    if (spec.tag == "B3") { arity(3); return make_B3(a[0], a[1], a[2]); }
    if (spec.tag == "B1A") {
        arity(4);
        require(a[3] == -1, "B1A: fourth argument must be 'hub' or 'rim'");
        return make_B1A(a[0], a[1], a[2], spec.attach);
    }
    if (spec.tag == "B2P") { arity(1); return make_B2P(a[0]); }
    if (spec.tag == "B3P") { arity(1); return make_B3P(a[0]); }
    if (spec.tag == "B3H") { arity(1); return make_B3H(a[0]); }
    throw ParseError("unknown family tag '" + spec.tag + "'");
}

} // namespace psum
