#include "lietk/cartan.hpp"

#include "lietk/error.hpp"
#include "lietk/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace lietk {

std::optional<SimpleType> parse_type(const std::string &label, std::size_t rank) {
    if (label.empty())
        return std::nullopt;
    char f = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
    if (f < 'A' || f > 'G')
        return std::nullopt;
    std::size_t r = rank;
    if (label.size() > 1) {
        std::size_t parsed = 0;
        for (char c : label.substr(1)) {
            if (c < '0' || c > '9' || parsed > 1000)
                return std::nullopt;
            parsed = parsed * 10 + static_cast<std::size_t>(c - '0');
        }
        if (rank != 0 && rank != parsed)
            return std::nullopt;
        r = parsed;
    }
    if (r == 0) {
        // F and G only come in one rank
        if (f == 'F')
            r = 4;
        else if (f == 'G')
            r = 2;
        else
            return std::nullopt;
    }
    return SimpleType{f, r};
}

CartanMatrix named_cartan(char family, std::size_t rank) { return named_cartan(SimpleType{family, rank}); }

CartanMatrix named_cartan(SimpleType t) {
    const std::size_t l = t.rank;
    auto bad = [&]() -> CartanMatrix {
        fail(ErrorKind::InvalidArgument, "no Cartan matrix of type " + t.str());
    };
    bool ok = false;
    switch (t.family) {
    case 'A': ok = l >= 1; break;
    case 'B':
    case 'C': ok = l >= 2; break;
    case 'D': ok = l >= 3; break;
    case 'E': ok = l >= 6 && l <= 8; break;
    case 'F': ok = l == 4; break;
    case 'G': ok = l == 2; break;
    default: break;
    }
    if (!ok)
        return bad();
    CartanMatrix A;
    A.entries.assign(l, std::vector<int>(l, 0));
    auto link = [&](std::size_t i, std::size_t j) { A.entries[i][j] = A.entries[j][i] = -1; };
    for (std::size_t i = 0; i < l; ++i)
        A.entries[i][i] = 2;
    switch (t.family) {
    case 'A':
        for (std::size_t i = 0; i + 1 < l; ++i)
            link(i, i + 1);
        break;
    case 'B':
        for (std::size_t i = 0; i + 1 < l; ++i)
            link(i, i + 1);
        A.entries[l - 1][l - 2] = -2;
        break;
    case 'C':
        for (std::size_t i = 0; i + 1 < l; ++i)
            link(i, i + 1);
        A.entries[l - 2][l - 1] = -2;
        break;
    case 'D':
        for (std::size_t i = 0; i + 2 < l; ++i)
            link(i, i + 1);
        link(l - 3, l - 1);
        break;
    case 'E':
        link(0, 2);
        link(1, 3);
        for (std::size_t i = 2; i + 1 < l; ++i)
            link(i, i + 1);
        break;
    case 'F':
        A.entries = {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
        break;
    case 'G':
        A.entries = {{2, -1}, {-3, 2}};
        break;
    }
    return A;
}

CartanValidation validate_cartan(const CartanMatrix &A) {
    CartanValidation v;
    const std::size_t l = A.rank();
    v.square = std::all_of(A.entries.begin(), A.entries.end(),
                           [l](const auto &row) { return row.size() == l; });
    if (!v.square) {
        v.problems.push_back("matrix is not square");
        return v;
    }
    v.diagonal_two = v.off_diagonal_nonpositive = v.zero_pattern_symmetric = true;
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            const std::string at = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            if (i == j) {
                if (A(i, i) != 2) {
                    v.diagonal_two = false;
                    v.problems.push_back("diagonal entry " + at + " is not 2");
                }
                continue;
            }
            if (A(i, j) > 0) {
                v.off_diagonal_nonpositive = false;
                v.problems.push_back("off-diagonal entry " + at + " is positive");
            }
            if ((A(i, j) == 0) != (A(j, i) == 0) && i < j) {
                v.zero_pattern_symmetric = false;
                v.problems.push_back("entry " + at + " is zero but its transpose is not");
            }
        }
    if (!v.valid())
        return v;

    // d_j = d_i A_ij / A_ji along a spanning forest, then check every edge
    std::vector<std::optional<Rational>> d(l);
    std::vector<std::vector<std::size_t>> components;
    for (std::size_t s = 0; s < l; ++s) {
        if (d[s])
            continue;
        components.emplace_back();
        d[s] = Rational(1);
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            components.back().push_back(i);
            for (std::size_t j = 0; j < l; ++j)
                if (j != i && A(i, j) != 0 && !d[j]) {
                    d[j] = *d[i] * Rational(A(i, j)) / Rational(A(j, i));
                    queue.push_back(j);
                }
        }
    }
    v.symmetrizable = true;
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j)
            if (*d[i] * Rational(A(i, j)) != *d[j] * Rational(A(j, i)))
                v.symmetrizable = false;
    if (!v.symmetrizable) {
        v.problems.push_back("matrix is not symmetrizable");
        return v;
    }
    for (const auto &comp : components) {
        Rational lo = *d[comp.front()];
        for (auto i : comp)
            lo = std::min(lo, *d[i]);
        for (auto i : comp)
            d[i] = *d[i] / lo;
    }
    for (auto &x : d)
        v.symmetrizer.push_back(*x);

    Matrix S(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            S(i, j) = v.symmetrizer[i] * Rational(A(i, j));
    v.finite_type = true;
    for (std::size_t k = 1; k <= l && v.finite_type; ++k) {
        Matrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                minor(i, j) = S(i, j);
        if (determinant(minor).sign() <= 0) {
            v.finite_type = false;
            v.problems.push_back("symmetrised matrix is not positive definite (leading minor " +
                                 std::to_string(k) + " is " + determinant(minor).str() + ")");
        }
    }
    return v;
}

int height(const Root &r) { return std::accumulate(r.begin(), r.end(), 0); }

std::vector<Root> RootSystem::all() const {
    std::vector<Root> out = positive;
    for (const auto &r : positive) {
        Root n = r;
        for (auto &c : n)
            c = -c;
        out.push_back(std::move(n));
    }
    return out;
}

bool RootSystem::contains(const Root &r) const { return index.count(r) > 0; }

std::optional<std::size_t> RootSystem::positive_index(const Root &r) const {
    auto it = index.find(r);
    if (it == index.end())
        return std::nullopt;
    return it->second % positive.size();
}

int RootSystem::pairing(const Root &r, std::size_t i) const {
    int s = 0;
    for (std::size_t j = 0; j < r.size(); ++j)
        s += r[j] * cartan(i, j);
    return s;
}

Rational RootSystem::inner(const Root &r, const Root &s) const {
    Rational acc;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0)
            continue;
        long row = 0;
        for (std::size_t j = 0; j < s.size(); ++j)
            row += static_cast<long>(s[j]) * cartan(i, j);
        acc += Rational(static_cast<long>(r[i]) * row) * symmetrizer[i];
    }
    return acc;
}

RootSystem roots_from_cartan(const CartanMatrix &A) {
    CartanValidation v = validate_cartan(A);
    if (!v.valid() || !v.finite_type) {
        std::string why = v.problems.empty() ? "not of finite type" : v.problems.front();
        fail(ErrorKind::NotFiniteType, "Cartan matrix rejected: " + why);
    }
    const std::size_t l = A.rank();
    RootSystem R;
    R.cartan = A;
    R.symmetrizer = v.symmetrizer;
    std::set<Root> seen;
    std::vector<Root> level;
    for (std::size_t i = 0; i < l; ++i) {
        Root r(l, 0);
        r[i] = 1;
        level.push_back(r);
        seen.insert(r);
    }
    auto string_down = [&](Root r, std::size_t i) {
        int p = 0;
        while (true) {
            r[i] -= 1;
            if (!seen.count(r))
                return p;
            ++p;
        }
    };
    while (!level.empty()) {
        R.positive.insert(R.positive.end(), level.begin(), level.end());
        std::set<Root> next;
        for (const auto &r : level)
            for (std::size_t i = 0; i < l; ++i) {
                int q = string_down(r, i) - R.pairing(r, i);
                if (q > 0) {
                    Root s = r;
                    s[i] += 1;
                    next.insert(s);
                }
            }
        for (const auto &s : next)
            seen.insert(s);
        level.assign(next.begin(), next.end());
    }
    const auto all = R.all();
    for (std::size_t k = 0; k < all.size(); ++k)
        R.index.emplace(all[k], k);

    // every i-string through every root is unbroken with p - q = <r, alpha_i^vee>
    for (const auto &r : all)
        for (std::size_t i = 0; i < l; ++i) {
            if (std::abs(r[i]) == 1 && std::abs(height(r)) == 1)
                continue; // the alpha_i-string through +-alpha_i passes through 0
            int p = 0, q = 0;
            for (Root s = r; (s[i] -= 1, R.contains(s));)
                ++p;
            for (Root s = r; (s[i] += 1, R.contains(s));)
                ++q;
            if (p - q != R.pairing(r, i))
                fail(ErrorKind::InternalDefect, "broken root string during generation");
        }
    return R;
}

DynkinDiagram dynkin(const CartanMatrix &A) {
    CartanValidation v = validate_cartan(A);
    if (!v.valid())
        fail(ErrorKind::NotFiniteType, "not a generalised Cartan matrix: " + v.problems.front());
    DynkinDiagram D;
    D.nodes = A.rank();
    for (std::size_t i = 0; i < D.nodes; ++i)
        for (std::size_t j = i + 1; j < D.nodes; ++j) {
            if (A(i, j) == 0)
                continue;
            DynkinEdge e{i, j, A(i, j) * A(j, i), std::nullopt};
            if (e.multiplicity > 1) {
                if (std::abs(A(i, j)) > std::abs(A(j, i)))
                    e.arrow_to = i;
                else if (std::abs(A(j, i)) > std::abs(A(i, j)))
                    e.arrow_to = j;
            }
            D.edges.push_back(e);
        }
    return D;
}

namespace {

struct Graph {
    std::size_t n;
    std::vector<std::vector<std::size_t>> adj;
    std::map<std::pair<std::size_t, std::size_t>, const DynkinEdge *> edge;

    explicit Graph(const DynkinDiagram &D) : n(D.nodes), adj(D.nodes) {
        for (const auto &e : D.edges) {
            adj[e.i].push_back(e.j);
            adj[e.j].push_back(e.i);
            edge[{e.i, e.j}] = &e;
            edge[{e.j, e.i}] = &e;
        }
        for (auto &a : adj)
            std::sort(a.begin(), a.end());
    }

    const DynkinEdge &at(std::size_t a, std::size_t b) const { return *edge.at({a, b}); }

    std::vector<std::vector<std::size_t>> components() const {
        std::vector<int> comp(n, -1);
        std::vector<std::vector<std::size_t>> out;
        for (std::size_t s = 0; s < n; ++s) {
            if (comp[s] >= 0)
                continue;
            out.emplace_back();
            std::deque<std::size_t> q{s};
            comp[s] = static_cast<int>(out.size() - 1);
            while (!q.empty()) {
                auto u = q.front();
                q.pop_front();
                out.back().push_back(u);
                for (auto w : adj[u])
                    if (comp[w] < 0) {
                        comp[w] = comp[s];
                        q.push_back(w);
                    }
            }
            std::sort(out.back().begin(), out.back().end());
        }
        return out;
    }

    std::size_t edge_count(const std::vector<std::size_t> &nodes) const {
        std::size_t c = 0;
        for (auto u : nodes)
            c += adj[u].size();
        return c / 2;
    }

    // Path between two nodes of a tree.
    std::vector<std::size_t> tree_path(std::size_t from, std::size_t to) const {
        std::map<std::size_t, std::size_t> parent{{from, from}};
        std::deque<std::size_t> q{from};
        while (!q.empty()) {
            auto u = q.front();
            q.pop_front();
            for (auto w : adj[u])
                if (!parent.count(w)) {
                    parent[w] = u;
                    q.push_back(w);
                }
        }
        std::vector<std::size_t> path{to};
        while (path.back() != from)
            path.push_back(parent.at(path.back()));
        std::reverse(path.begin(), path.end());
        return path;
    }

    // Longest path in a tree component; ties broken by the lexicographically
    // smallest node sequence, read from the smaller endpoint.
    std::vector<std::size_t> longest_path(const std::vector<std::size_t> &nodes) const {
        if (nodes.size() == 1)
            return nodes;
        std::vector<std::size_t> best;
        for (auto a : nodes)
            for (auto b : nodes) {
                if (a >= b || adj[a].size() != 1 || adj[b].size() != 1)
                    continue;
                auto p = tree_path(a, b);
                if (p.size() > best.size() || (p.size() == best.size() && p < best))
                    best = std::move(p);
            }
        return best;
    }
};

std::optional<SimpleType> classify_component(const Graph &G, const std::vector<std::size_t> &nodes) {
    const std::size_t n = nodes.size();
    if (n == 1)
        return SimpleType{'A', 1};
    if (G.edge_count(nodes) != n - 1)
        return std::nullopt; // contains a cycle
    std::vector<const DynkinEdge *> multi;
    std::size_t max_deg = 0;
    for (auto u : nodes) {
        max_deg = std::max(max_deg, G.adj[u].size());
        for (auto w : G.adj[u]) {
            const auto &e = G.at(u, w);
            if (e.multiplicity > 3)
                return std::nullopt;
            if (e.multiplicity > 1 && u < w)
                multi.push_back(&e);
        }
    }
    if (!multi.empty()) {
        if (multi.size() > 1 || max_deg > 2 || !multi.front()->arrow_to)
            return std::nullopt;
        const DynkinEdge &e = *multi.front();
        if (e.multiplicity == 3)
            return n == 2 ? std::optional<SimpleType>(SimpleType{'G', 2}) : std::nullopt;
        if (n == 2)
            return SimpleType{*e.arrow_to == e.j ? 'B' : 'C', 2};
        bool i_end = G.adj[e.i].size() == 1, j_end = G.adj[e.j].size() == 1;
        if (i_end || j_end) {
            std::size_t terminal = i_end ? e.i : e.j;
            return SimpleType{*e.arrow_to == terminal ? 'B' : 'C', n};
        }
        return n == 4 ? std::optional<SimpleType>(SimpleType{'F', 4}) : std::nullopt;
    }
    if (max_deg <= 2)
        return SimpleType{'A', n};
    std::vector<std::size_t> branch;
    for (auto u : nodes)
        if (G.adj[u].size() >= 3)
            branch.push_back(u);
    if (branch.size() != 1 || G.adj[branch[0]].size() != 3)
        return std::nullopt;
    std::vector<std::size_t> arms;
    for (auto start : G.adj[branch[0]]) {
        std::size_t len = 1, prev = branch[0], cur = start;
        while (G.adj[cur].size() == 2) {
            std::size_t nxt = G.adj[cur][0] == prev ? G.adj[cur][1] : G.adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1)
        return SimpleType{'D', n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return SimpleType{'E', n};
    return std::nullopt;
}

// Edge drawn left to right; the arrow points at the short-root end.
std::string glyph(const DynkinEdge &e, std::size_t right) {
    switch (e.multiplicity) {
    case 1: return "---";
    case 2:
    case 3: {
        std::string bar = e.multiplicity == 2 ? "=" : "≡";
        std::string mid = !e.arrow_to ? bar : (*e.arrow_to == right ? ">" : "<");
        return bar + mid + bar;
    }
    default:
        return "-" + std::to_string(e.multiplicity) + "-";
    }
}

std::string render_component_ascii(const Graph &G, const std::vector<std::size_t> &nodes) {
    auto edge_list = [&]() {
        std::string out;
        for (auto u : nodes)
            for (auto w : G.adj[u])
                if (u < w) {
                    const auto &e = G.at(u, w);
                    out += std::to_string(u + 1) + glyph(e, w) + std::to_string(w + 1) + "\n";
                }
        if (out.empty())
            for (auto u : nodes)
                out += std::to_string(u + 1) + "\n";
        return out;
    };
    if (G.edge_count(nodes) != nodes.size() - 1)
        return edge_list();
    auto path = G.longest_path(nodes);
    std::string line;
    for (std::size_t k = 0; k < path.size(); ++k) {
        line += "o";
        if (k + 1 < path.size())
            line += glyph(G.at(path[k], path[k + 1]), path[k + 1]);
    }
    if (path.size() == nodes.size())
        return line + "\n";
    // every node off the path must be a leaf hanging by a simple edge, one per column
    std::map<std::size_t, std::size_t> hang; // path position -> node
    for (auto u : nodes) {
        if (std::find(path.begin(), path.end(), u) != path.end())
            continue;
        if (G.adj[u].size() != 1)
            return edge_list();
        auto at = std::find(path.begin(), path.end(), G.adj[u][0]);
        if (at == path.end() || G.at(u, *at).multiplicity != 1 ||
            !hang.emplace(static_cast<std::size_t>(at - path.begin()), u).second)
            return edge_list();
    }
    std::string bars, dots;
    for (const auto &[pos, u] : hang) {
        (void)u;
        bars.resize(4 * pos, ' ');
        dots.resize(4 * pos, ' ');
        bars += "|";
        dots += "o";
    }
    return line + "\n" + bars + "\n" + dots + "\n";
}

} // namespace

std::vector<RecognizedComponent> recognize(const DynkinDiagram &D) {
    Graph G(D);
    std::vector<RecognizedComponent> out;
    for (auto &comp : G.components())
        out.push_back({comp, classify_component(G, comp)});
    return out;
}

std::string render_dynkin(const DynkinDiagram &D, DynkinFormat f) {
    Graph G(D);
    if (f == DynkinFormat::ascii) {
        std::string out;
        for (const auto &comp : G.components()) {
            if (!out.empty())
                out += "\n";
            out += render_component_ascii(G, comp);
        }
        return out;
    }
    std::ostringstream os;
    os << "graph dynkin {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t i = 0; i < D.nodes; ++i)
        os << "  " << i + 1 << " [label=\"" << i + 1 << "\"];\n";
    for (const auto &e : D.edges) {
        std::size_t a = e.i, b = e.j;
        bool directed = e.arrow_to.has_value();
        if (directed && *e.arrow_to == e.i)
            std::swap(a, b); // draw from the long root to the short one
        os << "  " << a + 1 << " -- " << b + 1 << " [label=\"" << e.multiplicity << "\"";
        if (directed)
            os << ", dir=forward";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace lietk
