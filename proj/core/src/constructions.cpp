#include "hyperchrome/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace hyperchrome {

namespace {

std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

}  // namespace

Hypergraph complete(std::size_t n) {
    if (n < 3) throw std::invalid_argument("complete 3-graph needs n >= 3");
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(choose3(n));
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) edges.push_back({a, b, c});
    return Hypergraph(n, 3, edges);
}

Hypergraph loose_cycle(std::size_t l) {
    if (l < 3) throw std::invalid_argument("loose cycle needs length >= 3");
    std::vector<std::vector<Vertex>> edges;
    const auto n = static_cast<Vertex>(2 * l);
    for (Vertex i = 0; i < l; ++i) edges.push_back({2 * i, 2 * i + 1, (2 * i + 2) % n});
    return Hypergraph(n, 3, edges);
}

Hypergraph loose_path(std::size_t l) {
    if (l < 1) throw std::invalid_argument("loose path needs length >= 1");
    std::vector<std::vector<Vertex>> edges;
    for (Vertex i = 0; i < l; ++i) edges.push_back({2 * i, 2 * i + 1, 2 * i + 2});
    return Hypergraph(2 * l + 1, 3, edges);
}

std::vector<std::string_view> named_graphs() {
    return {"k4", "k4_minus", "linear_pair", "neighborhood5", "sunflower7", "fano"};
}

Hypergraph named(std::string_view name) {
    using E = std::vector<std::vector<Vertex>>;
    if (name == "k4") return Hypergraph(4, 3, E{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    if (name == "k4_minus") return Hypergraph(4, 3, E{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    if (name == "linear_pair") return Hypergraph(4, 3, E{{0, 1, 2}, {0, 1, 3}});
    if (name == "neighborhood5")
        return Hypergraph(5, 3, E{{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {2, 3, 4}});
    if (name == "sunflower7")
        return Hypergraph(7, 3, E{{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}});
    if (name == "fano") {
        E lines;
        for (Vertex i = 0; i < 7; ++i) lines.push_back({i, (i + 1) % 7, (i + 3) % 7});
        return Hypergraph(7, 3, lines);
    }
    throw std::invalid_argument("unknown named hypergraph '" + std::string(name) + "'");
}

Hypergraph partition_example(std::size_t r, std::size_t t) {
    if (r < 1 || t < 3) throw std::invalid_argument("partition example needs r >= 1, t >= 3");
    const std::size_t n = (t - 1) * r;
    auto part = [&](Vertex v) { return v / (t - 1); };
    std::vector<std::vector<Vertex>> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (!(part(a) == part(b) && part(b) == part(c))) edges.push_back({a, b, c});
    return Hypergraph(n, 3, edges);
}

Hypergraph gq(std::size_t q) {
    auto is_prime = [](std::size_t x) {
        if (x < 2) return false;
        for (std::size_t d = 2; d * d <= x; ++d)
            if (x % d == 0) return false;
        return true;
    };
    if (!is_prime(q)) throw std::invalid_argument("gq supports prime q only");

    using Vec = std::array<std::size_t, 4>;
    auto normalize = [&](Vec v) {
        std::size_t lead = 0;
        while (v[lead] == 0) ++lead;
        std::size_t inv = 1;
        while ((v[lead] * inv) % q != 1) ++inv;
        for (auto& x : v) x = (x * inv) % q;
        return v;
    };
    auto code = [&](const Vec& v) { return ((v[0] * q + v[1]) * q + v[2]) * q + v[3]; };

    std::vector<Vec> points;
    std::map<std::size_t, Vertex> index;
    const std::size_t total = q * q * q * q;
    for (std::size_t c = 1; c < total; ++c) {
        Vec v{c / (q * q * q), (c / (q * q)) % q, (c / q) % q, c % q};
        if (normalize(v) != v) continue;
        index.emplace(code(v), static_cast<Vertex>(points.size()));
        points.push_back(v);
    }

    auto form = [&](const Vec& x, const Vec& y) {
        std::size_t plus = x[0] * y[1] + x[2] * y[3];
        std::size_t minus = x[1] * y[0] + x[3] * y[2];
        return (plus + q * q * 2 - minus % q) % q;
    };

    std::set<std::vector<Vertex>> lines;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (form(points[i], points[j]) != 0) continue;
            std::vector<Vertex> line{static_cast<Vertex>(j)};
            for (std::size_t lambda = 0; lambda < q; ++lambda) {
                Vec v;
                for (std::size_t d = 0; d < 4; ++d) v[d] = (points[i][d] + lambda * points[j][d]) % q;
                line.push_back(index.at(code(normalize(v))));
            }
            std::sort(line.begin(), line.end());
            lines.insert(std::move(line));
        }
    return Hypergraph(points.size(), q + 1, {lines.begin(), lines.end()});
}

Blowup fq_blowup(const BlowupSpec& spec) {
    const std::size_t tau = spec.tau;
    if (tau < 1) throw std::invalid_argument("blow-up needs tau >= 1");
    if (spec.m < tau * tau + 2 * tau)
        throw std::invalid_argument("blow-up needs m >= tau^2 + 2 tau");

    std::vector<Vertex> perm(spec.m);
    for (Vertex v = 0; v < spec.m; ++v) perm[v] = v;
    Rng rng(spec.seed);
    rng.shuffle(std::span<Vertex>(perm));

    Blowup out;
    out.grid.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(tau * tau));

    // Sizes: floor share each, leftovers to S_1, T_1, S_2, T_2, ...
    const std::size_t rest = spec.m - tau * tau;
    const std::size_t base = rest / (2 * tau);
    std::size_t extra = rest % (2 * tau);
    std::vector<std::size_t> sizes(2 * tau, base);  // interleaved S_1, T_1, S_2, ...
    for (std::size_t i = 0; extra > 0; ++i, --extra) ++sizes[i];

    out.s.resize(tau);
    out.t.resize(tau);
    std::size_t next = tau * tau;
    for (std::size_t i = 0; i < tau; ++i) {
        for (std::size_t c = 0; c < sizes[2 * i]; ++c) out.s[i].push_back(perm[next++]);
        for (std::size_t c = 0; c < sizes[2 * i + 1]; ++c) out.t[i].push_back(perm[next++]);
    }

    std::vector<std::vector<Vertex>> edges;
    for (std::size_t i = 0; i < tau; ++i)
        for (std::size_t j = 0; j < tau; ++j)
            for (Vertex a : out.s[i])
                for (Vertex b : out.t[j]) edges.push_back({out.grid[i * tau + j], a, b});
    out.graph = Hypergraph(spec.m, 3, edges);
    return out;
}

Hypergraph blow_up(const Hypergraph& g, std::size_t tau, RngSeed seed) {
    if (g.uniformity() < tau * tau + 2 * tau)
        throw std::invalid_argument("blow-up needs uniformity >= tau^2 + 2 tau");
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t i = 0; i < g.num_edges(); ++i) {
        auto host = g.edge(i);
        auto local = fq_blowup({g.uniformity(), tau, RngSeed{mix_seed(seed.value, i)}});
        for (std::size_t j = 0; j < local.graph.num_edges(); ++j) {
            std::vector<Vertex> e;
            for (Vertex v : local.graph.edge(j)) e.push_back(host[v]);
            edges.push_back(std::move(e));
        }
    }
    return Hypergraph(g.num_vertices(), 3, edges);
}

Hypergraph random_3graph(std::size_t n, std::size_t m, RngSeed seed) {
    const std::uint64_t total = choose3(n);
    if (m > total) throw std::invalid_argument("more edges requested than triples exist");

    // Floyd's sampling of m distinct ranks, then colex unranking.
    Rng rng(seed);
    std::set<std::uint64_t> ranks;
    for (std::uint64_t j = total - m; j < total; ++j) {
        std::uint64_t pick = rng.below(j + 1);
        if (!ranks.insert(pick).second) ranks.insert(j);
    }

    std::vector<std::vector<Vertex>> edges;
    edges.reserve(m);
    for (std::uint64_t rank : ranks) {
        std::uint64_t c = 2;
        while (choose3(c + 1) <= rank) ++c;
        rank -= choose3(c);
        std::uint64_t b = 1;
        while ((b + 1) * b / 2 <= rank) ++b;
        rank -= b * (b - 1) / 2;
        edges.push_back({static_cast<Vertex>(rank), static_cast<Vertex>(b), static_cast<Vertex>(c)});
    }
    return Hypergraph(n, 3, edges);
}

Hypergraph random_hypertree(std::size_t e, RngSeed seed) {
    if (e < 1) throw std::invalid_argument("hypertree needs at least one edge");
    Rng rng(seed);
    std::vector<std::vector<Vertex>> edges{{0, 1, 2}};
    for (Vertex i = 1; i < e; ++i) {
        auto attach = static_cast<Vertex>(rng.below(2 * i + 1));
        edges.push_back({attach, 2 * i + 1, 2 * i + 2});
    }
    return Hypergraph(2 * e + 1, 3, edges);
}

}  // namespace hyperchrome
