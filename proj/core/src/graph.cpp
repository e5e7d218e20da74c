#include "ostp/graph.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "ostp/rng.hpp"

namespace ostp {

namespace {

bool valid_id(std::string_view id) {
    if (id.empty()) return false;
    for (char ch : id) {
        if (ch == '#' || ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') return false;
    }
    return true;
}

std::string format_double(double x) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, p);
}

std::uint64_t pair_key(int a, int b, int n) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(n) +
           static_cast<std::uint64_t>(b);
}

} // namespace

int SocialGraph::Builder::find(std::string_view id) const {
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        if (ids_[i] == id) return static_cast<int>(i);
    }
    return -1;
}

SocialGraph::Builder& SocialGraph::Builder::add_node(std::string id, double rho) {
    if (!valid_id(id)) throw std::invalid_argument("invalid node id '" + id + "'");
    if (find(id) >= 0) throw std::invalid_argument("duplicate node id '" + id + "'");
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw std::invalid_argument("rho out of range [0,1] for node '" + id + "'");
    }
    ids_.push_back(std::move(id));
    rho_.push_back(rho);
    return *this;
}

SocialGraph::Builder& SocialGraph::Builder::add_edge(const std::string& a, const std::string& b,
                                                     double trust, double intimacy) {
    const int u = find(a);
    if (u < 0) throw std::invalid_argument("unknown node id '" + a + "'");
    const int v = find(b);
    if (v < 0) throw std::invalid_argument("unknown node id '" + b + "'");
    if (u == v) throw std::invalid_argument("self-loop on node '" + a + "'");
    if (!(trust > 0.0 && trust <= 1.0)) {
        throw std::invalid_argument("trust out of range (0,1] on edge " + a + "-" + b);
    }
    if (!(intimacy > 0.0 && intimacy <= 1.0)) {
        throw std::invalid_argument("intimacy out of range (0,1] on edge " + a + "-" + b);
    }
    for (const auto& e : edges_) {
        if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) {
            throw std::invalid_argument("duplicate edge " + a + "-" + b);
        }
    }
    edges_.push_back({u, v, trust, intimacy});
    return *this;
}

SocialGraph SocialGraph::Builder::build() {
    SocialGraph g;
    const std::size_t n = ids_.size();

    // permutation sorting ids; node index order must equal id order
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return ids_[static_cast<std::size_t>(a)] < ids_[static_cast<std::size_t>(b)]; });
    std::vector<int> rank(n);
    g.ids_.resize(n);
    g.rho_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        rank[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        g.ids_[i] = std::move(ids_[static_cast<std::size_t>(order[i])]);
        g.rho_[i] = rho_[static_cast<std::size_t>(order[i])];
    }

    g.adj_.resize(n);
    for (const auto& e : edges_) {
        const int u = rank[static_cast<std::size_t>(e.u)];
        const int v = rank[static_cast<std::size_t>(e.v)];
        g.adj_[static_cast<std::size_t>(u)].push_back({v, e.trust, e.intimacy});
        g.adj_[static_cast<std::size_t>(v)].push_back({u, e.trust, e.intimacy});
    }
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end(),
                  [](const Arc& a, const Arc& b) { return a.to < b.to; });
    }
    g.edge_count_ = edges_.size();
    return g;
}

int SocialGraph::index_of(std::string_view id) const {
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return -1;
    return static_cast<int>(it - ids_.begin());
}

const SocialGraph::Arc* SocialGraph::find_arc(int u, int v) const {
    const auto& list = adj_[static_cast<std::size_t>(u)];
    const auto it = std::lower_bound(list.begin(), list.end(), v,
                                     [](const Arc& a, int key) { return a.to < key; });
    if (it == list.end() || it->to != v) return nullptr;
    return &*it;
}

namespace {

double parse_number(std::string_view tok, int line, const char* what) {
    double out = 0.0;
    const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
        throw std::runtime_error("line " + std::to_string(line) + ": malformed " + what + " '" +
                                 std::string(tok) + "'");
    }
    return out;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) toks.push_back(line.substr(i, j - i));
        i = j;
    }
    return toks;
}

} // namespace

SocialGraph load_graph(std::string_view document) {
    struct NodeRec {
        int line;
        std::string id;
        double rho;
    };
    struct EdgeRec {
        int line;
        std::string a, b;
        double trust, intimacy;
    };
    std::vector<NodeRec> nodes;
    std::vector<EdgeRec> edges;

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= document.size()) {
        const std::size_t nl = document.find('\n', pos);
        const std::string_view line =
            document.substr(pos, nl == std::string_view::npos ? document.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? document.size() + 1 : nl + 1;
        ++line_no;

        const auto toks = tokenize(line);
        if (toks.empty() || toks[0].front() == '#') continue;
        if (toks[0] == "node") {
            if (toks.size() != 3) {
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": expected 'node <id> <rho>'");
            }
            nodes.push_back({line_no, std::string(toks[1]), parse_number(toks[2], line_no, "rho")});
        } else if (toks[0] == "edge") {
            if (toks.size() != 5) {
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": expected 'edge <from> <to> <trust> <intimacy>'");
            }
            edges.push_back({line_no, std::string(toks[1]), std::string(toks[2]),
                             parse_number(toks[3], line_no, "trust"),
                             parse_number(toks[4], line_no, "intimacy")});
        } else {
            throw std::runtime_error("line " + std::to_string(line_no) + ": unknown directive '" +
                                     std::string(toks[0]) + "'");
        }
    }

    SocialGraph::Builder b;
    for (const auto& n : nodes) {
        try {
            b.add_node(n.id, n.rho);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("line " + std::to_string(n.line) + ": " + e.what());
        }
    }
    for (const auto& e : edges) {
        try {
            b.add_edge(e.a, e.b, e.trust, e.intimacy);
        } catch (const std::invalid_argument& ex) {
            throw std::runtime_error("line " + std::to_string(e.line) + ": " + ex.what());
        }
    }
    return b.build();
}

SocialGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_graph(ss.str());
}

std::string save_graph(const SocialGraph& g) {
    std::string out;
    for (int v = 0; v < g.node_count(); ++v) {
        out += "node ";
        out += g.id(v);
        out += ' ';
        out += format_double(g.rho(v));
        out += '\n';
    }
    for (int u = 0; u < g.node_count(); ++u) {
        for (const auto& arc : g.neighbors(u)) {
            if (arc.to < u) continue;
            out += "edge ";
            out += g.id(u);
            out += ' ';
            out += g.id(arc.to);
            out += ' ';
            out += format_double(arc.trust);
            out += ' ';
            out += format_double(arc.intimacy);
            out += '\n';
        }
    }
    return out;
}

void save_graph_file(const SocialGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write graph file '" + path + "'");
    out << save_graph(g);
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

SocialGraph generate_graph(const GeneratorSpec& spec) {
    const int n = spec.node_count;
    if (n < 1) throw std::invalid_argument("node_count must be >= 1");
    const std::size_t max_pairs =
        static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    if (spec.edge_count > max_pairs) {
        throw std::invalid_argument("edge_count " + std::to_string(spec.edge_count) +
                                    " exceeds max symmetric pairs " + std::to_string(max_pairs));
    }

    std::size_t width = 1;
    for (int x = n - 1; x >= 10; x /= 10) ++width;
    std::vector<std::string> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::string digits = std::to_string(i);
        ids[static_cast<std::size_t>(i)] =
            "n" + std::string(width - digits.size(), '0') + digits;
    }

    Rng rng(spec.seed);
    SocialGraph::Builder b;
    for (int i = 0; i < n; ++i) {
        b.add_node(ids[static_cast<std::size_t>(i)], rng.uniform(spec.rho.lo, spec.rho.hi));
    }

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(spec.edge_count);
    std::unordered_set<std::uint64_t> used;
    if (spec.edge_count >= static_cast<std::size_t>(n - 1) && n >= 2) {
        // random spanning tree keeps benchmark instances connected
        for (int i = 1; i < n; ++i) {
            const int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));
            pairs.emplace_back(parent, i);
            used.insert(pair_key(parent, i, n));
        }
    }
    if (pairs.size() < spec.edge_count) {
        const std::size_t remaining = spec.edge_count - pairs.size();
        if (spec.edge_count * 2 > max_pairs) {
            // dense case: choose uniformly from the explicit complement
            std::vector<std::pair<int, int>> free_pairs;
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (!used.count(pair_key(u, v, n))) free_pairs.emplace_back(u, v);
                }
            }
            for (std::size_t k = 0; k < remaining; ++k) {
                const std::size_t j = k + rng.index(free_pairs.size() - k);
                std::swap(free_pairs[k], free_pairs[j]);
                pairs.push_back(free_pairs[k]);
            }
        } else {
            for (std::size_t k = 0; k < remaining; ++k) {
                for (;;) {
                    const int u = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
                    const int v = static_cast<int>(rng.index(static_cast<std::size_t>(n)));
                    if (u == v) continue;
                    const std::uint64_t key = pair_key(u, v, n);
                    if (used.count(key)) continue;
                    used.insert(key);
                    pairs.emplace_back(std::min(u, v), std::max(u, v));
                    break;
                }
            }
        }
    }

    for (const auto& [u, v] : pairs) {
        const double trust = rng.uniform_open_low(spec.trust.lo, spec.trust.hi);
        const double intimacy = rng.uniform_open_low(spec.intimacy.lo, spec.intimacy.hi);
        b.add_edge(ids[static_cast<std::size_t>(u)], ids[static_cast<std::size_t>(v)], trust,
                   intimacy);
    }
    return b.build();
}

int SubNetwork::index_of(std::string_view id) const {
    const auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) return -1;
    return static_cast<int>(it - ids.begin());
}

const SubNetwork::Arc* SubNetwork::find_arc(int u, int v) const {
    const auto& list = adj[static_cast<std::size_t>(u)];
    const auto it = std::lower_bound(list.begin(), list.end(), v,
                                     [](const Arc& a, int key) { return a.to < key; });
    if (it == list.end() || it->to != v) return nullptr;
    return &*it;
}

namespace {

// depth-bounded DFS marking every node/edge on a completed simple path;
// dist_d prunes branches that cannot reach the target in budget
struct ExtractState {
    const SocialGraph& g;
    int target;
    int max_hops;
    const std::vector<int>& dist_d;
    std::vector<char> on_path;
    std::vector<int> path;
    std::vector<char> keep_node;
    std::unordered_set<std::uint64_t> keep_edge;

    void mark_current(int last) {
        path.push_back(last);
        for (std::size_t i = 0; i < path.size(); ++i) keep_node[static_cast<std::size_t>(path[i])] = 1;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            keep_edge.insert(pair_key(path[i], path[i + 1], g.node_count()));
        }
        path.pop_back();
    }

    void dfs(int u, int hops) {
        for (const auto& arc : g.neighbors(u)) {
            const int v = arc.to;
            if (v == target) {
                mark_current(v);
                continue;
            }
            if (on_path[static_cast<std::size_t>(v)]) continue;
            if (hops + 1 + dist_d[static_cast<std::size_t>(v)] > max_hops) continue;
            on_path[static_cast<std::size_t>(v)] = 1;
            path.push_back(v);
            dfs(v, hops + 1);
            path.pop_back();
            on_path[static_cast<std::size_t>(v)] = 0;
        }
    }
};

} // namespace

SubNetwork extract_subnetwork(const SocialGraph& g, std::string_view source,
                              std::string_view target, int max_hops) {
    const int s = g.index_of(source);
    if (s < 0) throw std::invalid_argument("unknown node id '" + std::string(source) + "'");
    const int d = g.index_of(target);
    if (d < 0) throw std::invalid_argument("unknown node id '" + std::string(target) + "'");
    if (s == d) throw std::invalid_argument("source equals target");
    if (max_hops < 1) throw std::invalid_argument("max_hops must be >= 1");

    const int n = g.node_count();
    const int unreached = std::numeric_limits<int>::max() / 2;
    std::vector<int> dist_d(static_cast<std::size_t>(n), unreached);
    dist_d[static_cast<std::size_t>(d)] = 0;
    std::vector<int> frontier{d};
    for (int level = 1; level <= max_hops && !frontier.empty(); ++level) {
        std::vector<int> next;
        for (int u : frontier) {
            for (const auto& arc : g.neighbors(u)) {
                if (dist_d[static_cast<std::size_t>(arc.to)] == unreached) {
                    dist_d[static_cast<std::size_t>(arc.to)] = level;
                    next.push_back(arc.to);
                }
            }
        }
        frontier = std::move(next);
    }

    SubNetwork out;
    out.max_hops = max_hops;
    if (dist_d[static_cast<std::size_t>(s)] > max_hops) return out;

    ExtractState st{g, d, max_hops, dist_d, std::vector<char>(static_cast<std::size_t>(n), 0),
                    {},  std::vector<char>(static_cast<std::size_t>(n), 0), {}};
    st.on_path[static_cast<std::size_t>(s)] = 1;
    st.path.push_back(s);
    st.dfs(s, 0);
    if (!st.keep_node[static_cast<std::size_t>(s)]) return out; // no completed path

    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) { // ascending g index == ascending id
        if (st.keep_node[static_cast<std::size_t>(v)]) {
            local[static_cast<std::size_t>(v)] = out.node_count();
            out.ids.push_back(g.id(v));
            out.rho_of.push_back(g.rho(v));
        }
    }
    out.adj.resize(out.ids.size());
    for (int u = 0; u < n; ++u) {
        if (local[static_cast<std::size_t>(u)] < 0) continue;
        for (const auto& arc : g.neighbors(u)) {
            if (arc.to < u || local[static_cast<std::size_t>(arc.to)] < 0) continue;
            if (!st.keep_edge.count(pair_key(u, arc.to, n))) continue;
            const int lu = local[static_cast<std::size_t>(u)];
            const int lv = local[static_cast<std::size_t>(arc.to)];
            const int slot = out.slot_count();
            out.slots.push_back({lu, lv, arc.trust, arc.intimacy});
            out.adj[static_cast<std::size_t>(lu)].push_back({lv, slot, arc.trust, arc.intimacy});
            out.adj[static_cast<std::size_t>(lv)].push_back({lu, slot, arc.trust, arc.intimacy});
        }
    }
    for (auto& list : out.adj) {
        std::sort(list.begin(), list.end(),
                  [](const SubNetwork::Arc& a, const SubNetwork::Arc& b) { return a.to < b.to; });
    }
    out.source = local[static_cast<std::size_t>(s)];
    out.target = local[static_cast<std::size_t>(d)];

    out.dist_to_target.assign(out.ids.size(), unreached);
    out.dist_to_target[static_cast<std::size_t>(out.target)] = 0;
    std::vector<int> bfs{out.target};
    for (std::size_t head = 0; head < bfs.size(); ++head) {
        const int u = bfs[head];
        for (const auto& arc : out.neighbors(u)) {
            if (out.dist_to_target[static_cast<std::size_t>(arc.to)] == unreached) {
                out.dist_to_target[static_cast<std::size_t>(arc.to)] =
                    out.dist_to_target[static_cast<std::size_t>(u)] + 1;
                bfs.push_back(arc.to);
            }
        }
    }
    return out;
}

std::vector<int> neighbors_pruned(const SocialGraph& g, std::string_view id, int M,
                                  const QoTWeights& w) {
    const int v = g.index_of(id);
    if (v < 0) throw std::invalid_argument("unknown node id '" + std::string(id) + "'");
    return neighbors_pruned(g, v, M, w);
}

} // namespace ostp
