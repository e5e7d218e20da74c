#ifndef OSTP_GRAPH_HPP
#define OSTP_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ostp/qot.hpp"

namespace ostp {

// Undirected social graph with per-node rho and per-edge trust/intimacy.
// Nodes are indexed 0..n-1 in lexicographic id order, so iterating indices
// ascending is the same as iterating ids ascending. Immutable once built.
class SocialGraph {
  public:
    struct Arc {
        int to;
        double trust;
        double intimacy;
    };

    class Builder {
      public:
        // rho in [0,1]; id nonempty, no whitespace or '#'
        Builder& add_node(std::string id, double rho);
        // trust, intimacy in (0,1]; endpoints must already be added;
        // each unordered pair at most once (a second listing in either
        // orientation is rejected, not merged)
        Builder& add_edge(const std::string& a, const std::string& b,
                          double trust, double intimacy);
        SocialGraph build();

      private:
        struct PendingEdge {
            int u, v;
            double trust, intimacy;
        };
        std::vector<std::string> ids_;
        std::vector<double> rho_;
        std::vector<PendingEdge> edges_;
        int find(std::string_view id) const;
    };

    int node_count() const { return static_cast<int>(ids_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    const std::string& id(int v) const { return ids_[static_cast<std::size_t>(v)]; }
    double rho(int v) const { return rho_[static_cast<std::size_t>(v)]; }
    // -1 when the id is unknown
    int index_of(std::string_view id) const;
    // sorted by neighbor index ascending
    std::span<const Arc> neighbors(int v) const {
        return {adj_[static_cast<std::size_t>(v)].data(), adj_[static_cast<std::size_t>(v)].size()};
    }
    // nullptr when the edge does not exist
    const Arc* find_arc(int u, int v) const;

  private:
    friend class Builder;
    std::vector<std::string> ids_;
    std::vector<double> rho_;
    std::vector<std::vector<Arc>> adj_;
    std::size_t edge_count_ = 0;
};

// Line-oriented text format:
//   # comment
//   node <id> <rho>
//   edge <id_from> <id_to> <trust> <intimacy>
// Each symmetric pair is listed once; both directions are installed.
// Errors carry the offending line number.
SocialGraph load_graph(std::string_view document);
SocialGraph load_graph_file(const std::string& path);
std::string save_graph(const SocialGraph& g);
void save_graph_file(const SocialGraph& g, const std::string& path);

struct ValueRange {
    double lo;
    double hi;
};

struct GeneratorSpec {
    int node_count = 0;
    std::size_t edge_count = 0;
    ValueRange trust{0.0, 1.0};    // sampled from (lo, hi]
    ValueRange intimacy{0.0, 1.0}; // sampled from (lo, hi]
    ValueRange rho{0.0, 1.0};      // sampled from [lo, hi)
    std::uint64_t seed = 0;
};

// Deterministic per spec (seed included). When edge_count >= node_count-1 the
// graph contains a random spanning tree, so it is connected; remaining edges
// are uniform over the absent pairs. Throws when edge_count exceeds
// node_count*(node_count-1)/2.
SocialGraph generate_graph(const GeneratorSpec& spec);

// Compacted hop-bounded search space between one source and one target.
// Contains exactly the nodes and edges lying on at least one simple
// source->target path of <= max_hops edges. Slots index the symmetric edge
// pairs in (u,v) order, u < v; this is the spin index used by the annealers.
struct SubNetwork {
    struct Arc {
        int to;
        int slot;
        double trust;
        double intimacy;
    };
    struct Slot {
        int u, v; // u < v
        double trust, intimacy;
    };

    std::vector<std::string> ids; // sorted; local index order == id order
    std::vector<double> rho_of;
    std::vector<std::vector<Arc>> adj; // sorted by .to
    std::vector<Slot> slots;           // sorted by (u,v)
    std::vector<int> dist_to_target;   // BFS hops within the subnetwork
    int source = -1;
    int target = -1;
    int max_hops = 0;

    bool empty() const { return ids.empty(); }
    int node_count() const { return static_cast<int>(ids.size()); }
    int slot_count() const { return static_cast<int>(slots.size()); }
    double rho(int v) const { return rho_of[static_cast<std::size_t>(v)]; }
    const std::string& id(int v) const { return ids[static_cast<std::size_t>(v)]; }
    int index_of(std::string_view id) const;
    std::span<const Arc> neighbors(int v) const {
        return {adj[static_cast<std::size_t>(v)].data(), adj[static_cast<std::size_t>(v)].size()};
    }
    const Arc* find_arc(int u, int v) const;
};

// Exhaustive depth-bounded extraction; empty() result signals that no simple
// source->target path of <= max_hops edges exists. Throws on unknown ids,
// source == target, or max_hops < 1.
SubNetwork extract_subnetwork(const SocialGraph& g, std::string_view source,
                              std::string_view target, int max_hops);

// Top-M neighbors of v ranked by single-edge utility contribution
// wT*trust + wr*intimacy + wrho*rho(neighbor), ties by node index ascending.
template <class G>
std::vector<int> neighbors_pruned(const G& g, int v, int M, const QoTWeights& w) {
    if (M < 1) throw std::invalid_argument("M must be >= 1");
    struct Scored {
        double score;
        int to;
    };
    std::vector<Scored> scored;
    for (const auto& arc : g.neighbors(v)) {
        scored.push_back({w.wT * arc.trust + w.wr * arc.intimacy + w.wrho * g.rho(arc.to), arc.to});
    }
    std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.to < b.to;
    });
    if (scored.size() > static_cast<std::size_t>(M)) scored.resize(static_cast<std::size_t>(M));
    std::vector<int> out;
    out.reserve(scored.size());
    for (const auto& s : scored) out.push_back(s.to);
    return out;
}

std::vector<int> neighbors_pruned(const SocialGraph& g, std::string_view id, int M,
                                  const QoTWeights& w);

} // namespace ostp

#endif
