#include "ent2/game.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace ent2 {
namespace {

constexpr std::size_t kMaxGameVertices = 63;
constexpr std::size_t kMaxPositions = std::size_t{1} << 31;

bool has(CopSet s, VertexId v) { return (s >> v) & 1U; }
CopSet bit(VertexId v) { return CopSet{1} << v; }

}  // namespace

std::size_t GameResult::index(VertexId v, CopSet cops) const {
  const auto size = static_cast<std::size_t>(std::popcount(cops));
  std::size_t rank = size_offset_[size];
  std::size_t i = 1;
  for (CopSet rest = cops; rest != 0; rest &= rest - 1, ++i) {
    rank += binom_[static_cast<std::size_t>(std::countr_zero(rest))][i];
  }
  return static_cast<std::size_t>(v) * sets_ + rank;
}

Player GameResult::winner(const GamePosition& p) const {
  if (p.thief >= n_) throw std::out_of_range("thief vertex out of range");
  if (static_cast<std::size_t>(std::popcount(p.cops)) > k_ ||
      (n_ < 64 && (p.cops >> n_) != 0)) {
    throw std::out_of_range("cop set is not a position of this game");
  }
  const std::size_t idx = index(p.thief, p.cops);
  const bool won = p.turn == Player::Cops ? cops_turn_won_[idx] : thief_turn_won_[idx];
  return won ? Player::Cops : Player::Thief;
}

GameResult solve_game(const DiGraph& g, std::size_t k) {
  const std::size_t n = g.vertex_count();
  if (k > n) throw std::invalid_argument("cop budget exceeds vertex count");
  if (n > kMaxGameVertices) {
    throw std::invalid_argument("game solver supports at most " +
                                std::to_string(kMaxGameVertices) + " vertices");
  }

  GameResult r;
  r.n_ = n;
  r.k_ = k;
  r.binom_.assign(n + 1, std::vector<std::size_t>(k + 2, 0));
  for (std::size_t a = 0; a <= n; ++a) {
    r.binom_[a][0] = 1;
    for (std::size_t b = 1; b <= std::min(a, k + 1); ++b) {
      r.binom_[a][b] = r.binom_[a - 1][b - 1] + (b <= a - 1 ? r.binom_[a - 1][b] : 0);
    }
  }
  r.size_offset_.assign(k + 2, 0);
  for (std::size_t s = 0; s <= k; ++s) {
    r.size_offset_[s + 1] = r.size_offset_[s] + r.binom_[n][s];
  }
  r.sets_ = r.size_offset_[k + 1];
  if (n != 0 && r.sets_ > kMaxPositions / (2 * n)) {
    throw std::invalid_argument("game graph too large");
  }

  // All cop sets in rank order: sizes ascending, colexicographic within a size
  // (which is the order Gosper's hack produces).
  std::vector<CopSet> sets;
  sets.reserve(r.sets_);
  for (std::size_t s = 0; s <= k; ++s) {
    if (s == 0) {
      sets.push_back(0);
      continue;
    }
    CopSet c = (CopSet{1} << s) - 1;
    const CopSet limit = CopSet{1} << n;
    while (c < limit) {
      sets.push_back(c);
      const CopSet lo = c & (~c + 1);
      const CopSet hi = c + lo;
      c = (((hi ^ c) >> 2) / lo) | hi;
    }
  }

  std::vector<std::vector<VertexId>> pred(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w : g.successors(u)) pred[w].push_back(u);
  }

  const std::size_t total = n * r.sets_;
  r.cops_turn_won_.assign(total, false);
  r.thief_turn_won_.assign(total, false);
  std::vector<std::uint32_t> escapes(total, 0);

  // Queue entries: (index << 1) | is_thief_turn.
  std::vector<std::size_t> queue;
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t rank = 0; rank < r.sets_; ++rank) {
      const CopSet c = sets[rank];
      std::uint32_t count = 0;
      for (VertexId w : g.successors(v)) count += has(c, w) ? 0 : 1;
      const std::size_t idx = v * r.sets_ + rank;
      escapes[idx] = count;
      if (count == 0) {
        r.thief_turn_won_[idx] = true;
        queue.push_back(idx << 1 | 1U);
      }
    }
  }

  auto win_cops_turn = [&](std::size_t idx) {
    if (!r.cops_turn_won_[idx]) {
      r.cops_turn_won_[idx] = true;
      queue.push_back(idx << 1);
    }
  };

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t idx = queue[head] >> 1;
    const bool thief_turn = queue[head] & 1U;
    const auto v = static_cast<VertexId>(idx / r.sets_);
    const CopSet c = sets[idx % r.sets_];
    if (thief_turn) {
      // Cops positions (v, C) with a move to (v, c).
      win_cops_turn(idx);  // skip
      if (has(c, v)) {
        const CopSet without = c & ~bit(v);
        win_cops_turn(r.index(v, without));  // place a new cop
        for (VertexId x = 0; x < n; ++x) {   // move the cop from x
          if (x != v && !has(c, x)) win_cops_turn(r.index(v, without | bit(x)));
        }
      }
    } else {
      if (has(c, v)) continue;  // the thief never enters a cop's vertex
      for (VertexId u : pred[v]) {
        const std::size_t t = r.index(u, c);
        if (!r.thief_turn_won_[t] && --escapes[t] == 0) {
          r.thief_turn_won_[t] = true;
          queue.push_back(t << 1 | 1U);
        }
      }
    }
  }

  r.cops_win_game_ = true;
  for (VertexId v = 0; v < n; ++v) {
    if (!r.cops_turn_won_[r.index(v, 0)]) r.cops_win_game_ = false;
  }
  return r;
}

std::optional<std::size_t> entanglement(const DiGraph& g, std::optional<std::size_t> max_k) {
  const std::size_t n = g.vertex_count();
  const std::size_t last = max_k ? std::min(*max_k, n) : n;
  for (std::size_t k = 0; k <= last; ++k) {
    if (!solve_game(g, k).cops_win_game()) continue;
    if (k < n && !solve_game(g, k + 1).cops_win_game()) {
      throw std::logic_error("cops win with " + std::to_string(k) + " cops but not with " +
                             std::to_string(k + 1));
    }
    return k;
  }
  if (last == n) throw std::logic_error("cops lose even with one cop per vertex");
  return std::nullopt;
}

std::size_t entanglement(const Graph& g) {
  return *entanglement(DiGraph::symmetrize(g));
}

bool game_entanglement_at_most(const Graph& g, std::size_t k) {
  if (k >= g.vertex_count()) return true;
  return solve_game(DiGraph::symmetrize(g), k).cops_win_game();
}

StarCheck entanglement_leq1_undirected(const Graph& g) {
  StarCheck out;
  const TwBE dfs = dfs_forest(g);
  if (!dfs.back_edges.empty()) {
    const BackEdge& e = dfs.back_edges.front();
    out.ok = false;
    out.kind = StarCheck::Witness::Cycle;
    out.witness = dfs.tree_path(e.ancestor, e.descendant);
    return out;
  }
  // A forest is a union of stars iff no edge joins two vertices of degree >= 2.
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) < 2 || g.degree(e.v) < 2) continue;
    VertexId x = kNoVertex, y = kNoVertex;
    for (VertexId w : g.neighbors(e.u)) {
      if (w != e.v) x = w;
    }
    for (VertexId w : g.neighbors(e.v)) {
      if (w != e.u) y = w;
    }
    out.ok = false;
    out.kind = StarCheck::Witness::Path;
    out.witness = {x, e.u, e.v, y};
    return out;
  }
  return out;
}

bool is_acyclic(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> indeg(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.successors(v)) ++indeg[w];
  }
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++removed;
    for (VertexId w : g.successors(v)) {
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  return removed == n;
}

std::vector<std::vector<VertexId>> strongly_connected_components(const DiGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(n, kNone), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> out;
  std::uint32_t clock = 0;

  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> frames;
  for (VertexId s = 0; s < n; ++s) {
    if (index[s] != kNone) continue;
    frames.push_back({s, 0});
    index[s] = low[s] = clock++;
    stack.push_back(s);
    on_stack[s] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      const VertexId v = f.v;
      auto succ = g.successors(v);
      if (f.next < succ.size()) {
        const VertexId w = succ[f.next++];
        if (index[w] == kNone) {
          index[w] = low[w] = clock++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      frames.pop_back();
      if (!frames.empty()) {
        const VertexId p = frames.back().v;
        low[p] = std::min(low[p], low[v]);
      }
      if (low[v] == index[v]) {
        std::vector<VertexId> comp;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

namespace {

// Is the subgraph induced by `members` minus `removed` acyclic?
bool acyclic_without(const DiGraph& g, const std::vector<VertexId>& members,
                     VertexId removed, std::vector<std::uint32_t>& mark,
                     std::uint32_t stamp) {
  for (VertexId v : members) mark[v] = v == removed ? 0 : stamp;
  std::vector<std::size_t> indeg(g.vertex_count(), 0);
  for (VertexId v : members) {
    if (mark[v] != stamp) continue;
    for (VertexId w : g.successors(v)) {
      if (mark[w] == stamp) ++indeg[w];
    }
  }
  std::vector<VertexId> ready;
  for (VertexId v : members) {
    if (mark[v] == stamp && indeg[v] == 0) ready.push_back(v);
  }
  std::size_t removed_count = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++removed_count;
    for (VertexId w : g.successors(v)) {
      if (mark[w] == stamp && --indeg[w] == 0) ready.push_back(w);
    }
  }
  return removed_count + 1 == members.size();
}

}  // namespace

bool entanglement_leq1_directed(const DiGraph& g) {
  std::vector<std::uint32_t> mark(g.vertex_count(), 0);
  std::uint32_t stamp = 0;
  for (const auto& scc : strongly_connected_components(g)) {
    if (scc.size() == 1) continue;
    bool found = false;
    for (VertexId x : scc) {
      if (acyclic_without(g, scc, x, mark, ++stamp)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace ent2
