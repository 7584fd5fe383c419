#include "fsg/path_dp.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "fsg/errors.hpp"
#include "fsg/width.hpp"

namespace fsg::dp {

EventSequence build_events(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("build_events: order size != vertex count");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] >= 0)
            throw std::invalid_argument("build_events: order is not a bijection");
        pos[v] = i;
    }
    std::unordered_map<long long, int> edge_index;
    const auto& edges = g.edges();
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        edge_index[edges[i].first * 1ll * n + edges[i].second] = i;

    EventSequence seq;
    std::vector<int> slot(n, -1);
    std::vector<int> pending(n);  // incident edges not yet fired
    for (int v = 0; v < n; ++v) pending[v] = g.degree(v);
    std::vector<char> slot_used;
    auto alloc_slot = [&] {
        for (int s = 0; s < static_cast<int>(slot_used.size()); ++s)
            if (!slot_used[s]) {
                slot_used[s] = 1;
                return s;
            }
        slot_used.push_back(1);
        seq.slot_count = std::max(seq.slot_count, static_cast<int>(slot_used.size()));
        return static_cast<int>(slot_used.size()) - 1;
    };

    for (int i = 0; i < n; ++i) {
        int v = order[i];
        slot[v] = alloc_slot();
        seq.events.push_back({Event::Kind::IntroduceVertex, v, slot[v], -1, -1, -1});

        std::vector<int> earlier;
        for (int u : g.neighbors(v))
            if (pos[u] < i) earlier.push_back(u);
        std::sort(earlier.begin(), earlier.end(),
                  [&](int a, int b) { return pos[a] < pos[b]; });
        for (int u : earlier) {
            auto [a, b] = std::minmax(u, v);
            seq.events.push_back({Event::Kind::IntroduceEdge, v, slot[v], u, slot[u],
                                  edge_index.at(a * 1ll * n + b)});
            --pending[u];
            --pending[v];
        }
        for (int u = 0; u < n; ++u) {
            if (slot[u] < 0 || pending[u] > 0) continue;
            seq.events.push_back({Event::Kind::ForgetVertex, u, slot[u], -1, -1, -1});
            slot_used[slot[u]] = 0;
            slot[u] = -1;
        }
    }
    return seq;
}

namespace {

std::vector<int> greedy_separation_order(const Graph& g) {
    int n = g.vertex_count();
    std::vector<uint64_t> nbr(n, 0);
    for (const auto& [u, v] : g.edges()) {
        nbr[u] |= 1ull << v;
        nbr[v] |= 1ull << u;
    }
    auto boundary = [&](uint64_t s) {
        int b = 0;
        for (int v = 0; v < n; ++v)
            if (((s >> v) & 1) && (nbr[v] & ~s)) ++b;
        return b;
    };
    std::vector<int> order;
    uint64_t placed = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_b = 0;
        for (int v = 0; v < n; ++v) {
            if ((placed >> v) & 1) continue;
            int b = boundary(placed | (1ull << v));
            if (best < 0 || b < best_b) {
                best = v;
                best_b = b;
            }
        }
        order.push_back(best);
        placed |= 1ull << best;
    }
    return order;
}

}  // namespace

EventSequence plan_events(const Graph& g, int max_slots) {
    if (g.vertex_count() > 64)
        throw BudgetExceeded("plan_events: " + std::to_string(g.vertex_count()) +
                             " vertices exceed layout budget 64");
    if (g.empty()) return {};
    EventSequence seq = build_events(g, greedy_separation_order(g));
    if (seq.slot_count <= max_slots) return seq;
    width::WidthBudget fallback;
    fallback.max_vertices = 64;
    fallback.max_width = max_slots - 1;
    fallback.exhaustive_vertices = 0;
    auto pw = width::pathwidth(g, fallback);
    seq = build_events(g, pw.layout.order);
    if (seq.slot_count > max_slots)
        throw BudgetExceeded("plan_events: layout needs " + std::to_string(seq.slot_count) +
                             " slots, budget " + std::to_string(max_slots));
    return seq;
}

namespace {

struct Entry {
    uint64_t packed;
    long long value;
    int parent;
    int choice;
};

struct StepTable {
    std::vector<Entry> entries;
    std::unordered_map<uint64_t, int> index;

    void offer(uint64_t packed, long long value, int parent, int choice, bool maximize) {
        auto it = index.find(packed);
        if (it == index.end()) {
            index.emplace(packed, static_cast<int>(entries.size()));
            entries.push_back({packed, value, parent, choice});
            return;
        }
        Entry& cur = entries[it->second];
        if (maximize ? value > cur.value : value < cur.value)
            cur = {packed, value, parent, choice};
    }
};

}  // namespace

std::optional<DpRun> run_dp(const Graph& g, const EventSequence& seq, const DpProblem& problem) {
    if (problem.state_count < 1 || problem.state_count > 8)
        throw std::invalid_argument("run_dp: state_count out of range");
    if (seq.slot_count > 21)
        throw std::invalid_argument("run_dp: too many slots for packed states");

    std::vector<StepTable> tables(seq.events.size() + 1);
    tables[0].entries.push_back({0, 0, -1, -1});

    for (size_t step = 0; step < seq.events.size(); ++step) {
        const Event& ev = seq.events[step];
        const auto& prev = tables[step].entries;
        StepTable& next = tables[step + 1];
        int shift = 3 * ev.slot;
        for (int i = 0; i < static_cast<int>(prev.size()); ++i) {
            const Entry& e = prev[i];
            switch (ev.kind) {
                case Event::Kind::IntroduceVertex:
                    for (const auto& opt : problem.introduce(ev.vertex))
                        next.offer(e.packed | (static_cast<uint64_t>(opt.state) << shift),
                                   e.value + opt.cost, i, opt.state, problem.maximize);
                    break;
                case Event::Kind::IntroduceEdge: {
                    int sv = static_cast<int>((e.packed >> shift) & 7);
                    int su = static_cast<int>((e.packed >> (3 * ev.other_slot)) & 7);
                    auto options = problem.edge(ev.other, ev.vertex, su, sv);
                    for (int c = 0; c < static_cast<int>(options.size()); ++c) {
                        const auto& opt = options[c];
                        uint64_t packed = e.packed;
                        packed &= ~(7ull << (3 * ev.other_slot));
                        packed &= ~(7ull << shift);
                        packed |= static_cast<uint64_t>(opt.state_u) << (3 * ev.other_slot);
                        packed |= static_cast<uint64_t>(opt.state_v) << shift;
                        next.offer(packed, e.value + opt.cost, i, c, problem.maximize);
                    }
                    break;
                }
                case Event::Kind::ForgetVertex: {
                    int s = static_cast<int>((e.packed >> shift) & 7);
                    if (problem.forget(ev.vertex, s))
                        next.offer(e.packed & ~(7ull << shift), e.value, i, s, problem.maximize);
                    break;
                }
            }
        }
        if (next.entries.empty()) return std::nullopt;
    }

    DpRun run;
    run.vertex_state.assign(g.vertex_count(), -1);
    run.edge_choice.assign(g.edge_count(), -1);
    const auto& final_entries = tables[seq.events.size()].entries;
    int cur = 0;
    for (int i = 1; i < static_cast<int>(final_entries.size()); ++i) {
        if (problem.maximize ? final_entries[i].value > final_entries[cur].value
                             : final_entries[i].value < final_entries[cur].value)
            cur = i;
    }
    run.value = final_entries[cur].value;
    for (int step = static_cast<int>(seq.events.size()) - 1; step >= 0; --step) {
        const Entry& e = tables[step + 1].entries[cur];
        const Event& ev = seq.events[step];
        if (ev.kind == Event::Kind::ForgetVertex)
            run.vertex_state[ev.vertex] = e.choice;
        else if (ev.kind == Event::Kind::IntroduceEdge)
            run.edge_choice[ev.edge_index] = e.choice;
        cur = e.parent;
    }
    return run;
}

}  // namespace fsg::dp
