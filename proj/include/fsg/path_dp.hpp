#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fsg/graph.hpp"

namespace fsg::dp {

// Linear event stream over a vertex layout: each vertex is introduced once,
// each edge fires once both endpoints are live, and a vertex is forgotten as
// soon as its last edge has fired. Live vertices occupy reusable slots.
struct Event {
    enum class Kind { IntroduceVertex, IntroduceEdge, ForgetVertex };
    Kind kind;
    int vertex = -1;
    int slot = -1;
    int other = -1;       // IntroduceEdge: earlier endpoint
    int other_slot = -1;  // IntroduceEdge: slot of `other`
    int edge_index = -1;  // IntroduceEdge: index into Graph::edges()
};

struct EventSequence {
    std::vector<Event> events;
    int slot_count = 0;  // peak number of simultaneously live vertices
};

EventSequence build_events(const Graph& g, const std::vector<int>& order);

// Low-boundary layout: greedy first, exact-separation fallback. Throws
// BudgetExceeded when no layout fits max_slots live vertices.
EventSequence plan_events(const Graph& g, int max_slots = 10);

struct IntroduceOption {
    int state;
    long long cost = 0;
};

struct EdgeOption {
    int state_u;
    int state_v;
    long long cost = 0;
};

struct DpProblem {
    int state_count = 2;  // at most 8, states are packed 3 bits per slot
    bool maximize = false;
    std::function<std::vector<IntroduceOption>(int v)> introduce;
    std::function<std::vector<EdgeOption>(int u, int v, int state_u, int state_v)> edge;
    std::function<bool(int v, int state)> forget;
};

struct DpRun {
    long long value = 0;
    std::vector<int> vertex_state;  // state each vertex held when forgotten
    std::vector<int> edge_choice;   // chosen EdgeOption index per graph edge
};

std::optional<DpRun> run_dp(const Graph& g, const EventSequence& seq, const DpProblem& problem);

}  // namespace fsg::dp
