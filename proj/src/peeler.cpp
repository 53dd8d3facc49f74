#include "mohcs/peeler.hpp"

#include <ostream>
#include <string>

namespace mohcs {

PeelQueue::PeelQueue(std::size_t id_bound)
    : next_(id_bound, none),
      prev_(id_bound, none),
      key_(id_bound, 0),
      stamp_(id_bound, 0),
      queued_(id_bound, 0) {}

void PeelQueue::ensure_slot(VertexId v) {
    if (v.value >= queued_.size()) {
        const std::size_t n = std::size_t{v.value} + 1;
        next_.resize(n, none);
        prev_.resize(n, none);
        key_.resize(n, 0);
        stamp_.resize(n, 0);
        queued_.resize(n, 0);
    }
}

void PeelQueue::link(std::uint32_t v, std::size_t bucket) {
    if (bucket >= head_.size()) {
        head_.resize(bucket + 1, none);
    }
    next_[v] = head_[bucket];
    prev_[v] = none;
    if (head_[bucket] != none) {
        prev_[head_[bucket]] = v;
    }
    head_[bucket] = v;
    key_[v] = bucket;
    stamp_[v] = ++clock_;
    if (bucket < min_bucket_) {
        min_bucket_ = bucket;
    }
}

void PeelQueue::unlink(std::uint32_t v) {
    if (prev_[v] != none) {
        next_[prev_[v]] = next_[v];
    } else {
        head_[key_[v]] = next_[v];
    }
    if (next_[v] != none) {
        prev_[next_[v]] = prev_[v];
    }
}

void PeelQueue::push(VertexId v, std::size_t degree) {
    ensure_slot(v);
    if (queued_[v.value] != 0) {
        throw InvariantError("vertex " + std::to_string(v.value) + " is already queued");
    }
    if (size_ == 0) {
        min_bucket_ = degree;
    }
    link(v.value, degree);
    queued_[v.value] = 1;
    ++size_;
}

void PeelQueue::decrease_key(VertexId v, std::size_t degree) {
    if (!contains(v)) {
        throw InvariantError("vertex " + std::to_string(v.value) + " is not queued");
    }
    if (degree > key_[v.value]) {
        throw InvariantError("decrease_key cannot raise a key");
    }
    unlink(v.value);
    link(v.value, degree);
}

VertexId PeelQueue::top() {
    if (size_ == 0) {
        throw GraphError("top() on an empty peel queue");
    }
    while (head_[min_bucket_] == none) {
        ++min_bucket_;
    }
    return VertexId{head_[min_bucket_]};
}

VertexId PeelQueue::extract_min() {
    const VertexId v = top();
    erase(v);
    return v;
}

void PeelQueue::erase(VertexId v) {
    if (!contains(v)) {
        throw InvariantError("vertex " + std::to_string(v.value) + " is not queued");
    }
    unlink(v.value);
    queued_[v.value] = 0;
    --size_;
}

std::size_t PeelQueue::key(VertexId v) const {
    if (!contains(v)) {
        throw InvariantError("vertex " + std::to_string(v.value) + " is not queued");
    }
    return key_[v.value];
}

std::uint64_t PeelQueue::stamp(VertexId v) const {
    if (!contains(v)) {
        throw InvariantError("vertex " + std::to_string(v.value) + " is not queued");
    }
    return stamp_[v.value];
}

PeelResult peel(const Graph& g) {
    PeelResult result;
    result.trace.initial_size = g.vertex_count();
    PeelQueue queue(g.id_bound());
    for (VertexId v : g.vertices()) {
        queue.push(v, g.degree(v));
    }

    std::size_t remaining = g.vertex_count();
    while (remaining > 0) {
        const VertexId v = queue.top();
        const std::size_t degree = queue.key(v);
        if (2 * degree >= remaining) {
            break;
        }
        queue.erase(v);
        --remaining;
        result.trace.deleted_order.push_back(v);
        result.trace.sizes.push_back(remaining);
        for (VertexId u : g.neighbors(v)) {
            if (queue.contains(u)) {
                queue.decrease_key(u, queue.key(u) - 1);
            }
        }
    }

    if (remaining == 0) {
        result.trace.outcome = PeelOutcome::exhausted;
        return result;
    }
    result.trace.outcome = PeelOutcome::found_subgraph;
    result.survivors.reserve(remaining);
    for (VertexId v : g.vertices()) {
        if (queue.contains(v)) {
            result.survivors.push_back(v);
        }
    }
    return result;
}

std::pair<std::optional<Graph>, PeelTrace> peel_to_hcs(const Graph& g) {
    PeelResult result = peel(g);
    if (!result.found()) {
        return {std::nullopt, std::move(result.trace)};
    }
    return {induced_subgraph(g, result.survivors), std::move(result.trace)};
}

void write_peel_trace(std::ostream& out, const PeelTrace& trace) {
    out << 0 << '\t' << trace.initial_size << '\n';
    for (std::size_t i = 0; i < trace.sizes.size(); ++i) {
        out << i + 1 << '\t' << trace.sizes[i] << '\n';
    }
}

}  // namespace mohcs
