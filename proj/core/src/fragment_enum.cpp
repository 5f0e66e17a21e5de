#include "an/fragment_enum.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

namespace an {

namespace {

// One frame per interior size; preallocated so the word loops below stay
// allocation-free.
struct Frame {
    VertexSet interior;
    VertexSet boundary;
    std::vector<VertexId> excludes;
};

class Enumerator {
public:
    Enumerator(const TopologyGraph& g, const FragmentEnumOptions& opts,
               const std::function<bool(const Fragment&)>& emit)
        : g_(g), opts_(opts), emit_(emit), universe_(g.vertex_count()),
          charged_(g.vertex_count()), excluded_(g.vertex_count()),
          above_seed_(g.vertex_count()), cand_(g.vertex_count()) {
        if (opts.max_size < 1) throw std::invalid_argument("max_size must be >= 1");
        if (opts.boundary_budget < 0) throw std::invalid_argument("boundary_budget must be >= 0");
        if (opts.universe) {
            if (opts.universe->universe() != g.vertex_count())
                throw std::invalid_argument("universe size mismatch");
            universe_ = *opts.universe;
        } else {
            universe_ = VertexSet::full(g.vertex_count());
        }
        charged_ = VertexSet::full(g.vertex_count());
        if (opts.free_boundary) {
            if (opts.free_boundary->universe() != g.vertex_count())
                throw std::invalid_argument("free_boundary size mismatch");
            charged_ -= *opts.free_boundary;
        }
        const std::size_t depth_cap =
            std::min<std::size_t>(static_cast<std::size_t>(opts.max_size), g.vertex_count()) + 2;
        frames_.reserve(depth_cap);
        for (std::size_t i = 0; i < depth_cap; ++i)
            frames_.push_back(Frame{VertexSet(g.vertex_count()), VertexSet(g.vertex_count()), {}});
    }

    std::uint64_t run() {
        const VertexId end = static_cast<VertexId>(
            std::min<std::uint64_t>(opts_.seed_end, g_.vertex_count()));
        for (VertexId seed = opts_.seed_begin; seed < end && !stopped_; ++seed) {
            if (!universe_.test(seed)) continue;
            // ids below the seed can never join the interior
            above_seed_.clear();
            auto aw = above_seed_.words();
            const std::size_t w0 = seed >> 6;
            aw[w0] = ~0ULL << (seed & 63);
            for (std::size_t i = w0 + 1; i < aw.size(); ++i) aw[i] = ~0ULL;
            above_seed_ &= universe_;

            Frame& root = frames_[0];
            root.interior.clear();
            root.interior.set(seed);
            assign_row(root.boundary, seed);
            root.boundary.reset(seed);
            excluded_.clear();
            grow(0, 1);
        }
        return nodes_;
    }

private:
    void assign_row(VertexSet& dst, VertexId v) {
        if (g_.has_bit_rows()) {
            auto row = g_.bit_row(v);
            auto w = dst.words();
            for (std::size_t i = 0; i < row.size(); ++i) w[i] = row[i];
        } else {
            dst.clear();
            for (VertexId u : g_.neighbors(v)) dst.set(u);
        }
    }

    static std::size_t masked_count(const VertexSet& a, const VertexSet& mask) {
        std::size_t c = 0;
        auto aw = a.words();
        auto mw = mask.words();
        for (std::size_t i = 0; i < aw.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(aw[i] & mw[i]));
        return c;
    }

    // Visits the interior held in frames_[depth] (of the given size), emits
    // it when its charged boundary fits the budget, then branches over the
    // absorbable boundary in ascending order.
    void grow(std::size_t depth, std::size_t size) {
        ++nodes_;
        Frame& f = frames_[depth];

        if (masked_count(f.boundary, charged_) <= static_cast<std::size_t>(opts_.boundary_budget)) {
            if (!emit_(Fragment{f.interior, f.boundary})) {
                stopped_ = true;
                return;
            }
        }
        if (size == static_cast<std::size_t>(opts_.max_size)) return;

        f.excludes.clear();
        const std::size_t budget = static_cast<std::size_t>(opts_.boundary_budget);
        const std::size_t slack = static_cast<std::size_t>(opts_.max_size) - size;
        while (!stopped_) {
            // absorbable boundary: inside the universe, at or above the seed,
            // not excluded on this branch
            {
                auto cw = cand_.words();
                auto bw = f.boundary.words();
                auto uw = above_seed_.words();
                auto xw = excluded_.words();
                for (std::size_t i = 0; i < cw.size(); ++i) cw[i] = bw[i] & uw[i] & ~xw[i];
            }
            // certified lower bound on any descendant's charged boundary
            std::size_t unabsorbable = 0;
            {
                auto bw = f.boundary.words();
                auto cw = cand_.words();
                auto chw = charged_.words();
                for (std::size_t i = 0; i < bw.size(); ++i)
                    unabsorbable += static_cast<std::size_t>(std::popcount(bw[i] & ~cw[i] & chw[i]));
            }
            if (unabsorbable > budget) break;
            const std::size_t absorbable_charged = masked_count(cand_, charged_);
            if (absorbable_charged > slack && unabsorbable + (absorbable_charged - slack) > budget)
                break;

            const int pivot = cand_.first();
            if (pivot < 0) break;
            const VertexId p = static_cast<VertexId>(pivot);

            Frame& next = frames_[depth + 1];
            next.interior = f.interior;
            next.interior.set(p);
            if (g_.has_bit_rows()) {
                auto nw = next.boundary.words();
                auto bw = f.boundary.words();
                auto row = g_.bit_row(p);
                auto iw = next.interior.words();
                for (std::size_t i = 0; i < nw.size(); ++i) nw[i] = (bw[i] | row[i]) & ~iw[i];
            } else {
                next.boundary = f.boundary;
                for (VertexId nb : g_.neighbors(p)) next.boundary.set(nb);
                next.boundary -= next.interior;
            }
            grow(depth + 1, size + 1);

            // exclude the pivot for the remaining branches at this level
            excluded_.set(p);
            f.excludes.push_back(p);
        }
        for (VertexId v : f.excludes) excluded_.reset(v);
        f.excludes.clear();
    }

    const TopologyGraph& g_;
    const FragmentEnumOptions& opts_;
    const std::function<bool(const Fragment&)>& emit_;
    VertexSet universe_;
    VertexSet charged_;  // complement of free_boundary
    VertexSet excluded_;
    VertexSet above_seed_;
    VertexSet cand_;
    std::vector<Frame> frames_;
    std::uint64_t nodes_ = 0;
    bool stopped_ = false;
};

}  // namespace

std::uint64_t enumerate_fragments(const TopologyGraph& g, const FragmentEnumOptions& opts,
                                  const std::function<bool(const Fragment&)>& emit) {
    Enumerator e(g, opts, emit);
    return e.run();
}

std::uint64_t enumerate_fragments(const TopologyGraph& g, int max_size, int boundary_budget,
                                  const std::function<bool(const Fragment&)>& emit) {
    FragmentEnumOptions opts;
    opts.max_size = max_size;
    opts.boundary_budget = boundary_budget;
    return enumerate_fragments(g, opts, emit);
}

std::vector<Fragment> collect_fragments(const TopologyGraph& g, const FragmentEnumOptions& opts) {
    std::vector<Fragment> out;
    enumerate_fragments(g, opts, [&](const Fragment& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

std::vector<Fragment> collect_fragments_parallel(const TopologyGraph& g,
                                                 const FragmentEnumOptions& opts, int workers,
                                                 std::uint64_t* nodes_out) {
    const VertexId end = static_cast<VertexId>(
        std::min<std::uint64_t>(opts.seed_end, g.vertex_count()));
    const VertexId begin = std::min(opts.seed_begin, end);
    const int span = static_cast<int>(end - begin);
    workers = std::max(1, std::min(workers, span));
    if (workers <= 1) {
        std::vector<Fragment> out;
        const std::uint64_t nodes = enumerate_fragments(g, opts, [&](const Fragment& f) {
            out.push_back(f);
            return true;
        });
        if (nodes_out) *nodes_out = nodes;
        return out;
    }

    std::vector<std::vector<Fragment>> buckets(static_cast<std::size_t>(workers));
    std::vector<std::uint64_t> nodes(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            FragmentEnumOptions local = opts;
            local.seed_begin =
                begin + static_cast<VertexId>(static_cast<std::int64_t>(span) * w / workers);
            local.seed_end =
                begin + static_cast<VertexId>(static_cast<std::int64_t>(span) * (w + 1) / workers);
            nodes[static_cast<std::size_t>(w)] =
                enumerate_fragments(g, local, [&](const Fragment& f) {
                    buckets[static_cast<std::size_t>(w)].push_back(f);
                    return true;
                });
        });
    }
    for (auto& t : threads) t.join();

    std::vector<Fragment> out;
    std::size_t total = 0;
    for (const auto& b : buckets) total += b.size();
    out.reserve(total);
    for (auto& b : buckets)
        out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    if (nodes_out) {
        *nodes_out = 0;
        for (auto n : nodes) *nodes_out += n;
    }
    return out;
}

std::uint64_t count_fragments(const TopologyGraph& g, int max_size, int boundary_budget) {
    std::uint64_t count = 0;
    enumerate_fragments(g, max_size, boundary_budget, [&](const Fragment&) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace an
