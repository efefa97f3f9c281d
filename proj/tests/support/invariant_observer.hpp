#ifndef CYCLEKIT_TESTS_SUPPORT_INVARIANT_OBSERVER_HPP
#define CYCLEKIT_TESTS_SUPPORT_INVARIANT_OBSERVER_HPP

#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "cyclekit/graph.hpp"
#include "cyclekit/mwc.hpp"
#include "cyclekit/oracles.hpp"

namespace testsupport {

using namespace cyclekit;

/// Checks the rooted-search invariants at every extraction and detection:
/// finalized distances equal the reference Dijkstra distances, finalized
/// distances never exceed tentative ones, tentative distances decompose over
/// the predecessor edge, gamma never increases, and every detected cycle's
/// formula length re-sums exactly along its vertex sequence. Violations are
/// collected as messages rather than thrown so a test can report them all.
class InvariantObserver : public SearchObserver {
public:
    explicit InvariantObserver(const WeightedGraph& g) : graph_(g) {}

    struct RootEnd {
        VertexId root;
        double gamma_end;
        std::vector<char> finalized;
        std::vector<double> reference;
    };

    std::vector<std::string> violations;
    std::vector<RootEnd> root_ends;
    std::vector<std::pair<VertexId, VertexId>> discards; // (root, removed vertex)

    void root_started(VertexId root) override {
        reference_ = reference_dijkstra(graph_, root);
        root_ = root;
    }

    void extracted(const MwcSearchState& s, VertexId /*y*/, double gamma) override {
        check_gamma(gamma, "extract");
        for (VertexId u : s.finalize_order) {
            if (s.dist[static_cast<size_t>(u)] != reference_[static_cast<size_t>(u)])
                fail() << "root " << root_ << ": finalized dist(" << u << ") = "
                       << s.dist[static_cast<size_t>(u)] << " != reference "
                       << reference_[static_cast<size_t>(u)];
        }
        double max_final = -std::numeric_limits<double>::infinity();
        for (VertexId u : s.finalize_order)
            max_final = std::max(max_final, s.dist[static_cast<size_t>(u)]);
        for (VertexId v : s.touched) {
            if (s.finalized[static_cast<size_t>(v)]) continue;
            if (max_final > s.dist[static_cast<size_t>(v)])
                fail() << "root " << root_ << ": finalized dist " << max_final
                       << " exceeds tentative dist(" << v << ") = "
                       << s.dist[static_cast<size_t>(v)];
        }
        for (VertexId v : s.touched) {
            const VertexId p = s.pred[static_cast<size_t>(v)];
            if (p < 0) continue;
            if (!s.finalized[static_cast<size_t>(p)])
                fail() << "root " << root_ << ": pred(" << v << ") = " << p << " not finalized";
            auto e = graph_.find_edge(p, v);
            if (!e) {
                fail() << "root " << root_ << ": pred edge (" << p << "," << v << ") missing";
                continue;
            }
            const double expect = s.dist[static_cast<size_t>(p)] + graph_.weight(*e);
            if (s.dist[static_cast<size_t>(v)] != expect)
                fail() << "root " << root_ << ": dist(" << v << ") = "
                       << s.dist[static_cast<size_t>(v)] << " != dist(pred) + w = " << expect;
        }
    }

    void cycle_detected(const MwcSearchState& /*s*/, const CycleDetection& det,
                        double gamma) override {
        check_gamma(gamma, "detect");
        const double resummed = cycle_length(det.vertices, graph_, graph_.weights());
        if (resummed != det.length)
            fail() << "root " << root_ << ": cycle formula length " << det.length
                   << " != re-summed " << resummed;
        if (det.composite != det.dist_to_cycle + det.length)
            fail() << "root " << root_ << ": composite mismatch";
    }

    void discarded(VertexId root, VertexId z, double dist_z, double dist_to_cycle) override {
        discards.emplace_back(root, z);
        if (dist_z > dist_to_cycle)
            fail() << "root " << root << ": discarded " << z << " with dist " << dist_z
                   << " above " << dist_to_cycle;
    }

    void root_finished(const MwcSearchState& s, double gamma) override {
        check_gamma(gamma, "finish");
        root_ends.push_back({root_, gamma, s.finalized, reference_});
    }

private:
    // Streams into `violations` when the full expression ends.
    struct Failure {
        std::vector<std::string>* sink;
        std::ostringstream os;
        Failure(std::vector<std::string>* s) : sink(s) {}
        Failure(Failure&& other) : sink(other.sink), os(other.os.str()) { other.sink = nullptr; }
        ~Failure() {
            if (sink) sink->push_back(os.str());
        }
        template <class T>
        Failure& operator<<(const T& value) {
            os << value;
            return *this;
        }
    };

    Failure fail() { return Failure(&violations); }

    void check_gamma(double gamma, const char* where) {
        if (gamma > last_gamma_)
            fail() << "gamma increased at " << where << ": " << last_gamma_ << " -> " << gamma;
        last_gamma_ = std::min(last_gamma_, gamma);
    }

    const WeightedGraph& graph_;
    std::vector<double> reference_;
    VertexId root_ = -1;
    double last_gamma_ = kInf;
};

}  // namespace testsupport

#endif
