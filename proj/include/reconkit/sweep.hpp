#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reconkit/graph.hpp"
#include "reconkit/json_io.hpp"

namespace reconkit {

/// Names accepted by run_check, in report order.
const std::vector<std::string>& sweep_check_names();

/// Outcome of one check on one graph. `applies` is false when the graph is
/// outside the check's domain (e.g. too small).
struct CheckOutcome {
    bool applies = true;
    bool passed = true;
    std::string detail;
};

/// Throws DomainError for an unknown name.
CheckOutcome run_check(const std::string& name, const Graph& g);

struct CheckTally {
    long passed = 0;
    long failed = 0;
    long skipped = 0;
    std::optional<std::string> first_counterexample;  // graph6
    std::string detail;
};

struct SweepReport {
    long graphs = 0;
    std::map<std::string, CheckTally> checks;
    double wall_seconds = 0;

    bool ok() const;
    /// Associative merge of partial reports; the counterexample kept is the
    /// one from `other` only when this report has none.
    void merge(const SweepReport& other);
};

SweepReport run_sweep(const std::vector<Graph>& graphs, const std::vector<std::string>& checks, int jobs);

Json to_json(const SweepReport& r);

/// RECONKIT_JOBS if set and positive, else the hardware concurrency.
int default_jobs();

}  // namespace reconkit
