#pragma once

#include <hfree/graph.hpp>
#include <hfree/numeric.hpp>
#include <hfree/pattern.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hfree
{
    using Json = nlohmann::ordered_json;

    /// Version tag written into every record.
    inline constexpr std::string_view record_format = "hfree-record/1";

    enum class Verdict
    {
        holds,
        fails,
        unknown
    };

    auto to_string(Verdict verdict) -> std::string_view;

    struct SolverBudget
    {
        std::uint64_t node_budget = 50'000'000;
        std::size_t edge_budget = 60;
        /// Most optima enumerated per solve; more makes all-optima claims unknown.
        std::size_t optima_cap = 10'000;
    };

    struct RunOptions
    {
        /// Worker threads for independent trials. Results do not depend on it.
        int threads = 1;
        /// Add wall-clock timings to the record. Replay ignores them.
        bool timings = false;
    };

    /// One experiment. spec alone determines results, verdicts and counterexamples.
    struct ExperimentRecord
    {
        std::string kind;
        std::string id;
        Json spec = Json::object();
        Json results = Json::object();
        /// Claim name to "holds", "fails" or "unknown".
        Json verdicts = Json::object();
        /// Witnesses for every failed claim, checkable by check_counterexample.
        Json counterexamples = Json::array();
        std::optional<Json> timings;
    };

    auto to_json(const ExperimentRecord & record) -> Json;
    auto record_from_json(const Json & json) -> ExperimentRecord;
    /// One line of stable, compact JSON.
    auto to_line(const ExperimentRecord & record) -> std::string;
    auto parse_record(std::string_view line) -> ExperimentRecord;

    /// kind, a dash and a 64-bit FNV-1a hash of the serialised spec.
    auto experiment_id(std::string_view kind, const Json & spec) -> std::string;

    /// Appends one line; safe to call from several threads.
    void append_record(const std::string & path, const ExperimentRecord & record);
    auto read_records(const std::string & path) -> std::vector<ExperimentRecord>;

    struct ColorableSpec
    {
        Graph g;
        Graph h;
        Pattern t = Pattern::clique(2);
        int k = 3;
        /// Hypothesis gate: recorded whether min degree >= (1 - eps) n.
        Rational eps = 0;
        SolverBudget budget;
    };

    /// Solves exactly, then asks whether the witness and every optimum are (k-1)-colourable.
    auto verify_extremal_colorable(const ColorableSpec & spec, const RunOptions & options = {}) -> ExperimentRecord;

    /// Solves exactly, then counts the fewest edge deletions making the witness (k-1)-partite.
    auto verify_near_colorable(const ColorableSpec & spec, const RunOptions & options = {}) -> ExperimentRecord;

    struct PredictionSpec
    {
        int n_min = 4, n_max = 8;
        int k = 3, m = 2, t = 1;
        Graph h;
        SolverBudget budget;
    };

    /// Exact ex(n, T, h) on K_n against the leading-order prediction, one row per n.
    auto compare_prediction(const PredictionSpec & spec, const RunOptions & options = {}) -> ExperimentRecord;

    struct ScanSpec
    {
        Graph h;
        Pattern t = Pattern::clique(2);
        int k = 3;
        int n = 8;
        /// Minimum-degree fractions phi in [0, 1].
        std::vector<Rational> fractions;
        int trials = 10;
        std::uint64_t seed = 0;
        SolverBudget budget;
    };

    /// For each phi, trials graphs with min degree >= ceil(phi n); records how many have
    /// only (k-1)-colourable optima. Unknown trials are counted apart from the rate.
    auto threshold_scan(const ScanSpec & spec, const RunOptions & options = {}) -> ExperimentRecord;

    struct DichotomySpec
    {
        Graph g;
        int k = 3;
        Pattern t = Pattern::clique(2);
        Rational gamma = Rational(1, 2);
        /// Second alternative holds when the deletion distance is at most tolerance n^2.
        Rational tolerance = 0;
        /// Only maximal K_k-free subgraphs, or all of them.
        bool maximal_only = true;
        std::uint64_t enumeration_budget = 2'000'000;
        SolverBudget budget;
    };

    /// Every K_k-free spanning subgraph G1 is checked for a copy ratio at most gamma
    /// against the optimum, or a small distance to (k-1)-partite.
    auto verify_dichotomy(const DichotomySpec & spec, const RunOptions & options = {}) -> ExperimentRecord;

    auto colorable_spec_to_json(const ColorableSpec & spec) -> Json;
    auto colorable_spec_from_json(const Json & json) -> ColorableSpec;
    auto prediction_spec_to_json(const PredictionSpec & spec) -> Json;
    auto prediction_spec_from_json(const Json & json) -> PredictionSpec;
    auto scan_spec_to_json(const ScanSpec & spec) -> Json;
    auto scan_spec_from_json(const Json & json) -> ScanSpec;
    auto dichotomy_spec_to_json(const DichotomySpec & spec) -> Json;
    auto dichotomy_spec_from_json(const Json & json) -> DichotomySpec;

    /// Re-executes a record of any kind from its spec.
    auto run_record_spec(std::string_view kind, const Json & spec, const RunOptions & options = {}) -> ExperimentRecord;

    struct ReplayReport
    {
        bool identical = false;
        /// JSON pointers of fields that differ.
        std::vector<std::string> differences;
        ExperimentRecord recomputed;
    };

    /// Recomputes a record and compares everything except timings.
    auto replay(const ExperimentRecord & record, const RunOptions & options = {}) -> ReplayReport;

    struct CheckReport
    {
        bool valid = false;
        std::string reason;
    };

    /// Re-validates a counterexample from its own fields by brute force: the witness
    /// is a subgraph of the host, avoids the forbidden graph, has the claimed count,
    /// is optimal, and breaks the claim.
    auto check_counterexample(const Json & counterexample) -> CheckReport;
}
