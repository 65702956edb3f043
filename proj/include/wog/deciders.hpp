#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wog/covers.hpp"
#include "wog/families.hpp"
#include "wog/semiforest.hpp"

namespace wog {

struct Certificate {
    std::string note;
    std::optional<VertexSet> clique;
    std::optional<StarSemiForest> forest;
    std::optional<SCQDecomposition> decomposition;
    std::optional<CliqueTauReduction> reduction;
    std::optional<SpecialGraphId> special;
    std::optional<std::vector<Edge>> matching;
    std::optional<std::vector<int>> cycle;
    std::optional<Arc> arc;
    std::optional<VertexSet> component;
    std::vector<Certificate> components;
};

struct FamilyReport {
    std::string family;
    bool applicable = false;
    Status verdict = Status::not_applicable;
    Certificate certificate;
};

// Tags in dispatch order.
const std::vector<std::string>& family_names();

FamilyReport decide_perfect(const Digraph& d);
FamilyReport decide_konig(const Digraph& d);
FamilyReport decide_scq(const Digraph& d);
FamilyReport decide_simplicial_or_chordal(const Digraph& d);
FamilyReport decide_no_3_5_cycles(const Digraph& d);
FamilyReport decide_no_4_5_cycles(const Digraph& d);
FamilyReport decide_girth_ge_6(const Digraph& d);
FamilyReport decide_girth_ge_5(const Digraph& d);
FamilyReport decide_sinks_sufficient(const Digraph& d);

// Throws LookupError for an unknown tag.
FamilyReport decide_family(const Digraph& d, std::string_view family);
// Applicability predicate only; CapacityError propagates.
bool family_applicable(const Digraph& d, std::string_view family);

// Clause (2) of the P10 characterization under some isomorphism onto the
// catalog P10; d must have underlying graph isomorphic to P10.
bool p10_clause_holds(const Digraph& d);

struct DispatchResult {
    std::vector<FamilyReport> reports;
    std::optional<Verdict> oracle;
    Status consensus = Status::unknown;
};

class DisagreementError : public ConsistencyError {
public:
    DisagreementError(const std::string& what, DispatchResult result)
        : ConsistencyError(what), result_(std::move(result)) {}
    const DispatchResult& result() const { return result_; }
private:
    DispatchResult result_;
};

// Runs every decider and, within the oracle bound, the oracle. Decisive
// verdicts that disagree throw DisagreementError.
DispatchResult dispatch(const Digraph& d, bool run_oracle = true);

}  // namespace wog
