#pragma once

#include "nonproper/analysis.hpp"
#include "nonproper/config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nonproper {

enum class CandidateSource { node, cross, cusp, component_intersection };
std::string to_string(CandidateSource s);

struct Candidate {
    TargetPoint point;
    CandidateSource source = CandidateSource::node;
    std::vector<FacePair> faces;
};

std::vector<Candidate> node_candidates(const std::vector<JelonekComponent>& comps, const Tolerances& tol = {});
std::vector<Candidate> cross_candidates(const PolyMap& f, const std::vector<JelonekComponent>& comps, const Tolerances& tol = {});
std::vector<Candidate> cusp_candidates(const KfResult& kf);
std::vector<Candidate> intersection_candidates(const std::vector<JelonekComponent>& comps, const Tolerances& tol = {});

// Convenience overloads computing the Jelonek data themselves.
std::vector<Candidate> node_candidates(const PolyMap& f, const Tolerances& tol = {});
std::vector<Candidate> cross_candidates(const PolyMap& f, const Tolerances& tol = {});
std::vector<Candidate> cusp_candidates(const PolyMap& f, const Tolerances& tol = {});

enum class CandidateVerdict { missing_isolated, attained, missing_nonisolated, inconclusive };
std::string to_string(CandidateVerdict v);
enum class Tier { exact, numeric };
std::string to_string(Tier t);

struct Verification {
    CandidateVerdict verdict = CandidateVerdict::inconclusive;
    Tier tier = Tier::exact;
    double residual = 0;
    int incident_components = 0;
};

Verification verify_candidate(const PolyMap& f, const TargetPoint& y, const std::vector<JelonekComponent>& comps,
                              const Tolerances& tol = {});
Verification verify_candidate(const PolyMap& f, const Candidate& c, const Tolerances& tol = {});

enum class Region { kf, cross, torus };
std::string to_string(Region r);

struct VerifiedPoint {
    TargetPoint point;
    Tier tier = Tier::exact;
    Region region = Region::torus;
    CandidateSource source = CandidateSource::node;
};

struct RejectedCandidate {
    Candidate candidate;
    std::string reason;
};

struct BoundEntry {
    std::string name;
    std::optional<mpq_class> value;  // empty when not applicable
    int measured = 0;
    bool satisfied = true;
};

struct MissingReport {
    std::vector<VerifiedPoint> verified;
    std::vector<RejectedCandidate> rejected;
    std::vector<BoundEntry> bounds;
    int deg_f1 = 0;
    int deg_f2 = 0;
    int mu = 0;
    int in_kf = 0;
    int in_cross = 0;
    int in_torus = 0;
    bool inconclusive = false;
    bool all_bounds_satisfied() const;
};

MissingReport missing_points(const PolyMap& f, const std::vector<JelonekComponent>& comps, const KfResult& kf, int mu,
                             const Tolerances& tol = {});
MissingReport missing_points(const PolyMap& f, const RunOptions& opt = {});

// Full pipeline output.
struct AnalysisReport {
    SupportPair supports;
    std::vector<ClassifiedFace> faces;
    mpq_class mixed_volume;
    bool dominant = false;
    bool independent = false;
    GenericityVerdict genericity;
    DegreeInfo degree;
    std::vector<JelonekComponent> jelonek;
    KfResult kf;
    MissingReport missing;
    RunOptions options;
};

AnalysisReport analyze_map(const PolyMap& f, const RunOptions& opt = {});

}  // namespace nonproper
