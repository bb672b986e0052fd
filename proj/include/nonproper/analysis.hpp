#pragma once

#include "nonproper/config.hpp"
#include "nonproper/faceclass.hpp"
#include "nonproper/polyring.hpp"
#include "nonproper/solver.hpp"
#include "nonproper/toric.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nonproper {

bool is_dominant(const PolyMap& f);

struct DegreeInfo {
    int mu = 0;
    bool agreed = true;
    std::vector<std::array<GaussRat, 2>> targets;
};

// Generic fibre cardinality from exact counts over random rational targets.
DegreeInfo topological_degree(const PolyMap& f, std::uint64_t seed = 0);

enum class VerdictKind { generically_nonproper, proper_candidate, degenerate };
std::string to_string(VerdictKind v);

struct ClauseCount {
    int count = 0;
    mpq_class target;
    bool positive_dimensional = false;
    bool pass() const { return !positive_dimensional && mpq_class(count) == target; }
};

struct GenericityVerdict {
    bool dominant = false;
    bool independent = false;
    bool origin_in_torus = false;
    bool nonproper = false;
    ClauseCount sys_f1f2;
    ClauseCount sys_f1J;
    ClauseCount sys_f2J;
    VerdictKind verdict = VerdictKind::degenerate;
    std::string reason;
    std::array<GaussRat, 2> translation;
    int attempts = 0;
};

GenericityVerdict genericity_check(const PolyMap& f, std::uint64_t seed = 0);

// Transformed data of one relevant face: P_i = sum_j t^j c_i[j](s) - y_i s^rho_i t^tau_i.
struct FaceData {
    ClassifiedFace face;
    UnimodularTransform transform;
    ClearedPair cleared;
    std::array<std::vector<UPoly>, 2> c;
    // y_i enters the t^0 slice
    std::array<bool, 2> active{};
    UPoly coeff(int i, int j) const { return j < static_cast<int>(c[i].size()) ? c[i][j] : UPoly(); }
    LatticePoint y_position(int i) const { return i == 0 ? cleared.r1 : cleared.r2; }
};

std::vector<FaceData> face_data(const PolyMap& f, long long extra_shift = 0);

enum class ComponentKind { rational_curve, vertical_line, horizontal_line };
std::string to_string(ComponentKind k);

struct JelonekComponent {
    ComponentKind kind = ComponentKind::rational_curve;
    FacePair face;
    // Curves: y_i = numerator_i(s) / s^den_power_i for s in C*.
    std::array<UPoly, 2> numerator;
    std::array<int, 2> den_power{};
    // Lines with a rational position.
    std::optional<GaussRat> position;
    // Target coordinates (y1, y2) stored on (u, v).
    Poly implicit;

    Complex eval(int i, const Complex& s) const;
    GaussRat eval(int i, const GaussRat& s) const;
};

std::vector<JelonekComponent> jelonek_set(const PolyMap& f, const Tolerances& tol = {}, long long extra_shift = 0);

struct TargetPoint {
    Complex y1;
    Complex y2;
    std::optional<GaussRat> e1;
    std::optional<GaussRat> e2;

    bool exact() const { return e1.has_value() && e2.has_value(); }
    static TargetPoint from_exact(const GaussRat& a, const GaussRat& b);
    static TargetPoint from_numeric(const Complex& a, const Complex& b, double snap_tol);
    bool same_as(const TargetPoint& o, double radius) const;
    std::string str() const;
};
bool lex_less(const TargetPoint& a, const TargetPoint& b);

struct KfPoint {
    TargetPoint point;
    FacePair face;
};

struct KfResult {
    std::vector<KfPoint> points;
    // Faces whose Jacobian slice vanishes identically.
    std::vector<FacePair> degenerate_faces;
};

KfResult kf_points(const PolyMap& f, const Tolerances& tol = {});

}  // namespace nonproper
