#include "nonproper/faceclass.hpp"

#include <stdexcept>

namespace nonproper {

std::string to_string(Side s)
{
    switch (s) {
    case Side::left: return "left";
    case Side::right: return "right";
    default: return "none";
    }
}

namespace {

bool nonnegative(const LatticePoint& p) { return p.x >= 0 && p.y >= 0; }

bool origin_or_not_point(const Support& g)
{
    return g.dim() > 0 || g.contains({0, 0});
}

}  // namespace

FaceClass classify_face(const FacePair& g)
{
    if (g.normal == LatticePoint{0, 0}) throw std::invalid_argument("trivial face");
    FaceClass c;
    bool o1 = g.g1.contains({0, 0}), o2 = g.g2.contains({0, 0});
    c.semi_origin = o1 || o2;
    c.origin = o1 && o2;
    c.half_origin = c.semi_origin && !c.origin;
    if (g.dim == 1)
        c.coordinate = nonnegative(g.normal);
    else
        c.coordinate = nonnegative(g.cone_lo) && nonnegative(g.cone_hi) && cross(g.cone_lo, g.cone_hi) > 0;
    c.relevant = c.semi_origin && !c.coordinate && origin_or_not_point(g.g1) && origin_or_not_point(g.g2);
    c.long_face = g.g1.dim() == 1 && g.g2.dim() == 1;
    if (c.relevant) {
        if (g.normal.x > 0) c.side = Side::left;
        else if (g.normal.x < 0) c.side = Side::right;
    }
    return c;
}

std::vector<ClassifiedFace> classify_all(const SupportPair& a)
{
    std::vector<ClassifiedFace> out;
    for (auto& f : enumerate_face_pairs(a)) {
        FaceClass c = classify_face(f);
        out.push_back({std::move(f), c});
    }
    return out;
}

RelevantFaces relevant_faces(const SupportPair& a)
{
    if (!is_independent(a)) throw std::invalid_argument("dependent support pair");
    RelevantFaces r;
    for (auto& cf : classify_all(a)) {
        if (!cf.cls.relevant) continue;
        if (cf.cls.long_face) {
            if (cf.cls.side == Side::left) ++r.long_left;
            if (cf.cls.side == Side::right) ++r.long_right;
        }
        r.faces.push_back(std::move(cf));
    }
    return r;
}

}  // namespace nonproper
