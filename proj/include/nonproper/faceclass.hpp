#pragma once

#include "nonproper/lattice.hpp"

#include <string>
#include <vector>

namespace nonproper {

enum class Side { none, left, right };
std::string to_string(Side s);

struct FaceClass {
    bool semi_origin = false;
    bool origin = false;
    bool half_origin = false;
    bool coordinate = false;
    bool relevant = false;
    bool long_face = false;
    Side side = Side::none;
};

FaceClass classify_face(const FacePair& g);

struct ClassifiedFace {
    FacePair face;
    FaceClass cls;
};

struct RelevantFaces {
    std::vector<ClassifiedFace> faces;
    int long_left = 0;
    int long_right = 0;
};

std::vector<ClassifiedFace> classify_all(const SupportPair& a);
RelevantFaces relevant_faces(const SupportPair& a);

}  // namespace nonproper
