#pragma once

#include "nonproper/missing.hpp"

#include <json.hpp>

namespace nonproper {

inline constexpr int schema_version = 1;

nlohmann::json to_json(const mpq_class& q);
nlohmann::json to_json(const GaussRat& g);
nlohmann::json to_json(const Complex& z);
nlohmann::json to_json(const TargetPoint& p);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const Support& s);
nlohmann::json to_json(const ClassifiedFace& f);
nlohmann::json to_json(const GenericityVerdict& g);
nlohmann::json to_json(const JelonekComponent& c);
nlohmann::json to_json(const KfResult& kf);
nlohmann::json to_json(const MissingReport& m);
nlohmann::json to_json(const AnalysisReport& r, const PolyMap& f);

// Inverse of the exact encodings above.
GaussRat gauss_from_json(const nlohmann::json& j);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace nonproper
