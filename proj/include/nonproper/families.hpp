#pragma once

#include "nonproper/polyring.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nonproper {

enum class FamilyKind { thm14, lemma23, fixture };

struct FamilySpec {
    FamilyKind kind = FamilyKind::fixture;
    int n_or_k = 1;
    std::vector<GaussRat> p_roots;
    std::vector<GaussRat> q_roots;
    std::vector<GaussRat> p_coeffs;
    std::string fixture_id;
};

// (uv, v^2 P(uv) + v Q(uv) + uv) with monic P, Q of degree n built from their roots.
PolyMap make_thm14(int n, const std::vector<GaussRat>& p_roots, const std::vector<GaussRat>& q_roots);
// (P(uv) + u^k v^(k+1), 1 + uv P(uv) + 2 u^(k+1) v^(k+2)), P given by ascending coefficients.
PolyMap make_lemma23(int k, const std::vector<GaussRat>& p_coeffs);
// "1.2", "1.3" or "1.4"
PolyMap fixture(const std::string& id);
PolyMap make_family(const FamilySpec& spec);

// Distinct nonzero rational roots for make_thm14, reproducible from the seed.
std::pair<std::vector<GaussRat>, std::vector<GaussRat>> random_thm14_roots(int n, std::uint64_t seed);

}  // namespace nonproper
