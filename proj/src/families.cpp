#include "nonproper/families.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace nonproper {

namespace {

// p(uv) as a bivariate polynomial
Poly in_uv(const UPoly& p)
{
    Poly out;
    for (int i = 0; i <= p.degree(); ++i) out += Poly::monomial(p.coeffs()[i], {i, i});
    return out;
}

Poly mono(long c, long long i, long long j) { return Poly::monomial(GaussRat(c), {i, j}); }

}  // namespace

PolyMap make_thm14(int n, const std::vector<GaussRat>& p_roots, const std::vector<GaussRat>& q_roots)
{
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (static_cast<int>(p_roots.size()) != n || static_cast<int>(q_roots.size()) != n)
        throw std::invalid_argument("P and Q need exactly n roots each");
    for (const auto* roots : {&p_roots, &q_roots})
        for (const auto& r : *roots)
            if (r.is_zero()) throw std::invalid_argument("P(0) Q(0) must be nonzero");
    for (const auto& r : p_roots)
        if (std::find(q_roots.begin(), q_roots.end(), r) != q_roots.end())
            throw std::invalid_argument("P and Q must be coprime");
    Poly p = in_uv(UPoly::from_roots(p_roots)), q = in_uv(UPoly::from_roots(q_roots));
    return {mono(1, 1, 1), mono(1, 0, 2) * p + mono(1, 0, 1) * q + mono(1, 1, 1)};
}

PolyMap make_lemma23(int k, const std::vector<GaussRat>& p_coeffs)
{
    if (k < 1) throw std::invalid_argument("k must be positive");
    UPoly p(p_coeffs);
    if (p.degree() != k) throw std::invalid_argument("P must have degree k");
    if (p.coeff(0).is_zero()) throw std::invalid_argument("P(0) must be nonzero");
    Poly pp = in_uv(p);
    return {pp + mono(1, k, k + 1), Poly(GaussRat(1)) + mono(1, 1, 1) * pp + mono(2, k + 1, k + 2)};
}

PolyMap fixture(const std::string& id)
{
    if (id == "1.2") return {Poly(GaussRat(1)) - mono(1, 2, 2) + mono(1, 2, 3), Poly(GaussRat(1)) + mono(1, 1, 1) - mono(1, 3, 3) + mono(2, 3, 4)};
    if (id == "1.3") {
        Poly w = Poly(GaussRat(1)) - mono(1, 1, 1);
        return {w * w, Poly(GaussRat(1)) + mono(1, 0, 1) + mono(1, 1, 1) * w * w};
    }
    if (id == "1.4") return {mono(1, 1, 1), mono(1, 0, 2) - mono(1, 1, 3) + mono(2, 0, 1) - mono(1, 1, 2) + mono(1, 1, 1)};
    throw std::invalid_argument("unknown fixture id: " + id);
}

PolyMap make_family(const FamilySpec& spec)
{
    switch (spec.kind) {
    case FamilyKind::thm14: return make_thm14(spec.n_or_k, spec.p_roots, spec.q_roots);
    case FamilyKind::lemma23: return make_lemma23(spec.n_or_k, spec.p_coeffs);
    default: return fixture(spec.fixture_id);
    }
}

std::pair<std::vector<GaussRat>, std::vector<GaussRat>> random_thm14_roots(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed ^ 0x51ed270b2cb4a3e1ULL);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 4);
    std::set<GaussRat> used;
    std::vector<GaussRat> all;
    while (static_cast<int>(all.size()) < 2 * n) {
        long p = num(rng);
        if (p == 0) continue;
        GaussRat r(mpq_class(p) / mpq_class(den(rng)));
        if (used.insert(r).second) all.push_back(r);
    }
    return {std::vector<GaussRat>(all.begin(), all.begin() + n), std::vector<GaussRat>(all.begin() + n, all.end())};
}

}  // namespace nonproper
