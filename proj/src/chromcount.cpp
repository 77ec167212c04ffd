#include <dpcolor/chromcount.hpp>

#include <dpcolor/error.hpp>

#include "enumerate.hpp"

#include <algorithm>

namespace dpcolor {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}

std::size_t Polynomial::degree() const noexcept {
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        if (coeffs_[i] != 0) return i;
    return 0;
}

BigInt Polynomial::operator()(const BigInt& k) const {
    BigInt acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * k + coeffs_[i];
    return acc;
}

BigInt count_proper(const Hypergraph& h, unsigned k, const Budget& budget) {
    detail::require_budget(detail::enumeration_cost(h.vertex_count(), h.edge_count(), k), budget,
                           "proper coloring count at k=" + std::to_string(k));
    return BigInt(detail::natural_patterns(h, k).count());
}

Polynomial chromatic_polynomial(const Hypergraph& h, const Budget& budget) {
    const std::size_t n = h.vertex_count();
    std::vector<BigInt> diffs;
    diffs.reserve(n + 1);
    for (unsigned k = 0; k <= n; ++k) diffs.push_back(count_proper(h, k, budget));
    // In-place forward differences: diffs[i] becomes Delta^i P(0).
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = n; j >= i; --j) diffs[j] -= diffs[j - 1];

    // P(x) = sum_i Delta^i P(0) * x(x-1)...(x-i+1) / i!
    std::vector<Rational> acc(n + 1, Rational(0));
    std::vector<BigInt> falling{BigInt(1)}; // coefficients of x(x-1)...(x-i+1)
    BigInt factorial = 1;
    for (std::size_t i = 0; i <= n; ++i) {
        if (i > 0) {
            factorial *= i;
            std::vector<BigInt> next(falling.size() + 1, BigInt(0));
            const BigInt shift = static_cast<long long>(i - 1);
            for (std::size_t d = 0; d < falling.size(); ++d) {
                next[d + 1] += falling[d];
                next[d] -= shift * falling[d];
            }
            falling = std::move(next);
        }
        for (std::size_t d = 0; d < falling.size(); ++d) acc[d] += Rational(diffs[i] * falling[d], factorial);
    }

    std::vector<BigInt> coeffs;
    coeffs.reserve(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
        if (boost::multiprecision::denominator(acc[d]) != 1)
            throw Error(ErrorCode::NonIntegralCoefficient,
                        "interpolated coefficient of k^" + std::to_string(d) + " is " + to_fraction(acc[d]));
        coeffs.push_back(boost::multiprecision::numerator(acc[d]));
    }
    return Polynomial(std::move(coeffs));
}

BigInt hypertree_poly(unsigned r, unsigned m, const BigInt& k) {
    if (r < 2) throw Error(ErrorCode::DomainError, "hypertree formula needs r >= 2");
    return k * ipow(ipow(k, r - 1) - 1, m);
}

BigInt unicyclic_poly(unsigned r, unsigned m, unsigned p, const BigInt& k) {
    if (r < 3) throw Error(ErrorCode::DomainError, "unicyclic formula needs r >= 3");
    if (p < 3) throw Error(ErrorCode::DomainError, "unicyclic formula needs p >= 3");
    const BigInt base = ipow(k, r - 1) - 1;
    const BigInt tail = (k - 1) * ipow(base, m);
    return ipow(base, m + p) + (p % 2 == 0 ? tail : BigInt(-tail));
}

BigInt BoundaryProfile::total() const {
    BigInt sum = 0;
    for (const auto& [tuple, count] : counts) sum += count;
    return sum;
}

std::vector<Vertex> boundary_order(const Hypergraph& h, EdgeIndex e) {
    const Edge& edge = h.edge(e);
    const StructureReport rep = classify(h);
    if (rep.classification != Classification::Unicyclic ||
        !std::binary_search(rep.cycle_edges->begin(), rep.cycle_edges->end(), e))
        return edge;
    std::vector<Vertex> first;
    std::vector<Vertex> rest;
    for (Vertex v : edge) {
        if (std::binary_search(rep.cycle_vertices->begin(), rep.cycle_vertices->end(), v))
            first.push_back(v);
        else
            rest.push_back(v);
    }
    first.insert(first.end(), rest.begin(), rest.end());
    return first;
}

BoundaryProfile boundary_profile(const Hypergraph& h, EdgeIndex e, unsigned k, const Budget& budget) {
    return boundary_profile(h, e, boundary_order(h, e), k, budget);
}

BoundaryProfile boundary_profile(const Hypergraph& h, EdgeIndex e, std::vector<Vertex> order, unsigned k,
                                 const Budget& budget) {
    if (k < 1) throw Error(ErrorCode::DomainError, "boundary profile needs k >= 1");
    Edge sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != h.edge(e)) throw Error(ErrorCode::BadParameters, "profile order is not a permutation of the edge");

    const Hypergraph rest = delete_edge(h, e);
    detail::require_budget(detail::enumeration_cost(rest.vertex_count(), rest.edge_count(), k), budget,
                           "boundary profile");
    const detail::PatternSet patterns = detail::natural_patterns(rest, k);

    BoundaryProfile prof;
    prof.edge = e;
    prof.k = k;
    prof.order = order;

    const std::size_t r = order.size();
    std::vector<unsigned> tuple(r, 0);
    std::vector<int> pinned(h.vertex_count(), detail::kFree);
    while (true) {
        for (std::size_t i = 0; i < r; ++i) pinned[order[i]] = static_cast<int>(tuple[i]);
        prof.counts.emplace(tuple, BigInt(patterns.count(pinned)));
        std::size_t pos = 0;
        while (pos < r && ++tuple[pos] == k) tuple[pos++] = 0;
        if (pos == r) break;
    }
    return prof;
}

namespace {

template <class Classifier>
ProfileSplit split_by(const BoundaryProfile& p, Classifier first_class) {
    ProfileSplit out;
    out.uniform = true;
    for (const auto& [tuple, count] : p.counts) {
        auto& slot = first_class(tuple) ? out.t1 : out.t2;
        if (!slot)
            slot = count;
        else if (*slot != count)
            out.uniform = false;
    }
    if (!out.uniform) {
        out.t1.reset();
        out.t2.reset();
    }
    return out;
}

} // namespace

ProfileSplit split_constant(const BoundaryProfile& p) {
    return split_by(p, [](const std::vector<unsigned>& t) {
        return std::adjacent_find(t.begin(), t.end(), std::not_equal_to<>()) == t.end();
    });
}

ProfileSplit split_leading_pair(const BoundaryProfile& p) {
    return split_by(p, [](const std::vector<unsigned>& t) { return t.size() < 2 || t[0] == t[1]; });
}

} // namespace dpcolor
