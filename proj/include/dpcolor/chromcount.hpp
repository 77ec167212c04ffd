#pragma once

#include <dpcolor/bigint.hpp>
#include <dpcolor/hypergraph.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace dpcolor {

/// Upper bound on elementary edge checks an enumeration may perform. An
/// enumeration over k^n colorings of a hypergraph with m edges is estimated at
/// k^n * max(m, 1) checks.
struct Budget {
    std::uint64_t limit = 1'000'000'000ULL;
};

/// Exact integer polynomial, coeffs[i] is the coefficient of k^i.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coeffs);

    [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    /// Degree of the zero polynomial is reported as 0.
    [[nodiscard]] std::size_t degree() const noexcept;
    [[nodiscard]] BigInt operator()(const BigInt& k) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Number of maps V -> [k] with no monochromatic edge.
BigInt count_proper(const Hypergraph& h, unsigned k, const Budget& budget = {});

/// Chromatic polynomial recovered from exact counts at k = 0..n by Newton
/// forward differences in exact rational arithmetic.
Polynomial chromatic_polynomial(const Hypergraph& h, const Budget& budget = {});

/// k (k^{r-1} - 1)^m: proper colorings of any r-uniform hypertree with m edges.
BigInt hypertree_poly(unsigned r, unsigned m, const BigInt& k);

/// (k^{r-1} - 1)^{m+p} + (-1)^p (k - 1)(k^{r-1} - 1)^m: proper colorings of a
/// linear r-uniform unicyclic hypergraph with a cycle of length p and m further
/// edges. Throws DomainError unless r >= 3 and p >= 3.
BigInt unicyclic_poly(unsigned r, unsigned m, unsigned p, const BigInt& k);

/// Counts of proper colorings of H - e, split by the colors they give the
/// vertices of e. Colors in keys are 0-based; `order` fixes the position of
/// each vertex of e inside a key.
struct BoundaryProfile {
    EdgeIndex edge = 0;
    unsigned k = 0;
    std::vector<Vertex> order;
    std::map<std::vector<unsigned>, BigInt> counts;

    [[nodiscard]] BigInt total() const;
};

/// Default vertex order for profiles and extremal covers: when H is unicyclic
/// and e lies on the cycle, the two vertices of e shared with other cycle edges
/// come first (ascending), then the rest ascending. Otherwise plain ascending.
std::vector<Vertex> boundary_order(const Hypergraph& h, EdgeIndex e);

BoundaryProfile boundary_profile(const Hypergraph& h, EdgeIndex e, unsigned k, const Budget& budget = {});
BoundaryProfile boundary_profile(const Hypergraph& h, EdgeIndex e, std::vector<Vertex> order, unsigned k,
                                 const Budget& budget = {});

/// Profile counts collapsed onto two classes. `uniform` is false when the
/// counts inside one class are not all equal; t1/t2 are absent for empty
/// classes.
struct ProfileSplit {
    bool uniform = false;
    std::optional<BigInt> t1;
    std::optional<BigInt> t2;
};

/// Classes: constant tuples (t1) and non-constant tuples (t2).
ProfileSplit split_constant(const BoundaryProfile& p);
/// Classes: i1 == i2 (t1) and i1 != i2 (t2).
ProfileSplit split_leading_pair(const BoundaryProfile& p);

} // namespace dpcolor
