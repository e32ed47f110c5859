#pragma once

// Staircase regions: finitely generated up-sets and down-sets, closed or
// open, and differences of two nested ones.

#include "scottpersist/poset.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace scottpersist {

enum class SetKind { up, down };
enum class Flavor { closed, open };

std::string to_string(SetKind k);
std::string to_string(Flavor f);

/// Union of basic sets over a generator antichain: up/closed is the union of
/// the principal up-sets of the generators, up/open the union of the sets of
/// points way above them, and dually for down-sets.
class StaircaseRegion {
public:
    /// Generators are sorted and antichain-reduced. An empty list is the empty set.
    StaircaseRegion(Poset poset, SetKind kind, Flavor flavor, std::vector<Point> gens);

    static StaircaseRegion up(std::size_t n, Flavor flavor, std::vector<Point> gens)
    {
        return StaircaseRegion(Poset::standard(n), SetKind::up, flavor, std::move(gens));
    }
    static StaircaseRegion down(std::size_t n, Flavor flavor, std::vector<Point> gens)
    {
        return StaircaseRegion(Poset::standard(n), SetKind::down, flavor, std::move(gens));
    }

    const Poset& poset() const { return poset_; }
    std::size_t dim() const { return poset_.dim(); }
    SetKind kind() const { return kind_; }
    Flavor flavor() const { return flavor_; }
    const std::vector<Point>& gens() const { return gens_; }
    bool empty() const { return gens_.empty(); }

    bool contains(const Point& p) const;
    /// Same generators, other flavor.
    StaircaseRegion with_flavor(Flavor f) const { return StaircaseRegion(poset_, kind_, f, gens_); }
    /// Same kind, flavor and poset, other generators.
    StaircaseRegion with_gens(std::vector<Point> gens) const { return StaircaseRegion(poset_, kind_, flavor_, std::move(gens)); }

    friend bool operator==(const StaircaseRegion&, const StaircaseRegion&) = default;

private:
    Poset poset_;
    SetKind kind_;
    Flavor flavor_;
    std::vector<Point> gens_;
};

std::string to_string(const StaircaseRegion& r);

/// outer minus inner, both of the same kind with inner inside outer.
class ConvexRegion {
public:
    /// Throws DomainError unless inner is contained in outer.
    ConvexRegion(StaircaseRegion outer, StaircaseRegion inner);
    /// outer minus the empty set
    explicit ConvexRegion(StaircaseRegion outer);

    const StaircaseRegion& outer() const { return outer_; }
    const StaircaseRegion& inner() const { return inner_; }
    std::size_t dim() const { return outer_.dim(); }
    bool contains(const Point& p) const { return outer_.contains(p) && !inner_.contains(p); }

    friend bool operator==(const ConvexRegion&, const ConvexRegion&) = default;

private:
    StaircaseRegion outer_;
    StaircaseRegion inner_;
};

/// Scott interior of an up-set. Standard and cone orders only.
StaircaseRegion interior(const StaircaseRegion& u);
/// Standard-topology closure on R^n.
StaircaseRegion closure(const StaircaseRegion& r);
/// Standard-topology interior of a down-set on R^n.
StaircaseRegion interior_down(const StaircaseRegion& d);
/// closure(r) minus the open version of r. R^n only.
ConvexRegion boundary(const StaircaseRegion& r);

/// Exact containment a subset of b, decided on generators. Same kind and poset.
bool region_subset(const StaircaseRegion& a, const StaircaseRegion& b);

enum class MeagerStatus { meager, not_meager, unknown };

struct MeagerVerdict {
    MeagerStatus status = MeagerStatus::unknown;
    std::string certificate;                       ///< set when meager
    std::optional<std::pair<Point, Point>> witness;  ///< x << y, both in the set
};

/// Three-valued: certified when the set sits inside cl(R) minus Int(R) for its
/// outer region R, refuted by an explicit witness pair, unknown otherwise.
MeagerVerdict is_meager(const ConvexRegion& s, std::uint64_t seed = 0);

/// Open, nonempty, and upward directed (checked on generator pairs).
bool is_injective_indicator_region(const StaircaseRegion& d);

} // namespace scottpersist
