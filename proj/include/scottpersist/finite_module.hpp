#pragma once

// Persistence modules over a finite poset, given by a matrix on every Hasse
// pair. Every element of a finite poset is compact, so the overline and
// underline constructions are colimits over {x <= p} and limits over
// {x >= p}; they are computed here as honest (co)limits so the claim that
// the canonical maps are isomorphisms is checked, not assumed.

#include "scottpersist/linalg.hpp"
#include "scottpersist/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace scottpersist {

class FiniteModule {
public:
    /// maps[k] is M(i <= j) for the k-th Hasse pair (i, j) of the poset.
    /// Throws DomainError on wrong shapes or when two paths disagree.
    FiniteModule(Poset poset, std::vector<std::size_t> dims, std::vector<Matrix> maps,
                 Field field = default_field());

    const Poset& poset() const { return poset_; }
    const Poset::Finite& finite() const { return *poset_.as_finite(); }
    std::size_t size() const { return dims_.size(); }
    std::size_t dim(std::size_t i) const { return dims_[i]; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const std::vector<Matrix>& hasse_maps() const { return maps_; }
    const Field& field() const { return field_; }

    /// M(i <= j). Throws DomainError unless i <= j.
    const Matrix& map(std::size_t i, std::size_t j) const;

private:
    Poset poset_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> maps_;
    Field field_;
    std::vector<std::vector<std::optional<Matrix>>> composite_;
};

struct FiniteLine {
    std::vector<std::size_t> dims;  ///< dimension of the (co)limit at each element
    std::vector<std::size_t> canonical_rank;
    bool canonical_iso = false;     ///< canonical map an isomorphism everywhere
};

/// colim over {x << p} of M with the canonical map to M_p.
FiniteLine finite_overline(const FiniteModule& m);
/// lim over {x >> p} of M with the canonical map from M_p.
FiniteLine finite_underline(const FiniteModule& m);

bool is_lower_semicontinuous(const FiniteModule& m);
bool is_upper_semicontinuous(const FiniteModule& m);

} // namespace scottpersist
