#pragma once

// Overline/underline, the Scott socle, radical and top, and the two degree-one
// derived functors, all computed cell by cell on a CellModule.
//
// overline(M) at a cell is M at the cell just below it diagonally: per axis a
// point stratum {r} becomes the interval below r, intervals stay. underline is
// the same with the interval above. The canonical maps are steps of M.

#include "scottpersist/cellmod.hpp"

#include <optional>
#include <string>

namespace scottpersist {

struct FunctorReport {
    CellModule output;
    /// overline: output -> M; underline: M -> output; soc, rad, L1top:
    /// inclusion; top, R1soc: projection.
    std::optional<CellMorphism> canonical;
    bool is_zero = false;
};

/// Per-axis stratum maps s -> lower(s) and s -> upper(s).
std::vector<std::vector<std::size_t>> lower_strata(const CellComplex& k);
std::vector<std::vector<std::size_t>> upper_strata(const CellComplex& k);

FunctorReport overline(const CellModule& m);
FunctorReport underline(const CellModule& m);
/// The functors applied to a morphism f: M -> N, giving overline(M) -> overline(N).
CellMorphism overline(const CellMorphism& f);
CellMorphism underline(const CellMorphism& f);

FunctorReport scott_socle(const CellModule& m);
FunctorReport scott_radical(const CellModule& m);
FunctorReport scott_top(const CellModule& m);
FunctorReport r1_socle(const CellModule& m);
FunctorReport l1_top(const CellModule& m);

bool is_ephemeral(const CellModule& m);
bool is_upper_semicontinuous(const CellModule& m);
bool is_lower_semicontinuous(const CellModule& m);

/// overline(M), the lower semi-continuous module standing for j_* M.
CellModule jstar_representative(const CellModule& m);

enum class IsoVerdict { isomorphic, not_isomorphic, undetermined };
std::string to_string(IsoVerdict v);

/// Exact for modules of dimension <= 1 everywhere. Otherwise: equal modules,
/// then a dimension/step-rank comparison, then a search in Hom(M, N).
IsoVerdict isomorphic(const CellModule& a, const CellModule& b);
/// Thin case only: scalar propagation along nonzero steps. Throws DomainError
/// when a stalk has dimension above 1.
bool thin_isomorphic(const CellModule& a, const CellModule& b);

/// Isomorphic j_* representatives.
IsoVerdict same_scott_sheaf(const CellModule& a, const CellModule& b);

struct SocTopCheck {
    bool r1soc_top = false;  ///< R1soc(overline M) -> top(underline M) is an isomorphism
    bool l1top_soc = false;  ///< soc(overline M) -> L1top(underline M) is an isomorphism
    std::string detail;
};

/// Builds the comparison maps from the square formed by the canonical maps
/// of overline(M) and underline(M) and checks that both are isomorphisms.
SocTopCheck soc_top_connection(const CellModule& m);

/// On every cell: dim soc - dim M + dim underline - dim R1soc, and
/// dim L1top - dim overline + dim M - dim top. Returns the first nonzero
/// sum, described, or nullopt.
std::optional<std::string> exactness_defect(const CellModule& m);

} // namespace scottpersist
