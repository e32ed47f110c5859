#pragma once

// Seeded generators for the verification suites: staircase and convex
// regions, indicator sums, and modules built as images, kernels and
// cokernels of random maps between indicator sums. Coordinates are rationals
// in [-5, 5] with denominator at most 4; scalars lie in {-2, ..., 2}.

#include "scottpersist/cellmod.hpp"
#include "scottpersist/finite_module.hpp"
#include "scottpersist/rng.hpp"

#include <vector>

namespace scottpersist::gen {

Point point(Rng& rng, std::size_t n);

/// 1 to max_gens generators on R^n.
StaircaseRegion staircase(Rng& rng, std::size_t n, SetKind kind, Flavor flavor, std::size_t max_gens = 4);
/// Kind and flavor drawn too.
StaircaseRegion staircase(Rng& rng, std::size_t n, std::size_t max_gens = 4);
/// Outer staircase minus a staircase strictly inside it, sometimes empty.
ConvexRegion convex(Rng& rng, std::size_t n, std::size_t max_gens = 2);

/// A map between two direct sums of thin modules, assembled from
/// elementary component maps that are natural on their own.
CellMorphism sum_morphism(Rng& rng, const std::vector<CellModule>& source, const std::vector<CellModule>& target);

/// Direct sum of the given modules, on a common complex.
CellModule sum(const std::vector<CellModule>& parts, std::size_t n);

/// Image of a map from up-set indicators to down-set indicators.
CellModule image_module(Rng& rng, std::size_t n);
/// Cokernel of a map between closed principal up-set indicators: finitely generated.
CellModule finitely_generated(Rng& rng, std::size_t n);
/// Kernel of a map between closed principal down-set indicators: finitely co-generated.
CellModule finitely_cogenerated(Rng& rng, std::size_t n);
/// Sum of up to three staircase or convex indicators.
CellModule indicator_sum(Rng& rng, std::size_t n);
/// Sum of boundary indicators; ephemeral by construction.
CellModule ephemeral(Rng& rng, std::size_t n);

/// One of the constructions above, dimension 1 to 3 unless n is given.
CellModule module(Rng& rng, std::size_t n = 0);

/// Random finite poset on `count` elements with a module of stalks of
/// dimension at most 2; maps are built from a random order-preserving
/// assignment so paths always agree.
FiniteModule finite_module(Rng& rng, std::size_t count);

} // namespace scottpersist::gen
