#pragma once

// Translations x -> x + eps v, interleaving certificates and the distances
// that can be computed exactly: between staircase indicators, to zero, and
// between j_* representatives of indicator type.

#include "scottpersist/cellmod.hpp"
#include "scottpersist/errors.hpp"

#include <optional>
#include <string>

namespace scottpersist {

/// A certificate's complexes do not fit the modules it claims to relate.
class ComplexMismatch : public Error {
public:
    using Error::Error;
};

struct SuperlinearFamily {
    Point v;

    static SuperlinearFamily standard(std::size_t n) { return {constant_point(n, 1)}; }
    Point apply(const Point& p, const Rational& eps) const { return p.translated(v, eps); }
};

struct TrFlags {
    bool tr1 = true;
    bool tr2 = false;
    bool tr3 = false;
    std::string tr2_witness;  ///< why some x is not way below its translate
    std::string tr3_witness;
};

/// Standard and cone orders only.
TrFlags tr_flags(const SuperlinearFamily& f, const Poset& poset);

/// Non-negative rational or infinity.
class Distance {
public:
    static Distance finite(Rational d) { return Distance(std::move(d), false); }
    static Distance infinity() { return Distance(0, true); }

    bool is_infinite() const { return infinite_; }
    /// Throws DomainError for infinity.
    const Rational& value() const;
    std::string to_string() const { return infinite_ ? "inf" : format_rational(value_); }

    friend bool operator==(const Distance&, const Distance&) = default;
    friend bool operator<(const Distance& a, const Distance& b)
    {
        if (a.infinite_ || b.infinite_)
            return !a.infinite_ && b.infinite_;
        return a.value_ < b.value_;
    }

private:
    Distance(Rational d, bool inf)
        : value_(std::move(d))
        , infinite_(inf)
    {
    }
    Rational value_;
    bool infinite_;
};

/// f: M -> (N shifted by eps v), g: N -> (M shifted by eps v). Each morphism
/// lives on its own complex, which must refine the module and its shift.
struct InterleavingCertificate {
    Rational eps;
    Point v;
    CellMorphism f;
    CellMorphism g;
};

/// Naturality of f and g plus both triangles g(p + eps v) f(p) = M(p <= p + 2 eps v)
/// and the symmetric one, checked exactly on a common refinement. Throws
/// ComplexMismatch when the certificate's modules or complexes do not match.
bool check_interleaving(const CellModule& m, const CellModule& n, const InterleavingCertificate& cert);

enum class LineSide { overline, underline };

struct CanonicalInterleaving {
    CellModule partner;  ///< overline(M) or underline(M)
    InterleavingCertificate cert;
};

/// The canonical eps-interleaving between M and overline(M) or underline(M).
/// Throws DomainError unless eps > 0 and the family satisfies TR2.
CanonicalInterleaving canonical_interleaving(const CellModule& m, LineSide side, const Rational& eps,
                                             const SuperlinearFamily& f);

/// The same interleaving at a larger eps, via the shift maps of M and N.
InterleavingCertificate weaken_certificate(const CellModule& m, const CellModule& n,
                                           const InterleavingCertificate& cert, const Rational& eps);

/// Interleaving distance between k[R1] and k[R2] for two up-sets or two
/// down-sets, by generator-wise mutual containment of the shifted regions.
Distance distance_indicator(const StaircaseRegion& r1, const StaircaseRegion& r2, const SuperlinearFamily& f);

/// Interleaving distance from M to 0: half the infimum of t with M(p <= p + t v) = 0 everywhere.
Distance distance_to_zero(const CellModule& m, const SuperlinearFamily& f);

struct ScottDistance {
    bool computable = false;
    Distance d = Distance::infinity();
    std::string reason;  ///< why not computable
};

/// Distance between j_* M and j_* N, computed on the representatives
/// overline(M), overline(N) when they are zero or thin indicators of
/// up-sets or of down-sets.
ScottDistance distance_scott(const CellModule& m, const CellModule& n, const SuperlinearFamily& f);

/// {0} and every positive (b - a) / v_i over breakpoints a < b on axis i.
std::vector<Rational> candidate_epsilons(const CellComplex& k, const Point& v);

} // namespace scottpersist
