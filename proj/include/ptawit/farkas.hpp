#pragma once

#include "ptawit/pta.hpp"
#include "ptawit/quotient.hpp"

#include <string>
#include <vector>

namespace ptawit {

// The linear system behind the certificate polytopes
//   P_min(λ) = { z >= 0 | A z <= b, z(s0) >= λ }
//   P_max(λ) = { y >= 0 | yA <= δ_s0, yb >= λ }
// with one row per (region state, edge) choice:
//   (Az)(s,e) = z(s) - Σ_{s' region} P(s,e,s') z(s'),  b(s,e) = P(s,e,goal).
struct FarkasSystem {
    struct RowRef {
        int region;     // region index of the row's state
        int edge_index; // index into the quotient's edge list at that state
    };
    int num_regions = 0;
    int initial_region = -1; // -1 when the initial state is goal/fail
    std::vector<RowRef> row_refs;
    std::vector<std::vector<std::pair<int, Rational>>> rows; // sparse over regions
    std::vector<Rational> b;
};

// Requires the proceed assumption (throws AssumptionViolated otherwise).
FarkasSystem build_system(const QuotientMdp& m);

struct Certificate {
    Direction direction;
    std::vector<Rational> vec; // per region (Min) or per row (Max)
    Rational lambda;
};

// Exact membership in P_min(λ) / P_max(λ).
bool is_certificate(const FarkasSystem& f, const Certificate& c);

// supp(z) / supp_S(y) as sorted region indices.
std::vector<int> certificate_support(const FarkasSystem& f, const Certificate& c);

// The induced subsystem T_R^w / T_R^s of Definition-style zone joins:
// invariants are the smallest zones containing the supporting regions per
// location (time-closed within the original invariant for the strong
// variant), guards shrink accordingly, and distribution entries survive only
// when some supporting region maps into the support again; the remaining
// mass goes to fail. Throws EmptySupport on an empty region set. When the
// initial region is missing it is added and the witness is flagged
// (such a witness trivially fails any λ > 0).
Witness induce_subsystem(const Pta& pta, const QuotientMdp& m,
                         const std::vector<int>& support_regions, WitnessStrength kind);

// Certificate serialization for audit: one "state = p/q" line per support
// entry.
std::string certificate_to_string(const QuotientMdp& m, const FarkasSystem& f,
                                  const Certificate& c);

// The certificate LP: maximize z(s0) over P_min (Min) or yb over the yA <=
// delta_s0 cone (Max), optionally with the support restricted to the given
// region set. The unrestricted value equals Pr^min / Pr^max of the quotient;
// P_*(λ) is nonempty iff the value is >= λ. Requires the initial state to be
// a region state.
struct CertificateLp {
    Rational value;
    Certificate certificate;
};
CertificateLp certificate_lp(const FarkasSystem& f, Direction dir,
                             const std::vector<char>* allowed_regions = nullptr);

} // namespace ptawit
