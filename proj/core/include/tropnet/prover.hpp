#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropnet/ideal.hpp"
#include "tropnet/multipoly.hpp"
#include "tropnet/nets.hpp"
#include "tropnet/quotient.hpp"
#include "tropnet/tropical.hpp"

namespace tropnet {

/// Partially coordinatized net: the normalized quadrilateral and everything
/// the tropical table pins down, either to fixed rational coordinates or to a
/// one-parameter family. `notes` records, per item, the tropical argument
/// that fixed its shape.
struct NetSkeleton {
    RingPtr ring;
    AbstractNet net;
    std::map<LineId, ProjLine<Rational>> fixed_lines;
    std::map<PointId, ProjPoint<Rational>> fixed_points;
    /// family coordinates plus the index of the ring parameter introduced
    std::map<LineId, std::pair<ProjLine<MultiPoly>, std::size_t>> parametric_lines;
    std::map<PointId, std::pair<ProjPoint<MultiPoly>, std::size_t>> parametric_points;
    std::vector<MultiPoly> nonvanishing;
    std::map<std::string, std::string> notes;
    /// Overrides for which two known points span a derived line (default:
    /// first two in point-id order).
    std::map<LineId, std::pair<PointId, PointId>> join_plan;
};

/// Incidence equations of the completed symbolic configuration.
struct ConstraintSystem {
    RingPtr ring;
    std::vector<MultiPoly> equations;
    std::vector<std::string> tags;  ///< per equation: "pij on lkm"
    std::vector<MultiPoly> nonvanishing;
    std::map<LineId, ProjLine<MultiPoly>> all_lines;
    std::map<PointId, ProjPoint<MultiPoly>> all_points;
};

/// One replayable derivation step: target == sum of cofactor * member over
/// the members so far (generators first, then earlier step targets).
struct CertificateStep {
    MultiPoly target;
    std::vector<std::pair<std::size_t, MultiPoly>> cofactors;
};

enum class CertificateKind {
    Nonexistence,
    Uniqueness,
};

struct Certificate {
    CertificateKind kind = CertificateKind::Nonexistence;
    RingPtr ring;  ///< equation ring plus any adjoined inverse variables
    std::vector<MultiPoly> generators;
    /// Indices into the constraint system's nonvanishing list that were
    /// adjoined as inverse relations (minimal prefix that sufficed).
    std::vector<std::size_t> used_nonvanishing;
    std::vector<CertificateStep> steps;
    /// Nonexistence: a combination equal to a nonzero rational constant.
    std::optional<CertificateStep> witness;
    /// Uniqueness: monic relation pinning the solved variable down, plus the
    /// solved expression var = alpha + beta * solved_var for every parameter.
    std::optional<MultiPoly> minimal_poly;
    std::size_t solved_var = 0;
    std::map<std::string, std::array<Rational, 2>> solved;
    bool automorphism_checked = false;
};

struct VerificationResult {
    bool accepted = false;
    std::string reason;
    std::optional<std::size_t> failing_step;
};

/// Skeleton of the hypothetical (4,4)-net: standard quadrilateral, joins
/// l31/l32, three one-parameter line families and six one-parameter point
/// families filtered through the tropical table.
NetSkeleton build_44_skeleton();

/// Skeleton of the (4,3)-net: standard quadrilateral, joins l32/l41, fixed
/// p33 and three one-parameter line families.
NetSkeleton build_43_skeleton();

/// Derives every remaining line and point by exact meets and joins in the
/// parameter ring and emits one polynomial equation per incidence that does
/// not hold identically (deduplicated under scalar multiples).
ConstraintSystem generate_constraints(const NetSkeleton& s, const AbstractNet& net);

/// Decides the (4,4) system: saturates by the smallest prefix of the
/// nonvanishing conditions that makes the ideal trivial (expected: none) and
/// assembles a certificate whose steps carry the landmark polynomials and
/// whose witness is a nonzero constant. The result is re-verified before it
/// is returned. Throws ResourceLimitError if the step budget is exhausted.
Certificate prove_nonexistence_44(long step_budget = 100000);

/// Solves the (4,3) system: reduces it to the minimal polynomial of one
/// parameter, solves the others linearly in it, and realizes the full net
/// over the quotient field. The certificate also records that the conjugate
/// net (parameter automorphism k -> 1-k) verifies.
std::pair<Certificate, RealizedNet<QuotientElem>> prove_uniqueness_43(long step_budget = 100000);

/// Replays a certificate against the system it claims to decide, using only
/// polynomial arithmetic (no basis completion). Rejects with the index of the
/// first failing step.
VerificationResult verify_certificate(const Certificate& c, const ConstraintSystem& sys);

}  // namespace tropnet
