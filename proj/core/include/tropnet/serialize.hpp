#pragma once

#include <json.hpp>

#include "tropnet/latin.hpp"
#include "tropnet/mat3.hpp"
#include "tropnet/multipoly.hpp"
#include "tropnet/nets.hpp"
#include "tropnet/prover.hpp"
#include "tropnet/quotient.hpp"
#include "tropnet/rational.hpp"
#include "tropnet/unipoly.hpp"

namespace tropnet {

/// All file formats carry this version; bump on any incompatible change.
inline constexpr int kSchemaVersion = 1;

/// Preserves field insertion order, so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

/// "num" or "num/den" string.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Object mapping t-exponent to coefficient: {"0":"1","3":"-1/2"}.
Json unipoly_to_json(const UniPoly& p);
UniPoly unipoly_from_json(const Json& j);

/// Row-major 3x3 array of unipoly objects.
Json mat3_to_json(const Mat3& m);
Mat3 mat3_from_json(const Json& j);

/// {"vars":["k1",...], "terms":{"0,1":"num/den", ...}}; term keys are
/// comma-joined exponent vectors in ascending term order.
Json multipoly_to_json(const MultiPoly& p);
/// Reads into the given ring; the stored variable list must match.
MultiPoly multipoly_from_json(const Json& j, const RingPtr& ring);
/// Reads into a fresh ring built from the stored variable list.
MultiPoly multipoly_from_json(const Json& j);

/// Terms object only (no variable list); for polynomials whose ring is
/// recorded once at the container level.
Json poly_terms_to_json(const MultiPoly& p);
MultiPoly poly_terms_from_json(const Json& j, const RingPtr& ring);

/// Array of row arrays of integers.
Json square_to_json(const LatinSquare& s);
LatinSquare square_from_json(const Json& j);

/// {"first": square, "second": square}.
Json ols_to_json(const OLSPair& p);
OLSPair ols_from_json(const Json& j);

/// ["c0", "c1"] over Q, meaning c0 + c1*k with k^2 = k - 1... (k^2 - k + 1 = 0).
Json quotient_to_json(const QuotientElem& q);
QuotientElem quotient_from_json(const Json& j);

/// Net files: {"schema_version", "k", "d", "field", "incidence", "lines",
/// "points"}. field is "abstract" (no coordinates), "rational" or
/// "quotient-k2"; ids are encoded as "l31" / "p23" keys, coordinate triples
/// as 3-element arrays of the field's element encoding.
Json net_to_json(const AbstractNet& n);
Json net_to_json(const RealizedNet<Rational>& n);
Json net_to_json(const RealizedNet<QuotientElem>& n);
AbstractNet abstract_net_from_json(const Json& j);
/// Requires field == "rational".
RealizedNet<Rational> rational_net_from_json(const Json& j);
RealizedNet<QuotientElem> quotient_net_from_json(const Json& j);

/// Certificate files: {"schema_version", "kind", "params", "generators",
/// "used_nonvanishing", "steps", "witness", "minimal_poly", "solved_var",
/// "solved", "automorphism_checked"}; every polynomial is a terms object
/// over the ring declared by "params".
Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

}  // namespace tropnet
