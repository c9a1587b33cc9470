#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropnet/mat3.hpp"
#include "tropnet/projective.hpp"
#include "tropnet/rational.hpp"

namespace tropnet {

struct TropPoint {
    int x = 0;
    int y = 0;

    auto operator<=>(const TropPoint&) const = default;
};

/// Tropical line given by its center: the locus where max(X-cx, Y-cy, 0) is
/// attained at least twice (rays west, south and northeast from the center).
struct TropLine {
    TropPoint center;

    auto operator<=>(const TropLine&) const = default;
};

bool trop_contains(const TropLine& line, const TropPoint& pt);

/// The fixed degeneration matrix used throughout:
///   [ t-t^2    t^2-t^4   t^4  ]
///   [ t^3+t^2  1         -t^3 ]
///   [ t^2      t^5       1    ]
Mat3 standard_degeneration();

/// Center of the tropicalized line: with (f,g,h) = m * (dual triple), returns
/// (deg h - deg f, deg h - deg g). Throws VanishingCoordinateError when a
/// coordinate of the image is the zero polynomial.
TropPoint trop_line_center(const ProjLine<Rational>& l, const Mat3& m);

/// Location of the tropicalized point: with p_t = cof(m) * p (the cofactor
/// matrix, i.e. the transposed classical adjugate), returns
/// (deg p1 - deg p3, deg p2 - deg p3). Throws VanishingCoordinateError.
TropPoint trop_point_location(const ProjPoint<Rational>& p, const Mat3& m);

/// Candidates c whose tropical line centered at c passes through pt,
/// in input order.
std::vector<TropPoint> centers_through(const TropPoint& pt,
                                       const std::vector<TropPoint>& candidates);

/// Linear form r0*x0 + r1*x1 + r2*x2 in three homogeneous coordinates.
struct LinearForm {
    std::array<Rational, 3> c{};

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }
    /// Scaled so the first nonzero coefficient is 1 (zero stays zero).
    LinearForm normalized() const;
    Rational eval(const std::array<Rational, 3>& v) const;

    auto operator<=>(const LinearForm&) const = default;

    /// e.g. "a+c" with vars = {"a","b","c"}.
    std::string str(const std::array<std::string, 3>& vars) const;
};

/// One case of the piecewise degree analysis: the coordinate the class maps
/// to, the linear forms assumed zero (an RREF basis of their span) and the
/// forms assumed nonzero (reduced modulo the zero span). A class whose zero
/// span has rank 2 pins down a unique projective preimage, stored in
/// `representative`.
struct SymbolicClass {
    std::vector<LinearForm> zero;
    std::vector<LinearForm> nonzero;
    TropPoint coord;
    bool unique = false;
    std::optional<std::array<Rational, 3>> representative;
};

/// Complete case analysis of trop_line_center over symbolic dual coordinates
/// [d:e:f]: each image coordinate of m*[d,e,f] is a t-polynomial whose
/// t-power coefficients are linear forms in (d,e,f); vanishing patterns of
/// these forms are enumerated top-down. Classes are returned in canonical
/// order (zero-span rank, then RREF matrix lexicographically).
std::vector<SymbolicClass> classify_line_symbolic(const Mat3& m);

/// Same analysis for trop_point_location applied to symbolic (a:b:c).
std::vector<SymbolicClass> classify_point_symbolic(const Mat3& m);

/// Row of the joined table: classes of points and of lines landing on one
/// tropical coordinate; an empty vector means "not special" on that side.
struct TableRow {
    TropPoint coord;
    std::vector<SymbolicClass> point_classes;
    std::vector<SymbolicClass> line_classes;
};

struct PointLineTable {
    std::vector<TableRow> rows;
};

/// Joins the two classifications on coordinates. Rows carrying a point class
/// come first (in point classification order), then line-only rows (in line
/// classification order).
PointLineTable point_line_table(const Mat3& m);

enum class AmoebaKind {
    LineThroughMinusOne,  ///< amoeba of the line x + y + 1 = 0
    Scaled,               ///< amoeba of the line x + y + t = 0
};

enum class AmoebaBase {
    Natural,  ///< coordinates are natural logs of absolute values
    BaseT,    ///< coordinates rescaled by 1/log t (logs base t)
};

enum class AmoebaBranch {
    Upper,  ///< e^y - e^x = const boundary, defined for all x
    Right,  ///< e^x - e^y = const boundary, x above the branch threshold
    Lower,  ///< e^x + e^y = const boundary, x below the branch threshold
};

/// `count` evenly spaced samples of one boundary branch on [x_min, x_max]
/// (floating point; figures only). Throws DomainError if count < 2, t <= 1,
/// or a sample point falls outside the branch domain.
std::vector<std::pair<double, double>> amoeba_branch_samples(AmoebaBranch branch,
                                                             AmoebaKind kind, AmoebaBase base,
                                                             const Rational& t_value,
                                                             double x_min, double x_max,
                                                             int count);

struct AmoebaBranchSamples {
    std::string name;
    std::vector<std::pair<double, double>> samples;
};

/// All three boundary branches, each clipped to its own domain inside
/// [x_min, x_max]; branches whose domain misses the range come back empty.
std::vector<AmoebaBranchSamples> amoeba_boundary_samples(AmoebaKind kind, AmoebaBase base,
                                                         const Rational& t_value, double x_min,
                                                         double x_max, int count);

}  // namespace tropnet
