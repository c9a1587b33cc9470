#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tropnet/latin.hpp"
#include "tropnet/projective.hpp"

namespace tropnet {

/// (class, index) for lines; (i, j) for points. All ids are 1-based.
using LineId = std::pair<int, int>;
using PointId = std::pair<int, int>;

inline std::string line_name(LineId id) {
    return "l" + std::to_string(id.first) + std::to_string(id.second);
}
inline std::string point_name(PointId id) {
    return "p" + std::to_string(id.first) + std::to_string(id.second);
}

/// Combinatorial (k,d)-net: every point p_ij lies on one line per class
/// (class 1 line i, class 2 line j, class 2+s line = s-th square's (i,j) entry).
struct AbstractNet {
    int k = 0;
    int d = 0;
    /// point id -> line index per class (vector of length k).
    std::map<PointId, std::vector<int>> incidence;

    /// Index of the class-c line through point p (1-based class).
    int line_through(PointId p, int cls) const;
    /// All points on line (cls, idx), in point-id order.
    std::vector<PointId> points_on(LineId l) const;
};

/// Builds the abstract (2 + n, d)-net of n pairwise-orthogonal squares.
/// An empty list yields the (2,d) grid. Throws NonOrthogonalInputError.
AbstractNet net_from_ols(const std::vector<LatinSquare>& squares);

/// One violated condition; `condition` is a stable machine-readable id and
/// `detail` names the offending items.
struct NetViolation {
    std::string condition;
    std::string detail;

    bool operator==(const NetViolation& o) const = default;
};

/// Checks point count d^2, the per-class partition into d blocks of d points,
/// unique line per class, and that lines from different classes share exactly
/// one point. Returns all violations (empty = pass).
std::vector<NetViolation> verify_abstract_net(const AbstractNet& n);

/// Coordinatized net over ring R.
template <class R>
struct RealizedNet {
    AbstractNet net;
    std::map<LineId, ProjLine<R>> lines;
    std::map<PointId, ProjPoint<R>> points;
};

/// True iff (k=3, d>=2), (k=4, d>=3) or (k=5, d>=6); these are the only class
/// counts and sizes a complex-plane net can have. Throws DomainError for
/// k < 3 or d < 2.
bool yuzvinsky_admissible(int k, int d);

/// Exact coordinate verification: every declared incidence holds, lines in a
/// class are pairwise distinct and meet only at declared net points, and every
/// cross-class meet is exactly one declared net point.
template <class R>
std::vector<NetViolation> verify_realized_net(const RealizedNet<R>& n) {
    std::vector<NetViolation> out;
    for (const auto& [pid, classes] : n.net.incidence) {
        auto pit = n.points.find(pid);
        if (pit == n.points.end()) {
            out.push_back({"missing-point", point_name(pid)});
            continue;
        }
        for (int cls = 1; cls <= n.net.k; ++cls) {
            LineId lid{cls, classes[static_cast<std::size_t>(cls - 1)]};
            auto lit = n.lines.find(lid);
            if (lit == n.lines.end()) {
                out.push_back({"missing-line", line_name(lid)});
                continue;
            }
            if (!incident(pit->second, lit->second)) {
                out.push_back({"incidence", point_name(pid) + " not on " + line_name(lid)});
            }
        }
    }
    // Distinct lines within a class, and their meets must avoid net points.
    for (const auto& [id1, l1] : n.lines) {
        for (const auto& [id2, l2] : n.lines) {
            if (!(id1 < id2)) {
                continue;
            }
            if (id1.first == id2.first) {
                if (proj_equal(l1, l2)) {
                    out.push_back({"duplicate-line", line_name(id1) + " = " + line_name(id2)});
                    continue;
                }
                auto m = meet(l1, l2);
                for (const auto& [pid, pt] : n.points) {
                    if (proj_equal(m, pt)) {
                        out.push_back({"intra-class-meet-at-net-point",
                                       line_name(id1) + " ^ " + line_name(id2) + " = " +
                                           point_name(pid)});
                    }
                }
            } else {
                // Cross-class meet must be exactly one declared net point.
                if (proj_equal(l1, l2)) {
                    out.push_back({"duplicate-line", line_name(id1) + " = " + line_name(id2)});
                    continue;
                }
                auto m = meet(l1, l2);
                int hits = 0;
                for (const auto& [pid, pt] : n.points) {
                    if (proj_equal(m, pt)) {
                        ++hits;
                    }
                }
                if (hits != 1) {
                    out.push_back({"cross-class-meet",
                                   line_name(id1) + " ^ " + line_name(id2) + " matches " +
                                       std::to_string(hits) + " net points"});
                }
            }
        }
    }
    // Declared points pairwise distinct.
    for (const auto& [id1, p1] : n.points) {
        for (const auto& [id2, p2] : n.points) {
            if (id1 < id2 && proj_equal(p1, p2)) {
                out.push_back({"duplicate-point", point_name(id1) + " = " + point_name(id2)});
            }
        }
    }
    return out;
}

}  // namespace tropnet
