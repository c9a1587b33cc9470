#include "tropnet/nets.hpp"

#include <algorithm>
#include <set>

namespace tropnet {

int AbstractNet::line_through(PointId p, int cls) const {
    auto it = incidence.find(p);
    if (it == incidence.end()) {
        throw MalformedInputError("unknown point " + point_name(p));
    }
    if (cls < 1 || cls > static_cast<int>(it->second.size())) {
        throw MalformedInputError("line class out of range");
    }
    return it->second[static_cast<std::size_t>(cls - 1)];
}

std::vector<PointId> AbstractNet::points_on(LineId l) const {
    std::vector<PointId> out;
    for (const auto& [pid, classes] : incidence) {
        if (l.first >= 1 && l.first <= static_cast<int>(classes.size()) &&
            classes[static_cast<std::size_t>(l.first - 1)] == l.second) {
            out.push_back(pid);
        }
    }
    return out;
}

AbstractNet net_from_ols(const std::vector<LatinSquare>& squares) {
    if (squares.empty()) {
        throw MalformedInputError("need at least one square to build a net");
    }
    int d = squares.front().order();
    for (std::size_t i = 0; i < squares.size(); ++i) {
        if (squares[i].order() != d) {
            throw OrderMismatchError("squares of different orders");
        }
        for (std::size_t j = i + 1; j < squares.size(); ++j) {
            if (!are_orthogonal(squares[i], squares[j])) {
                throw NonOrthogonalInputError("squares " + std::to_string(i + 1) + " and " +
                                              std::to_string(j + 1) + " are not orthogonal");
            }
        }
    }
    AbstractNet n;
    n.k = 2 + static_cast<int>(squares.size());
    n.d = d;
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            std::vector<int> classes{i, j};
            for (const auto& s : squares) {
                classes.push_back(s.at(i - 1, j - 1));
            }
            n.incidence[{i, j}] = std::move(classes);
        }
    }
    return n;
}

std::vector<NetViolation> verify_abstract_net(const AbstractNet& n) {
    std::vector<NetViolation> out;
    if (n.k < 2 || n.d < 1) {
        out.push_back({"parameters", "k >= 2 and d >= 1 required"});
        return out;
    }
    if (static_cast<int>(n.incidence.size()) != n.d * n.d) {
        out.push_back({"point-count", std::to_string(n.incidence.size()) + " points, expected " +
                                          std::to_string(n.d * n.d)});
    }
    for (const auto& [pid, classes] : n.incidence) {
        if (static_cast<int>(classes.size()) != n.k) {
            out.push_back({"class-count", point_name(pid) + " lies on " +
                                              std::to_string(classes.size()) +
                                              " lines, expected " + std::to_string(n.k)});
            continue;
        }
        for (int idx : classes) {
            if (idx < 1 || idx > n.d) {
                out.push_back({"line-index", point_name(pid) + " uses line index " +
                                                 std::to_string(idx)});
            }
        }
    }
    if (!out.empty()) {
        return out;
    }
    // Each class partitions the points into d lines of d points.
    for (int cls = 1; cls <= n.k; ++cls) {
        for (int idx = 1; idx <= n.d; ++idx) {
            auto pts = n.points_on({cls, idx});
            if (static_cast<int>(pts.size()) != n.d) {
                out.push_back({"line-size", line_name({cls, idx}) + " carries " +
                                                std::to_string(pts.size()) + " points, expected " +
                                                std::to_string(n.d)});
            }
        }
    }
    // Lines of different classes share exactly one point.
    for (int c1 = 1; c1 <= n.k; ++c1) {
        for (int c2 = c1 + 1; c2 <= n.k; ++c2) {
            for (int i1 = 1; i1 <= n.d; ++i1) {
                for (int i2 = 1; i2 <= n.d; ++i2) {
                    int hits = 0;
                    for (const auto& [pid, classes] : n.incidence) {
                        if (classes[static_cast<std::size_t>(c1 - 1)] == i1 &&
                            classes[static_cast<std::size_t>(c2 - 1)] == i2) {
                            ++hits;
                        }
                    }
                    if (hits != 1) {
                        out.push_back({"cross-class", line_name({c1, i1}) + " and " +
                                                          line_name({c2, i2}) + " share " +
                                                          std::to_string(hits) + " points"});
                    }
                }
            }
        }
    }
    return out;
}

bool yuzvinsky_admissible(int k, int d) {
    if (k < 3 || d < 2) {
        throw DomainError("admissibility defined for k >= 3 and d >= 2");
    }
    switch (k) {
        case 3:
            return d >= 2;
        case 4:
            return d >= 3;
        case 5:
            return d >= 6;
        default:
            return false;
    }
}

}  // namespace tropnet
