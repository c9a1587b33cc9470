#include "tropnet/tropical.hpp"

#include <algorithm>
#include <cmath>

#include "tropnet/errors.hpp"

namespace tropnet {

bool trop_contains(const TropLine& line, const TropPoint& pt) {
    const int a = pt.x - line.center.x;
    const int b = pt.y - line.center.y;
    const int m = std::max({a, b, 0});
    int hits = 0;
    hits += (a == m);
    hits += (b == m);
    hits += (0 == m);
    return hits >= 2;
}

Mat3 standard_degeneration() {
    Mat3 m;
    m.at(0, 0) = UniPoly::from_terms({{1, 1}, {2, -1}});
    m.at(0, 1) = UniPoly::from_terms({{2, 1}, {4, -1}});
    m.at(0, 2) = UniPoly::monomial(4, 1);
    m.at(1, 0) = UniPoly::from_terms({{3, 1}, {2, 1}});
    m.at(1, 1) = UniPoly::constant(1);
    m.at(1, 2) = UniPoly::monomial(3, -1);
    m.at(2, 0) = UniPoly::monomial(2, 1);
    m.at(2, 1) = UniPoly::monomial(5, 1);
    m.at(2, 2) = UniPoly::constant(1);
    return m;
}

namespace {

std::array<long, 3> image_degrees(const Mat3& m, const std::array<Rational, 3>& v,
                                  const char* what) {
    std::array<UniPoly, 3> in{UniPoly::constant(v[0]), UniPoly::constant(v[1]),
                              UniPoly::constant(v[2])};
    std::array<UniPoly, 3> img = mat3_apply(m, in);
    std::array<long, 3> deg{};
    for (std::size_t i = 0; i < 3; ++i) {
        auto d = img[i].degree();
        if (!d) {
            throw VanishingCoordinateError(std::string(what) +
                                           ": image coordinate is the zero polynomial");
        }
        deg[i] = *d;
    }
    return deg;
}

}  // namespace

TropPoint trop_line_center(const ProjLine<Rational>& l, const Mat3& m) {
    auto d = image_degrees(m, l.c, "line center");
    return TropPoint{static_cast<int>(d[2] - d[0]), static_cast<int>(d[2] - d[1])};
}

TropPoint trop_point_location(const ProjPoint<Rational>& p, const Mat3& m) {
    auto d = image_degrees(mat3_point_transform(m), p.c, "point location");
    return TropPoint{static_cast<int>(d[0] - d[2]), static_cast<int>(d[1] - d[2])};
}

std::vector<TropPoint> centers_through(const TropPoint& pt,
                                       const std::vector<TropPoint>& candidates) {
    std::vector<TropPoint> out;
    for (const auto& c : candidates) {
        if (trop_contains(TropLine{c}, pt)) {
            out.push_back(c);
        }
    }
    return out;
}

LinearForm LinearForm::normalized() const {
    for (const auto& x : c) {
        if (x != 0) {
            LinearForm out;
            for (std::size_t i = 0; i < 3; ++i) {
                out.c[i] = c[i] / x;
            }
            return out;
        }
    }
    return *this;
}

Rational LinearForm::eval(const std::array<Rational, 3>& v) const {
    return c[0] * v[0] + c[1] * v[1] + c[2] * v[2];
}

std::string LinearForm::str(const std::array<std::string, 3>& vars) const {
    std::string out;
    for (std::size_t i = 0; i < 3; ++i) {
        if (c[i] == 0) {
            continue;
        }
        if (out.empty()) {
            if (c[i] == -1) {
                out += "-";
            } else if (c[i] != 1) {
                out += format_rational(c[i]) + "*";
            }
        } else {
            if (c[i] > 0) {
                out += "+";
            } else {
                out += "-";
            }
            Rational a = c[i] > 0 ? c[i] : Rational(-c[i]);
            if (a != 1) {
                out += format_rational(a) + "*";
            }
        }
        out += vars[i];
    }
    return out.empty() ? "0" : out;
}

namespace {

// (exponent, linear form) pairs of one image coordinate, exponents descending.
struct CoordForms {
    std::vector<std::pair<long, LinearForm>> rows;
};

std::array<CoordForms, 3> symbolic_coordinates(const Mat3& m) {
    std::array<CoordForms, 3> out;
    for (int i = 0; i < 3; ++i) {
        std::map<long, LinearForm> by_exp;
        for (int j = 0; j < 3; ++j) {
            for (const auto& [e, coeff] : m.at(i, j).terms()) {
                by_exp[e].c[static_cast<std::size_t>(j)] += coeff;
            }
        }
        for (auto it = by_exp.rbegin(); it != by_exp.rend(); ++it) {
            if (!it->second.is_zero()) {
                out[static_cast<std::size_t>(i)].rows.emplace_back(it->first, it->second);
            }
        }
    }
    return out;
}

int pivot_of(const LinearForm& f) {
    for (int i = 0; i < 3; ++i) {
        if (f.c[static_cast<std::size_t>(i)] != 0) {
            return i;
        }
    }
    return 3;
}

LinearForm reduce_mod(const LinearForm& f, const std::vector<LinearForm>& rref) {
    LinearForm out = f;
    for (const auto& row : rref) {
        int p = pivot_of(row);
        const Rational& x = out.c[static_cast<std::size_t>(p)];
        if (x != 0) {
            Rational factor = x;  // row pivot coefficient is 1
            for (std::size_t i = 0; i < 3; ++i) {
                out.c[i] -= factor * row.c[i];
            }
        }
    }
    return out;
}

struct SearchState {
    std::vector<LinearForm> rref;     // pivot coefficient 1, fully reduced, by pivot
    std::vector<LinearForm> nonzero;  // reduced mod rref, normalized, path order
    std::array<std::optional<long>, 3> deg;
};

// Inserts a form assumed zero; false when this contradicts an assumed-nonzero
// form (which then reduces to zero).
bool add_zero(SearchState& s, const LinearForm& f) {
    LinearForm r = reduce_mod(f, s.rref).normalized();
    if (r.is_zero()) {
        return true;
    }
    int p = pivot_of(r);
    for (auto& row : s.rref) {
        const Rational& x = row.c[static_cast<std::size_t>(p)];
        if (x != 0) {
            Rational factor = x;
            for (std::size_t i = 0; i < 3; ++i) {
                row.c[i] -= factor * r.c[i];
            }
        }
    }
    s.rref.push_back(r);
    std::sort(s.rref.begin(), s.rref.end(),
              [](const LinearForm& a, const LinearForm& b) { return pivot_of(a) < pivot_of(b); });
    std::vector<LinearForm> kept;
    for (const auto& nz : s.nonzero) {
        LinearForm rr = reduce_mod(nz, s.rref).normalized();
        if (rr.is_zero()) {
            return false;
        }
        if (std::find(kept.begin(), kept.end(), rr) == kept.end()) {
            kept.push_back(rr);
        }
    }
    s.nonzero = std::move(kept);
    return true;
}

void record_nonzero(SearchState& s, const LinearForm& reduced) {
    LinearForm n = reduced.normalized();
    if (std::find(s.nonzero.begin(), s.nonzero.end(), n) == s.nonzero.end()) {
        s.nonzero.push_back(n);
    }
}

enum class ClassifyMode { Lines, Points };

TropPoint coord_from_degrees(const std::array<std::optional<long>, 3>& deg, ClassifyMode mode) {
    long d0 = *deg[0];
    long d1 = *deg[1];
    long d2 = *deg[2];
    if (mode == ClassifyMode::Lines) {
        return TropPoint{static_cast<int>(d2 - d0), static_cast<int>(d2 - d1)};
    }
    return TropPoint{static_cast<int>(d0 - d2), static_cast<int>(d1 - d2)};
}

// The (projective) solution of a rank-2 system, first nonzero coordinate 1.
std::array<Rational, 3> rank2_solution(const std::vector<LinearForm>& rref) {
    // Free variable = the non-pivot column.
    bool is_pivot[3] = {false, false, false};
    for (const auto& row : rref) {
        is_pivot[pivot_of(row)] = true;
    }
    int free = 0;
    while (is_pivot[free]) {
        ++free;
    }
    std::array<Rational, 3> v{};
    v[static_cast<std::size_t>(free)] = 1;
    for (const auto& row : rref) {
        v[static_cast<std::size_t>(pivot_of(row))] = -row.c[static_cast<std::size_t>(free)];
    }
    for (auto& x : v) {
        if (x != 0) {
            Rational lead = x;
            for (auto& y : v) {
                y /= lead;
            }
            break;
        }
    }
    return v;
}

struct Classifier {
    std::array<CoordForms, 3> forms;
    ClassifyMode mode;
    std::vector<SymbolicClass> out;

    void emit(const SearchState& s) {
        SymbolicClass cls;
        cls.zero = s.rref;
        cls.nonzero = s.nonzero;
        cls.coord = coord_from_degrees(s.deg, mode);
        cls.unique = s.rref.size() == 2;
        if (cls.unique) {
            cls.representative = rank2_solution(s.rref);
        }
        for (const auto& existing : out) {
            if (existing.zero == cls.zero) {
                return;
            }
        }
        out.push_back(std::move(cls));
    }

    // Rank-2 span: the preimage is a single projective point, so every degree
    // is determined by evaluation; no further branching.
    void finish_unique(SearchState s) {
        std::array<Rational, 3> rep = rank2_solution(s.rref);
        for (std::size_t c = 0; c < 3; ++c) {
            if (s.deg[c]) {
                continue;
            }
            for (const auto& [e, f] : forms[c].rows) {
                if (f.eval(rep) != 0) {
                    s.deg[c] = e;
                    break;
                }
            }
            if (!s.deg[c]) {
                return;  // image coordinate vanishes identically; no class
            }
        }
        emit(s);
    }

    void search(SearchState s, std::size_t coord, std::size_t row) {
        if (coord == 3) {
            emit(s);
            return;
        }
        const auto& rows = forms[coord].rows;
        for (std::size_t idx = row; idx < rows.size(); ++idx) {
            const auto& [e, f] = rows[idx];
            LinearForm r = reduce_mod(f, s.rref).normalized();
            if (r.is_zero()) {
                continue;
            }
            bool forced = std::find(s.nonzero.begin(), s.nonzero.end(), r) != s.nonzero.end();
            if (forced) {
                s.deg[coord] = e;
                search(std::move(s), coord + 1, 0);
                return;
            }
            // Branch: leading coefficient nonzero here, or zero and descend.
            SearchState live = s;
            record_nonzero(live, r);
            live.deg[coord] = e;
            search(std::move(live), coord + 1, 0);

            SearchState dead = std::move(s);
            if (!add_zero(dead, f)) {
                return;  // contradicts an assumed-nonzero form
            }
            if (dead.rref.size() >= 3) {
                return;  // only the zero vector satisfies the pattern
            }
            if (dead.rref.size() == 2) {
                finish_unique(std::move(dead));
                return;
            }
            search(std::move(dead), coord, idx + 1);
            return;
        }
        // Every coefficient form vanishes: the image coordinate is the zero
        // polynomial for all vectors in this stratum; no tropical image.
    }
};

bool class_order(const SymbolicClass& a, const SymbolicClass& b) {
    if (a.zero.size() != b.zero.size()) {
        return a.zero.size() < b.zero.size();
    }
    return std::lexicographical_compare(a.zero.begin(), a.zero.end(), b.zero.begin(),
                                        b.zero.end());
}

std::vector<SymbolicClass> classify(const Mat3& m, ClassifyMode mode) {
    Classifier c;
    c.forms = symbolic_coordinates(mode == ClassifyMode::Lines ? m : mat3_point_transform(m));
    c.mode = mode;
    c.search(SearchState{}, 0, 0);
    std::sort(c.out.begin(), c.out.end(), class_order);
    return c.out;
}

}  // namespace

std::vector<SymbolicClass> classify_line_symbolic(const Mat3& m) {
    return classify(m, ClassifyMode::Lines);
}

std::vector<SymbolicClass> classify_point_symbolic(const Mat3& m) {
    return classify(m, ClassifyMode::Points);
}

PointLineTable point_line_table(const Mat3& m) {
    PointLineTable table;
    for (auto& cls : classify_point_symbolic(m)) {
        TableRow* row = nullptr;
        for (auto& r : table.rows) {
            if (r.coord == cls.coord) {
                row = &r;
                break;
            }
        }
        if (!row) {
            table.rows.push_back(TableRow{cls.coord, {}, {}});
            row = &table.rows.back();
        }
        row->point_classes.push_back(std::move(cls));
    }
    for (auto& cls : classify_line_symbolic(m)) {
        TableRow* row = nullptr;
        for (auto& r : table.rows) {
            if (r.coord == cls.coord) {
                row = &r;
                break;
            }
        }
        if (!row) {
            table.rows.push_back(TableRow{cls.coord, {}, {}});
            row = &table.rows.back();
        }
        row->line_classes.push_back(std::move(cls));
    }
    return table;
}

namespace {

// Offset constant of the boundary curves (1 for x+y+1, t for x+y+t) and the
// x below/above which the lower/right branches live.
double branch_constant(AmoebaKind kind, double tv) {
    return kind == AmoebaKind::Scaled ? tv : 1.0;
}

}  // namespace

std::vector<std::pair<double, double>> amoeba_branch_samples(AmoebaBranch branch,
                                                             AmoebaKind kind, AmoebaBase base,
                                                             const Rational& t_value,
                                                             double x_min, double x_max,
                                                             int count) {
    if (count < 2) {
        throw DomainError("need at least 2 samples per branch");
    }
    if (t_value <= 1) {
        throw DomainError("degeneration parameter t must exceed 1");
    }
    if (!(x_min <= x_max)) {
        throw DomainError("empty x range");
    }
    const double tv = static_cast<double>(t_value);
    const double c = branch_constant(kind, tv);
    const double threshold = std::log(c);
    const double scale = base == AmoebaBase::BaseT ? 1.0 / std::log(tv) : 1.0;

    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        double x = x_min + (x_max - x_min) * i / (count - 1);
        double y = 0;
        switch (branch) {
            case AmoebaBranch::Upper:
                y = std::log(c + std::exp(x));
                break;
            case AmoebaBranch::Right:
                if (x <= threshold) {
                    throw DomainError("right boundary branch undefined at x <= log(offset)");
                }
                y = std::log(std::exp(x) - c);
                break;
            case AmoebaBranch::Lower:
                if (x >= threshold) {
                    throw DomainError("lower boundary branch undefined at x >= log(offset)");
                }
                y = std::log(c - std::exp(x));
                break;
        }
        out.emplace_back(x * scale, y * scale);
    }
    return out;
}

std::vector<AmoebaBranchSamples> amoeba_boundary_samples(AmoebaKind kind, AmoebaBase base,
                                                         const Rational& t_value, double x_min,
                                                         double x_max, int count) {
    if (count < 2) {
        throw DomainError("need at least 2 samples per branch");
    }
    if (t_value <= 1) {
        throw DomainError("degeneration parameter t must exceed 1");
    }
    const double tv = static_cast<double>(t_value);
    const double threshold = std::log(branch_constant(kind, tv));

    std::vector<AmoebaBranchSamples> out;
    out.push_back({"upper", amoeba_branch_samples(AmoebaBranch::Upper, kind, base, t_value,
                                                  x_min, x_max, count)});
    // The right and lower branches have an asymptote at x = log(offset);
    // clip just inside their open domains.
    if (x_max > threshold) {
        double lo = threshold + (x_max - threshold) / (4.0 * count);
        out.push_back({"right", amoeba_branch_samples(AmoebaBranch::Right, kind, base, t_value,
                                                      lo, x_max, count)});
    } else {
        out.push_back({"right", {}});
    }
    if (x_min < threshold) {
        double hi = threshold - (threshold - x_min) / (4.0 * count);
        out.push_back({"lower", amoeba_branch_samples(AmoebaBranch::Lower, kind, base, t_value,
                                                      x_min, hi, count)});
    } else {
        out.push_back({"lower", {}});
    }
    return out;
}

}  // namespace tropnet
