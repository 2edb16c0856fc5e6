#include "swcalc/adjunction.hpp"

#include "swcalc/sw_ops.hpp"

#include <algorithm>
#include <set>

namespace swcalc {

SurfaceConstraint SurfaceConstraint::from_class(std::string label, ClassVector cls, int genus) {
    if (genus < 0)
        throw SwError("constraint '" + label + "': genus must be nonnegative");
    Int sq = pair(cls, cls);
    return SurfaceConstraint{std::move(label), std::move(sq), genus, std::move(cls)};
}

SurfaceConstraint SurfaceConstraint::abstract(std::string label, Int square, int genus) {
    if (genus < 0)
        throw SwError("constraint '" + label + "': genus must be nonnegative");
    return SurfaceConstraint{std::move(label), std::move(square), genus, std::nullopt};
}

Int SurfaceConstraint::adjunction_bound(int sphere_bound) const {
    return genus >= 1 ? Int(2 * genus - 2) : Int(sphere_bound);
}

Int square_floor(int b_plus, int b_minus) {
    if (b_plus != 1)
        throw SwError("square_floor: only the b+ = 1 setting is supported");
    if (b_minus < 0)
        throw SwError("square_floor: b- must be nonnegative");
    // 3 sign + 2 e = 3(1 - b-) + 2(3 + b-) = 9 - b-
    return Int(9 - b_minus);
}

std::vector<Int> allowed_pairings(const SurfaceConstraint& c, int sphere_bound) {
    const Int r = c.adjunction_bound(sphere_bound) - c.square;
    if (r < 0)
        throw InconsistentConstraint("constraint '" + c.label +
                                     "': adjunction bound leaves no allowed pairings");
    std::vector<Int> out;
    for (Int x = -r; x <= r; ++x)
        if ((x - c.square) % 2 == 0)
            out.push_back(x);
    if (out.empty())
        throw InconsistentConstraint("constraint '" + c.label + "': empty pairing set");
    return out;
}

std::size_t EnumerationResult::strict_count() const {
    std::size_t n = 0;
    for (const auto& c : candidates)
        n += c.strict_integral ? 1 : 0;
    return n;
}

std::size_t EnumerationResult::orbit_count() const {
    std::set<IntVec> seen;
    std::size_t orbits = 0;
    for (const auto& c : candidates) {
        if (seen.count(c.pairings))
            continue;
        IntVec neg(c.pairings);
        for (auto& x : neg)
            x = -x;
        seen.insert(c.pairings);
        seen.insert(neg);
        ++orbits;
    }
    return orbits;
}

EnumerationResult enumerate_candidates(const std::vector<SurfaceConstraint>& constraints,
                                       int b_minus, const EnumerationOptions& opts) {
    if (constraints.empty())
        throw SwError("enumerate_candidates: no constraints");
    std::vector<ClassVector> classes;
    for (const auto& c : constraints) {
        if (!c.cls)
            throw SwError("enumerate_candidates: constraint '" + c.label + "' has no class");
        classes.push_back(*c.cls);
    }

    // greedy maximal independent prefix set; the rest act as induced filters
    std::vector<std::size_t> independent;
    std::vector<std::size_t> dependent;
    {
        std::vector<ClassVector> picked;
        for (std::size_t i = 0; i < classes.size(); ++i) {
            picked.push_back(classes[i]);
            IntMat coordrows;
            for (const auto& c : picked)
                coordrows.push_back(c.coords);
            if (rational_rank(coordrows) == picked.size()) {
                independent.push_back(i);
            } else {
                picked.pop_back();
                dependent.push_back(i);
            }
        }
    }

    std::vector<ClassVector> basis;
    for (auto i : independent)
        basis.push_back(classes[i]);
    const IntMat g = gram_of(basis);
    const Int det = bareiss_det(g);
    if (det == 0)
        throw SwError("enumerate_candidates: singular constraint Gram");
    const IntMat adj = adjugate(g);

    // dependent class d = sum alpha_i basis_i: induced pairing is alpha . x
    std::vector<RatVec> alphas(dependent.size());
    for (std::size_t di = 0; di < dependent.size(); ++di) {
        IntVec rhs;
        for (const auto& b : basis)
            rhs.push_back(pair(classes[dependent[di]], b));
        alphas[di] = solve_pairings(g, rhs).coords;
    }

    std::vector<std::vector<Int>> sets;
    for (auto i : independent)
        sets.push_back(allowed_pairings(constraints[i], opts.sphere_bound));
    std::vector<std::vector<Int>> dep_sets;
    for (auto i : dependent)
        dep_sets.push_back(allowed_pairings(constraints[i], opts.sphere_bound));

    const Int floor = square_floor(1, b_minus);
    const Int sign = Int(1 - b_minus);
    const Int euler = Int(3 + b_minus);

    EnumerationResult result;
    result.independent = independent;
    result.floor = floor;

    const std::size_t nb = basis.size();
    std::vector<std::size_t> idx(nb, 0);
    IntVec x(nb);
    for (;;) {
        for (std::size_t i = 0; i < nb; ++i)
            x[i] = sets[i][idx[i]];

        // q = x^T G^{-1} x via the integer adjugate; keep only exact integers
        Int qnum = 0;
        for (std::size_t i = 0; i < nb; ++i) {
            Int row = 0;
            for (std::size_t j = 0; j < nb; ++j)
                row += adj[i][j] * x[j];
            qnum += x[i] * row;
        }
        bool keep = qnum % det == 0;
        Int q = 0;
        if (keep) {
            q = qnum / det;
            keep = q >= floor && (q - floor) % 8 == 0;
        }

        IntVec dep_pairings(dependent.size());
        if (keep) {
            for (std::size_t di = 0; di < dependent.size() && keep; ++di) {
                Rat y = dot(alphas[di], x);
                if (!is_integer(y)) {
                    keep = false;
                    break;
                }
                dep_pairings[di] = to_integer(y);
                keep = std::binary_search(dep_sets[di].begin(), dep_sets[di].end(),
                                          dep_pairings[di]);
            }
        }

        if (keep) {
            CandidateClass cand;
            cand.pairings.resize(constraints.size());
            for (std::size_t i = 0; i < nb; ++i)
                cand.pairings[independent[i]] = x[i];
            for (std::size_t di = 0; di < dependent.size(); ++di)
                cand.pairings[dependent[di]] = dep_pairings[di];
            cand.square = q;
            cand.dim = dimension(q, sign, euler);
            cand.strict_integral = true;
            for (std::size_t i = 0; i < nb && cand.strict_integral; ++i) {
                Int ci = 0;
                for (std::size_t j = 0; j < nb; ++j)
                    ci += adj[i][j] * x[j];
                cand.strict_integral = ci % det == 0;
            }
            if (!opts.strict_integrality || cand.strict_integral)
                result.candidates.push_back(std::move(cand));
        }

        // odometer
        std::size_t pos = nb;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < sets[pos].size())
                break;
            idx[pos] = 0;
            if (pos == 0)
                goto done;
        }
    }
done:
    std::sort(result.candidates.begin(), result.candidates.end());
    return result;
}

namespace {
void require_valid_period_point(const ClassVector& h, const ClassVector& period_point) {
    if (pair(period_point, period_point) <= 0)
        throw SwError("chamber test: period point must have positive square");
    if (pair(period_point, h) <= 0)
        throw SwError("chamber test: period point must lie in the positive component of H");
}
}  // namespace

ChamberOutcome chamber_sign_test(const ClassVector& k_lift, const ClassVector& h,
                                 const ClassVector& period_point) {
    require_valid_period_point(h, period_point);
    const Int kh = pair(k_lift, h);
    const Int kp = pair(k_lift, period_point);
    if (kh == 0)
        throw OnWallError("chamber test: k . H = 0 (on wall)");
    if (kp == 0)
        throw OnWallError("chamber test: k . period point = 0 (on wall)");
    return ((kh > 0) == (kp > 0)) ? ChamberOutcome::Vanishes : ChamberOutcome::WallCrossed;
}

Int chamber_sw_value(const ClassVector& k_lift, const ClassVector& h,
                     const ClassVector& period_point, const Int& dim) {
    if (chamber_sign_test(k_lift, h, period_point) == ChamberOutcome::Vanishes)
        return 0;
    // SW vanishes in the H chamber (positive scalar curvature); crossing to
    // the period-point chamber picks up the wall-crossing term with a sign
    // fixed by the direction of the crossing.
    const Int jump = wall_cross(0, dim);  // (-1)^(1 + d/2)
    return pair(k_lift, period_point) > 0 ? jump : -jump;
}

VanishingReport verify_vanishing(const std::vector<CandidateClass>& candidates,
                                 const LiftProblem& lifter, const ClassVector& h,
                                 const ClassVector& period_point) {
    require_valid_period_point(h, period_point);
    VanishingReport report;
    report.all_vanish = true;
    for (const auto& cand : candidates) {
        VanishingRow row;
        row.pairings = cand.pairings;
        row.square = cand.square;
        row.dim = cand.dim;

        IntVec basis_pairings;
        for (std::size_t i = 0; i < lifter.generators().size(); ++i)
            basis_pairings.push_back(cand.pairings[i]);
        auto lifts = lifter.lift_all(basis_pairings);
        row.lift_count = lifts.size();
        if (lifts.empty()) {
            row.outcome = "LIFT-NOT-FOUND";
            report.all_vanish = false;
            report.rows.push_back(std::move(row));
            continue;
        }
        // every lift of the same candidate must give the same verdict
        std::set<bool> verdicts;
        bool on_wall = false;
        for (const auto& l : lifts) {
            try {
                verdicts.insert(chamber_sign_test(l.klift, h, period_point) ==
                                ChamberOutcome::Vanishes);
            } catch (const OnWallError&) {
                on_wall = true;
            }
        }
        row.lift = lifts.front();
        row.dot_h = pair(row.lift->klift, h);
        row.dot_period = pair(row.lift->klift, period_point);
        if (on_wall && verdicts.empty()) {
            row.outcome = "ON-WALL";
            report.all_vanish = false;
        } else if (verdicts.size() != 1) {
            row.outcome = "INCONSISTENT-LIFTS";
            report.all_vanish = false;
        } else if (*verdicts.begin()) {
            row.outcome = "VANISHES";
            row.sw_value = 0;
        } else {
            row.outcome = "SURVIVES";
            row.sw_value = chamber_sw_value(row.lift->klift, h, period_point, row.dim);
            report.all_vanish = false;
        }
        report.rows.push_back(std::move(row));
    }
    report.verdict = report.all_vanish ? "SW = 0" : "SW != 0 or undetermined";
    return report;
}

}  // namespace swcalc
