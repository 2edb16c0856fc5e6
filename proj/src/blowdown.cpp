#include "swcalc/blowdown.hpp"

#include <algorithm>

namespace swcalc {

IntMat cp_gram(int p) {
    if (p < 2)
        throw SwError("cp_gram: p must be >= 2");
    const std::size_t n = static_cast<std::size_t>(p) - 1;
    IntMat g(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        g[i][i] = (i == 0) ? Int(-(p + 2)) : Int(-2);
        if (i + 1 < n) {
            g[i][i + 1] = 1;
            g[i + 1][i] = 1;
        }
    }
    return g;
}

LensBoundary lens_boundary(int p) {
    if (p < 2)
        throw SwError("lens_boundary: p must be >= 2");
    return LensBoundary{Int(p) * p, Int(1 - p)};
}

CpConfig CpConfig::from_classes(int p, std::vector<ClassVector> classes) {
    if (p < 2)
        throw SwError("CpConfig: p must be >= 2");
    if (classes.size() != static_cast<std::size_t>(p) - 1)
        throw SwError("CpConfig: expected p-1 classes");
    IntMat g = gram_of(classes);
    if (g != cp_gram(p))
        throw SwError("CpConfig: classes do not realize the C_p chain form");
    return CpConfig{p, std::move(classes), std::move(g)};
}

namespace {

// LDL data for the positive definite dual form -G^{-1}:
//   Q(v) = sum_i d[i] * (v_i + sum_{j>i} l[i][j] v_j)^2
struct LdlForm {
    RatVec d;
    RatMat l;
};

LdlForm ldl_of_dual(const IntMat& gram) {
    auto inv = rat_inverse(gram);
    if (!inv)
        throw SwError("allowed_restrictions: singular configuration Gram");
    const std::size_t n = gram.size();
    RatMat p(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p[i][j] = -(*inv)[i][j];
    LdlForm f{RatVec(n), RatMat(n, RatVec(n, Rat(0)))};
    for (std::size_t i = 0; i < n; ++i) {
        f.d[i] = p[i][i];
        if (f.d[i] <= 0)
            throw SwError("allowed_restrictions: dual form is not positive definite");
        for (std::size_t j = i + 1; j < n; ++j)
            f.l[i][j] = p[i][j] / f.d[i];
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t j = i + 1; j < n; ++j)
                p[k][j] -= f.d[i] * f.l[i][k] * f.l[i][j];
    }
    return f;
}

// integers v in [-w, w] around -c with d*(v+c)^2 <= budget, exact
void coordinate_range(const Rat& c, const Rat& d, const Rat& budget, Int& lo, Int& hi) {
    const Rat b = budget / d;  // (v + c)^2 <= b
    // window first, then verify each candidate exactly
    const Int r = isqrt_floor(numerator(b) / denominator(b)) + 1;
    const Int center = numerator(c) / denominator(c);
    lo = -center - r - 2;
    hi = -center + r + 2;
}

void enumerate_level(const LdlForm& f, const IntMat& gram, const Rat& target, std::size_t level,
                     IntVec& v, const Rat& spent, std::vector<IntVec>& out) {
    // levels run from n-1 down to 0
    Rat c = 0;
    for (std::size_t j = level + 1; j < v.size(); ++j)
        c += f.l[level][j] * Rat(v[j]);
    const Rat budget = target - spent;
    if (budget < 0)
        return;
    Int lo, hi;
    coordinate_range(c, f.d[level], budget, lo, hi);
    for (Int x = lo; x <= hi; ++x) {
        if ((x - gram[level][level]) % 2 != 0)
            continue;  // characteristic parity
        const Rat term = f.d[level] * (Rat(x) + c) * (Rat(x) + c);
        if (term > budget)
            continue;
        v[level] = x;
        if (level == 0) {
            if (spent + term == target)
                out.push_back(v);
        } else {
            enumerate_level(f, gram, target, level - 1, v, spent + term, out);
        }
    }
    v[level] = 0;
}

}  // namespace

std::vector<IntVec> allowed_restrictions(int p) {
    if (p < 2)
        throw SwError("allowed_restrictions: p must be >= 2");
    const IntMat gram = cp_gram(p);
    const LdlForm f = ldl_of_dual(gram);
    const std::size_t n = gram.size();
    std::vector<IntVec> out;
    IntVec v(n, 0);
    enumerate_level(f, gram, Rat(p - 1), n - 1, v, Rat(0), out);
    std::sort(out.begin(), out.end());
    return out;
}

bool descends(const IntVec& k_pairings, int p) {
    auto allowed = allowed_restrictions(p);
    if (k_pairings.size() != static_cast<std::size_t>(p) - 1)
        throw SwError("descends: pairing vector length must be p-1");
    return std::binary_search(allowed.begin(), allowed.end(), k_pairings);
}

LiftProblem::LiftProblem(std::vector<ClassVector> complement_generators, CpConfig config)
    : gens_(std::move(complement_generators)), config_(std::move(config)) {
    if (gens_.empty())
        throw SwError("lift: empty complement generator list");
    ambient_ = gens_.front().lattice;
    for (const auto& g : gens_)
        if (!orthogonal_check(g, config_.classes))
            throw SwError("lift: complement generator pairs nontrivially with the configuration");

    // pairing functional matrix: row per generator then per config class
    std::vector<ClassVector> all(gens_);
    all.insert(all.end(), config_.classes.begin(), config_.classes.end());
    const std::size_t n = ambient_->rank();
    if (all.size() != n)
        throw SwError("lift: generators + configuration do not have ambient rank");
    RatMat m(n, RatVec(n));
    const IntMat& ag = ambient_->gram();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < n; ++j) {
            Int s = 0;
            for (std::size_t i = 0; i < n; ++i)
                s += all[r].coords[i] * ag[i][j];
            m[r][j] = Rat(s);
        }
    auto inv = [&]() {
        const std::size_t k = m.size();
        RatMat out(k, RatVec(k));
        for (std::size_t j = 0; j < k; ++j) {
            RatVec e(k, Rat(0));
            e[j] = 1;
            auto col = rat_solve(m, e);
            if (!col)
                throw SwError("lift: generators + configuration are rationally dependent");
            for (std::size_t i = 0; i < k; ++i)
                out[i][j] = (*col)[i];
        }
        return out;
    }();
    inverse_ = std::move(inv);
    allowed_ = allowed_restrictions(config_.p);
}

std::vector<Lift> LiftProblem::lift_all(const IntVec& candidate_pairings) const {
    if (candidate_pairings.size() != gens_.size())
        throw SwError("lift: candidate pairing length != generator count");
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if ((candidate_pairings[i] - pair(gens_[i], gens_[i])) % 2 != 0)
            throw SwError("lift: candidate is not characteristic on the complement");

    const std::size_t n = ambient_->rank();
    std::vector<Lift> lifts;
    for (const auto& v : allowed_) {
        RatVec rhs;
        rhs.reserve(n);
        for (const auto& x : candidate_pairings)
            rhs.push_back(Rat(x));
        for (const auto& x : v)
            rhs.push_back(Rat(x));
        IntVec coords(n);
        bool integral = true;
        for (std::size_t i = 0; i < n && integral; ++i) {
            Rat s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += inverse_[i][j] * rhs[j];
            if (!is_integer(s))
                integral = false;
            else
                coords[i] = to_integer(s);
        }
        if (!integral)
            continue;
        ClassVector k(ambient_, std::move(coords));
        if (!is_characteristic(k))
            continue;
        lifts.push_back(Lift{std::move(k), v});
    }
    return lifts;
}

std::optional<Lift> LiftProblem::lift(const IntVec& candidate_pairings) const {
    auto all = lift_all(candidate_pairings);
    if (all.empty())
        return std::nullopt;
    return all.front();
}

std::optional<Lift> lift(const IntVec& candidate_pairings, const LatticePtr& ambient,
                         const CpConfig& config,
                         const std::vector<ClassVector>& complement_generators) {
    if (!complement_generators.empty() &&
        !(*complement_generators.front().lattice == *ambient))
        throw SwError("lift: generators live in a different lattice than the ambient");
    LiftProblem problem(complement_generators, config);
    return problem.lift(candidate_pairings);
}

}  // namespace swcalc
