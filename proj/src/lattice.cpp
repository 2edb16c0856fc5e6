#include "swcalc/lattice.hpp"

#include <set>

namespace swcalc {

Lattice::Lattice(std::string name, IntMat gram, std::vector<std::string> basis_labels)
    : name_(std::move(name)), gram_(std::move(gram)), labels_(std::move(basis_labels)) {
    if (gram_.empty())
        throw SwError("lattice '" + name_ + "': rank must be positive");
    if (!is_symmetric(gram_))
        throw SwError("lattice '" + name_ + "': gram matrix must be symmetric");
    if (labels_.size() != gram_.size())
        throw SwError("lattice '" + name_ + "': basis label count != rank");
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size())
        throw SwError("lattice '" + name_ + "': basis labels must be distinct");
}

std::shared_ptr<const Lattice> Lattice::standard_surface(int m) {
    if (m < 0)
        throw SwError("standard_surface: m must be nonnegative");
    const std::size_t n = static_cast<std::size_t>(m) + 1;
    IntMat g(n, IntVec(n, 0));
    g[0][0] = 1;
    std::vector<std::string> labels{"H"};
    for (int i = 1; i <= m; ++i) {
        g[i][i] = -1;
        labels.push_back("E" + std::to_string(i));
    }
    return std::make_shared<Lattice>("P" + std::to_string(m), std::move(g), std::move(labels));
}

int Lattice::basis_index(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return static_cast<int>(i);
    return -1;
}

ClassVector::ClassVector(LatticePtr lat, IntVec c) : lattice(std::move(lat)), coords(std::move(c)) {
    if (!lattice)
        throw SwError("ClassVector: null lattice");
    if (coords.size() != lattice->rank())
        throw SwError("ClassVector: coordinate length != lattice rank");
}

namespace {
void require_same_lattice(const ClassVector& a, const ClassVector& b, const char* op) {
    if (!a.lattice || !b.lattice || !(*a.lattice == *b.lattice))
        throw SwError(std::string(op) + ": classes live in different lattices");
}
}  // namespace

ClassVector ClassVector::operator+(const ClassVector& o) const {
    require_same_lattice(*this, o, "add");
    IntVec c(coords);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += o.coords[i];
    return ClassVector(lattice, std::move(c));
}

ClassVector ClassVector::operator-(const ClassVector& o) const {
    require_same_lattice(*this, o, "sub");
    IntVec c(coords);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] -= o.coords[i];
    return ClassVector(lattice, std::move(c));
}

ClassVector ClassVector::operator-() const {
    IntVec c(coords);
    for (auto& x : c)
        x = -x;
    return ClassVector(lattice, std::move(c));
}

ClassVector operator*(const Int& s, const ClassVector& v) {
    IntVec c(v.coords);
    for (auto& x : c)
        x *= s;
    return ClassVector(v.lattice, std::move(c));
}

bool ClassVector::operator==(const ClassVector& o) const {
    return lattice && o.lattice && *lattice == *o.lattice && coords == o.coords;
}

Int pair(const ClassVector& a, const ClassVector& b) {
    require_same_lattice(a, b, "pair");
    const IntMat& g = a.lattice->gram();
    Int s = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (a.coords[i] == 0)
            continue;
        Int row = 0;
        for (std::size_t j = 0; j < g.size(); ++j)
            if (b.coords[j] != 0)
                row += g[i][j] * b.coords[j];
        s += a.coords[i] * row;
    }
    return s;
}

bool is_characteristic(const ClassVector& k) {
    const IntMat& g = k.lattice->gram();
    for (std::size_t i = 0; i < g.size(); ++i) {
        Int ki = 0;
        for (std::size_t j = 0; j < g.size(); ++j)
            ki += g[i][j] * k.coords[j];
        if ((ki - g[i][i]) % 2 != 0)
            return false;
    }
    return true;
}

IntMat gram_of(const std::vector<ClassVector>& classes) {
    if (classes.empty())
        throw SwError("gram_of: empty class list");
    for (const auto& c : classes)
        require_same_lattice(classes.front(), c, "gram_of");
    const std::size_t n = classes.size();
    IntMat g(n, IntVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            g[i][j] = g[j][i] = pair(classes[i], classes[j]);
    return g;
}

PairingSolution solve_pairings(const IntMat& gram, const IntVec& pairings) {
    if (gram.size() != pairings.size())
        throw SwError("solve_pairings: vector length != matrix dimension");
    auto c = rat_solve(gram, pairings);
    if (!c)
        throw SwError("solve_pairings: singular Gram matrix");
    Rat q = 0;
    for (std::size_t i = 0; i < pairings.size(); ++i)
        q += Rat(pairings[i]) * (*c)[i];
    return PairingSolution{std::move(*c), std::move(q)};
}

bool orthogonal_check(const ClassVector& k, const std::vector<ClassVector>& config_classes) {
    for (const auto& u : config_classes)
        if (pair(k, u) != 0)
            return false;
    return true;
}

NamedClassTable::NamedClassTable(LatticePtr lattice) : lattice_(std::move(lattice)) {
    if (!lattice_)
        throw SwError("NamedClassTable: null lattice");
    const auto& labels = lattice_->basis_labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        IntVec c(lattice_->rank(), 0);
        c[i] = 1;
        table_.emplace(labels[i], ClassVector(lattice_, std::move(c)));
    }
}

void NamedClassTable::define(const std::string& label, ClassVector v) {
    if (!(*v.lattice == *lattice_))
        throw SwError("NamedClassTable: class '" + label + "' lives in a different lattice");
    if (table_.count(label) && !(table_.at(label) == v))
        throw SwError("NamedClassTable: conflicting redefinition of '" + label + "'");
    // fiber sanity: F must be the standard elliptic fiber of P_m, m >= 9
    if (label == "F" && contains("H")) {
        ClassVector f = v;
        if (pair(f, f) != 0)
            throw SwError("NamedClassTable: F.F must be 0");
        if (pair(f, at("H")) != 3)
            throw SwError("NamedClassTable: F.H must be 3");
    }
    table_.insert_or_assign(label, std::move(v));
}

const ClassVector& NamedClassTable::at(const std::string& label) const {
    auto it = table_.find(label);
    if (it == table_.end())
        throw SwError("undefined class label '" + label + "'");
    return it->second;
}

bool NamedClassTable::contains(const std::string& label) const { return table_.count(label) != 0; }

}  // namespace swcalc
