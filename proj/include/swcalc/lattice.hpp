#pragma once

// Intersection lattices: finitely generated free abelian groups with an
// integer symmetric bilinear form and a named basis.  Classes are stored in
// homology convention; Poincare duals are never represented separately.
// Lattices are immutable after construction and freely shareable.

#include "swcalc/matrix.hpp"
#include "swcalc/numeric.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace swcalc {

class Lattice {
public:
    Lattice(std::string name, IntMat gram, std::vector<std::string> basis_labels);

    // P_m = CP^2 # m CP^2-bar: diag(1, -1, ..., -1) with basis H, E1..Em.
    static std::shared_ptr<const Lattice> standard_surface(int m);

    const std::string& name() const { return name_; }
    std::size_t rank() const { return gram_.size(); }
    const IntMat& gram() const { return gram_; }
    const std::vector<std::string>& basis_labels() const { return labels_; }
    int basis_index(const std::string& label) const;  // -1 when absent

    bool operator==(const Lattice& other) const {
        return name_ == other.name_ && gram_ == other.gram_ && labels_ == other.labels_;
    }

private:
    std::string name_;
    IntMat gram_;
    std::vector<std::string> labels_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

struct ClassVector {
    LatticePtr lattice;
    IntVec coords;

    ClassVector() = default;
    ClassVector(LatticePtr lat, IntVec c);

    ClassVector operator+(const ClassVector& o) const;
    ClassVector operator-(const ClassVector& o) const;
    ClassVector operator-() const;
    friend ClassVector operator*(const Int& s, const ClassVector& v);
    bool operator==(const ClassVector& o) const;
};

// a^T gram b; throws on mismatched lattices.
Int pair(const ClassVector& a, const ClassVector& b);

// k . x == x . x (mod 2) for every basis vector x (hence for the whole lattice).
bool is_characteristic(const ClassVector& k);

// Gram matrix of a nonempty list of classes in one lattice.
IntMat gram_of(const std::vector<ClassVector>& classes);

struct PairingSolution {
    RatVec coords;  // c with G c = v
    Rat square;     // v^T c = v^T G^{-1} v
};

// Reconstruct a class from its pairing vector against a generating set with
// Gram G.  Exact; throws on singular G or length mismatch.
PairingSolution solve_pairings(const IntMat& gram, const IntVec& pairings);

// k . u == 0 for every u in config_classes.
bool orthogonal_check(const ClassVector& k, const std::vector<ClassVector>& config_classes);

// Named classes of one scenario.  Basis labels are implicitly defined; the
// table validates the standard fiber relations (F.F = 0, F.H = 3) whenever a
// class named "F" is present in a standard surface lattice.
class NamedClassTable {
public:
    explicit NamedClassTable(LatticePtr lattice);

    void define(const std::string& label, ClassVector v);
    const ClassVector& at(const std::string& label) const;
    bool contains(const std::string& label) const;
    const LatticePtr& lattice() const { return lattice_; }
    const std::map<std::string, ClassVector>& all() const { return table_; }

private:
    LatticePtr lattice_;
    std::map<std::string, ClassVector> table_;
};

}  // namespace swcalc
