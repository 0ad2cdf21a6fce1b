#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hecke {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;  // row-major

std::int64_t dot(const IntVec &a, const IntVec &b);
IntVec operator+(const IntVec &a, const IntVec &b);
IntVec scaled(const IntVec &a, std::int64_t k);
bool is_zero(const IntVec &v);
IntMat mat_mul(const IntMat &a, const IntMat &b);
IntVec mat_vec(const IntMat &a, const IntVec &v);
IntMat identity(std::size_t n);

// (v / content, content); content 0 for the zero vector
std::pair<IntVec, std::int64_t> primitive_part(const IntVec &v);
bool is_primitive(const IntVec &v);
// first nonzero entry made positive
IntVec sign_canonical(const IntVec &v);

// (g, s, t) with s a + t b = g >= 0
struct Egcd {
    std::int64_t g, s, t;
};
Egcd extended_gcd(std::int64_t a, std::int64_t b);

// u with <u, v> = 1 by an extended-gcd fold in index order
IntVec bezout_cofactors(const IntVec &v);

// Column-style Hermite reduction: A * U = [H | 0] with U unimodular.
struct ColumnReduction {
    IntMat H;      // rows(A) x cols(A), zero beyond the rank
    IntMat U;      // cols x cols, unimodular
    IntMat U_inv;  // inverse of U
    std::size_t rank = 0;
};
ColumnReduction column_reduce(const IntMat &A);
bool is_surjective(const IntMat &A);
// basis of the integer kernel {x : A x = 0}, as columns returned as vectors
std::vector<IntVec> kernel_basis(const IntMat &A);

enum class MorphismKind { associated, adapted };

struct LatticeMorphism {
    IntMat matrix;  // r x (m+1)
    MorphismKind kind = MorphismKind::adapted;
    IntVec kernel_generator;  // set for associated morphisms

    std::size_t rows() const { return matrix.size(); }
    std::size_t cols() const { return matrix.empty() ? 0 : matrix[0].size(); }
    IntVec apply(const IntVec &x) const { return mat_vec(matrix, x); }
};

LatticeMorphism associated_morphism(const IntVec &M);
LatticeMorphism compose(const LatticeMorphism &second, const LatticeMorphism &first);
// adapted family (first member applied first) recomposing to phi
std::vector<LatticeMorphism> refactor_adapted(const LatticeMorphism &phi, const IntVec &M);
LatticeMorphism recompose(const std::vector<LatticeMorphism> &family);
bool validate_morphism(const LatticeMorphism &f);

struct SpecializationDecomposition {
    std::int64_t alpha;
    IntVec reduced;
};
SpecializationDecomposition decompose_specialization(const IntVec &n);

}  // namespace hecke
