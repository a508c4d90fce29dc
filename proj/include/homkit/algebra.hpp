#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homkit/mat.hpp"

namespace homkit {

struct Quiver {
    struct Arrow {
        std::string name;
        std::size_t src = 0;
        std::size_t tgt = 0;
    };
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::optional<std::size_t> vertex_index(const std::string& name) const;
    std::optional<std::size_t> arrow_index(const std::string& name) const;
};

/// A path stored in application order: arrows[0] acts first. The printed form
/// composes right to left, so {a, b} renders as "b*a".
struct Path {
    std::size_t source = 0;
    std::vector<std::size_t> arrows;

    std::size_t length() const { return arrows.size(); }
};

std::size_t path_target(const Quiver& q, const Path& path);
std::string path_name(const Quiver& q, const Path& path);
Path compose(const Quiver& q, const Path& later, const Path& first);

struct Relation {
    struct Term {
        uint32_t coeff = 1;
        Path path;
    };
    std::vector<Term> terms;
    int line = 0;  // position in the source file, when parsed
};

struct Presentation {
    Quiver quiver;
    std::vector<Relation> relations;
    std::size_t nilpotency = 2;  // paths of this length vanish
    uint32_t p = 2;
};

struct ConstantsSpec {
    uint32_t p = 2;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    // mult[i*dim+j] = coordinates of b_i * b_j
    std::vector<std::vector<uint32_t>> mult;
    std::vector<uint32_t> unit;
    std::vector<std::vector<uint32_t>> idempotents;
};

struct Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional associative unital GF(p)-algebra with a designated
/// complete set of primitive orthogonal idempotents. All invariants
/// (associativity, unit, idempotent axioms, radical ideal + nilpotency,
/// one-dimensional semisimple blocks) are verified at construction.
struct Algebra {
    uint32_t p = 2;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    std::vector<std::vector<uint32_t>> mult;  // mult[i*dim+j] = b_i * b_j
    std::vector<uint32_t> unit;
    std::vector<std::vector<uint32_t>> idempotents;
    Mat radical;                      // canonical row basis of J
    std::vector<std::size_t> generators;  // basis indices generating the algebra (with the idempotents)

    // present iff the algebra was built from a bound-quiver presentation;
    // basis_paths then gives each basis element as a path of that quiver
    std::optional<Presentation> pres;
    std::vector<Path> basis_paths;

    uint64_t digest = 0;  // content hash of the canonical form

    mutable std::shared_ptr<const Algebra> op_cache;

    const std::vector<uint32_t>& product(std::size_t i, std::size_t j) const {
        return mult[i * dim + j];
    }
    std::vector<uint32_t> multiply(const std::vector<uint32_t>& x,
                                   const std::vector<uint32_t>& y) const;
    Mat left_mult(const std::vector<uint32_t>& x) const;
    Mat right_mult(const std::vector<uint32_t>& x) const;
};

AlgebraPtr build_algebra(const Presentation& pres);
AlgebraPtr build_from_constants(const ConstantsSpec& spec);

/// The opposite algebra: same basis, transposed structure constants. The
/// result is cached; opposite(opposite(a)) is pointer-identical to a.
AlgebraPtr opposite(const AlgebraPtr& a);

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

uint64_t algebra_digest(const Algebra& a);

}  // namespace homkit
