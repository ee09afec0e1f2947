#pragma once

#include <cstddef>
#include <vector>

#include "anncat/errors.hpp"

namespace anncat {

using Table = std::vector<std::vector<int>>; // nested row-major input form

// Finite abelian group given by its Cayley table. `neg` is derived during
// validation. Elements are dense indices 0..n-1.
struct AbelianGroup {
    int n = 0;
    std::vector<int> add; // n*n row-major
    std::vector<int> neg; // n
    int zero = 0;

    int sum(int a, int b) const { return add[static_cast<std::size_t>(a) * n + b]; }
    int minus(int a) const { return neg[a]; }

    bool operator==(const AbelianGroup&) const = default;
};

// Finite unital ring via addition/multiplication tables. Not necessarily
// commutative; the zero ring (one == zero) is permitted.
struct FiniteRing {
    int n = 0;
    std::vector<int> add; // n*n
    std::vector<int> mul; // n*n
    std::vector<int> neg; // n, derived
    int zero = 0;
    int one = 0;

    int plus(int a, int b) const { return add[static_cast<std::size_t>(a) * n + b]; }
    int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
    int minus(int a) const { return neg[a]; }

    AbelianGroup additive_group() const;

    bool operator==(const FiniteRing&) const = default;
};

// Finite bimodule over `base`: abelian group with commuting left/right ring
// actions, stored as per-element endomorphism tables (base.n rows of grp.n).
struct Bimodule {
    FiniteRing base;
    AbelianGroup grp;
    std::vector<int> lact; // base.n * grp.n
    std::vector<int> ract; // base.n * grp.n

    int left(int r, int m) const { return lact[static_cast<std::size_t>(r) * grp.n + m]; }
    int right(int r, int m) const { return ract[static_cast<std::size_t>(r) * grp.n + m]; }

    bool operator==(const Bimodule&) const = default;
};

struct RingHom {
    FiniteRing src;
    FiniteRing dst;
    std::vector<int> map; // src.n entries

    int operator()(int a) const { return map[a]; }
};

struct GroupHom {
    AbelianGroup src;
    AbelianGroup dst;
    std::vector<int> map;

    int operator()(int a) const { return map[a]; }
};

// Constructors validate every axiom exhaustively and throw validation_error
// with the first violated law and a witness tuple.

AbelianGroup make_table_group(const Table& add, int zero);
FiniteRing make_zn(int n);
FiniteRing make_table_ring(const Table& add, const Table& mul, int zero, int one);
Bimodule make_bimodule(const FiniteRing& base, const Table& add, int zero,
                       const Table& lact, const Table& ract);

// M = R with both actions given by ring multiplication.
Bimodule regular_bimodule(const FiniteRing& r);

// Flat-table validators behind the make_* constructors, also used by callers
// that assemble structures directly (the dual builder, fixture loading).
AbelianGroup validate_group_tables(int n, std::vector<int> add, int zero);
FiniteRing validate_ring_tables(int n, std::vector<int> add, std::vector<int> mul, int zero,
                                int one);
void validate_bimodule_tables(const Bimodule& m);

RingHom make_ring_hom(const FiniteRing& src, const FiniteRing& dst, std::vector<int> map);
GroupHom make_group_hom(const AbelianGroup& src, const AbelianGroup& dst, std::vector<int> map);
RingHom identity_ring_hom(const FiniteRing& r);

// { r : r*s == s*r for all s in subset }. Always contains 0 and 1 and is
// closed under + and *; closure is re-asserted after the scan.
std::vector<int> centralizer_in_ring(const FiniteRing& r, const std::vector<int>& subset);

// { a in M : s.a == a.s for all s in subset }. An additive subgroup.
std::vector<int> centralizer_in_module(const Bimodule& m, const std::vector<int>& subset);

// Re-index a (closed) element subset as a group of its own. `elems` must be
// sorted and closed under + and -; throws inconsistency_error otherwise.
AbelianGroup subgroup_group(const AbelianGroup& g, const std::vector<int>& elems);

} // namespace anncat
