#include "anncat/finite_algebra.hpp"

#include <algorithm>
#include <string>

namespace anncat {

namespace {

std::string tup(std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
        if (!first) s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

std::vector<int> flatten_square(const Table& t, int n, const char* what) {
    if (static_cast<int>(t.size()) != n)
        throw validation_error("table-size", {},
                               std::string(what) + " table has " + std::to_string(t.size()) +
                                   " rows, expected " + std::to_string(n));
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(t[i].size()) != n)
            throw validation_error("table-size", {i},
                                   std::string(what) + " row " + std::to_string(i) + " has " +
                                       std::to_string(t[i].size()) + " entries, expected " +
                                       std::to_string(n));
        for (int v : t[i]) {
            if (v < 0 || v >= n)
                throw validation_error("entry-range", {i, v},
                                       std::string(what) + " entry " + std::to_string(v) +
                                           " out of range in row " + std::to_string(i));
            flat.push_back(v);
        }
    }
    return flat;
}

// Flatten a rectangular rows x cols table whose entries index 0..cols-1.
std::vector<int> flatten_rect(const Table& t, int rows, int cols, const char* what) {
    if (static_cast<int>(t.size()) != rows)
        throw validation_error("table-size", {},
                               std::string(what) + " table has " + std::to_string(t.size()) +
                                   " rows, expected " + std::to_string(rows));
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(t[i].size()) != cols)
            throw validation_error("table-size", {i},
                                   std::string(what) + " row " + std::to_string(i) + " has " +
                                       std::to_string(t[i].size()) + " entries, expected " +
                                       std::to_string(cols));
        for (int v : t[i]) {
            if (v < 0 || v >= cols)
                throw validation_error("entry-range", {i, v},
                                       std::string(what) + " entry " + std::to_string(v) +
                                           " out of range in row " + std::to_string(i));
            flat.push_back(v);
        }
    }
    return flat;
}

// Validates (0..n-1, add, zero) as an abelian group and returns the negation
// table. Every law is checked at every tuple.
std::vector<int> validate_group(int n, const std::vector<int>& add, int zero) {
    if (zero < 0 || zero >= n)
        throw validation_error("entry-range", {zero}, "zero index out of range");
    auto at = [&](int a, int b) { return add[static_cast<std::size_t>(a) * n + b]; };
    for (int a = 0; a < n; ++a) {
        if (at(zero, a) != a || at(a, zero) != a)
            throw validation_error("add-zero-identity", {a},
                                   "zero is not an additive identity at " + std::to_string(a));
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (at(a, b) != at(b, a))
                throw validation_error("add-commutativity", {a, b},
                                       "addition not commutative at " + tup({a, b}));
            for (int c = 0; c < n; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    throw validation_error("add-associativity", {a, b, c},
                                           "addition not associative at " + tup({a, b, c}));
        }
    std::vector<int> neg(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (at(a, b) == zero) {
                neg[a] = b;
                break;
            }
        if (neg[a] < 0)
            throw validation_error("add-inverse", {a},
                                   "element " + std::to_string(a) + " has no additive inverse");
    }
    return neg;
}

} // namespace

AbelianGroup FiniteRing::additive_group() const { return AbelianGroup{n, add, neg, zero}; }

AbelianGroup validate_group_tables(int n, std::vector<int> add, int zero) {
    if (n <= 0) throw validation_error("table-size", {}, "empty group table");
    if (static_cast<int>(add.size()) != n * n)
        throw validation_error("table-size", {},
                               "group add table has " + std::to_string(add.size()) +
                                   " entries, expected " + std::to_string(n * n));
    for (int v : add)
        if (v < 0 || v >= n)
            throw validation_error("entry-range", {v}, "group add entry out of range");
    AbelianGroup g;
    g.n = n;
    g.add = std::move(add);
    g.zero = zero;
    g.neg = validate_group(n, g.add, zero);
    return g;
}

AbelianGroup make_table_group(const Table& add, int zero) {
    const int n = static_cast<int>(add.size());
    if (n == 0) throw validation_error("table-size", {}, "empty group table");
    return validate_group_tables(n, flatten_square(add, n, "group add"), zero);
}

FiniteRing make_zn(int n) {
    if (n < 1) throw validation_error("invalid-size", {n}, "make_zn requires n >= 1");
    FiniteRing r;
    r.n = n;
    r.add.resize(static_cast<std::size_t>(n) * n);
    r.mul.resize(static_cast<std::size_t>(n) * n);
    r.neg.resize(n);
    for (int a = 0; a < n; ++a) {
        r.neg[a] = (n - a) % n;
        for (int b = 0; b < n; ++b) {
            r.add[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
            r.mul[static_cast<std::size_t>(a) * n + b] = (a * b) % n;
        }
    }
    r.zero = 0;
    r.one = n == 1 ? 0 : 1;
    return r;
}

FiniteRing validate_ring_tables(int n, std::vector<int> add, std::vector<int> mul, int zero,
                                int one) {
    if (n <= 0) throw validation_error("table-size", {}, "empty ring table");
    if (static_cast<int>(add.size()) != n * n || static_cast<int>(mul.size()) != n * n)
        throw validation_error("table-size", {}, "ring tables must have n*n entries");
    for (int v : add)
        if (v < 0 || v >= n) throw validation_error("entry-range", {v}, "ring add entry out of range");
    for (int v : mul)
        if (v < 0 || v >= n) throw validation_error("entry-range", {v}, "ring mul entry out of range");
    FiniteRing r;
    r.n = n;
    r.add = std::move(add);
    r.mul = std::move(mul);
    r.zero = zero;
    r.one = one;
    if (one < 0 || one >= r.n)
        throw validation_error("entry-range", {one}, "one index out of range");
    r.neg = validate_group(r.n, r.add, zero);
    for (int a = 0; a < n; ++a)
        if (r.times(one, a) != a || r.times(a, one) != a)
            throw validation_error("one-identity", {a},
                                   "one is not a multiplicative identity at " + std::to_string(a));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                if (r.times(r.times(a, b), c) != r.times(a, r.times(b, c)))
                    throw validation_error("mul-associativity", {a, b, c},
                                           "mul not associative at " + tup({a, b, c}) + ": (" +
                                               std::to_string(a) + "*" + std::to_string(b) + ")*" +
                                               std::to_string(c) + "=" +
                                               std::to_string(r.times(r.times(a, b), c)) + " but " +
                                               std::to_string(a) + "*(" + std::to_string(b) + "*" +
                                               std::to_string(c) + ")=" +
                                               std::to_string(r.times(a, r.times(b, c))));
                if (r.times(a, r.plus(b, c)) != r.plus(r.times(a, b), r.times(a, c)))
                    throw validation_error("distributivity-left", {a, b, c},
                                           "left distributivity fails at " + tup({a, b, c}));
                if (r.times(r.plus(a, b), c) != r.plus(r.times(a, c), r.times(b, c)))
                    throw validation_error("distributivity-right", {a, b, c},
                                           "right distributivity fails at " + tup({a, b, c}));
            }
    // Consequence of the axioms; asserted anyway.
    for (int a = 0; a < n; ++a)
        if (r.times(a, zero) != zero || r.times(zero, a) != zero)
            throw validation_error("zero-annihilation", {a},
                                   "zero does not annihilate at " + std::to_string(a));
    return r;
}

FiniteRing make_table_ring(const Table& add, const Table& mul, int zero, int one) {
    const int n = static_cast<int>(add.size());
    if (n == 0) throw validation_error("table-size", {}, "empty ring table");
    return validate_ring_tables(n, flatten_square(add, n, "ring add"),
                                flatten_square(mul, n, "ring mul"), zero, one);
}

void validate_bimodule_tables(const Bimodule& m) {
    const FiniteRing& base = m.base;
    const int n = base.n, k = m.grp.n;
    if (static_cast<int>(m.lact.size()) != n * k || static_cast<int>(m.ract.size()) != n * k)
        throw validation_error("table-size", {}, "action tables must have |R|*|M| entries");
    for (int v : m.lact)
        if (v < 0 || v >= k) throw validation_error("entry-range", {v}, "lact entry out of range");
    for (int v : m.ract)
        if (v < 0 || v >= k) throw validation_error("entry-range", {v}, "ract entry out of range");
    for (int x = 0; x < n; ++x)
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                if (m.left(x, m.grp.sum(a, b)) != m.grp.sum(m.left(x, a), m.left(x, b)))
                    throw validation_error("lact-additive", {x, a, b},
                                           "left action of " + std::to_string(x) +
                                               " is not additive at " + tup({a, b}));
                if (m.right(x, m.grp.sum(a, b)) != m.grp.sum(m.right(x, a), m.right(x, b)))
                    throw validation_error("ract-additive", {x, a, b},
                                           "right action of " + std::to_string(x) +
                                               " is not additive at " + tup({a, b}));
            }
    for (int a = 0; a < k; ++a)
        if (m.left(base.one, a) != a || m.right(base.one, a) != a)
            throw validation_error("action-unit", {a},
                                   "unit does not act as identity at " + std::to_string(a));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int a = 0; a < k; ++a) {
                if (m.left(base.times(x, y), a) != m.left(x, m.left(y, a)))
                    throw validation_error("lact-multiplicative", {x, y, a},
                                           "lact(x*y) != lact(x)lact(y) at " + tup({x, y, a}));
                if (m.right(base.times(x, y), a) != m.right(y, m.right(x, a)))
                    throw validation_error("ract-multiplicative", {x, y, a},
                                           "ract(x*y) != ract(y)ract(x) at " + tup({x, y, a}));
                if (m.left(x, m.right(y, a)) != m.right(y, m.left(x, a)))
                    throw validation_error("action-commutation", {x, y, a},
                                           "left and right actions do not commute at " +
                                               tup({x, y, a}));
                if (m.left(base.plus(x, y), a) != m.grp.sum(m.left(x, a), m.left(y, a)))
                    throw validation_error("lact-ring-additive", {x, y, a},
                                           "lact not additive over ring addition at " +
                                               tup({x, y, a}));
                if (m.right(base.plus(x, y), a) != m.grp.sum(m.right(x, a), m.right(y, a)))
                    throw validation_error("ract-ring-additive", {x, y, a},
                                           "ract not additive over ring addition at " +
                                               tup({x, y, a}));
            }
    // Consequence; asserted like zero annihilation in rings.
    for (int a = 0; a < k; ++a)
        if (m.left(base.zero, a) != m.grp.zero || m.right(base.zero, a) != m.grp.zero)
            throw validation_error("action-zero", {a},
                                   "zero does not act as zero at " + std::to_string(a));
}

Bimodule make_bimodule(const FiniteRing& base, const Table& add, int zero, const Table& lact,
                       const Table& ract) {
    Bimodule m;
    m.base = base;
    m.grp = make_table_group(add, zero);
    m.lact = flatten_rect(lact, base.n, m.grp.n, "lact");
    m.ract = flatten_rect(ract, base.n, m.grp.n, "ract");
    validate_bimodule_tables(m);
    return m;
}

Bimodule regular_bimodule(const FiniteRing& r) {
    Bimodule m;
    m.base = r;
    m.grp = r.additive_group();
    m.lact = r.mul;
    m.ract.resize(static_cast<std::size_t>(r.n) * r.n);
    for (int x = 0; x < r.n; ++x)
        for (int a = 0; a < r.n; ++a)
            m.ract[static_cast<std::size_t>(x) * r.n + a] = r.times(a, x);
    return m;
}

RingHom make_ring_hom(const FiniteRing& src, const FiniteRing& dst, std::vector<int> map) {
    if (static_cast<int>(map.size()) != src.n)
        throw validation_error("hom-size", {},
                               "ring hom map has " + std::to_string(map.size()) +
                                   " entries, expected " + std::to_string(src.n));
    for (int v : map)
        if (v < 0 || v >= dst.n)
            throw validation_error("hom-range", {v}, "ring hom value out of range");
    if (map[src.zero] != dst.zero)
        throw validation_error("hom-zero", {src.zero}, "ring hom does not preserve zero");
    if (map[src.one] != dst.one)
        throw validation_error("hom-one", {src.one}, "ring hom does not preserve one");
    for (int a = 0; a < src.n; ++a)
        for (int b = 0; b < src.n; ++b) {
            if (map[src.plus(a, b)] != dst.plus(map[a], map[b]))
                throw validation_error("hom-additive", {a, b},
                                       "ring hom not additive at " + tup({a, b}));
            if (map[src.times(a, b)] != dst.times(map[a], map[b]))
                throw validation_error("hom-multiplicative", {a, b},
                                       "ring hom not multiplicative at " + tup({a, b}));
        }
    return RingHom{src, dst, std::move(map)};
}

GroupHom make_group_hom(const AbelianGroup& src, const AbelianGroup& dst, std::vector<int> map) {
    if (static_cast<int>(map.size()) != src.n)
        throw validation_error("hom-size", {},
                               "group hom map has " + std::to_string(map.size()) +
                                   " entries, expected " + std::to_string(src.n));
    for (int v : map)
        if (v < 0 || v >= dst.n)
            throw validation_error("hom-range", {v}, "group hom value out of range");
    if (map[src.zero] != dst.zero)
        throw validation_error("hom-zero", {src.zero}, "group hom does not preserve zero");
    for (int a = 0; a < src.n; ++a)
        for (int b = 0; b < src.n; ++b)
            if (map[src.sum(a, b)] != dst.sum(map[a], map[b]))
                throw validation_error("hom-additive", {a, b},
                                       "group hom not additive at " + tup({a, b}));
    return GroupHom{src, dst, std::move(map)};
}

RingHom identity_ring_hom(const FiniteRing& r) {
    std::vector<int> map(r.n);
    for (int i = 0; i < r.n; ++i) map[i] = i;
    return RingHom{r, r, std::move(map)};
}

std::vector<int> centralizer_in_ring(const FiniteRing& r, const std::vector<int>& subset) {
    std::vector<int> out;
    for (int a = 0; a < r.n; ++a) {
        bool central = true;
        for (int s : subset)
            if (r.times(a, s) != r.times(s, a)) {
                central = false;
                break;
            }
        if (central) out.push_back(a);
    }
    // Closure self-checks: the result must be a subring.
    std::vector<char> in(r.n, 0);
    for (int a : out) in[a] = 1;
    if (!in[r.zero] || !in[r.one])
        throw inconsistency_error("ring centralizer lost 0 or 1");
    for (int a : out)
        for (int b : out)
            if (!in[r.plus(a, b)] || !in[r.times(a, b)] || !in[r.minus(a)])
                throw inconsistency_error("ring centralizer is not closed");
    return out;
}

std::vector<int> centralizer_in_module(const Bimodule& m, const std::vector<int>& subset) {
    std::vector<int> out;
    for (int a = 0; a < m.grp.n; ++a) {
        bool central = true;
        for (int s : subset)
            if (m.left(s, a) != m.right(s, a)) {
                central = false;
                break;
            }
        if (central) out.push_back(a);
    }
    std::vector<char> in(m.grp.n, 0);
    for (int a : out) in[a] = 1;
    if (!in[m.grp.zero])
        throw inconsistency_error("module centralizer lost 0");
    for (int a : out)
        for (int b : out)
            if (!in[m.grp.sum(a, b)] || !in[m.grp.minus(a)])
                throw inconsistency_error("module centralizer is not a subgroup");
    return out;
}

AbelianGroup subgroup_group(const AbelianGroup& g, const std::vector<int>& elems) {
    const int k = static_cast<int>(elems.size());
    std::vector<int> pos(g.n, -1);
    for (int i = 0; i < k; ++i) pos[elems[i]] = i;
    if (pos[g.zero] < 0) throw inconsistency_error("subgroup does not contain zero");
    AbelianGroup sub;
    sub.n = k;
    sub.zero = pos[g.zero];
    sub.add.resize(static_cast<std::size_t>(k) * k);
    sub.neg.resize(k);
    for (int i = 0; i < k; ++i) {
        int ni = pos[g.minus(elems[i])];
        if (ni < 0) throw inconsistency_error("subgroup not closed under negation");
        sub.neg[i] = ni;
        for (int j = 0; j < k; ++j) {
            int s = pos[g.sum(elems[i], elems[j])];
            if (s < 0) throw inconsistency_error("subgroup not closed under addition");
            sub.add[static_cast<std::size_t>(i) * k + j] = s;
        }
    }
    return sub;
}

} // namespace anncat
