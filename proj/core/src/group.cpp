#include "cayrec/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace cayrec {

namespace {

std::vector<int> find_inverses(int n, const std::vector<int>& op, int identity) {
    std::vector<int> inv(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (op[static_cast<std::size_t>(x) * n + y] == identity) {
                inv[x] = y;
                break;
            }
    return inv;
}

GroupTable cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic group needs order >= 1");
    std::vector<int> op(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) op[static_cast<std::size_t>(i) * n + j] = (i + j) % n;
    return GroupTable("C" + std::to_string(n), n, std::move(op), 0);
}

// Elements of the dihedral group of order 2k: index f*k + i stands for the
// rotation r^i (f = 0) or the reflection s r^i (f = 1), with s r s = r^-1.
GroupTable dihedral_group(int k) {
    if (k < 2) throw std::invalid_argument("dihedral group needs k >= 2");
    const int n = 2 * k;
    std::vector<int> op(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        const int i = x % k, f = x / k;
        for (int y = 0; y < n; ++y) {
            const int j = y % k, g = y / k;
            const int rot = f == 0 ? (i + j) % k : (i - j + k) % k;
            op[static_cast<std::size_t>(x) * n + y] = (f ^ g) * k + rot;
        }
    }
    return GroupTable("D" + std::to_string(k), n, std::move(op), 0);
}

GroupTable symmetric_group(int k) {
    if (k < 1 || k > 4) throw std::invalid_argument("symmetric group supported for 1 <= k <= 4");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = i;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(perms.size());

    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<int> op(static_cast<std::size_t>(n) * n);
    std::vector<int> composed(k);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            for (int i = 0; i < k; ++i) composed[i] = perms[x][perms[y][i]];
            op[static_cast<std::size_t>(x) * n + y] = index_of(composed);
        }
    // Lexicographically first permutation is the identity map.
    return GroupTable("S" + std::to_string(k), n, std::move(op), 0);
}

// Indices 0..7 are +1, -1, +i, -i, +j, -j, +k, -k.
GroupTable quaternion_group() {
    // basis_mul[b1][b2] = (sign, basis) for the unit quaternions 1, i, j, k.
    struct Signed {
        int sign;
        int basis;
    };
    static constexpr Signed kBasisMul[4][4] = {
        {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},
        {{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}},
        {{+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}},
        {{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}},
    };
    const int n = 8;
    std::vector<int> op(64);
    for (int x = 0; x < n; ++x) {
        const int bx = x / 2, sx = x % 2 == 0 ? +1 : -1;
        for (int y = 0; y < n; ++y) {
            const int by = y / 2, sy = y % 2 == 0 ? +1 : -1;
            const Signed m = kBasisMul[bx][by];
            const int sign = sx * sy * m.sign;
            op[static_cast<std::size_t>(x) * n + y] = m.basis * 2 + (sign < 0 ? 1 : 0);
        }
    }
    return GroupTable("Q8", n, std::move(op), 0);
}

GroupTable product_group(const GroupTable& a, const GroupTable& b) {
    const int na = a.order(), nb = b.order(), n = na * nb;
    std::vector<int> op(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        const int xa = x / nb, xb = x % nb;
        for (int y = 0; y < n; ++y) {
            const int ya = y / nb, yb = y % nb;
            op[static_cast<std::size_t>(x) * n + y] = a.op(xa, ya) * nb + b.op(xb, yb);
        }
    }
    return GroupTable(a.name() + "x" + b.name(), n, std::move(op),
                      a.identity() * nb + b.identity());
}

// Recursive-descent parser for: atom | "prod:" spec "," spec
GroupTable parse_spec(std::string_view spec, std::size_t& pos);

int parse_int(std::string_view spec, std::size_t& pos, const std::string& what) {
    const std::size_t start = pos;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
    if (pos == start) {
        throw std::invalid_argument("group descriptor: expected " + what + " at offset " +
                                    std::to_string(start));
    }
    return std::stoi(std::string(spec.substr(start, pos - start)));
}

GroupTable parse_spec(std::string_view spec, std::size_t& pos) {
    if (spec.compare(pos, 5, "prod:") == 0) {
        pos += 5;
        GroupTable a = parse_spec(spec, pos);
        if (pos >= spec.size() || spec[pos] != ',') {
            throw std::invalid_argument("group descriptor: expected ',' in prod:<a>,<b>");
        }
        ++pos;
        GroupTable b = parse_spec(spec, pos);
        return product_group(a, b);
    }
    if (pos >= spec.size()) throw std::invalid_argument("group descriptor: unexpected end");
    const char kind = spec[pos];
    switch (kind) {
        case 'c':
            ++pos;
            return cyclic_group(parse_int(spec, pos, "order after 'c'"));
        case 'd':
            ++pos;
            return dihedral_group(parse_int(spec, pos, "k after 'd'"));
        case 's':
            ++pos;
            return symmetric_group(parse_int(spec, pos, "k after 's'"));
        case 'q': {
            if (spec.compare(pos, 2, "q8") == 0) {
                pos += 2;
                return quaternion_group();
            }
            throw std::invalid_argument("group descriptor: only q8 is supported");
        }
        default:
            throw std::invalid_argument(std::string("unsupported group descriptor near '") +
                                        std::string(spec.substr(pos)) + "'");
    }
}

}  // namespace

Enumeration::Enumeration(std::vector<int> perm) : perm_(std::move(perm)) {
    const int n = static_cast<int>(perm_.size());
    std::vector<char> seen(n, 0);
    for (int v : perm_) {
        if (v < 0 || v >= n || seen[v]) {
            throw std::invalid_argument("enumeration is not a permutation of [0, n)");
        }
        seen[v] = 1;
    }
}

Enumeration Enumeration::identity(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return Enumeration(std::move(p));
}

GroupTable::GroupTable(std::string name, int order, std::vector<int> op, int identity,
                       std::vector<std::string> element_names)
    : name_(std::move(name)),
      order_(order),
      op_(std::move(op)),
      identity_(identity),
      element_names_(std::move(element_names)) {
    if (identity_ < 0 || identity_ >= order_) {
        throw std::invalid_argument("identity index out of range");
    }
    const Matrix table(order_, op_);  // validates shape and value range
    if (CheckVerdict v = verify_group(table, identity_); !v) {
        std::string axiom = "unknown";
        if (v.witness) {
            if (const auto* ax = std::get_if<AxiomViolation>(&*v.witness)) axiom = ax->axiom;
            if (std::holds_alternative<DuplicateWitness>(*v.witness)) axiom = "latin";
        }
        throw std::invalid_argument("operation table violates the group axioms (" + axiom + ")");
    }
    inverse_ = find_inverses(order_, op_, identity_);
    if (element_names_.empty()) {
        element_names_ = decimal_universe(order_);
    } else if (element_names_.size() != static_cast<std::size_t>(order_)) {
        throw std::invalid_argument("element_names must have length n");
    }
}

Matrix GroupTable::op_matrix() const { return Matrix(order_, op_); }

GroupTable make_group(std::string_view spec) {
    std::size_t pos = 0;
    GroupTable g = parse_spec(spec, pos);
    if (pos != spec.size()) {
        throw std::invalid_argument("group descriptor: trailing characters '" +
                                    std::string(spec.substr(pos)) + "'");
    }
    return g;
}

CheckVerdict verify_group(const Matrix& table, int identity) {
    const int n = table.n();
    if (identity < 0 || identity >= n) {
        return CheckVerdict::fail(AxiomViolation{"identity", {identity}});
    }
    if (CheckVerdict latin = is_latin(table); !latin) return latin;
    for (int x = 0; x < n; ++x) {
        if (table.at(identity, x) != x || table.at(x, identity) != x) {
            return CheckVerdict::fail(AxiomViolation{"identity", {identity, x}});
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int xy = table.at(x, y);
            for (int z = 0; z < n; ++z) {
                if (table.at(xy, z) != table.at(x, table.at(y, z))) {
                    return CheckVerdict::fail(AxiomViolation{"associativity", {x, y, z}});
                }
            }
        }
    for (int x = 0; x < n; ++x) {
        bool has_inverse = false;
        for (int y = 0; y < n && !has_inverse; ++y) has_inverse = table.at(x, y) == identity;
        if (!has_inverse) return CheckVerdict::fail(AxiomViolation{"inverse", {x}});
    }
    return CheckVerdict::ok();
}

Matrix cayley_matrix_of(const GroupTable& g, const Enumeration& rows, const Enumeration& cols) {
    const int n = g.order();
    if (rows.size() != n || cols.size() != n) {
        throw std::invalid_argument("enumerations must match the group order");
    }
    std::vector<int> values(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            values[static_cast<std::size_t>(i) * n + j] = g.op(rows[i], cols[j]);
    return Matrix(n, std::move(values));
}

}  // namespace cayrec
