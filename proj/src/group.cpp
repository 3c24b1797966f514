#include "gcover/group.hpp"

#include "gcover/errors.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace gcover {

namespace {

// Lexicographic order on the sorted member lists of two masks.
bool mask_lex_less(ElemMask a, ElemMask b) {
    while (a != 0 && b != 0) {
        int la = std::countr_zero(a);
        int lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

int FiniteGroup::power(int x, long e) const {
    int r = element_order(x);
    long k = e % r;
    if (k < 0) k += r;
    int acc = 0;
    for (long j = 0; j < k; ++j) acc = mul(acc, x);
    return acc;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> names) {
    const int n = static_cast<int>(table.size());
    if (n == 0 || n > kMaxOrder)
        throw GcError(errc::not_a_group, "order must be between 1 and " + std::to_string(kMaxOrder));
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw GcError(errc::not_a_group, "multiplication table is not square");
        for (int v : row)
            if (v < 0 || v >= n)
                throw GcError(errc::not_a_group, "table entry out of range");
    }
    // Identity at index 0.
    for (int x = 0; x < n; ++x) {
        if (table[0][x] != x || table[x][0] != x)
            throw GcError(errc::not_a_group, "index 0 is not a two-sided identity",
                          {{"element", x}});
    }
    // Two-sided inverses.
    std::vector<int> inverse(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            if (table[x][y] == 0 && table[y][x] == 0) {
                inverse[x] = y;
                break;
            }
        }
        if (inverse[x] < 0)
            throw GcError(errc::not_a_group, "element has no two-sided inverse", {{"element", x}});
    }
    // Associativity, witness triple on failure.
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (table[table[x][y]][z] != table[x][table[y][z]])
                    throw GcError(errc::not_a_group, "associativity fails",
                                  {{"x", x}, {"y", y}, {"z", z}});

    FiniteGroup g;
    g.order_ = n;
    g.table_ = std::move(table);
    g.inverse_ = std::move(inverse);
    if (names.empty()) {
        names.resize(n);
        for (int i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);
        names[0] = "1";
    } else if (static_cast<int>(names.size()) != n) {
        throw GcError(errc::not_a_group, "name list length does not match order");
    }
    g.names_ = std::move(names);
    g.derive();
    return g;
}

void FiniteGroup::derive() {
    const int n = order_;

    elem_order_.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        int acc = x, k = 1;
        while (acc != 0) {
            acc = mul(acc, x);
            ++k;
        }
        elem_order_[x] = k;
    }

    abelian_ = true;
    for (int x = 0; x < n && abelian_; ++x)
        for (int y = x + 1; y < n; ++y)
            if (mul(x, y) != mul(y, x)) {
                abelian_ = false;
                break;
            }
    cyclic_gen_ = -1;
    for (int x = 0; x < n; ++x)
        if (elem_order_[x] == n) {
            cyclic_gen_ = x;
            break;
        }

    // Element conjugacy classes, ordered by minimal member.
    class_of_.assign(n, -1);
    classes_.clear();
    for (int x = 0; x < n; ++x) {
        if (class_of_[x] >= 0) continue;
        int id = static_cast<int>(classes_.size());
        std::vector<int> members;
        for (int g = 0; g < n; ++g) {
            int y = conjugate(g, x);
            if (class_of_[y] < 0) {
                class_of_[y] = id;
                members.push_back(y);
            }
        }
        std::sort(members.begin(), members.end());
        classes_.push_back(std::move(members));
    }

    inverse_class_.resize(classes_.size());
    for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
        inverse_class_[c] = class_of_[inv(classes_[c].front())];

    // Inverse-symmetric classes, ordered by minimal ConjClassId.
    inv_sym_of_.assign(classes_.size(), -1);
    inv_sym_members_.clear();
    for (int c = 0; c < static_cast<int>(classes_.size()); ++c) {
        if (inv_sym_of_[c] >= 0) continue;
        int id = static_cast<int>(inv_sym_members_.size());
        std::vector<int> mem{c};
        inv_sym_of_[c] = id;
        if (inverse_class_[c] != c) {
            inv_sym_of_[inverse_class_[c]] = id;
            mem.push_back(inverse_class_[c]);
        }
        inv_sym_members_.push_back(std::move(mem));
    }

    centralizer_.assign(n, 0);
    for (int x = 0; x < n; ++x) {
        ElemMask m = 0;
        for (int y = 0; y < n; ++y)
            if (mul(x, y) == mul(y, x)) m |= ElemMask{1} << y;
        centralizer_[x] = m;
    }

    // Subgroup lattice by breadth-first closure; fine at desk scale.
    subgroups_.clear();
    std::vector<ElemMask> queue{closure(ElemMask{1})};
    subgroups_.push_back(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        ElemMask s = queue[head];
        for (int x = 1; x < n; ++x) {
            if (s & (ElemMask{1} << x)) continue;
            ElemMask t = closure(s | (ElemMask{1} << x));
            if (std::find(subgroups_.begin(), subgroups_.end(), t) == subgroups_.end()) {
                subgroups_.push_back(t);
                queue.push_back(t);
            }
        }
    }
    std::sort(subgroups_.begin(), subgroups_.end(), [](ElemMask a, ElemMask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return mask_lex_less(a, b);
    });
    subgroup_members_.clear();
    for (ElemMask m : subgroups_) subgroup_members_.push_back(mask_members(m));
    trivial_subgroup_ = 0;
    full_subgroup_ = static_cast<int>(subgroups_.size()) - 1;

    join_.assign(subgroups_.size(), std::vector<int>(n, -1));
    for (int s = 0; s < static_cast<int>(subgroups_.size()); ++s)
        for (int x = 0; x < n; ++x) {
            ElemMask t = (subgroups_[s] & (ElemMask{1} << x))
                             ? subgroups_[s]
                             : closure(subgroups_[s] | (ElemMask{1} << x));
            join_[s][x] = subgroup_id(t);
        }

    // Subgroup conjugacy classes; canonical representative is the
    // lexicographically least member set.
    subgroup_class_of_.assign(subgroups_.size(), -1);
    std::vector<std::vector<int>> raw_classes;
    for (int s = 0; s < static_cast<int>(subgroups_.size()); ++s) {
        if (subgroup_class_of_[s] >= 0) continue;
        std::vector<int> members;
        for (int g = 0; g < n; ++g) {
            int t = subgroup_id(conjugate_mask(g, subgroups_[s]));
            if (subgroup_class_of_[t] < 0) {
                subgroup_class_of_[t] = static_cast<int>(raw_classes.size());
                members.push_back(t);
            }
        }
        std::sort(members.begin(), members.end());
        raw_classes.push_back(std::move(members));
    }
    // Re-order classes by their representative (subgroups_ already sorted
    // by size then lex, so the least member id is the canonical rep).
    std::vector<int> perm(raw_classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return raw_classes[a].front() < raw_classes[b].front(); });
    subgroup_classes_.clear();
    std::vector<int> new_id(raw_classes.size());
    for (int k = 0; k < static_cast<int>(perm.size()); ++k) {
        new_id[perm[k]] = k;
        subgroup_classes_.push_back(raw_classes[perm[k]]);
    }
    for (int s = 0; s < static_cast<int>(subgroups_.size()); ++s)
        subgroup_class_of_[s] = new_id[subgroup_class_of_[s]];
}

ElemMask FiniteGroup::closure(ElemMask seed) const {
    ElemMask m = seed | 1;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int a = 0; a < order_; ++a) {
            if (!(m & (ElemMask{1} << a))) continue;
            for (int b = 0; b < order_; ++b) {
                if (!(m & (ElemMask{1} << b))) continue;
                ElemMask bit = ElemMask{1} << mul(a, b);
                if (!(m & bit)) {
                    m |= bit;
                    grew = true;
                }
            }
        }
    }
    return m;
}

int FiniteGroup::subgroup_id(ElemMask mask) const {
    auto it = std::find(subgroups_.begin(), subgroups_.end(), mask);
    return it == subgroups_.end() ? -1 : static_cast<int>(it - subgroups_.begin());
}

std::vector<int> FiniteGroup::mask_members(ElemMask m) const {
    std::vector<int> v;
    for (int x = 0; x < order_; ++x)
        if (m & (ElemMask{1} << x)) v.push_back(x);
    return v;
}

ElemMask FiniteGroup::conjugate_mask(int g, ElemMask m) const {
    ElemMask r = 0;
    for (int x = 0; x < order_; ++x)
        if (m & (ElemMask{1} << x)) r |= ElemMask{1} << conjugate(g, x);
    return r;
}

std::vector<int> FiniteGroup::centralizer(int x) const {
    if (x < 0 || x >= order_) throw GcError(errc::index_out_of_range, "element out of range");
    return mask_members(centralizer_[x]);
}

bool FiniteGroup::subgroup_class_leq(SubgroupClassId a, SubgroupClassId b) const {
    for (int sa : subgroup_classes_[a.id])
        for (int sb : subgroup_classes_[b.id])
            if ((subgroups_[sa] & subgroups_[sb]) == subgroups_[sa]) return true;
    return false;
}

SubgroupClassId FiniteGroup::subgroup_class_of(const std::vector<int>& elems, bool generated) const {
    ElemMask m = 1;
    for (int x : elems) {
        if (x < 0 || x >= order_) throw GcError(errc::index_out_of_range, "element out of range");
        m |= ElemMask{1} << x;
    }
    ElemMask closed = closure(m);
    if (!generated && closed != m)
        throw GcError(errc::not_a_subgroup, "element set is not closed under the group operation");
    return subgroup_class_of_id(subgroup_id(closed));
}

ElemMask FiniteGroup::commutator_subgroup_mask(ElemMask h) const {
    if (subgroup_id(h) < 0) throw GcError(errc::not_a_subgroup, "not a subgroup mask");
    ElemMask gens = 1;
    for (int a = 0; a < order_; ++a) {
        if (!(h & (ElemMask{1} << a))) continue;
        for (int b = 0; b < order_; ++b) {
            if (!(h & (ElemMask{1} << b))) continue;
            int c = mul(mul(a, b), mul(inv(a), inv(b)));
            gens |= ElemMask{1} << c;
        }
    }
    return closure(gens);
}

std::vector<int> FiniteGroup::commutator_subgroup(const std::vector<int>& h) const {
    ElemMask m = 1;
    for (int x : h) m |= ElemMask{1} << x;
    return mask_members(commutator_subgroup_mask(m));
}

std::string FiniteGroup::class_name(ConjClassId c) const {
    if (c.id == 0) return "1";
    // "c<k>" when the element order identifies the class uniquely.
    int rep = class_rep(c);
    int ord = element_order(rep);
    int same = 0;
    for (const auto& cls : classes_)
        if (element_order(cls.front()) == ord) ++same;
    if (same == 1) return "c" + std::to_string(ord);
    return names_[rep];
}

ConjClassId FiniteGroup::class_by_token(const std::string& token) const {
    if (token == "1" || lower(token) == "trivial") return ConjClassId{0};
    for (int c = 0; c < class_count(); ++c)
        if (class_name(ConjClassId{c}) == token) return ConjClassId{c};
    for (int x = 0; x < order_; ++x)
        if (names_[x] == token) return class_of_[x] >= 0 ? ConjClassId{class_of_[x]} : ConjClassId{-1};
    if (token.size() > 1 && token[0] == 'e') {
        int idx = std::stoi(token.substr(1));
        if (idx >= 0 && idx < order_) return ConjClassId{class_of_[idx]};
    }
    if (token.size() > 1 && token[0] == 'c') {
        int ord = std::stoi(token.substr(1));
        std::vector<int> hits;
        for (int c = 0; c < class_count(); ++c)
            if (element_order(class_rep(ConjClassId{c})) == ord) hits.push_back(c);
        if (hits.size() == 1) return ConjClassId{hits[0]};
        throw GcError(errc::usage, "class token '" + token + "' is ambiguous for this group");
    }
    throw GcError(errc::usage, "unknown conjugacy class '" + token + "'");
}

std::string FiniteGroup::subgroup_class_name(SubgroupClassId c) const {
    int rep = subgroup_class_rep(c);
    int sz = static_cast<int>(subgroup_members_[rep].size());
    if (sz == 1) return "1";
    if (sz == order_) return group_name_;
    // S3 conventions first.
    if (order_ == 6 && !abelian_) {
        if (sz == 2) return "T";
        if (sz == 3) return "N";
    }
    // Cyclic subgroups of abelian built-ins read naturally as mu<k>.
    bool cyc = false;
    for (int x : subgroup_members_[rep])
        if (element_order(x) == sz) cyc = true;
    std::string base = cyc ? "mu" + std::to_string(sz) : "sub" + std::to_string(sz);
    int same = 0, pos = 0;
    for (int k = 0; k < subgroup_class_count(); ++k) {
        int r2 = subgroup_class_rep(SubgroupClassId{k});
        if (static_cast<int>(subgroup_members_[r2].size()) == sz) {
            ++same;
            if (k < c.id) ++pos;
        }
    }
    if (same > 1) base += "_" + std::to_string(pos);
    return base;
}

SubgroupClassId FiniteGroup::subgroup_class_by_token(const std::string& token) const {
    std::string t = lower(token);
    if (t == "1" || t == "trivial") return trivial_subgroup_class();
    if (t == "full" || t == lower(group_name_)) return full_subgroup_class();
    for (int c = 0; c < subgroup_class_count(); ++c)
        if (lower(subgroup_class_name(SubgroupClassId{c})) == t) return SubgroupClassId{c};
    throw GcError(errc::usage, "unknown subgroup class '" + token + "'");
}

FiniteGroup FiniteGroup::subgroup_group(int sid, std::vector<int>* to_parent,
                                        std::vector<int>* from_parent) const {
    const auto& mem = subgroup_members_[sid];
    const int m = static_cast<int>(mem.size());
    std::vector<int> back(order_, -1);
    for (int i = 0; i < m; ++i) back[mem[i]] = i;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> nm(m);
    for (int i = 0; i < m; ++i) {
        nm[i] = names_[mem[i]];
        for (int j = 0; j < m; ++j) t[i][j] = back[mul(mem[i], mem[j])];
    }
    if (to_parent) *to_parent = mem;
    if (from_parent) *from_parent = back;
    FiniteGroup sub = from_table(std::move(t), std::move(nm));
    sub.group_name_ = group_name_ + "/" + subgroup_class_name(subgroup_class_of_id(sid));
    return sub;
}

namespace {

FiniteGroup make_cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    std::vector<std::string> names(n);
    names[0] = "1";
    for (int i = 1; i < n; ++i) names[i] = i == 1 ? "z" : "z^" + std::to_string(i);
    return FiniteGroup::from_table(std::move(t), std::move(names));
}

FiniteGroup make_s3() {
    // Elements as permutations of {1,2,3}; (x*y)(p) = x(y(p)).
    const int perms[6][3] = {
        {1, 2, 3},  // 1
        {2, 1, 3},  // (12)
        {3, 2, 1},  // (13)
        {1, 3, 2},  // (23)
        {2, 3, 1},  // (123)
        {3, 1, 2},  // (132)
    };
    auto find = [&](const int p[3]) {
        for (int k = 0; k < 6; ++k)
            if (perms[k][0] == p[0] && perms[k][1] == p[1] && perms[k][2] == p[2]) return k;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int x = 0; x < 6; ++x)
        for (int y = 0; y < 6; ++y) {
            int comp[3];
            for (int p = 0; p < 3; ++p) comp[p] = perms[x][perms[y][p] - 1];
            t[x][y] = find(comp);
        }
    return FiniteGroup::from_table(std::move(t),
                                   {"1", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

}  // namespace

const FiniteGroup& FiniteGroup::builtin(const std::string& name) {
    static const std::map<std::string, FiniteGroup> groups = [] {
        std::map<std::string, FiniteGroup> m;
        auto put = [&m](const std::string& key, FiniteGroup g) {
            g.group_name_ = key;
            m.emplace(key, std::move(g));
        };
        put("trivial", make_cyclic(1));
        put("mu2", make_cyclic(2));
        put("mu3", make_cyclic(3));
        put("mu4", make_cyclic(4));
        put("mu6", make_cyclic(6));
        put("S3", make_s3());
        return m;
    }();
    auto it = groups.find(name);
    if (it == groups.end() && lower(name) == "s3") it = groups.find("S3");
    if (it == groups.end())
        throw GcError(errc::unsupported_group, "no built-in group named '" + name + "'");
    return it->second;
}

bool FiniteGroup::is_builtin_name(const std::string& name) {
    for (const auto& n : builtin_names())
        if (n == name || (lower(name) == "s3" && n == "S3")) return true;
    return false;
}

std::vector<std::string> FiniteGroup::builtin_names() {
    return {"trivial", "mu2", "mu3", "mu4", "mu6", "S3"};
}

FiniteGroup FiniteGroup::from_stream(std::istream& in) {
    int n;
    if (!(in >> n)) throw GcError(errc::not_a_group, "missing order on line 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> t[i][j]))
                throw GcError(errc::not_a_group, "truncated multiplication table");
    std::vector<std::string> names;
    int idx;
    std::string nm;
    std::vector<std::pair<int, std::string>> pairs;
    while (in >> idx >> nm) pairs.emplace_back(idx, nm);
    if (!pairs.empty()) {
        names.resize(n);
        for (int i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);
        names[0] = "1";
        for (auto& [i, s] : pairs)
            if (i >= 0 && i < n) names[i] = s;
    }
    return from_table(std::move(t), std::move(names));
}

FiniteGroup FiniteGroup::from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw GcError(errc::usage, "cannot open group file '" + path + "'");
    FiniteGroup g = from_stream(f);
    g.group_name_ = path;
    return g;
}

FiniteGroup FiniteGroup::resolve(const std::string& name_or_path) {
    if (is_builtin_name(name_or_path)) return builtin(name_or_path);
    return from_file(name_or_path);
}

}  // namespace gcover
