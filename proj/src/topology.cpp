#include "halg/topology.hpp"

#include "halg/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace halg {

namespace {

std::vector<std::vector<bool>> closure_from_pairs(
    std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& rel) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    for (const auto& [a, b] : rel) leq[a][b] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (leq[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (leq[k][j]) leq[i][j] = true;
    return leq;
}

std::vector<std::pair<std::size_t, std::size_t>> reduction_of(
    const std::vector<std::vector<bool>>& leq) {
    std::size_t n = leq.size();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !leq[i][j]) continue;
            bool direct = true;
            for (std::size_t k = 0; k < n && direct; ++k)
                if (k != i && k != j && leq[i][k] && leq[k][j]) direct = false;
            if (direct) covers.push_back({i, j});
        }
    std::sort(covers.begin(), covers.end());
    return covers;
}

std::vector<std::vector<bool>> leq_matrix(const QuasiPoset& t) {
    return closure_from_pairs(t.class_count(), t.covers);
}

QuasiPoset from_closure(std::vector<std::vector<Label>> classes,
                        const std::vector<std::vector<bool>>& leq) {
    QuasiPoset out;
    out.classes = std::move(classes);
    out.covers = reduction_of(leq);
    // Re-run the canonicalizing constructor to sort classes by min label.
    return QuasiPoset(std::move(out.classes), std::move(out.covers));
}

}  // namespace

QuasiPoset::QuasiPoset(std::vector<std::vector<Label>> cls,
                       std::vector<std::pair<std::size_t, std::size_t>> cov)
    : classes(std::move(cls)), covers(std::move(cov)) {
    LabelSet seen;
    for (auto& c : classes) {
        if (c.empty()) throw std::invalid_argument("empty class in quasi-poset");
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        for (const auto& l : c)
            if (!seen.insert(l).second)
                throw std::invalid_argument("duplicate label across classes: " + l);
    }
    // Sort classes by minimum label and remap cover indices.
    std::vector<std::size_t> order(classes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return classes[a].front() < classes[b].front(); });
    std::vector<std::size_t> old_to_new(classes.size());
    std::vector<std::vector<Label>> sorted;
    sorted.reserve(classes.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        old_to_new[order[pos]] = pos;
        sorted.push_back(std::move(classes[order[pos]]));
    }
    classes = std::move(sorted);
    for (auto& [a, b] : covers) {
        if (a >= old_to_new.size() || b >= old_to_new.size())
            throw std::invalid_argument("cover index out of range");
        if (a == b) throw std::invalid_argument("reflexive cover");
        a = old_to_new[a];
        b = old_to_new[b];
    }
    auto leq = closure_from_pairs(classes.size(), covers);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (leq[i][j] && leq[j][i])
                throw std::invalid_argument("cyclic covers through classes " + std::to_string(i) +
                                            " and " + std::to_string(j));
    covers = reduction_of(leq);
}

LabelSet QuasiPoset::ground() const {
    LabelSet g;
    for (const auto& c : classes) g.insert(c.begin(), c.end());
    return g;
}

std::size_t QuasiPoset::component_count() const {
    std::vector<std::size_t> parent(classes.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : covers) parent[find(a)] = find(b);
    std::size_t count = 0;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (find(i) == i) ++count;
    return count;
}

bool QuasiPoset::leq(std::size_t i, std::size_t j) const {
    if (i == j) return true;
    std::vector<bool> seen(classes.size(), false);
    std::vector<std::size_t> stack{i};
    seen[i] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        if (v == j) return true;
        for (const auto& [a, b] : covers)
            if (a == v && !seen[b]) {
                seen[b] = true;
                stack.push_back(b);
            }
    }
    return false;
}

QuasiPoset disjoint_union(const QuasiPoset& s, const QuasiPoset& t) {
    LabelSet gs = s.ground();
    for (const auto& l : t.ground())
        if (gs.count(l)) throw std::invalid_argument("overlapping ground sets at label " + l);
    auto classes = s.classes;
    classes.insert(classes.end(), t.classes.begin(), t.classes.end());
    auto covers = s.covers;
    for (const auto& [a, b] : t.covers) covers.push_back({a + s.class_count(), b + s.class_count()});
    return QuasiPoset(std::move(classes), std::move(covers));
}

std::vector<std::vector<std::size_t>> open_sets(const QuasiPoset& t) {
    std::size_t n = t.class_count();
    auto leq = leq_matrix(t);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 0; mask < (1u << n); ++mask) {
        bool open = true;
        for (std::size_t i = 0; i < n && open; ++i) {
            if (!((mask >> i) & 1u)) continue;
            for (std::size_t j = 0; j < n && open; ++j)
                if (leq[i][j] && !((mask >> j) & 1u)) open = false;
        }
        if (!open) continue;
        std::vector<std::size_t> set;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) set.push_back(i);
        out.push_back(std::move(set));
    }
    return out;
}

std::optional<QuasiPoset> restrict_topology(const QuasiPoset& t, const LabelSet& I) {
    LabelSet ground = t.ground();
    for (const auto& l : I)
        if (!ground.count(l)) throw std::invalid_argument("restriction set outside ground: " + l);
    std::vector<std::size_t> keep;
    std::size_t covered = 0;
    for (std::size_t i = 0; i < t.class_count(); ++i) {
        bool inside = I.count(t.classes[i].front()) > 0;
        for (const auto& l : t.classes[i])
            if ((I.count(l) > 0) != inside) return std::nullopt;
        if (inside) {
            keep.push_back(i);
            covered += t.classes[i].size();
        }
    }
    if (covered != I.size()) return std::nullopt;
    auto leq = leq_matrix(t);
    std::size_t m = keep.size();
    std::vector<std::vector<bool>> sub(m, std::vector<bool>(m, false));
    std::vector<std::vector<Label>> classes;
    for (std::size_t a = 0; a < m; ++a) {
        classes.push_back(t.classes[keep[a]]);
        for (std::size_t b = 0; b < m; ++b) sub[a][b] = leq[keep[a]][keep[b]];
    }
    return from_closure(std::move(classes), sub);
}

std::optional<std::pair<QuasiPoset, QuasiPoset>> delta_split(const QuasiPoset& t,
                                                             const LabelSet& I, const LabelSet& J) {
    LabelSet all;
    all.insert(I.begin(), I.end());
    all.insert(J.begin(), J.end());
    if (all != t.ground() || I.size() + J.size() != all.size())
        throw std::invalid_argument("split parts do not partition the ground set");
    auto left = restrict_topology(t, I);
    auto right = restrict_topology(t, J);
    if (!left || !right) return std::nullopt;
    // J must be open: up-closed as a set of classes.
    auto leq = leq_matrix(t);
    for (std::size_t i = 0; i < t.class_count(); ++i) {
        if (!J.count(t.classes[i].front())) continue;
        for (std::size_t j = 0; j < t.class_count(); ++j)
            if (leq[i][j] && !J.count(t.classes[j].front())) return std::nullopt;
    }
    return std::make_pair(std::move(*left), std::move(*right));
}

namespace {

bool hasse_group_connected(const QuasiPoset& t, const std::vector<std::size_t>& group) {
    if (group.empty()) return false;
    auto adjacent = [&](std::size_t a, std::size_t b) {
        for (const auto& [x, y] : t.covers)
            if ((x == a && y == b) || (x == b && y == a)) return true;
        return false;
    };
    std::vector<bool> seen(t.class_count(), false);
    std::vector<std::size_t> stack{group.front()};
    seen[group.front()] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : group)
            if (!seen[w] && adjacent(v, w)) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == group.size();
}

std::vector<std::size_t> owner_of(const ClassEquivalence& e, std::size_t n) {
    std::vector<std::size_t> owner(n, SIZE_MAX);
    for (std::size_t gi = 0; gi < e.groups.size(); ++gi)
        for (std::size_t v : e.groups[gi]) owner[v] = gi;
    for (std::size_t v = 0; v < n; ++v)
        if (owner[v] == SIZE_MAX) throw std::invalid_argument("equivalence misses a class");
    return owner;
}

// Quotient order on groups: transitive closure of "some member below some
// member". Compatibility requires this to be antisymmetric across groups.
std::vector<std::vector<bool>> quotient_closure(const QuasiPoset& t, const ClassEquivalence& e,
                                                const std::vector<std::size_t>& owner) {
    auto leq = leq_matrix(t);
    std::size_t m = e.groups.size();
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < t.class_count(); ++i)
        for (std::size_t j = 0; j < t.class_count(); ++j)
            if (leq[i][j] && owner[i] != owner[j]) rel.push_back({owner[i], owner[j]});
    return closure_from_pairs(m, rel);
}

bool quotient_antisymmetric(const std::vector<std::vector<bool>>& q) {
    for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = a + 1; b < q.size(); ++b)
            if (q[a][b] && q[b][a]) return false;
    return true;
}

}  // namespace

std::vector<ClassEquivalence> compatible_equivalences(const QuasiPoset& t) {
    std::vector<ClassEquivalence> out;
    for (auto& partition : set_partitions(t.class_count())) {
        ClassEquivalence e{partition};
        bool ok = true;
        for (const auto& group : e.groups)
            if (!hasse_group_connected(t, group)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        auto owner = owner_of(e, t.class_count());
        if (!quotient_antisymmetric(quotient_closure(t, e, owner))) continue;
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end());
    return out;
}

QuasiPoset quotient(const QuasiPoset& t, const ClassEquivalence& e) {
    auto owner = owner_of(e, t.class_count());
    auto q = quotient_closure(t, e, owner);
    if (!quotient_antisymmetric(q)) throw std::invalid_argument("equivalence not compatible");
    std::vector<std::vector<Label>> classes(e.groups.size());
    for (std::size_t gi = 0; gi < e.groups.size(); ++gi)
        for (std::size_t v : e.groups[gi])
            classes[gi].insert(classes[gi].end(), t.classes[v].begin(), t.classes[v].end());
    return from_closure(std::move(classes), q);
}

QuasiPoset restriction(const QuasiPoset& t, const ClassEquivalence& e) {
    auto owner = owner_of(e, t.class_count());
    auto leq = leq_matrix(t);
    std::size_t n = t.class_count();
    std::vector<std::vector<bool>> kept(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            kept[i][j] = leq[i][j] && owner[i] == owner[j];
    return from_closure(t.classes, kept);
}

LinComb<TensorKey<QuasiPoset, QuasiPoset>> internal_delta(const QuasiPoset& t) {
    LinComb<TensorKey<QuasiPoset, QuasiPoset>> out;
    for (const auto& e : compatible_equivalences(t))
        out.add_term({quotient(t, e), restriction(t, e)}, 1);
    return out;
}

Rational eps_prime(const QuasiPoset& t) {
    return t.covers.empty() ? Rational(1) : Rational(0);
}

namespace {

enum class ExtensionKind { strict, weak };

std::vector<Surjection> extensions(const QuasiPoset& t, ExtensionKind kind) {
    std::size_t n = t.class_count();
    auto leq = leq_matrix(t);
    std::vector<Surjection> out;
    if (n == 0) {
        out.push_back(Surjection{});
        return out;
    }
    std::vector<int> cur(n);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == n) {
            Surjection f{cur};
            if (!f.is_valid()) return;  // image must be an initial segment
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j || !leq[i][j]) continue;
                    if (kind == ExtensionKind::strict ? cur[i] >= cur[j] : cur[i] > cur[j]) return;
                }
            out.push_back(std::move(f));
            return;
        }
        for (int v = 1; v <= static_cast<int>(n); ++v) {
            cur[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

SetComposition class_fibers(const QuasiPoset& t, const Surjection& f) {
    std::vector<std::vector<Label>> fiber(static_cast<std::size_t>(f.max_value()));
    for (std::size_t i = 0; i < t.class_count(); ++i) {
        auto& dst = fiber[static_cast<std::size_t>(f.images[i] - 1)];
        dst.insert(dst.end(), t.classes[i].begin(), t.classes[i].end());
    }
    return SetComposition(std::move(fiber));
}

}  // namespace

std::vector<Surjection> strict_extensions(const QuasiPoset& t) {
    return extensions(t, ExtensionKind::strict);
}

std::vector<Surjection> weak_extensions(const QuasiPoset& t) {
    return extensions(t, ExtensionKind::weak);
}

LinComb<SetComposition> phi_ehr(const QuasiPoset& t) {
    LinComb<SetComposition> out;
    for (const auto& f : strict_extensions(t)) out.add_term(class_fibers(t, f), 1);
    return out;
}

LinComb<SetComposition> phi_ehr_q(const QuasiPoset& t, const Rational& q) {
    if (q == 0) return phi_hom_top(t, std::vector<Rational>(t.ground().size() + 2, Rational(1)));
    Rational qcl = 1;
    for (std::size_t i = 0; i < t.class_count(); ++i) qcl *= q;
    return theta_q(phi_ehr(t) * qcl, Rational(1) / q);
}

std::int64_t heap_order_count(const QuasiPoset& t) {
    std::int64_t count = 0;
    for (const auto& f : strict_extensions(t))
        if (static_cast<std::size_t>(f.max_value()) == t.class_count()) ++count;
    return count;
}

Rational lambda_ho(const QuasiPoset& t) {
    return Rational(heap_order_count(t)) / Rational(factorial(t.class_count()));
}

QuasiPoset joint_product(const QuasiPoset& s, const QuasiPoset& t) {
    QuasiPoset u = disjoint_union(s, t);
    // The union constructor may have reordered classes; recover which of u's
    // classes came from s by ground membership.
    LabelSet gs = s.ground();
    std::size_t n = u.class_count();
    std::vector<std::pair<std::size_t, std::size_t>> rel = u.covers;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && gs.count(u.classes[i].front()) && !gs.count(u.classes[j].front()))
                rel.push_back({i, j});
    return QuasiPoset(u.classes, std::move(rel));
}

LinComb<SetComposition> phi_hom_top(const QuasiPoset& t, const std::vector<Rational>& u) {
    Rational scale = 1;
    for (const auto& c : t.classes) {
        if (c.size() >= u.size())
            throw std::invalid_argument("weight sequence shorter than largest class");
        scale *= u[c.size()];
    }
    LinComb<SetComposition> out;
    for (const auto& e : compatible_equivalences(t))
        out += phi_ehr(quotient(t, e)) * lambda_ho(restriction(t, e));
    return out * scale;
}

std::vector<QuasiPoset> top_components(const QuasiPoset& t) {
    std::vector<std::size_t> parent(t.class_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [a, b] : t.covers) parent[find(a)] = find(b);
    std::map<std::size_t, LabelSet> grounds;
    for (std::size_t v = 0; v < t.class_count(); ++v)
        grounds[find(v)].insert(t.classes[v].begin(), t.classes[v].end());
    std::vector<QuasiPoset> out;
    for (const auto& [root, I] : grounds) out.push_back(*restrict_topology(t, I));
    return out;
}

LinComb<QuasiPoset> gamma_top(const QuasiPoset& t) {
    LinComb<QuasiPoset> out;
    for (const auto& e : compatible_equivalences(t)) out.add_term(quotient(t, e), 1);
    return out;
}

LinComb<QuasiPoset> gamma_top_inv(const QuasiPoset& t) {
    LinComb<QuasiPoset> out;
    for (const auto& e : compatible_equivalences(t)) {
        Rational sign = ((e.class_count() + t.class_count()) % 2 == 0) ? 1 : -1;
        out.add_term(quotient(t, e), sign);
    }
    return out;
}

}  // namespace halg
