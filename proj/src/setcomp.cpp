#include "halg/setcomp.hpp"

#include <algorithm>
#include <stdexcept>

namespace halg {

SetComposition::SetComposition(std::vector<std::vector<Label>> b) : blocks(std::move(b)) {
    LabelSet seen;
    for (auto& block : blocks) {
        if (block.empty()) throw std::invalid_argument("empty block in set composition");
        std::sort(block.begin(), block.end());
        for (const auto& l : block) {
            if (l.empty()) throw std::invalid_argument("empty label");
            if (!seen.insert(l).second)
                throw std::invalid_argument("duplicate label in set composition: " + l);
        }
    }
}

LabelSet SetComposition::ground() const {
    LabelSet g;
    for (const auto& block : blocks) g.insert(block.begin(), block.end());
    return g;
}

int Surjection::max_value() const {
    int m = 0;
    for (int v : images) m = std::max(m, v);
    return m;
}

bool Surjection::is_valid() const {
    int m = max_value();
    std::vector<bool> hit(static_cast<std::size_t>(m), false);
    for (int v : images) {
        if (v < 1 || v > m) return false;
        hit[static_cast<std::size_t>(v - 1)] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

namespace {

void qsh_rec(std::size_t k, std::size_t l, std::size_t i, std::size_t j, int level,
             std::vector<int>& left, std::vector<int>& right, std::vector<Surjection>& out) {
    if (i == k && j == l) {
        Surjection s;
        s.images = left;
        s.images.insert(s.images.end(), right.begin(), right.end());
        out.push_back(std::move(s));
        return;
    }
    if (i < k) {
        left[i] = level;
        qsh_rec(k, l, i + 1, j, level + 1, left, right, out);
    }
    if (j < l) {
        right[j] = level;
        qsh_rec(k, l, i, j + 1, level + 1, left, right, out);
    }
    if (i < k && j < l) {
        left[i] = level;
        right[j] = level;
        qsh_rec(k, l, i + 1, j + 1, level + 1, left, right, out);
    }
}

// Merges blocks of a (possibly split) sequence according to a surjection:
// output block m is the union of all input blocks sent to m.
SetComposition apply_surjection(const std::vector<std::vector<Label>>& blocks,
                                const std::vector<int>& images, int max_value) {
    std::vector<std::vector<Label>> merged(static_cast<std::size_t>(max_value));
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto& dst = merged[static_cast<std::size_t>(images[i] - 1)];
        dst.insert(dst.end(), blocks[i].begin(), blocks[i].end());
    }
    return SetComposition(std::move(merged));
}

void check_disjoint(const SetComposition& a, const SetComposition& b) {
    LabelSet ga = a.ground();
    for (const auto& l : b.ground())
        if (ga.count(l)) throw std::invalid_argument("overlapping ground sets at label " + l);
}

}  // namespace

std::vector<Surjection> enumerate_qsh(std::size_t k, std::size_t l) {
    std::vector<Surjection> out;
    std::vector<int> left(k), right(l);
    qsh_rec(k, l, 0, 0, 1, left, right, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Surjection, Surjection>> enumerate_cont(std::size_t k) {
    std::vector<std::pair<Surjection, Surjection>> out;
    if (k == 0) {
        out.push_back({Surjection{}, Surjection{}});
        return out;
    }
    // Nondecreasing surjections {1..k} -> {1..p} correspond to subsets of the
    // k-1 ascent positions.
    std::vector<Surjection> sigmas;
    for (std::size_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        Surjection s;
        s.images.resize(k);
        int level = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (i > 0 && (mask >> (i - 1)) & 1u) ++level;
            s.images[i] = level;
        }
        sigmas.push_back(std::move(s));
    }
    // All surjections tau onto an initial segment, by brute force over value
    // assignments followed by a surjectivity filter.
    std::vector<Surjection> taus;
    std::vector<int> cur(k);
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == k) {
            Surjection t{cur};
            if (t.is_valid()) taus.push_back(std::move(t));
            return;
        }
        for (int v = 1; v <= static_cast<int>(k); ++v) {
            cur[pos] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    // Pair each nondecreasing sigma with every compatible tau.
    for (const auto& sigma : sigmas) {
        for (const auto& tau : taus) {
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i)
                for (std::size_t j = i + 1; j < k && ok; ++j)
                    if (sigma.images[i] == sigma.images[j] && tau.images[i] >= tau.images[j])
                        ok = false;
            if (ok) out.push_back({sigma, tau});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

LinComb<SetComposition> quasi_shuffle(const SetComposition& a, const SetComposition& b) {
    check_disjoint(a, b);
    std::vector<std::vector<Label>> concat = a.blocks;
    concat.insert(concat.end(), b.blocks.begin(), b.blocks.end());
    LinComb<SetComposition> out;
    for (const auto& s : enumerate_qsh(a.length(), b.length()))
        out.add_term(apply_surjection(concat, s.images, s.max_value()), 1);
    return out;
}

LinComb<SetComposition> shuffle(const SetComposition& a, const SetComposition& b) {
    check_disjoint(a, b);
    std::vector<std::vector<Label>> concat = a.blocks;
    concat.insert(concat.end(), b.blocks.begin(), b.blocks.end());
    LinComb<SetComposition> out;
    std::size_t n = a.length() + b.length();
    for (const auto& s : enumerate_qsh(a.length(), b.length()))
        if (static_cast<std::size_t>(s.max_value()) == n)
            out.add_term(apply_surjection(concat, s.images, s.max_value()), 1);
    return out;
}

std::optional<std::pair<SetComposition, SetComposition>> deconcat(const SetComposition& c,
                                                                  const LabelSet& I) {
    LabelSet g = c.ground();
    for (const auto& l : I)
        if (!g.count(l)) throw std::invalid_argument("split set not contained in ground: " + l);
    LabelSet prefix;
    for (std::size_t p = 0; p <= c.length(); ++p) {
        if (prefix == I) {
            SetComposition left, right;
            left.blocks.assign(c.blocks.begin(), c.blocks.begin() + static_cast<long>(p));
            right.blocks.assign(c.blocks.begin() + static_cast<long>(p), c.blocks.end());
            return std::make_pair(std::move(left), std::move(right));
        }
        if (p < c.length()) prefix.insert(c.blocks[p].begin(), c.blocks[p].end());
    }
    return std::nullopt;
}

LinComb<std::vector<SetComposition>> iterated_split(const LinComb<SetComposition>& x,
                                                    const std::vector<LabelSet>& parts) {
    LinComb<std::vector<SetComposition>> out;
    for (const auto& [c, coeff] : x.terms()) {
        // Validate that parts partition the ground set of this term.
        LabelSet all;
        std::size_t total = 0;
        for (const auto& part : parts) {
            total += part.size();
            all.insert(part.begin(), part.end());
        }
        if (all != c.ground() || total != all.size())
            throw std::invalid_argument("parts do not partition the ground set");
        std::vector<SetComposition> legs;
        SetComposition rest = c;
        bool dead = false;
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            auto cut = deconcat(rest, parts[i]);
            if (!cut) {
                dead = true;
                break;
            }
            legs.push_back(cut->first);
            rest = cut->second;
        }
        if (dead) continue;
        legs.push_back(rest);
        if (parts.empty()) legs.clear();
        out.add_term(legs, coeff);
    }
    return out;
}

namespace {

// Shared cut-point machinery: for each subset of the k-1 cut positions,
// reports the segment boundaries [0 = b_0 < b_1 < ... < b_p = k].
template <class F>
void for_each_cut_set(std::size_t k, F&& f) {
    if (k == 0) {
        f(std::vector<std::size_t>{0});
        return;
    }
    for (std::size_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<std::size_t> bounds{0};
        for (std::size_t i = 1; i < k; ++i)
            if ((mask >> (i - 1)) & 1u) bounds.push_back(i);
        bounds.push_back(k);
        f(bounds);
    }
}

SetComposition merge_segments(const SetComposition& c, const std::vector<std::size_t>& bounds) {
    std::vector<std::vector<Label>> merged;
    for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
        std::vector<Label> block;
        for (std::size_t i = bounds[s]; i < bounds[s + 1]; ++i)
            block.insert(block.end(), c.blocks[i].begin(), c.blocks[i].end());
        if (!block.empty()) merged.push_back(std::move(block));
    }
    return SetComposition(std::move(merged));
}

SetComposition segment(const SetComposition& c, std::size_t from, std::size_t to) {
    SetComposition s;
    s.blocks.assign(c.blocks.begin() + static_cast<long>(from),
                    c.blocks.begin() + static_cast<long>(to));
    return s;
}

}  // namespace

LinComb<TensorKey<SetComposition, SetComposition>> internal_delta(const SetComposition& c) {
    LinComb<TensorKey<SetComposition, SetComposition>> out;
    if (c.length() == 0) {
        out.add_term({SetComposition{}, SetComposition{}}, 1);
        return out;
    }
    for_each_cut_set(c.length(), [&](const std::vector<std::size_t>& bounds) {
        SetComposition left = merge_segments(c, bounds);
        LinComb<SetComposition> right(SetComposition{});
        for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
            SetComposition seg = segment(c, bounds[s], bounds[s + 1]);
            right = bilinear_extend(
                [](const SetComposition& a, const SetComposition& b) { return quasi_shuffle(a, b); },
                right, LinComb<SetComposition>(seg));
        }
        for (const auto& [r, coeff] : right.terms()) out.add_term({left, r}, coeff);
    });
    return out;
}

LinComb<TensorKey<SetComposition, SetComposition>> internal_delta_via_cont(const SetComposition& c) {
    LinComb<TensorKey<SetComposition, SetComposition>> out;
    for (const auto& [sigma, tau] : enumerate_cont(c.length())) {
        SetComposition left = apply_surjection(c.blocks, sigma.images, sigma.max_value());
        SetComposition right = apply_surjection(c.blocks, tau.images, tau.max_value());
        out.add_term({left, right}, 1);
    }
    return out;
}

Rational eps_prime(const SetComposition& c) {
    return (c.length() <= 1) ? Rational(1) : Rational(0);
}

LinComb<SetComposition> theta_q(const SetComposition& c, const Rational& q) {
    LinComb<SetComposition> out;
    if (c.length() == 0) return LinComb<SetComposition>(c);
    for_each_cut_set(c.length(), [&](const std::vector<std::size_t>& bounds) {
        Rational w = 1;
        for (std::size_t s = 0; s + 1 < bounds.size(); ++s) w *= hilbert(bounds[s + 1] - bounds[s], q);
        out.add_term(merge_segments(c, bounds), w);
    });
    return out;
}

LinComb<SetComposition> theta_q(const LinComb<SetComposition>& x, const Rational& q) {
    LinComb<SetComposition> out;
    for (const auto& [c, coeff] : x.terms()) out += theta_q(c, q) * coeff;
    return out;
}

LinComb<SetComposition> rho_iso(const SetComposition& c) {
    LinComb<SetComposition> out;
    if (c.length() == 0) return LinComb<SetComposition>(c);
    for_each_cut_set(c.length(), [&](const std::vector<std::size_t>& bounds) {
        Rational w = 1;
        for (std::size_t s = 0; s + 1 < bounds.size(); ++s)
            w /= Rational(factorial(bounds[s + 1] - bounds[s]));
        out.add_term(merge_segments(c, bounds), w);
    });
    return out;
}

std::string setcomp_to_text(const SetComposition& c) {
    std::string out = "[";
    for (std::size_t i = 0; i < c.blocks.size(); ++i) {
        if (i) out += ",";
        out += "[";
        for (std::size_t j = 0; j < c.blocks[i].size(); ++j) {
            if (j) out += ",";
            out += "\"" + c.blocks[i][j] + "\"";
        }
        out += "]";
    }
    out += "]";
    return out;
}

}  // namespace halg
