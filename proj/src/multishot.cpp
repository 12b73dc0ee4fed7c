#include "orbitcodes/multishot.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace orbitcodes {

int extended_distance(std::span<const Subspace> u, std::span<const Subspace> v) {
    if (u.size() != v.size()) throw std::invalid_argument("tuples of different lengths");
    int total = 0;
    for (size_t i = 0; i < u.size(); ++i) total += subspace_distance(u[i], v[i]);
    return total;
}

const std::vector<TreeNode>& PartitionTree::level(int l) const {
    if (l < 0 || l > depth()) throw std::invalid_argument("level out of range");
    return levels_[static_cast<size_t>(l)];
}

int PartitionTree::child_count(int l) const {
    if (l < 1 || l > depth()) throw std::invalid_argument("level out of range");
    return child_counts_[static_cast<size_t>(l)];
}

const FiniteGroup& PartitionTree::level_group(int l) const {
    if (l < 1 || l > depth()) throw std::invalid_argument("level out of range");
    return groups_[static_cast<size_t>(l) - 1];
}

int PartitionTree::class_of(int level, int node) const {
    if (level < 1 || level > depth()) throw std::invalid_argument("level out of range");
    int cur = node;
    for (int l = level; l > 1; --l) cur = levels_[static_cast<size_t>(l)][static_cast<size_t>(cur)].parent;
    return cur;
}

int PartitionTree::node_at_path(std::span<const int> path) const {
    if (static_cast<int>(path.size()) > depth()) throw std::invalid_argument("path too deep");
    int node = 0;
    for (size_t l = 1; l <= path.size(); ++l) {
        const int p = child_count(static_cast<int>(l));
        const int a = path[l - 1];
        if (a < 0 || a >= p) throw std::invalid_argument("edge label out of range");
        node = node * p + a;
    }
    return node;
}

const Subspace& PartitionTree::representative(int level, int node) const {
    return this->level(level)[static_cast<size_t>(node)].members.front();
}

namespace {

// Orbit of a point under the group's generators, restricted membership
// implied by closure of the alphabet.
std::vector<Subspace> generator_orbit(const FiniteGroup& g, const Subspace& start) {
    std::set<Subspace> orbit{start};
    std::vector<Subspace> frontier{start};
    while (!frontier.empty()) {
        std::vector<Subspace> next;
        for (const Subspace& v : frontier)
            for (const GroupElement& gen : g.generators()) {
                Subspace w = act(gen, v);
                if (orbit.insert(w).second) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return std::vector<Subspace>(orbit.begin(), orbit.end());
}

// Minimum pairwise distance inside one set, chunked across threads.
std::optional<int> min_pairwise(const std::vector<Subspace>& words, int threads) {
    if (words.size() < 2) return std::nullopt;
    const size_t n = words.size();
    if (threads < 2 || n < 64) {
        int best = -1;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                const int d = subspace_distance(words[i], words[j]);
                if (best < 0 || d < best) best = d;
            }
        return best;
    }
    std::vector<int> partial(static_cast<size_t>(threads), -1);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            int best = -1;
            for (size_t i = static_cast<size_t>(t); i < n; i += static_cast<size_t>(threads))
                for (size_t j = i + 1; j < n; ++j) {
                    const int d = subspace_distance(words[i], words[j]);
                    if (best < 0 || d < best) best = d;
                }
            partial[static_cast<size_t>(t)] = best;
        });
    }
    for (auto& th : pool) th.join();
    int best = -1;
    for (int b : partial)
        if (b >= 0 && (best < 0 || b < best)) best = b;
    return best < 0 ? std::nullopt : std::optional<int>(best);
}

}  // namespace

std::vector<std::vector<Subspace>> group_orbits(std::vector<Subspace> alphabet,
                                                const FiniteGroup& g) {
    if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

    std::set<Subspace> universe(alphabet.begin(), alphabet.end());
    for (const Subspace& v : alphabet)
        for (const GroupElement& gen : g.generators())
            if (!universe.count(act(gen, v)))
                throw std::invalid_argument("alphabet is not closed under the group action");

    std::vector<std::vector<Subspace>> orbits;
    std::set<Subspace> remaining(alphabet.begin(), alphabet.end());
    for (const Subspace& v : alphabet) {
        if (!remaining.count(v)) continue;
        std::vector<Subspace> orbit = generator_orbit(g, v);
        for (const Subspace& w : orbit) remaining.erase(w);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

PartitionTree build_alphabet_partition(std::vector<Subspace> alphabet, const FiniteGroup& g,
                                       const std::vector<FiniteGroup>& series) {
    if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

    std::set<Subspace> universe(alphabet.begin(), alphabet.end());
    for (const Subspace& v : alphabet)
        for (const GroupElement& gen : g.generators())
            if (!universe.count(act(gen, v)))
                throw std::invalid_argument("alphabet is not closed under the group action");

    PartitionTree tree;
    tree.groups_.push_back(g);
    for (const FiniteGroup& s : series) {
        if (!tree.groups_.back().contains_all(s) || s.size() >= tree.groups_.back().size())
            throw std::invalid_argument("series must be strictly nested subgroups");
        tree.groups_.push_back(s);
    }

    tree.levels_.push_back({TreeNode{-1, alphabet}});
    tree.child_counts_.push_back(0);  // unused slot for level 0

    for (size_t gi = 0; gi < tree.groups_.size(); ++gi) {
        const FiniteGroup& group = tree.groups_[gi];
        const std::vector<TreeNode>& prev = tree.levels_.back();
        std::vector<TreeNode> next;
        std::size_t orbit_size = 0;
        int per_node = -1;
        for (size_t pn = 0; pn < prev.size(); ++pn) {
            std::set<Subspace> remaining(prev[pn].members.begin(), prev[pn].members.end());
            int count_here = 0;
            // members are sorted, so orbits come out ordered by least element
            for (const Subspace& v : prev[pn].members) {
                if (!remaining.count(v)) continue;
                std::vector<Subspace> orbit = generator_orbit(group, v);
                for (const Subspace& w : orbit) remaining.erase(w);
                if (orbit_size == 0) orbit_size = orbit.size();
                if (orbit.size() != orbit_size)
                    throw std::invalid_argument(
                        "orbit sizes differ (" + std::to_string(orbit.size()) + " vs " +
                        std::to_string(orbit_size) +
                        "): unequal stabilizers make the partition non-nested");
                next.push_back(TreeNode{static_cast<int>(pn), std::move(orbit)});
                ++count_here;
            }
            if (per_node < 0) per_node = count_here;
            if (count_here != per_node)
                throw std::invalid_argument("nodes split into different child counts");
        }
        tree.levels_.push_back(std::move(next));
        tree.child_counts_.push_back(per_node);
    }
    return tree;
}

LevelDistanceReport intrasubset_distance(const PartitionTree& tree, int level, int threads) {
    const std::vector<TreeNode>& nodes = tree.level(level);
    const long long subset_size = static_cast<long long>(nodes.front().members.size());
    LevelDistanceReport report;
    report.naive_count =
        static_cast<long long>(nodes.size()) * (subset_size * (subset_size - 1) / 2);

    if (subset_size == 1) return report;  // singleton level: unbounded, nothing to count

    if (level == 0) {
        // the root has no group structure above it; both scenarios scan
        report.fast_count = report.naive_count;
        report.value = min_pairwise(nodes.front().members, threads);
        return report;
    }

    // deepest nontrivial group of the chain drives the reduced scheme
    const FiniteGroup* deepest = nullptr;
    for (int l = tree.depth(); l >= 1 && !deepest; --l)
        if (tree.level_group(l).size() > 1) deepest = &tree.level_group(l);

    const FiniteGroup& level_grp = tree.level_group(level);
    int best = -1;
    std::set<int> classes_done;
    for (size_t node = 0; node < nodes.size(); ++node) {
        const int cls = tree.class_of(level, static_cast<int>(node));
        if (!classes_done.insert(cls).second) continue;  // congruent to an earlier node

        std::optional<int> node_min;
        if (deepest == nullptr || deepest->size() >= level_grp.size()) {
            // no proper refinement available: full profile from the least member
            const std::vector<Subspace>& m = nodes[node].members;
            int local = -1;
            for (size_t j = 1; j < m.size(); ++j) {
                const int d = subspace_distance(m.front(), m[j]);
                if (local < 0 || d < local) local = d;
            }
            report.fast_count += static_cast<long long>(m.size()) - 1;
            node_min = local;
        } else {
            OrbitCode oc = OrbitCode::generate(level_grp, nodes[node].members.front());
            if (oc.size() != nodes[node].members.size())
                throw std::logic_error("node is not the expected orbit");
            FastMinDistance fast = fast_min_distance(oc, *deepest);
            report.fast_count += fast.computations;
            node_min = fast.min_distance;
        }
        if (node_min && (best < 0 || *node_min < best)) best = *node_min;
    }
    if (best >= 0) report.value = best;
    return report;
}

std::optional<int> intrasubset_distance_exhaustive(const PartitionTree& tree, int level,
                                                   int threads) {
    std::optional<int> best;
    for (const TreeNode& node : tree.level(level)) {
        std::optional<int> m = min_pairwise(node.members, threads);
        if (m && (!best || *m < *best)) best = m;
    }
    return best;
}

ComponentCode::ComponentCode(int alphabet, int length, std::vector<std::vector<int>> words)
    : alphabet_(alphabet), length_(length), words_(std::move(words)) {
    if (alphabet < 1 || length < 1) throw std::invalid_argument("bad component code shape");
    if (words_.empty()) throw std::invalid_argument("component code needs at least one word");
    for (const auto& w : words_) {
        if (static_cast<int>(w.size()) != length)
            throw std::invalid_argument("component word of wrong length");
        for (int s : w)
            if (s < 0 || s >= alphabet)
                throw std::invalid_argument("component symbol outside the alphabet");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());

    if (words_.size() > 1) {
        int best = length;
        for (size_t i = 0; i < words_.size(); ++i)
            for (size_t j = i + 1; j < words_.size(); ++j) {
                int d = 0;
                for (int t = 0; t < length; ++t)
                    if (words_[i][static_cast<size_t>(t)] != words_[j][static_cast<size_t>(t)]) ++d;
                best = std::min(best, d);
            }
        min_hamming_ = best;
    }
}

ComponentCode ComponentCode::full(int alphabet, int length, std::size_t cap) {
    long long total = 1;
    for (int i = 0; i < length; ++i) {
        total *= alphabet;
        if (total > static_cast<long long>(cap))
            throw std::runtime_error("full component code exceeds cap");
    }
    std::vector<std::vector<int>> words;
    words.reserve(static_cast<size_t>(total));
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> w(static_cast<size_t>(length));
        long long v = idx;
        for (int t = length - 1; t >= 0; --t) {
            w[static_cast<size_t>(t)] = static_cast<int>(v % alphabet);
            v /= alphabet;
        }
        words.push_back(std::move(w));
    }
    return ComponentCode(alphabet, length, std::move(words));
}

ComponentCode ComponentCode::repetition(int alphabet, int length) {
    std::vector<std::vector<int>> words;
    for (int a = 0; a < alphabet; ++a)
        words.emplace_back(static_cast<size_t>(length), a);
    return ComponentCode(alphabet, length, std::move(words));
}

ComponentCode ComponentCode::single_parity(int alphabet, int length, std::size_t cap) {
    if (length < 2) throw std::invalid_argument("parity code needs length >= 2");
    ComponentCode all = full(alphabet, length, cap * static_cast<std::size_t>(alphabet));
    std::vector<std::vector<int>> words;
    for (const auto& w : all.words()) {
        int sum = 0;
        for (int s : w) sum = (sum + s) % alphabet;
        if (sum == 0) words.push_back(w);
    }
    return ComponentCode(alphabet, length, std::move(words));
}

ComponentCode ComponentCode::from_words(int alphabet, std::vector<std::vector<int>> words) {
    const int length = words.empty() ? 0 : static_cast<int>(words.front().size());
    return ComponentCode(alphabet, length, std::move(words));
}

ComponentCode ComponentCode::named(const std::string& name, int alphabet, int length) {
    if (name == "full") return full(alphabet, length);
    if (name == "repetition") return repetition(alphabet, length);
    if (name == "parity") return single_parity(alphabet, length);
    throw std::invalid_argument("unknown component code '" + name +
                                "' (expected full, repetition or parity)");
}

ComponentValidation validate_component_codes(const PartitionTree& tree,
                                             const std::vector<ComponentCode>& components,
                                             int design_distance) {
    if (design_distance < 1) throw std::invalid_argument("design distance must be >= 1");

    // L' = first level whose intrasubset distance reaches d (singleton
    // levels count as unbounded); level values only grow along refinements.
    std::vector<LevelDistanceReport> reports;
    int l_prime = -1;
    for (int l = 0; l <= tree.depth() && l_prime < 0; ++l) {
        reports.push_back(intrasubset_distance(tree, l));
        const LevelDistanceReport& r = reports.back();
        if (!r.value.has_value() || *r.value >= design_distance) l_prime = l;
    }
    if (l_prime < 0)
        throw std::invalid_argument("design distance unreachable at every level of the tree");

    ComponentValidation v;
    v.l_prime = l_prime;
    if (static_cast<int>(components.size()) != l_prime)
        throw std::invalid_argument("expected exactly " + std::to_string(l_prime) +
                                    " component codes, got " + std::to_string(components.size()));

    v.ok = true;
    for (int l = 1; l <= l_prime; ++l) {
        const ComponentCode& comp = components[static_cast<size_t>(l - 1)];
        if (comp.alphabet() != tree.child_count(l))
            throw std::invalid_argument("component " + std::to_string(l) + " alphabet " +
                                        std::to_string(comp.alphabet()) + " != child count " +
                                        std::to_string(tree.child_count(l)));
        if (comp.length() != components.front().length())
            throw std::invalid_argument("component codes of differing lengths");

        const std::optional<int>& prev = reports[static_cast<size_t>(l - 1)].value;
        const std::optional<int> dh = comp.min_hamming();
        const bool satisfied =
            !prev.has_value() || !dh.has_value() || (*prev) * (*dh) >= design_distance;
        std::string line = "level " + std::to_string(l) + ": d_S=" +
                           (prev ? std::to_string(*prev) : "unbounded") + " * d_H=" +
                           (dh ? std::to_string(*dh) : "unbounded") +
                           (satisfied ? " >= " : " < ") + std::to_string(design_distance);
        v.level_reports.push_back(std::move(line));
        if (!satisfied) v.ok = false;
    }
    return v;
}

MultishotCode assemble(const PartitionTree& tree, const std::vector<ComponentCode>& components,
                       int design_distance) {
    const ComponentValidation v = validate_component_codes(tree, components, design_distance);
    if (!v.ok)
        throw std::invalid_argument("component codes do not satisfy the design distance");

    MultishotCode code;
    code.design_distance_ = design_distance;
    code.m_ = components.empty() ? 1 : components.front().length();
    if (components.empty()) {
        // L' = 0: the whole alphabet already satisfies d; one-shot words
        for (const Subspace& s : tree.level(0).front().members) code.codewords_.push_back({s});
        return code;
    }

    long long total = 1;
    for (const ComponentCode& c : components) {
        total *= static_cast<long long>(c.words().size());
        if (total > 200000) throw std::runtime_error("assembled code exceeds cap");
    }

    const int l_prime = v.l_prime;
    std::vector<size_t> idx(components.size(), 0);
    for (long long count = 0; count < total; ++count) {
        std::vector<Subspace> word;
        word.reserve(static_cast<size_t>(code.m_));
        for (int col = 0; col < code.m_; ++col) {
            std::vector<int> path(static_cast<size_t>(l_prime));
            for (int l = 0; l < l_prime; ++l)
                path[static_cast<size_t>(l)] =
                    components[static_cast<size_t>(l)].words()[idx[static_cast<size_t>(l)]]
                               [static_cast<size_t>(col)];
            word.push_back(tree.representative(l_prime, tree.node_at_path(path)));
        }
        code.codewords_.push_back(std::move(word));

        for (size_t l = components.size(); l-- > 0;) {
            if (++idx[l] < components[l].words().size()) break;
            idx[l] = 0;
        }
    }
    return code;
}

int MultishotCode::min_extended_distance() const {
    if (codewords_.size() < 2)
        throw std::invalid_argument("minimum distance needs at least two codewords");
    int best = -1;
    for (size_t i = 0; i < codewords_.size(); ++i)
        for (size_t j = i + 1; j < codewords_.size(); ++j) {
            const int d = extended_distance(codewords_[i], codewords_[j]);
            if (best < 0 || d < best) best = d;
        }
    return best;
}

}  // namespace orbitcodes
