#include "geodesic/permgrp.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace geodesic {

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= size_t(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

Perm::Perm(int degree) : img_(degree) {
    std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
        require(x >= 0 && x < int(img_.size()) && !seen[x], ErrorKind::NonBijectiveImage,
                "image list is not a bijection");
        seen[x] = 1;
    }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            require(from >= 0 && from < degree, ErrorKind::PointOutOfRange, "cycle point out of range");
            require(img[from] == from, ErrorKind::NonBijectiveImage, "cycles are not disjoint");
            img[from] = to;
        }
    }
    return Perm(std::move(img));
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::operator*(const Perm& o) const {
    require(degree() == o.degree(), ErrorKind::DegreeMismatch, "composing permutations of unequal degree");
    std::vector<int> r(img_.size());
    for (int i = 0; i < degree(); ++i) r[i] = o.img_[img_[i]];
    Perm p;
    p.img_ = std::move(r);
    return p;
}

Perm Perm::inverse() const {
    std::vector<int> r(img_.size());
    for (int i = 0; i < degree(); ++i) r[img_[i]] = i;
    Perm p;
    p.img_ = std::move(r);
    return p;
}

int Perm::order() const {
    int64_t ord = 1;
    std::vector<char> seen(img_.size(), 0);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        do {
            seen[j] = 1;
            j = img_[j];
            ++len;
        } while (j != i);
        ord = std::lcm(ord, int64_t(len));
    }
    return int(ord);
}

std::string Perm::to_cycle_string() const {
    std::ostringstream os;
    std::vector<char> seen(img_.size(), 0);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) {
            seen[i] = 1;
            continue;
        }
        os << '(';
        int j = i;
        bool first = true;
        do {
            seen[j] = 1;
            if (!first) os << ',';
            os << (j + 1);
            first = false;
            j = img_[j];
        } while (j != i);
        os << ')';
        any = true;
    }
    return any ? os.str() : "()";
}

// ---------------------------------------------------------------------------
// Stabilizer chain (deterministic Schreier-Sims)

StabChain::StabChain(int degree, const std::vector<Perm>& gens,
                     const std::vector<int>& base_prefix)
    : degree_(degree) {
    std::vector<Perm> clean;
    for (const auto& g : gens) {
        require(g.degree() == degree, ErrorKind::DegreeMismatch, "generator degree mismatch");
        if (!g.is_identity()) clean.push_back(g);
    }
    build(clean, base_prefix);
}

void StabChain::append_base_point(int pt) {
    base_.push_back(pt);
    gens_.emplace_back();
    orbit_.emplace_back();
    orbit_pos_.emplace_back(degree_, 0);
    trans_.emplace_back(degree_);
}

void StabChain::recompute_orbit(size_t level) {
    auto& orb = orbit_[level];
    auto& pos = orbit_pos_[level];
    auto& tr = trans_[level];
    orb.clear();
    std::fill(pos.begin(), pos.end(), 0);
    int b = base_[level];
    orb.push_back(b);
    pos[b] = 1;
    tr[b] = Perm::identity(degree_);
    for (size_t head = 0; head < orb.size(); ++head) {
        int gamma = orb[head];
        for (const auto& s : gens_[level]) {
            int delta = s(gamma);
            if (!pos[delta]) {
                orb.push_back(delta);
                pos[delta] = int(orb.size());
                tr[delta] = tr[gamma] * s;
            }
        }
    }
}

void StabChain::build(const std::vector<Perm>& initial_gens, const std::vector<int>& base_prefix) {
    for (int pt : base_prefix) {
        require(pt >= 0 && pt < degree_, ErrorKind::PointOutOfRange, "base point out of range");
        if (std::find(base_.begin(), base_.end(), pt) == base_.end()) append_base_point(pt);
    }
    // every generator must move some base point
    for (const auto& g : initial_gens) {
        bool moves = false;
        for (int b : base_)
            if (g(b) != b) { moves = true; break; }
        if (!moves) {
            for (int x = 0; x < degree_; ++x)
                if (g(x) != x) { append_base_point(x); break; }
        }
    }
    if (base_.empty()) {
        // trivial group; keep a one-point chain so levels() == 0 semantics hold
        return;
    }
    // distribute generators over levels
    for (const auto& g : initial_gens) {
        gens_[0].push_back(g);
        for (size_t l = 1; l < base_.size(); ++l) {
            if (g(base_[l - 1]) == base_[l - 1])
                gens_[l].push_back(g);
            else
                break;
        }
    }
    for (size_t l = 0; l < base_.size(); ++l) recompute_orbit(l);

    // Holt-style deterministic Schreier-Sims
    size_t i = base_.size();
    while (i >= 1) {
        size_t level = i - 1;
        bool complete = true;
        for (size_t oi = 0; oi < orbit_[level].size() && complete; ++oi) {
            int beta = orbit_[level][oi];
            for (size_t si = 0; si < gens_[level].size() && complete; ++si) {
                const Perm& x = gens_[level][si];
                const Perm& u_beta = trans_[level][beta];
                const Perm& u_img = trans_[level][x(beta)];
                Perm cand = u_beta * x;
                if (cand == u_img) continue;
                Perm g = cand * u_img.inverse(); // Schreier generator, fixes base[0..level]
                // strip from level+1
                Perm h = g;
                size_t j = level + 1;
                for (; j < base_.size(); ++j) {
                    int delta = h(base_[j]);
                    if (!orbit_pos_[j][delta]) break;
                    h = h * trans_[j][delta].inverse();
                }
                if (h.is_identity()) continue;
                if (j == base_.size()) {
                    int moved = -1;
                    for (int pt = 0; pt < degree_; ++pt)
                        if (h(pt) != pt) { moved = pt; break; }
                    append_base_point(moved);
                }
                for (size_t l = level + 1; l <= j; ++l) {
                    gens_[l].push_back(h);
                    recompute_orbit(l);
                }
                i = j + 1;
                complete = false;
            }
        }
        if (complete) --i;
    }
}

BigInt StabChain::order() const {
    return order_from(0);
}

BigInt StabChain::order_from(size_t level) const {
    BigInt n = 1;
    for (size_t l = level; l < orbit_.size(); ++l) n *= BigInt(orbit_[l].size());
    return n;
}

size_t StabChain::basic_orbit_size(size_t level) const {
    return level < orbit_.size() ? orbit_[level].size() : 1;
}

std::vector<Perm> StabChain::level_gens(size_t level) const {
    if (level >= gens_.size()) return {};
    return gens_[level];
}

Perm StabChain::sift(const Perm& g) const {
    Perm h = g;
    for (size_t l = 0; l < base_.size(); ++l) {
        int delta = h(base_[l]);
        if (!orbit_pos_[l][delta]) return h;
        h = h * trans_[l][delta].inverse();
    }
    return h;
}

bool StabChain::contains(const Perm& g) const {
    require(g.degree() == degree_, ErrorKind::DegreeMismatch, "membership test degree mismatch");
    return sift(g).is_identity();
}

std::optional<Perm> StabChain::transversal(size_t level, int pt) const {
    if (level >= orbit_.size() || !orbit_pos_[level][pt]) return std::nullopt;
    return trans_[level][pt];
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(int degree, std::vector<Perm> generators) : degree_(degree) {
    require(degree >= 1, ErrorKind::DegreeTooSmall, "group degree must be >= 1");
    for (auto& g : generators) {
        require(g.degree() == degree, ErrorKind::DegreeMismatch, "generator degree mismatch");
        if (!g.is_identity()) gens_.push_back(std::move(g));
    }
}

std::shared_ptr<const StabChain> PermGroup::chain() const {
    if (!chain_) chain_ = std::make_shared<const StabChain>(degree_, gens_);
    return chain_;
}

std::shared_ptr<const StabChain> PermGroup::chain_with_prefix(const std::vector<int>& prefix) const {
    return std::make_shared<const StabChain>(degree_, gens_, prefix);
}

BigInt PermGroup::order() const { return chain()->order(); }

bool PermGroup::is_member(const Perm& g) const {
    require(g.degree() == degree_, ErrorKind::DegreeMismatch, "membership test degree mismatch");
    return chain()->contains(g);
}

bool PermGroup::contains_group(const PermGroup& other) const {
    for (const auto& g : other.generators())
        if (!is_member(g)) return false;
    return true;
}

bool PermGroup::same_group(const PermGroup& other) const {
    return degree_ == other.degree_ && contains_group(other) && order() == other.order();
}

std::vector<int> PermGroup::orbit(int x) const {
    require(x >= 0 && x < degree_, ErrorKind::PointOutOfRange, "orbit seed out of range");
    std::vector<int> orb{x};
    std::vector<char> seen(degree_, 0);
    seen[x] = 1;
    for (size_t head = 0; head < orb.size(); ++head)
        for (const auto& g : gens_) {
            int y = g(orb[head]);
            if (!seen[y]) {
                seen[y] = 1;
                orb.push_back(y);
            }
        }
    std::sort(orb.begin(), orb.end());
    return orb;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<char> seen(degree_, 0);
    std::vector<std::vector<int>> out;
    for (int x = 0; x < degree_; ++x) {
        if (seen[x]) continue;
        auto orb = orbit(x);
        for (int y : orb) seen[y] = 1;
        out.push_back(std::move(orb));
    }
    return out;
}

PermGroup PermGroup::point_stabilizer(int x) const {
    return tuple_stabilizer({x});
}

PermGroup PermGroup::tuple_stabilizer(const std::vector<int>& pts) const {
    auto ch = chain_with_prefix(pts);
    return PermGroup(degree_, ch->level_gens(pts.size()));
}

std::vector<std::vector<int>> PermGroup::set_orbit(const std::vector<int>& set,
                                                   size_t orbit_budget) const {
    std::vector<int> start = set;
    std::sort(start.begin(), start.end());
    for (int x : start)
        require(x >= 0 && x < degree_, ErrorKind::PointOutOfRange, "set member out of range");
    std::unordered_map<std::vector<int>, int, VecHash> index;
    std::vector<std::vector<int>> orb{start};
    index.emplace(start, 0);
    for (size_t head = 0; head < orb.size(); ++head) {
        for (const auto& g : gens_) {
            std::vector<int> img(orb[head].size());
            for (size_t t = 0; t < img.size(); ++t) img[t] = g(orb[head][t]);
            std::sort(img.begin(), img.end());
            if (index.emplace(img, int(orb.size())).second) {
                orb.push_back(std::move(img));
                require(orb.size() <= orbit_budget, ErrorKind::BudgetExceeded,
                        "set-orbit exceeds budget");
            }
        }
    }
    return orb;
}

PermGroup PermGroup::setwise_stabilizer(const std::vector<int>& set, size_t orbit_budget) const {
    std::vector<int> start = set;
    std::sort(start.begin(), start.end());
    start.erase(std::unique(start.begin(), start.end()), start.end());
    for (int x : start)
        require(x >= 0 && x < degree_, ErrorKind::PointOutOfRange, "set member out of range");

    // Orbit of the set with a transversal, then Schreier generators.
    std::unordered_map<std::vector<int>, int, VecHash> index;
    std::vector<std::vector<int>> orb{start};
    std::vector<Perm> reps{Perm::identity(degree_)};
    index.emplace(start, 0);
    for (size_t head = 0; head < orb.size(); ++head) {
        for (const auto& g : gens_) {
            std::vector<int> img(orb[head].size());
            for (size_t t = 0; t < img.size(); ++t) img[t] = g(orb[head][t]);
            std::sort(img.begin(), img.end());
            if (index.emplace(img, int(orb.size())).second) {
                orb.push_back(std::move(img));
                reps.push_back(reps[head] * g);
                require(orb.size() <= orbit_budget, ErrorKind::BudgetExceeded,
                        "set-orbit exceeds budget");
            }
        }
    }

    BigInt full = order();
    BigInt target = full / BigInt(orb.size());
    std::vector<Perm> stab_gens;
    std::shared_ptr<const StabChain> stab_chain =
        std::make_shared<const StabChain>(degree_, stab_gens);
    for (size_t head = 0; head < orb.size() && stab_chain->order() < target; ++head) {
        for (const auto& g : gens_) {
            std::vector<int> img(orb[head].size());
            for (size_t t = 0; t < img.size(); ++t) img[t] = g(orb[head][t]);
            std::sort(img.begin(), img.end());
            int j = index.at(img);
            Perm schreier = reps[head] * g * reps[j].inverse();
            if (schreier.is_identity() || stab_chain->contains(schreier)) continue;
            stab_gens.push_back(std::move(schreier));
            stab_chain = std::make_shared<const StabChain>(degree_, stab_gens);
            if (stab_chain->order() >= target) break;
        }
    }
    require(stab_chain->order() == target, ErrorKind::GroupCertificateFailed,
            "orbit-stabilizer identity violated in setwise stabilizer");
    return PermGroup(degree_, stab_gens);
}

TransitivityProfile PermGroup::transitivity_profile() const {
    require(degree_ >= 2, ErrorKind::DegreeTooSmall, "pair tests need degree >= 2");
    TransitivityProfile prof;
    prof.point_orbits = orbits().size();
    prof.transitive = prof.point_orbits == 1;

    int n = degree_;
    // orbits on ordered pairs of distinct points
    {
        std::vector<int> comp(size_t(n) * n, -1);
        size_t count = 0;
        std::vector<std::pair<int, int>> stack;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a == b || comp[size_t(a) * n + b] >= 0) continue;
                int id = int(count++);
                comp[size_t(a) * n + b] = id;
                stack.push_back({a, b});
                while (!stack.empty()) {
                    auto [x, y] = stack.back();
                    stack.pop_back();
                    for (const auto& g : gens_) {
                        int gx = g(x), gy = g(y);
                        if (comp[size_t(gx) * n + gy] < 0) {
                            comp[size_t(gx) * n + gy] = id;
                            stack.push_back({gx, gy});
                        }
                    }
                }
            }
        prof.ordered_pair_orbits = count;
    }
    // orbits on unordered pairs
    {
        std::vector<int> comp(size_t(n) * n, -1);
        size_t count = 0;
        std::vector<std::pair<int, int>> stack;
        auto slot = [n](int x, int y) { return size_t(std::min(x, y)) * n + std::max(x, y); };
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if (comp[slot(a, b)] >= 0) continue;
                int id = int(count++);
                comp[slot(a, b)] = id;
                stack.push_back({a, b});
                while (!stack.empty()) {
                    auto [x, y] = stack.back();
                    stack.pop_back();
                    for (const auto& g : gens_) {
                        int gx = g(x), gy = g(y);
                        if (comp[slot(gx, gy)] < 0) {
                            comp[slot(gx, gy)] = id;
                            stack.push_back({gx, gy});
                        }
                    }
                }
            }
        prof.unordered_pair_orbits = count;
    }
    prof.two_transitive = prof.transitive && prof.ordered_pair_orbits == 1;
    prof.two_homogeneous = prof.transitive && prof.unordered_pair_orbits == 1;

    // primitivity: the minimal block containing {0, b} must be everything
    if (prof.transitive) {
        prof.primitive = true;
        for (int b = 1; b < n && prof.primitive; ++b) {
            std::vector<int> parent(n);
            std::iota(parent.begin(), parent.end(), 0);
            std::function<int(int)> find = [&](int x) {
                while (parent[x] != x) {
                    parent[x] = parent[parent[x]];
                    x = parent[x];
                }
                return x;
            };
            std::vector<std::pair<int, int>> queue;
            auto unite = [&](int x, int y) {
                int rx = find(x), ry = find(y);
                if (rx != ry) {
                    parent[rx] = ry;
                    queue.push_back({x, y});
                }
            };
            unite(0, b);
            while (!queue.empty()) {
                auto [x, y] = queue.back();
                queue.pop_back();
                for (const auto& g : gens_) unite(g(x), g(y));
            }
            int root = find(0);
            int size = 0;
            for (int x = 0; x < n; ++x)
                if (find(x) == root) ++size;
            if (size != n) prof.primitive = false;
        }
    }

    // hierarchy sanity (these are theorems; a violation is an engine bug)
    require(!prof.two_transitive || prof.two_homogeneous, ErrorKind::InvariantViolated,
            "2-transitive profile not 2-homogeneous");
    require(!prof.two_homogeneous || prof.primitive, ErrorKind::InvariantViolated,
            "2-homogeneous profile not primitive");
    require(!prof.primitive || prof.transitive, ErrorKind::InvariantViolated,
            "primitive profile not transitive");
    return prof;
}

bool PermGroup::is_k_transitive(int k) const {
    require(k >= 1 && k <= degree_, ErrorKind::DegreeTooSmall, "bad transitivity degree");
    std::vector<int> prefix(k);
    std::iota(prefix.begin(), prefix.end(), 0);
    auto ch = chain_with_prefix(prefix);
    for (int i = 0; i < k; ++i)
        if (ch->basic_orbit_size(i) != size_t(degree_ - i)) return false;
    return true;
}

PermGroup ActionImage::image() const {
    return PermGroup(image_degree, image_gens);
}

ActionImage PermGroup::coset_action(const PermGroup& H, size_t index_cap) const {
    require(H.degree() == degree_, ErrorKind::DegreeMismatch, "subgroup degree mismatch");
    for (const auto& h : H.generators())
        require(is_member(h), ErrorKind::NotASubgroup, "H generator not in G");

    auto h_chain = H.chain();
    // signature: image of a fixed H-orbit under the coset representative
    int probe = 0;
    for (const auto& h : H.generators()) {
        bool found = false;
        for (int x = 0; x < degree_; ++x)
            if (h(x) != x) { probe = x; found = true; break; }
        if (found) break;
    }
    std::vector<int> probe_orbit = H.orbit(probe);

    auto reps = std::make_shared<std::vector<Perm>>();
    auto sig_index = std::make_shared<std::unordered_map<std::vector<int>, std::vector<int>, VecHash>>();
    auto signature = [probe_orbit](const Perm& x) {
        std::vector<int> sig(probe_orbit.size());
        for (size_t i = 0; i < probe_orbit.size(); ++i) sig[i] = x(probe_orbit[i]);
        std::sort(sig.begin(), sig.end());
        return sig;
    };
    auto coset_of = [reps, sig_index, signature, h_chain](const Perm& x) -> int {
        auto sig = signature(x);
        auto it = sig_index->find(sig);
        if (it != sig_index->end())
            for (int j : it->second)
                if (h_chain->contains(x * (*reps)[j].inverse())) return j;
        return -1;
    };

    reps->push_back(Perm::identity(degree_));
    (*sig_index)[signature(reps->front())].push_back(0);
    for (size_t head = 0; head < reps->size(); ++head) {
        for (const auto& g : gens_) {
            Perm next = (*reps)[head] * g;
            if (coset_of(next) >= 0) continue;
            require(reps->size() < index_cap, ErrorKind::IndexOverflow,
                    "coset index exceeds cap");
            (*sig_index)[signature(next)].push_back(int(reps->size()));
            reps->push_back(std::move(next));
        }
    }

    int idx = int(reps->size());
    ActionImage out;
    out.image_degree = idx;
    auto act_fn = [reps, coset_of, idx](const Perm& g) {
        std::vector<int> img(idx);
        for (int i = 0; i < idx; ++i) {
            int j = coset_of((*reps)[i] * g);
            require(j >= 0, ErrorKind::PointOutOfRange, "element does not permute the cosets");
            img[i] = j;
        }
        return Perm(std::move(img));
    };
    for (const auto& g : gens_) out.image_gens.push_back(act_fn(g));
    out.act = act_fn;
    PermGroup image(idx, out.image_gens);
    out.kernel_order = order() / image.order();
    out.faithful = out.kernel_order == 1;
    return out;
}

ActionImage PermGroup::induced_action(const std::vector<std::vector<int>>& family) const {
    require(!family.empty(), ErrorKind::FamilyNotInvariant, "empty family");
    auto index = std::make_shared<std::unordered_map<std::vector<int>, int, VecHash>>();
    auto sorted_family = std::make_shared<std::vector<std::vector<int>>>();
    for (const auto& s : family) {
        std::vector<int> t = s;
        std::sort(t.begin(), t.end());
        require(index->emplace(t, int(sorted_family->size())).second,
                ErrorKind::FamilyNotInvariant, "family contains a duplicate set");
        sorted_family->push_back(std::move(t));
    }
    int m = int(sorted_family->size());
    auto act_fn = [index, sorted_family, m](const Perm& g) {
        std::vector<int> img(m);
        for (int i = 0; i < m; ++i) {
            std::vector<int> t((*sorted_family)[i].size());
            for (size_t k = 0; k < t.size(); ++k) t[k] = g((*sorted_family)[i][k]);
            std::sort(t.begin(), t.end());
            auto it = index->find(t);
            require(it != index->end(), ErrorKind::FamilyNotInvariant,
                    "group element maps a family member outside the family");
            img[i] = it->second;
        }
        return Perm(std::move(img));
    };
    ActionImage out;
    out.image_degree = m;
    for (const auto& g : gens_) out.image_gens.push_back(act_fn(g));
    out.act = act_fn;
    PermGroup image(m, out.image_gens);
    out.kernel_order = order() / image.order();
    out.faithful = out.kernel_order == 1;
    return out;
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seed) {
    std::vector<Perm> conjugators;
    for (const auto& g : G.generators()) {
        conjugators.push_back(g);
        conjugators.push_back(g.inverse());
    }
    std::vector<Perm> sub_gens;
    auto sub_chain = std::make_shared<const StabChain>(G.degree(), sub_gens);
    std::deque<Perm> queue(seed.begin(), seed.end());
    while (!queue.empty()) {
        Perm e = std::move(queue.front());
        queue.pop_front();
        if (e.is_identity() || sub_chain->contains(e)) continue;
        sub_gens.push_back(e);
        sub_chain = std::make_shared<const StabChain>(G.degree(), sub_gens);
        for (const auto& c : conjugators) queue.push_back(c.inverse() * e * c);
    }
    return PermGroup(G.degree(), sub_gens);
}

PermGroup PermGroup::derived_subgroup() const {
    std::vector<Perm> comms;
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = i + 1; j < gens_.size(); ++j) {
            const Perm &a = gens_[i], &b = gens_[j];
            comms.push_back(a.inverse() * b.inverse() * a * b);
        }
    PermGroup D = normal_closure(*this, comms);
    // check: normal, and the quotient is abelian
    auto d_chain = D.chain();
    for (const auto& s : D.generators())
        for (const auto& g : gens_)
            require(d_chain->contains(g.inverse() * s * g), ErrorKind::GroupCertificateFailed,
                    "derived subgroup not normal");
    for (size_t i = 0; i < gens_.size(); ++i)
        for (size_t j = i + 1; j < gens_.size(); ++j)
            require(d_chain->contains(gens_[i].inverse() * gens_[j].inverse() * gens_[i] * gens_[j]),
                    ErrorKind::GroupCertificateFailed, "quotient by derived subgroup not abelian");
    return D;
}

std::vector<Perm> enumerate_elements(const PermGroup& G, size_t cap) {
    std::unordered_set<std::vector<int>, VecHash> seen;
    std::vector<Perm> elems{Perm::identity(G.degree())};
    seen.insert(elems[0].images());
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : G.generators()) {
            Perm next = elems[head] * g;
            if (seen.insert(next.images()).second) {
                elems.push_back(std::move(next));
                require(elems.size() <= cap, ErrorKind::BudgetExceeded,
                        "element enumeration exceeds cap");
            }
        }
    }
    return elems;
}

// ---------------------------------------------------------------------------
// Generator-file ingestion

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    std::string s = pos == std::string::npos ? line : line.substr(0, pos);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    size_t b = 0;
    while (b < s.size() && (s[b] == ' ' || s[b] == '\t')) ++b;
    return s.substr(b);
}

} // namespace

Perm parse_perm(const std::string& line, int degree) {
    if (line.rfind("img:", 0) == 0) {
        std::istringstream is(line.substr(4));
        std::vector<int> img;
        int x;
        while (is >> x) img.push_back(x);
        require(int(img.size()) == degree, ErrorKind::ParseError,
                "image list has wrong length: " + line);
        return Perm(std::move(img));
    }
    // disjoint cycles, 1-based
    std::vector<std::vector<int>> cycles;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') { ++i; continue; }
        require(line[i] == '(', ErrorKind::ParseError, "expected '(' in cycle notation: " + line);
        ++i;
        std::vector<int> cyc;
        std::string num;
        while (i < line.size() && line[i] != ')') {
            char c = line[i];
            if (c == ',' || c == ' ') {
                if (!num.empty()) {
                    cyc.push_back(std::stoi(num) - 1);
                    num.clear();
                }
            } else {
                require(c >= '0' && c <= '9', ErrorKind::ParseError, "bad cycle character: " + line);
                num.push_back(c);
            }
            ++i;
        }
        require(i < line.size(), ErrorKind::ParseError, "unterminated cycle: " + line);
        if (!num.empty()) cyc.push_back(std::stoi(num) - 1);
        ++i;
        if (!cyc.empty()) cycles.push_back(std::move(cyc));
    }
    return Perm::from_cycles(degree, cycles);
}

PermGroup read_group_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), ErrorKind::IoError, "cannot open group file: " + path);
    std::string line;
    int degree = -1;
    std::vector<Perm> gens;
    while (std::getline(in, line)) {
        std::string s = strip_comment(line);
        if (s.empty()) continue;
        if (degree < 0) {
            require(s.rfind("degree", 0) == 0, ErrorKind::GeneratorFileInvalid,
                    "first line must declare the degree: " + path);
            degree = std::stoi(s.substr(6));
            require(degree >= 1, ErrorKind::GeneratorFileInvalid, "bad degree in " + path);
            continue;
        }
        gens.push_back(parse_perm(s, degree));
    }
    require(degree > 0, ErrorKind::GeneratorFileInvalid, "no degree line in " + path);
    return PermGroup(degree, std::move(gens));
}

void write_group_file(const std::string& path, const PermGroup& G, const std::string& comment) {
    std::ofstream out(path);
    require(out.good(), ErrorKind::IoError, "cannot write group file: " + path);
    if (!comment.empty()) out << "# " << comment << "\n";
    out << "degree " << G.degree() << "\n";
    for (const auto& g : G.generators()) {
        out << "img:";
        for (int x : g.images()) out << ' ' << x;
        out << "\n";
    }
}

} // namespace geodesic
