#include "cdo/partition.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <sstream>

namespace cdo {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        require(p >= 1, "partition parts must be positive, got " + std::to_string(p));
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
}

const Partition& Partition::empty() {
    static const Partition e;
    return e;
}

int Partition::weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

Partition Partition::with_part(int k) const {
    Partition r = *this;
    auto it = std::lower_bound(r.parts_.begin(), r.parts_.end(), k, std::greater<int>());
    r.parts_.insert(it, k);
    return r;
}

Partition Partition::without_part(int k) const { return minus(k, 1); }

Partition Partition::minus(int k, int copies) const {
    Partition r = *this;
    for (int c = 0; c < copies; ++c) {
        auto it = std::find(r.parts_.begin(), r.parts_.end(), k);
        check(it != r.parts_.end(), "removing absent part from partition");
        r.parts_.erase(it);
    }
    return r;
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string trimmed;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) return Partition{};
    std::stringstream ss(trimmed);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            require(pos == tok.size() && v >= 1, "bad partition part '" + tok + "'");
            parts.push_back(v);
        } catch (const std::logic_error&) {
            throw domain_error("malformed partition '" + text + "'");
        }
    }
    return Partition(std::move(parts));
}

int compare_partitions(const Partition& x, const Partition& y) {
    const auto& a = x.parts();
    const auto& b = y.parts();
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

int compare_pairs(const PartitionPair& x, const PartitionPair& y) {
    if (x.l() != y.l()) return x.l() < y.l() ? -1 : 1;                     // (A1)
    if (int c = compare_partitions(x.lambda, y.lambda); c != 0) return c; // (A2)
    return -compare_partitions(x.mu, y.mu);                               // (A3), reversed on μ
}

const std::vector<Partition>& partitions_of(int n) {
    require(n >= 0, "partitions_of: negative weight");
    // deque keeps references to earlier entries stable while the cache grows
    static std::deque<std::vector<Partition>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        std::vector<Partition> out;
        std::vector<int> cur;
        // parts chosen weakly decreasing, largest first
        std::function<void(int, int)> rec = [&](int rem, int maxp) {
            if (rem == 0) {
                out.emplace_back(Partition(cur));
                return;
            }
            for (int p = std::min(rem, maxp); p >= 1; --p) {
                cur.push_back(p);
                rec(rem - p, p);
                cur.pop_back();
            }
        };
        rec(m, m);
        std::sort(out.begin(), out.end(),
                  [](const Partition& a, const Partition& b) { return compare_partitions(a, b) > 0; });
        cache.push_back(std::move(out));
    }
    return cache[n];
}

std::vector<PartitionPair> enumerate_pairs(int n) {
    require(n >= 0, "enumerate_pairs: negative weight");
    std::vector<PartitionPair> out;
    for (int j = 0; j <= n; ++j)
        for (const auto& lam : partitions_of(j))
            for (const auto& mu : partitions_of(n - j)) out.push_back({lam, mu});
    std::sort(out.begin(), out.end(),
              [](const PartitionPair& a, const PartitionPair& b) { return compare_pairs(a, b) > 0; });
    return out;
}

std::optional<PartitionPair> successor_pair(const PartitionPair& p0) {
    const auto pairs = enumerate_pairs(p0.weight());
    const PartitionPair* best = nullptr;
    for (const auto& p : pairs) {
        if (compare_pairs(p, p0) >= 0) continue;
        if (!best || compare_pairs(p, *best) > 0) best = &p;
    }
    if (!best) return std::nullopt;
    return *best;
}

int compare_words(const PartitionPair& p1, int a01, int b01,
                  const PartitionPair& p2, int a02, int b02) {
    if (int c = compare_pairs(p1, p2); c != 0) return c;  // (B1)
    if (a01 != a02) return a01 < a02 ? -1 : 1;            // (B2)
    if (b01 != b02) return b01 < b02 ? 1 : -1;            // (B3), reversed on b0
    return 0;
}

bool in_basis_set(const PartitionPair& top, const PartitionPair& p, int a0, int b0) {
    if (a0 < 0 || b0 < 0) return false;
    if (p.weight() != top.weight()) return false;
    if (p.l() + a0 > top.l()) return false;
    return compare_words(p, a0, b0, top, 0, 0) <= 0;
}

const std::vector<BasisWord>* BasisSets::group(int h_weight) const {
    auto it = by_weight.find(h_weight);
    return it == by_weight.end() ? nullptr : &it->second;
}

BasisSets basis_sets(const PartitionPair& top) {
    BasisSets out;
    out.top = top;
    const int l0 = top.l();
    for (const auto& p : enumerate_pairs(top.weight())) {
        // l(λ,μ)+k ≤ l0 with k ≥ 0 bounds k by l0 - l(λ,μ)
        for (int k = 0; k <= l0 - p.l(); ++k) {
            if (!in_basis_set(top, p, k, 0)) continue;
            out.by_weight[2 * (p.l() + k)].push_back({p, k});
        }
    }
    for (auto& [w, group] : out.by_weight) {
        std::sort(group.begin(), group.end(), [](const BasisWord& a, const BasisWord& b) {
            return compare_words(a.pair, a.a0, 0, b.pair, b.a0, 0) > 0;
        });
    }
    return out;
}

}  // namespace cdo
