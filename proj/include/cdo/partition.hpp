#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cdo/errors.hpp"

namespace cdo {

// A partition: weakly decreasing positive parts, possibly empty.
// p(λ) = part count, |λ| = weight.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // normalizes (sorts desc), rejects parts < 1

    static const Partition& empty();

    int count() const { return static_cast<int>(parts_.size()); }   // p(λ)
    int weight() const;                                             // |λ|
    bool is_empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }

    int multiplicity(int k) const;
    Partition with_part(int k) const;     // insert one part k
    Partition without_part(int k) const;  // remove one part k (must exist)
    Partition minus(int k, int copies) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    // Raw sequence order, used only as a deterministic map key.
    std::strong_ordering operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }

    std::string str() const;                          // "2,1"; "" for ∅
    static Partition parse(const std::string& text);  // inverse of str()

  private:
    std::vector<int> parts_;
};

// The §2 order: lexicographic on the shared prefix, then the longer
// partition wins.  Returns <0, 0, >0.
int compare_partitions(const Partition& x, const Partition& y);

struct PartitionPair {
    Partition lambda;
    Partition mu;

    int l() const { return lambda.count() - mu.count(); }  // l(λ,μ) = p(λ) - p(μ)
    int weight() const { return lambda.weight() + mu.weight(); }

    bool operator==(const PartitionPair& o) const = default;
    auto operator<=>(const PartitionPair& o) const = default;

    std::string str() const { return "(" + lambda.str() + " | " + mu.str() + ")"; }
};

// Total order (A1)-(A3): larger l wins; ties broken by λ; for equal λ and
// equal p(μ) the *smaller* μ gives the greater pair.
int compare_pairs(const PartitionPair& x, const PartitionPair& y);

// All partitions of n (n >= 0), descending under compare_partitions.
const std::vector<Partition>& partitions_of(int n);

// All pairs with |λ|+|μ| = n, strictly decreasing under compare_pairs.
std::vector<PartitionPair> enumerate_pairs(int n);

// Greatest pair strictly below p0 in its weight class; nullopt at the
// bottom (∅, (1,...,1)).
std::optional<PartitionPair> successor_pair(const PartitionPair& p0);

// ---- the basis sets S_{λ0,μ0} of (3.9) ------------------------------------

// Descriptor of a b0-free basis word a_{-λ} b_{-μ} a0^k.
struct BasisWord {
    PartitionPair pair;
    int a0 = 0;

    int h_weight() const { return 2 * (pair.l() + a0); }
    bool operator==(const BasisWord& o) const = default;
};

// (B1)-(B3) order on basis words with explicit b0 power.
int compare_words(const PartitionPair& p1, int a01, int b01,
                  const PartitionPair& p2, int a02, int b02);

// Membership of a_{-λ} b_{-μ} a0^k b0^l in S_{λ0,μ0}.
bool in_basis_set(const PartitionPair& top, const PartitionPair& p, int a0, int b0);

// S⁰_{λ0,μ0} grouped by H0-weight (descending), each group listed in the
// decreasing order of (3.14).
struct BasisSets {
    PartitionPair top;
    std::map<int, std::vector<BasisWord>, std::greater<int>> by_weight;

    const std::vector<BasisWord>* group(int h_weight) const;
};

BasisSets basis_sets(const PartitionPair& top);

}  // namespace cdo
