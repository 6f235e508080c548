#ifndef QSHELF_PARTITIONS_HPP
#define QSHELF_PARTITIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include "qshelf/series.hpp"
#include "qshelf/tri_series.hpp"

namespace qshelf {

// Frequency representation: freq[t] is the multiplicity of the part t
// (freq[0] is always 0). Trailing zeros are trimmed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> freq);
    static Partition from_parts(const std::vector<int>& parts);

    int n() const noexcept { return n_; }
    int largest() const noexcept { return static_cast<int>(freq_.size()) - 1; }
    int smallest() const;
    int part_count() const;
    int f(int t) const noexcept
    {
        if (t > consulted_)
            consulted_ = t;
        return t >= 1 && t < static_cast<int>(freq_.size()) ? freq_[static_cast<std::size_t>(t)] : 0;
    }
    // number of odd parts b <= 2t
    int odd_upto(int t) const;
    const std::vector<int>& freq() const noexcept { return freq_; }
    std::vector<int> parts() const; // weakly decreasing
    std::string to_string() const;

    // largest index handed out by f() since the last reset
    int consulted() const noexcept { return consulted_; }
    void reset_consulted() const noexcept { consulted_ = 0; }

private:
    std::vector<int> freq_{0};
    int n_ = 0;
    mutable int consulted_ = 0;
};

// every partition of n exactly once, parts bounded by max_part when >= 0
void for_each_partition(int n, const std::function<void(const Partition&)>& visit, int max_part = -1);
std::vector<Partition> enumerate_partitions(int n, int max_part = -1);

struct ConditionSet {
    std::string name;
    std::function<bool(const Partition&)> accepts;
    bool extension = false; // parameters outside the range where the family is defined
};

// shared body: odd parts distinct; f(2J+1) + f(2J+2) <= k - i; every window
// f(2t) + f(2t+1) + f(2t+2) <= k - 1, and on equality
// t f(2t) + (t+1)(f(2t+1) + f(2t+2)) = (k-1)J + k - i + offset + V(t) mod 2;
// smallest part > 2J
bool core_conditions(const Partition& p, int k, int i, int J, int parity_offset, bool parity = true);

ConditionSet bgg_conditions(int k, int i);
// parts the product side counts: even parts multiples of 4 not divisible by
// 8k - 4, odd parts off +-(2k - 2i + 1) mod 4k - 2, parts 2k - 1 mod 4k - 2 distinct
ConditionSet product_side_conditions(int k, int i);
ConditionSet g_conditions(int k, int i, int J, bool parity = true);
ConditionSet ghost_conditions(int k, int i, int J);
ConditionSet h_conditions(int k, int i, int l, int j, int J);
// h_i1 + h_i2 as the union of the l = 1 and l = 2 families: conditions 1-7
// of the summed condition list, plus the V(j) parity of the l = 2 family when
// f(2j) = 1
ConditionSet h12_conditions(int k, int i, int j, int J);
// the summed condition list alone (f(2j) in {0, 1}, no V(j) parity); it admits
// extra partitions with f(2j) = 1 at finite j
ConditionSet h12_conditions_summed(int k, int i, int j, int J);

// coefficient of q^n counts accepted partitions of n, for n <= n_max
Series gen_fn(const ConditionSet& cond, int n_max);
Series h_oracle(int k, int i, int l, int j, int J, int n_max);
Series h12_oracle(int k, int i, int j, int J, int n_max);

// accepted partitions of exactly n, for mismatch debugging
std::vector<Partition> witnesses(const ConditionSet& cond, int n);

// over[t] = 1 when the overlined part t is present; f(t) counts plain parts
class Overpartition {
public:
    Overpartition() = default;
    Overpartition(std::vector<int> freq, std::vector<int> over);

    int n() const noexcept { return n_; }
    int largest() const noexcept;
    int f(int t) const noexcept { return at(freq_, t); }
    int fbar(int t) const noexcept { return at(over_, t); }
    int part_count() const;
    int overlined_count() const;
    // overlined parts not exceeding t
    int overlined_upto(int t) const;
    std::string to_string() const;

private:
    static int at(const std::vector<int>& v, int t) noexcept
    {
        return t >= 1 && t < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(t)] : 0;
    }
    std::vector<int> freq_{0};
    std::vector<int> over_{0};
    int n_ = 0;
};

void for_each_overpartition(int n, const std::function<void(const Overpartition&)>& visit);
std::vector<Overpartition> enumerate_overpartitions(int n);

// How the triple window reads. Literal: f(l) + f(l+1) + fbar(l+1) with
// l f(l) + (l+1)(f(l+1) + fbar(l+1)) in the parity, for every l >= 0 (at
// l = 0 the window is f(1) + fbar(1)). literal_from_one skips l = 0.
// Shifted bar: the overline sits on the lower part, f(l) + fbar(l) + f(l+1),
// weight l (f(l) + fbar(l)) + (l+1) f(l+1).
enum class OverReading { literal, literal_from_one, shifted_bar };

// parity_offset 0 gives the ghost family, 1 the official one
bool over_conditions(const Overpartition& p, int k, int i, int parity_offset, OverReading r);

// a^(overlined parts) x^(parts) q^n over all accepted overpartitions, n <= n_max
TriSeries overpartition_gen_fn(int k, int i, int n_max, int parity_offset, OverReading r);

} // namespace qshelf

#endif
