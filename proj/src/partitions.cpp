#include "qshelf/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace qshelf {

namespace {

bool even(long long v)
{
    return v % 2 == 0;
}

void trim(std::vector<int>& v)
{
    while (v.size() > 1 && v.back() == 0)
        v.pop_back();
}

void partitions_rec(int remaining, int max_part, std::vector<int>& freq,
                    const std::function<void(const Partition&)>& visit)
{
    if (remaining == 0) {
        visit(Partition(freq));
        return;
    }
    for (int b = std::min(remaining, max_part); b >= 1; --b) {
        if (static_cast<int>(freq.size()) <= b)
            freq.resize(static_cast<std::size_t>(b) + 1, 0);
        int& slot = freq[static_cast<std::size_t>(b)];
        for (int m = 1; m * b <= remaining; ++m) {
            slot = m;
            partitions_rec(remaining - m * b, b - 1, freq, visit);
        }
        slot = 0;
    }
}

void overpartitions_rec(int remaining, int max_part, std::vector<int>& freq, std::vector<int>& over,
                        const std::function<void(const Overpartition&)>& visit)
{
    if (remaining == 0) {
        visit(Overpartition(freq, over));
        return;
    }
    for (int b = std::min(remaining, max_part); b >= 1; --b) {
        auto idx = static_cast<std::size_t>(b);
        if (freq.size() <= idx) {
            freq.resize(idx + 1, 0);
            over.resize(idx + 1, 0);
        }
        for (int o = 0; o <= 1; ++o) {
            over[idx] = o;
            for (int m = o ? 0 : 1; (m + o) * b <= remaining; ++m) {
                freq[idx] = m;
                overpartitions_rec(remaining - (m + o) * b, b - 1, freq, over, visit);
            }
        }
        freq[idx] = 0;
        over[idx] = 0;
    }
}

Series count_into_series(const ConditionSet& cond, int n_max)
{
    if (n_max < 0)
        throw std::invalid_argument("n_max must be nonnegative");
    Series s = Series::zero(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        long long c = 0;
        for_each_partition(n, [&](const Partition& p) {
            if (cond.accepts(p))
                ++c;
        });
        s.set_coeff(n, Integer(c));
    }
    return s;
}

void check_position(int k, int i)
{
    if (k < 2)
        throw std::invalid_argument("k must be at least 2");
    if (i < 1 || i > k)
        throw std::invalid_argument("position outside [1, k]");
}

std::string tag(const char* family, std::initializer_list<std::pair<const char*, int>> params)
{
    std::string s = family;
    s += "(";
    bool first = true;
    for (const auto& [name, v] : params) {
        if (!first)
            s += ", ";
        first = false;
        s += name;
        s += "=" + std::to_string(v);
    }
    return s + ")";
}

} // namespace

Partition::Partition(std::vector<int> freq) : freq_(std::move(freq))
{
    if (freq_.empty())
        freq_.push_back(0);
    if (freq_[0] != 0)
        throw std::invalid_argument("partitions have no part 0");
    trim(freq_);
    for (std::size_t t = 1; t < freq_.size(); ++t) {
        if (freq_[t] < 0)
            throw std::invalid_argument("negative multiplicity");
        n_ += static_cast<int>(t) * freq_[t];
    }
}

Partition Partition::from_parts(const std::vector<int>& parts)
{
    std::vector<int> f{0};
    for (int b : parts) {
        if (b < 1)
            throw std::invalid_argument("parts must be positive");
        if (static_cast<int>(f.size()) <= b)
            f.resize(static_cast<std::size_t>(b) + 1, 0);
        ++f[static_cast<std::size_t>(b)];
    }
    return Partition(std::move(f));
}

int Partition::smallest() const
{
    for (std::size_t t = 1; t < freq_.size(); ++t)
        if (freq_[t])
            return static_cast<int>(t);
    return 0;
}

int Partition::part_count() const
{
    return std::accumulate(freq_.begin(), freq_.end(), 0);
}

int Partition::odd_upto(int t) const
{
    int c = 0;
    for (int b = 1; b <= 2 * t && b < static_cast<int>(freq_.size()); b += 2)
        c += freq_[static_cast<std::size_t>(b)];
    return c;
}

std::vector<int> Partition::parts() const
{
    std::vector<int> out;
    for (int t = largest(); t >= 1; --t)
        for (int m = 0; m < freq_[static_cast<std::size_t>(t)]; ++m)
            out.push_back(t);
    return out;
}

std::string Partition::to_string() const
{
    std::string s = "(";
    bool first = true;
    for (int b : parts()) {
        if (!first)
            s += ",";
        first = false;
        s += std::to_string(b);
    }
    return s + ")";
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit, int max_part)
{
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative");
    std::vector<int> freq{0};
    partitions_rec(n, max_part < 0 ? n : max_part, freq, visit);
}

std::vector<Partition> enumerate_partitions(int n, int max_part)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, max_part);
    return out;
}

bool core_conditions(const Partition& p, int k, int i, int J, int parity_offset, bool parity)
{
    if (p.n() == 0)
        return true;
    if (p.smallest() <= 2 * J)
        return false;
    for (int b = 1; b <= p.largest(); b += 2)
        if (p.f(b) > 1)
            return false;
    if (p.f(2 * J + 1) + p.f(2 * J + 2) > k - i)
        return false;
    for (int t = 0; 2 * t <= p.largest(); ++t) {
        int s = p.f(2 * t) + p.f(2 * t + 1) + p.f(2 * t + 2);
        if (s > k - 1)
            return false;
        if (parity && s == k - 1) {
            long long lhs = static_cast<long long>(t) * p.f(2 * t)
                            + static_cast<long long>(t + 1) * (p.f(2 * t + 1) + p.f(2 * t + 2));
            long long rhs = static_cast<long long>(k - 1) * J + k - i + parity_offset + p.odd_upto(t);
            if (!even(lhs - rhs))
                return false;
        }
    }
    return true;
}

ConditionSet bgg_conditions(int k, int i)
{
    check_position(k, i);
    return {tag("bgg", {{"k", k}, {"i", i}}), [=](const Partition& p) { return core_conditions(p, k, i, 0, 0); },
            i < 2};
}

ConditionSet product_side_conditions(int k, int i)
{
    check_position(k, i);
    if (i < 2)
        throw std::invalid_argument("the product side is a partition count only for i >= 2");
    const int mod = 4 * k - 2;
    const int r = 2 * k - 2 * i + 1;
    return {tag("product", {{"k", k}, {"i", i}}), [=](const Partition& p) {
                for (int b = 1; b <= p.largest(); ++b) {
                    int m = p.f(b);
                    if (m == 0)
                        continue;
                    if (b % 2 == 0) {
                        if (b % 4 != 0 || b % (2 * mod) == 0)
                            return false;
                        continue;
                    }
                    int res = b % mod;
                    if (res == r || res == mod - r)
                        return false;
                    if (res == 2 * k - 1 && m > 1)
                        return false;
                }
                return true;
            }};
}

ConditionSet g_conditions(int k, int i, int J, bool parity)
{
    check_position(k, i);
    return {tag(parity ? "G" : "G-no-parity", {{"k", k}, {"i", i}, {"J", J}}),
            [=](const Partition& p) { return core_conditions(p, k, i, J, 0, parity); }};
}

ConditionSet ghost_conditions(int k, int i, int J)
{
    check_position(k, i);
    // i = 1 is defined only at J = 0 (where it repeats i = 2); beyond that it is our extension
    return {tag("ghost", {{"k", k}, {"i", i}, {"J", J}}),
            [=](const Partition& p) { return core_conditions(p, k, i, J, 1); }, i == 1 && J > 0};
}

ConditionSet h_conditions(int k, int i, int l, int j, int J)
{
    check_position(k, i);
    check_position(k, l);
    if (j < J + 1)
        throw std::invalid_argument("h conditions need j >= J + 1");
    return {tag("h", {{"k", k}, {"i", i}, {"l", l}, {"j", j}, {"J", J}}), [=](const Partition& p) {
                if (p.largest() > 2 * j)
                    return false;
                int top = p.largest() == 2 * j ? p.freq().back() : 0;
                if (top != l - 1 && top != l - 2)
                    return false;
                if (!even(p.odd_upto(j) - (l + static_cast<long long>(k - 1) * (j - J) - i)))
                    return false;
                return core_conditions(p, k, i, J, 0);
            }};
}

ConditionSet h12_conditions(int k, int i, int j, int J)
{
    check_position(k, i);
    if (j < J + 1)
        throw std::invalid_argument("h conditions need j >= J + 1");
    return {tag("h12", {{"k", k}, {"i", i}, {"j", j}, {"J", J}}), [=](const Partition& p) {
                if (p.largest() > 2 * j)
                    return false;
                int top = p.largest() == 2 * j ? p.freq().back() : 0;
                if (top > 1)
                    return false;
                // a single 2j only comes from the l = 2 family, which fixes V(j)
                if (top == 1 && !even(p.odd_upto(j) - (2 + static_cast<long long>(k - 1) * (j - J) - i)))
                    return false;
                return core_conditions(p, k, i, J, 0);
            }};
}

ConditionSet h12_conditions_summed(int k, int i, int j, int J)
{
    check_position(k, i);
    if (j < J + 1)
        throw std::invalid_argument("h conditions need j >= J + 1");
    return {tag("h12-summed", {{"k", k}, {"i", i}, {"j", j}, {"J", J}}), [=](const Partition& p) {
                if (p.largest() > 2 * j)
                    return false;
                int top = p.largest() == 2 * j ? p.freq().back() : 0;
                return top <= 1 && core_conditions(p, k, i, J, 0);
            }};
}

Series gen_fn(const ConditionSet& cond, int n_max)
{
    return count_into_series(cond, n_max);
}

Series h_oracle(int k, int i, int l, int j, int J, int n_max)
{
    return gen_fn(h_conditions(k, i, l, j, J), n_max);
}

Series h12_oracle(int k, int i, int j, int J, int n_max)
{
    return gen_fn(h12_conditions(k, i, j, J), n_max);
}

std::vector<Partition> witnesses(const ConditionSet& cond, int n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) {
        if (cond.accepts(p))
            out.push_back(p);
    });
    return out;
}

Overpartition::Overpartition(std::vector<int> freq, std::vector<int> over)
    : freq_(std::move(freq)), over_(std::move(over))
{
    if (freq_.empty())
        freq_.push_back(0);
    if (over_.empty())
        over_.push_back(0);
    if (freq_[0] != 0 || over_[0] != 0)
        throw std::invalid_argument("overpartitions have no part 0");
    std::size_t len = std::max(freq_.size(), over_.size());
    freq_.resize(len, 0);
    over_.resize(len, 0);
    for (std::size_t t = 1; t < len; ++t) {
        if (freq_[t] < 0 || over_[t] < 0 || over_[t] > 1)
            throw std::invalid_argument("bad overpartition multiplicity");
        n_ += static_cast<int>(t) * (freq_[t] + over_[t]);
    }
    trim(freq_);
    trim(over_);
}

int Overpartition::largest() const noexcept
{
    return static_cast<int>(std::max(freq_.size(), over_.size())) - 1;
}

int Overpartition::part_count() const
{
    return std::accumulate(freq_.begin(), freq_.end(), 0) + overlined_count();
}

int Overpartition::overlined_count() const
{
    return std::accumulate(over_.begin(), over_.end(), 0);
}

int Overpartition::overlined_upto(int t) const
{
    int c = 0;
    for (int b = 1; b <= t && b < static_cast<int>(over_.size()); ++b)
        c += over_[static_cast<std::size_t>(b)];
    return c;
}

std::string Overpartition::to_string() const
{
    std::string s = "(";
    bool first = true;
    for (int t = largest(); t >= 1; --t) {
        auto put = [&](const std::string& part) {
            if (!first)
                s += ",";
            first = false;
            s += part;
        };
        if (fbar(t))
            put("~" + std::to_string(t));
        for (int m = 0; m < f(t); ++m)
            put(std::to_string(t));
    }
    return s + ")";
}

void for_each_overpartition(int n, const std::function<void(const Overpartition&)>& visit)
{
    if (n < 0)
        throw std::invalid_argument("n must be nonnegative");
    std::vector<int> freq{0}, over{0};
    overpartitions_rec(n, n, freq, over, visit);
}

std::vector<Overpartition> enumerate_overpartitions(int n)
{
    std::vector<Overpartition> out;
    for_each_overpartition(n, [&](const Overpartition& p) { out.push_back(p); });
    return out;
}

bool over_conditions(const Overpartition& p, int k, int i, int parity_offset, OverReading r)
{
    if (p.f(1) + p.fbar(1) > i - 1)
        return false;
    for (int l = r == OverReading::literal ? 0 : 1; l <= p.largest(); ++l) {
        long long s, w;
        if (r != OverReading::shifted_bar) {
            s = p.f(l) + p.f(l + 1) + p.fbar(l + 1);
            w = static_cast<long long>(l) * p.f(l) + static_cast<long long>(l + 1) * (p.f(l + 1) + p.fbar(l + 1));
        } else {
            s = p.f(l) + p.fbar(l) + p.f(l + 1);
            w = static_cast<long long>(l) * (p.f(l) + p.fbar(l)) + static_cast<long long>(l + 1) * p.f(l + 1);
        }
        if (s > k - 1)
            return false;
        if (s == k - 1 && !even(w - (i + parity_offset + p.overlined_upto(l))))
            return false;
    }
    return true;
}

TriSeries overpartition_gen_fn(int k, int i, int n_max, int parity_offset, OverReading r)
{
    check_position(k, i);
    TriSeries t = TriSeries::q_truncated(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        for_each_overpartition(n, [&](const Overpartition& p) {
            if (over_conditions(p, k, i, parity_offset, r))
                t.add_at(p.overlined_count(), p.part_count(), n, Integer(1));
        });
    return t;
}

} // namespace qshelf
