/// Integer partitions and multipartitions.

#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace glnq {

/// A partition: weakly decreasing positive parts. The empty list is the
/// zero partition.
class Partition {
  public:
    Partition() = default;
    Partition(std::initializer_list<long> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<long> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<long>& parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }
    std::size_t num_parts() const { return parts_.size(); }
    long part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    long size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

    /// gcd of the parts (0 for the zero partition).
    long delta() const {
        long g = 0;
        for (long p : parts_) g = std::gcd(g, p);
        return g;
    }

    Partition transpose() const {
        std::vector<long> t;
        if (parts_.empty()) return Partition{};
        t.resize(static_cast<std::size_t>(parts_[0]));
        for (std::size_t j = 0; j < t.size(); ++j) {
            long col = 0;
            for (long p : parts_)
                if (p > static_cast<long>(j)) ++col;
            t[j] = col;
        }
        return Partition(std::move(t));
    }

    /// Rectangle test: returns (part, multiplicity) when all parts coincide.
    bool is_rectangle(long& part, long& mult) const {
        if (parts_.empty()) return false;
        for (long p : parts_)
            if (p != parts_[0]) return false;
        part = parts_[0];
        mult = static_cast<long>(parts_.size());
        return true;
    }

    bool is_single_row() const { return parts_.size() == 1; }

    /// Multiplicity of columns of height exactly h (h >= 1); equivalently
    /// part(h-1) - part(h).
    long column_multiplicity(std::size_t h) const {
        if (h == 0) throw std::invalid_argument("column_multiplicity: h >= 1");
        return part(h - 1) - part(h);
    }

    auto operator<=>(const Partition& o) const = default;

    std::string str() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ',';
            os << parts_[i];
        }
        os << ']';
        return os.str();
    }

  private:
    void validate() const {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    std::vector<long> parts_;
};

/// Dominance order on partitions of equal size: mu <= la iff all prefix sums
/// of mu are bounded by those of la.
inline bool dominated_by(const Partition& mu, const Partition& la) {
    if (mu.size() != la.size()) return false;
    long smu = 0, sla = 0;
    std::size_t k = std::max(mu.num_parts(), la.num_parts());
    for (std::size_t i = 0; i < k; ++i) {
        smu += mu.part(i);
        sla += la.part(i);
        if (smu > sla) return false;
    }
    return true;
}

inline std::vector<Partition> partitions_of(long n, long max_part = -1) {
    if (n < 0) throw std::invalid_argument("partitions_of: n >= 0");
    if (max_part < 0 || max_part > n) max_part = n;
    std::vector<Partition> out;
    std::vector<long> cur;
    auto rec = [&](auto&& self, long rem, long cap) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (long p = std::min(rem, cap); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, max_part);
    return out;
}

/// A non-empty list of partitions.
class Multipartition {
  public:
    explicit Multipartition(std::vector<Partition> comps) : comps_(std::move(comps)) {
        if (comps_.empty()) throw std::invalid_argument("Multipartition: empty");
    }

    const std::vector<Partition>& components() const { return comps_; }

    long delta() const {
        long g = 0;
        for (auto& p : comps_) g = std::gcd(g, p.delta());
        return g;
    }

    Multipartition transpose() const {
        std::vector<Partition> t;
        t.reserve(comps_.size());
        for (auto& p : comps_) t.push_back(p.transpose());
        return Multipartition(std::move(t));
    }

  private:
    std::vector<Partition> comps_;
};

} // namespace glnq
