#include "kiss/arrangement.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <tuple>

#include "kiss/errors.hpp"

namespace kiss {

Arrangement::Arrangement(std::size_t dim, std::vector<ExplicitVector> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        if (vectors_[i].dim() != dim_)
            throw DimensionMismatch("vector " + std::to_string(i) + " has length " +
                                    std::to_string(vectors_[i].dim()) + ", expected " +
                                    std::to_string(dim_));
        if (vectors_[i].norm_square <= 0)
            throw ParseError("vector " + std::to_string(i) + " has non-positive norm-square");
    }
    for (std::size_t i = 0; i < vectors_.size(); ++i)
        for (std::size_t j = i + 1; j < vectors_.size(); ++j)
            if (same_real_vector(vectors_[i], vectors_[j]))
                throw DuplicateVector("vectors " + std::to_string(i) + " and " +
                                      std::to_string(j) + " denote the same real vector");
}

void Profile::add(const Surd& value, long long count) {
    counts_[value] += count;
}

long long Profile::total() const {
    long long t = 0;
    for (const auto& [value, count] : counts_) t += count;
    return t;
}

long long Profile::multiplicity(const Surd& value) const {
    const auto it = counts_.find(value);
    return it == counts_.end() ? 0 : it->second;
}

std::string Profile::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [value, count] : counts_) {
        if (!first) os << ", ";
        first = false;
        os << "[" << value.str() << "]^" << count;
    }
    os << "}";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Profile& p) {
    return os << p.str();
}

Profile profile_of(const Arrangement& arr) {
    Profile p;
    const auto& vs = arr.vectors();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        p.add(inner_product(vs[i], vs[i]), 1);
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            p.add(inner_product(vs[i], vs[j]), 2); // (i,j) and (j,i)
    }
    return p;
}

std::string KissingViolation::str() const {
    std::ostringstream os;
    if (kind == Kind::NonUnit)
        os << "vector " << i << " is not unit: |v|^2 = " << value.str();
    else
        os << "pair (" << i << ", " << j << ") has inner product " << value.str() << " > 1/2";
    return os.str();
}

KissingCertificate check_kissing(const Arrangement& arr) {
    KissingCertificate cert;
    const auto& vs = arr.vectors();
    const Rational half(1, 2);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!vs[i].is_unit()) {
            cert.valid = false;
            cert.violations.push_back(
                {KissingViolation::Kind::NonUnit, i, 0, Surd(vs[i].norm2())});
        }
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const Surd ip = inner_product(vs[i], vs[j]);
            if (compare(ip, half) == std::strong_ordering::greater) {
                cert.valid = false;
                cert.violations.push_back({KissingViolation::Kind::PairTooClose, i, j, ip});
            }
        }
    return cert;
}

bool same_vector_set(const std::vector<ExplicitVector>& a,
                     const std::vector<ExplicitVector>& b) {
    if (a.size() != b.size()) return false;
    // Canonical forms are unique per real vector, so set equality is list
    // equality after canonicalizing and sorting.
    auto canonical_sorted = [](const std::vector<ExplicitVector>& vs) {
        std::vector<ExplicitVector> out;
        out.reserve(vs.size());
        for (const auto& v : vs) out.push_back(v.canonical());
        std::sort(out.begin(), out.end(), [](const ExplicitVector& u, const ExplicitVector& v) {
            return std::tie(u.norm_square, u.z) < std::tie(v.norm_square, v.z);
        });
        return out;
    };
    const auto ca = canonical_sorted(a);
    const auto cb = canonical_sorted(b);
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (ca[i].z != cb[i].z || ca[i].norm_square != cb[i].norm_square) return false;
    return true;
}

std::size_t antipodal_count(const Arrangement& arr) {
    const auto& vs = arr.vectors();
    std::size_t count = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const ExplicitVector neg = vs[i].negated();
        for (std::size_t j = 0; j < vs.size(); ++j) {
            if (j != i && same_real_vector(neg, vs[j])) {
                ++count;
                break;
            }
        }
    }
    return count;
}

} // namespace kiss
