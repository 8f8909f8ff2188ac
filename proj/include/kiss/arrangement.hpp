#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "kiss/surd.hpp"
#include "kiss/vectors.hpp"

namespace kiss {

/// Ordered list of explicit vectors of a common dimension, pairwise distinct
/// as real vectors. Mixed norm-squares are allowed; inner products may then
/// be genuine surds.
class Arrangement {
public:
    /// Throws DimensionMismatch on ragged coordinate lengths and
    /// DuplicateVector if two entries denote the same real vector.
    Arrangement(std::size_t dim, std::vector<ExplicitVector> vectors);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return vectors_.size(); }
    const std::vector<ExplicitVector>& vectors() const { return vectors_; }
    const ExplicitVector& operator[](std::size_t i) const { return vectors_[i]; }

private:
    std::size_t dim_;
    std::vector<ExplicitVector> vectors_;
};

/// Multiset of inner products over all n^2 ordered pairs, diagonal included.
/// Keys are canonical surds in ascending real order, so iteration order and
/// printing are deterministic.
class Profile {
public:
    using Map = std::map<Surd, long long>;

    void add(const Surd& value, long long count = 1);

    long long total() const;
    long long multiplicity(const Surd& value) const;
    const Map& entries() const { return counts_; }

    friend bool operator==(const Profile& p, const Profile& q) = default;

    /// Paper-style display: {[-1]^40, [-1/2]^480, ...}
    std::string str() const;

private:
    Map counts_;
};

std::ostream& operator<<(std::ostream& os, const Profile& p);

Profile profile_of(const Arrangement& arr);

struct KissingViolation {
    enum class Kind { NonUnit, PairTooClose };
    Kind kind;
    std::size_t i = 0;
    std::size_t j = 0;    // unused for NonUnit
    Surd value;           // norm^2 for NonUnit, inner product for PairTooClose
    std::string str() const;
};

/// Exact certificate: valid iff every vector is unit and every unordered
/// pair has inner product <= 1/2. Violations are data, not errors.
struct KissingCertificate {
    bool valid = true;
    std::vector<KissingViolation> violations;
};

KissingCertificate check_kissing(const Arrangement& arr);

/// Number of vectors whose negative is also in the arrangement.
std::size_t antipodal_count(const Arrangement& arr);

/// Set equality of the denoted real vectors: order- and scale-blind.
bool same_vector_set(const std::vector<ExplicitVector>& a,
                     const std::vector<ExplicitVector>& b);

} // namespace kiss
