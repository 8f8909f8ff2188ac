#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "kiss/arrangement.hpp"

namespace kiss {

/// The 2d vectors +-e_i: the standard basis followed by its negative.
Arrangement gen_cross_polytope(std::size_t d);

/// All 2d(d-1) unit vectors with exactly two nonzero coordinates of equal
/// absolute value 1/sqrt(2), stored as (z, N=2). Requires d >= 2.
Arrangement gen_D(std::size_t d);

/// The classical non-antipodal 40-vector arrangement in dimension 5: the
/// 8 members of gen_D(5) with last coordinate -1/sqrt(2) are replaced by
/// their images under an orthogonal rotation with half-integer entries
/// (images stored at N=8). The rotation's orthogonality is checked exactly.
Arrangement gen_L5();

/// The 40-vector arrangement obtained from gen_D(5) by removing ten
/// vectors and inserting ten replacements on the finer 1/(5*sqrt(2)) grid
/// (N=50). Throws ConstructionMismatch if a vector scheduled for removal
/// is not present.
Arrangement gen_Q5();

/// Checks, exactly: the three 40-vector arrangements above are all valid
/// kissing arrangements with pairwise distinct profiles, and the third one
/// has exactly 20 antipodal vectors. Failures are report entries, never
/// exceptions.
struct TheoremReport {
    struct Entry {
        std::string name;
        std::size_t size = 0;
        bool kissing = false;
        Profile profile;
    };
    std::vector<Entry> arrangements;
    bool sizes_ok = false;
    bool all_kissing = false;
    bool profiles_pairwise_distinct = false;
    std::size_t antipodal_in_newest = 0;
    bool antipodal_ok = false;
    std::vector<std::string> bounds;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    std::string str() const;
};

TheoremReport verify_theorem();

} // namespace kiss
