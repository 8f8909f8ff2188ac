#include "kiss/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "kiss/errors.hpp"
#include "kiss/solver.hpp"

namespace kiss {
namespace {

// Twice the rotation matrix applied to the replaced block of gen_L5, kept
// integral; the true rotation is this over 2.
const long kRotation2[5][5] = {
    {-1, 1, 1, 1, 0},
    {1, -1, 1, 1, 0},
    {1, 1, -1, 1, 0},
    {1, 1, 1, -1, 0},
    {0, 0, 0, 0, 2},
};

// Vectors removed from gen_D(5) by gen_Q5, at N=2 ...
const long kRemoved[10][5] = {
    {1, -1, 0, 0, 0},
    {1, 0, -1, 0, 0},
    {1, 0, 0, -1, 0},
    {1, 0, 0, 0, -1},
    {0, -1, -1, 0, 0},
    {0, -1, 0, -1, 0},
    {0, -1, 0, 0, -1},
    {0, 0, -1, -1, 0},
    {0, 0, -1, 0, -1},
    {0, 0, 0, -1, -1},
};

// ... and their replacements, at N=50.
const long kInserted[10][5] = {
    {-1, 1, -4, -4, -4},
    {-1, -4, 1, -4, -4},
    {-1, -4, -4, 1, -4},
    {-1, -4, -4, -4, 1},
    {4, 1, 1, -4, -4},
    {4, 1, -4, 1, -4},
    {4, 1, -4, -4, 1},
    {4, -4, 1, 1, -4},
    {4, -4, 1, -4, 1},
    {4, -4, -4, 1, 1},
};

void check_rotation_orthogonal() {
    // (R/2)(R/2)^T = I  <=>  R R^T = 4I over the integers.
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            long sum = 0;
            for (std::size_t k = 0; k < 5; ++k) sum += kRotation2[i][k] * kRotation2[j][k];
            if (sum != (i == j ? 4 : 0))
                throw ConstructionMismatch("rotation matrix is not orthogonal");
        }
}

} // namespace

Arrangement gen_cross_polytope(std::size_t d) {
    if (d < 1) throw DimensionMismatch("cross-polytope needs dimension >= 1");
    std::vector<ExplicitVector> vectors;
    vectors.reserve(2 * d);
    for (long sign : {1L, -1L})
        for (std::size_t i = 0; i < d; ++i) {
            ExplicitVector v{std::vector<long>(d, 0), 1};
            v.z[i] = sign;
            vectors.push_back(std::move(v));
        }
    return Arrangement(d, std::move(vectors));
}

Arrangement gen_D(std::size_t d) {
    if (d < 2) throw DimensionMismatch("two-nonzero family needs dimension >= 2");
    std::vector<ExplicitVector> vectors;
    vectors.reserve(2 * d * (d - 1));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (long si : {1L, -1L})
                for (long sj : {1L, -1L}) {
                    ExplicitVector v{std::vector<long>(d, 0), 2};
                    v.z[i] = si;
                    v.z[j] = sj;
                    vectors.push_back(std::move(v));
                }
    return Arrangement(d, std::move(vectors));
}

Arrangement gen_L5() {
    check_rotation_orthogonal();
    std::vector<ExplicitVector> vectors = gen_D(5).vectors();
    for (auto& v : vectors) {
        if (v.z[4] != -1) continue;
        // v = z/sqrt(2)  ->  v * (R/2) = (z R)/sqrt(8).
        ExplicitVector image{std::vector<long>(5, 0), 8};
        for (std::size_t col = 0; col < 5; ++col) {
            long sum = 0;
            for (std::size_t k = 0; k < 5; ++k) sum += v.z[k] * kRotation2[k][col];
            image.z[col] = sum;
        }
        v = std::move(image);
    }
    return Arrangement(5, std::move(vectors));
}

Arrangement gen_Q5() {
    std::vector<ExplicitVector> vectors = gen_D(5).vectors();
    for (const auto& row : kRemoved) {
        const ExplicitVector target{std::vector<long>(row, row + 5), 2};
        auto it = std::find_if(vectors.begin(), vectors.end(), [&](const ExplicitVector& v) {
            return same_real_vector(v, target);
        });
        if (it == vectors.end())
            throw ConstructionMismatch("vector scheduled for removal is absent: " +
                                       target.str());
        vectors.erase(it);
    }
    for (const auto& row : kInserted)
        vectors.push_back(ExplicitVector{std::vector<long>(row, row + 5), 50});
    return Arrangement(5, std::move(vectors));
}

TheoremReport verify_theorem() {
    TheoremReport rep;
    struct Named {
        const char* name;
        Arrangement arr;
    };
    const Named all[] = {{"D5", gen_D(5)}, {"L5", gen_L5()}, {"Q5", gen_Q5()}};

    rep.sizes_ok = true;
    rep.all_kissing = true;
    for (const auto& [name, arr] : all) {
        TheoremReport::Entry e;
        e.name = name;
        e.size = arr.size();
        e.kissing = check_kissing(arr).valid;
        e.profile = profile_of(arr);
        if (e.size != 40) {
            rep.sizes_ok = false;
            rep.failures.push_back(std::string(name) + " has " + std::to_string(e.size) +
                                   " vectors, expected 40");
        }
        if (!e.kissing) {
            rep.all_kissing = false;
            rep.failures.push_back(std::string(name) + " is not a valid kissing arrangement");
        }
        rep.arrangements.push_back(std::move(e));
    }

    rep.profiles_pairwise_distinct = true;
    for (std::size_t i = 0; i < rep.arrangements.size(); ++i)
        for (std::size_t j = i + 1; j < rep.arrangements.size(); ++j)
            if (rep.arrangements[i].profile == rep.arrangements[j].profile) {
                rep.profiles_pairwise_distinct = false;
                rep.failures.push_back("profiles of " + rep.arrangements[i].name + " and " +
                                       rep.arrangements[j].name + " coincide");
            }

    rep.antipodal_in_newest = antipodal_count(all[2].arr);
    rep.antipodal_ok = rep.antipodal_in_newest == 20;
    if (!rep.antipodal_ok)
        rep.failures.push_back("Q5 has " + std::to_string(rep.antipodal_in_newest) +
                               " antipodal vectors, expected 20");

    for (const auto& e : rep.arrangements)
        if (e.size == 40 && e.kissing)
            rep.bounds.push_back(bound_statement(5, 0, 40) + " (via " + e.name + ")");
    return rep;
}

std::string TheoremReport::str() const {
    std::ostringstream os;
    for (const auto& e : arrangements)
        os << e.name << ": " << e.size << " vectors, "
           << (e.kissing ? "kissing-valid" : "NOT kissing-valid") << "\n"
           << "  profile " << e.profile.str() << "\n";
    os << "profiles pairwise distinct: " << (profiles_pairwise_distinct ? "yes" : "NO") << "\n";
    os << "Q5 antipodal vectors: " << antipodal_in_newest << "\n";
    for (const auto& b : bounds) os << b << "\n";
    if (ok())
        os << "all checks passed\n";
    else
        for (const auto& f : failures) os << "FAILED: " << f << "\n";
    return os.str();
}

} // namespace kiss
