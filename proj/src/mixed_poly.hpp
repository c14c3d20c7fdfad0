#pragma once

// Intermediate state of iterated pushforward along forgetful maps. Not part
// of the public API.

#include "kappa/partition.hpp"
#include "kappa/rational.hpp"

#include <map>
#include <vector>

namespace kappa::detail {

struct MixedMonomial {
    Partition kappa;          // prod kappa_{a}, all a >= 1
    std::vector<int> psi;     // exponents of psi on the forgettable markings

    bool operator<(const MixedMonomial& o) const
    {
        if (psi != o.psi)
            return psi < o.psi;
        return PartitionOrder{}(kappa, o.kappa);
    }
    bool operator==(const MixedMonomial&) const = default;
};

/// A polynomial in kappa classes and psi classes of r forgettable markings
/// on a space whose fully forgotten base has kappa_0 = c0. The current space
/// has kappa_0 = c0 + r.
struct MixedPoly {
    int c0 = 1;
    int forgettable = 0;
    std::map<MixedMonomial, Rational> terms;

    void add(MixedMonomial m, const Rational& c);
};

/// Pushforward along forgetting the last forgettable marking.
MixedPoly forget_one(const MixedPoly& m);

}  // namespace kappa::detail
