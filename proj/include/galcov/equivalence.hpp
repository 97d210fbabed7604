#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "galcov/cover.hpp"
#include "galcov/isomorphism.hpp"

namespace galcov {

// Net voltage signature of a cover: for every walk length, the multiset of
// net voltage classes of all simple closed base walks of that length
// (rotations and reversals each counted).  Classes are stored as canonical
// member lists, sorted, so two signatures compare by value.
struct NVSignature {
    GroupPtr group;
    std::map<int, std::vector<std::vector<int>>> by_length;

    bool same_as(const NVSignature& rhs) const { return by_length == rhs.by_length; }
};

NVSignature nv_signature(const Cover& c);
// Signature with every class replaced by its tau-image.
NVSignature transform_signature(const GroupAutomorphism& tau, const NVSignature& sig);

struct SignatureMismatch {
    int length = 0;
    std::vector<std::string> class_labels;  // canonical members of the offending class
    int count1 = 0;                         // multiplicity in tau(sig(c1))
    int count2 = 0;                         // multiplicity in sig(c2)
};

struct EquivalenceWitness {
    GraphMap theta;        // base1 -> base2
    GraphMap theta_tilde;  // total1 -> total2
};

struct Verdict {
    enum class Kind { Distinguished, Inconclusive, Equivalent };
    Kind kind = Kind::Inconclusive;
    std::string detail;
    std::optional<SignatureMismatch> mismatch;  // set for signature-based Distinguished
    std::optional<EquivalenceWitness> witness;  // set for Equivalent
};

// Sound one-sided test via signatures: Distinguished means no equivalence
// with this tau exists (whatever theta); Inconclusive means the signatures
// agree and nothing was decided.
Verdict distinguish(const Cover& c1, const Cover& c2, const GroupAutomorphism& tau);

struct SearchLimits {
    int max_base_vertices = 12;
    int max_total_vertices = 72;
};

class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Checks a proposed witness against the definition of equivalence: theta and
// theta_tilde bijective graph maps, phi2 o theta_tilde = theta o phi1, and
// theta_tilde(g.x) = tau(g).theta_tilde(x) on vertices and edges.  Returns an
// empty string on success, otherwise the first violated condition.
std::string check_equivalence_witness(const Cover& c1, const Cover& c2,
                                      const GroupAutomorphism& tau,
                                      const EquivalenceWitness& w);

// Complete search over base isomorphisms theta (optionally restricted by
// vertex classes) and equivariant lifts theta_tilde.  Returns Equivalent with
// the first witness found (verified), or Distinguished when the search space
// is exhausted.  Throws resource_limit_error when the graphs exceed limits.
Verdict exhaustive_equivalence(const Cover& c1, const Cover& c2,
                               const GroupAutomorphism& tau,
                               const SearchLimits& limits = {},
                               const std::optional<VertexClassConstraint>& classes = {});

}  // namespace galcov
