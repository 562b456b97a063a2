#pragma once

#include <string>

#include "json.hpp"

#include "hopfforms/cyclotomic.hpp"
#include "hopfforms/etale.hpp"
#include "hopfforms/hopf_algebra.hpp"
#include "hopfforms/polynomial.hpp"
#include "hopfforms/regular.hpp"
#include "hopfforms/theta.hpp"
#include "hopfforms/wedderburn.hpp"

// JSON certificates: every number that could be a non-integer rational is a
// "num/den" string (or "num" when integral), so any consumer reads them
// exactly. Serialization uses ordered_json throughout, so key order is fixed
// by construction and equal inputs dump to identical bytes.
namespace hopfforms::cert {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

json rat_json(const Rat& r);
Rat rat_from_json(const json& j);
json qvec_json(const QVec& v);
QVec qvec_from_json(const json& j);

// Lowest degree first.
json poly_json(const QPoly& p);
json cyc_json(const CycElem& e);

json perm_json(const Perm& p);
json group_json(const FiniteGroup& g);
json subgroup_json(const RegularSubgroup& n);
json conjugation_json(const ConjugationAction& ca);

json galois_json(const GaloisAlgebra& l);
json galois_check_json(const GaloisCheck& c);

// {"dim", "mult": [[i,j,k,"c"]...], "comult": [[i,j,k,"c"]...],
//  "counit": [...], "antipode": [[...]], "labels": [...]}
json hopf_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_json(const json& j);

json wedderburn_json(const WedderburnDecomposition& d);
json abss_json(const AbsSemisimpleCertificate& c);

json fixed_ring_json(const FixedRing& h);
json invariant_json(const InvariantRecord& r);
json hopf_action_json(const HopfActionCheck& c);
json preimage_json(const PreimageResult& p);
json q8c8_json(const Q8C8Preimage& p);
json greither_json(const GreitherForm& g);
json greither_preimage_json(const GreitherPreimage& g);

// True when every boolean reachable from the value (flags at any depth) is
// true: the "all verification flags hold" gate for exit status 0.
bool all_flags_true(const json& j);

// Reconstructs the presentation under "hopf" (or the value itself) and
// re-runs the Hopf axioms: loaded certificates stay verifiable.
bool reverify_hopf(const json& cert);

// Two-space indentation, trailing newline; byte-stable for equal values.
std::string dump_certificate(const json& j);

}  // namespace hopfforms::cert
