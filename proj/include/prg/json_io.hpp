#pragma once

#include <json.hpp>

#include "prg/finitefield.hpp"
#include "prg/relations.hpp"

namespace prg {

// Insertion-ordered JSON keeps the emitted documents stable and readable.
using Json = nlohmann::ordered_json;

/// [num, den]; components are JSON integers when they fit in 64 bits and
/// decimal strings otherwise.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json cyclo_to_json(const CycloElement& x);
CycloElement cyclo_from_json(const Json& j);

Json mat2_to_json(const Mat2& m);
Mat2 mat2_from_json(const Json& j);

Json spec_to_json(const GroupSpec& s);
GroupSpec spec_from_json(const Json& j);

Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json certificate_to_json(const InfinitenessCertificate& c);
InfinitenessCertificate certificate_from_json(const Json& j);

Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json evidence_to_json(const NegativeEvidence& e);
NegativeEvidence evidence_from_json(const Json& j);

Json verdict_to_json(const RelationVerdict& v);
RelationVerdict verdict_from_json(const Json& j);

Json perm_to_json(const SigmaPerm& p);

Json gu29_report_to_json(const Gu29Report& r);

}  // namespace prg
