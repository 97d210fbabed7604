#pragma once

#include <string>

#include "json.hpp"

#include "galcov/artal.hpp"
#include "galcov/artal_numeric.hpp"
#include "galcov/cover.hpp"
#include "galcov/curve.hpp"
#include "galcov/equivalence.hpp"
#include "galcov/graph.hpp"
#include "galcov/group.hpp"

namespace galcov {

// JSON (de)serialization for every value the tool reads or writes.  Loaders
// throw invalid_argument with a message naming the offending field; emitters
// produce values whose dump is byte-deterministic (nlohmann objects keep keys
// sorted, numbers print in shortest round-trip form).

using json = nlohmann::json;

// {"kind":"cyclic","m":6} | {"kind":"symmetric","n":3}
// | {"kind":"table","labels":[...],"table":[[...]],"identity":0}
GroupPtr group_from_json(const json& j);
json group_to_json(const GroupPtr& g);  // uses the most specific kind that matches

// {"vertices":["a",...],"edges":[{"id":"e","init":"a","term":"b"},...]}
Multigraph graph_from_json(const json& j);
json graph_to_json(const Multigraph& g);

// {"start":"a","steps":[{"edge":"e","dir":"+"},...]}
Walk walk_from_json(const json& j, const Multigraph& g);
json walk_to_json(const Walk& w);

// {"group":...,"base":...,"total":...,
//  "phi":{"vertices":{total:base},"edges":{total:base}},
//  "action":{"<element label>":{"vertices":{...},"edges":{...}},...}}
// Listed action elements must generate the group; the loader completes the
// rest by composition and leaves axiom checking to validate_cover.
Cover cover_from_json(const json& j);
json cover_to_json(const Cover& c);  // emits the full action table

// {"components":[{"id":"C1","degree":6},...],
//  "points":[{"id":"P1","branches":[{"component":"C1"},...]},...]}
// A document {"curve":{...},"splitting":{...}} is also accepted (the loader
// descends into "curve"), so one file can feed both this and the splitting
// loader.
CurveCombinatorics curve_from_json(const json& j);
json curve_to_json(const CurveCombinatorics& cc);

// {"m":2,"s":{"C1":2},"offsets":{"P1":[0,1]}}
// Accepts the same combined document as curve_from_json (descends into
// "splitting").
CyclicSplittingData splitting_data_from_json(const json& j);
json splitting_data_to_json(const CyclicSplittingData& d);

// {"images":{"[0]":"[0]","[1]":"[2]",...}} with respect to a known group
GroupAutomorphism automorphism_from_json(const json& j, const GroupPtr& g);
json automorphism_to_json(const GroupAutomorphism& tau);

// {"d":3,"partitions":[[3],[3],[3]],"beta":1,
//  "c":[[{"re":1.0,"im":0.0}],...],
//  "g0":{"terms":[{"exp":[0,0,0],"re":0.0,"im":0.0},...]}}   (g0 optional)
ArtalCoefficients coefficients_from_json(const json& j);
json coefficients_to_json(const ArtalCoefficients& a);

// Result emitters (tool output only, no loaders).
json validation_report_to_json(const ValidationReport& r);
json subset_to_json(const GroupSubset& s);
json subset_class_to_json(const SubsetClass& c);
json coset_to_json(const CycloCoset& c);
json artal_class_to_json(const ArtalClass& a);
json artal_type_to_json(const ArtalType& t);
// Witness maps are spelled out with vertex/edge ids of the covers involved.
json verdict_to_json(const Verdict& v, const Cover& c1, const Cover& c2);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);
// 2-space indent plus trailing newline; the one dump format used everywhere.
std::string dump_json(const json& j);

}  // namespace galcov
