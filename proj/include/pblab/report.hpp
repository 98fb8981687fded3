#pragma once

#include "pblab/blowup.hpp"
#include "pblab/chow.hpp"
#include "pblab/geometry.hpp"
#include "pblab/sampler.hpp"

#include <json.hpp>

namespace pblab {

/// Insertion-ordered JSON so reports are byte-stable for a fixed input.
using Json = nlohmann::ordered_json;

Json to_json(const SchemeMetrics& m);
Json to_json(const ChernPair& c);
Json to_json(const StabilityVerdict& v);
Json to_json(const TripleReport& r);
Json to_json(const SmoothnessReport& r);
Json to_json(const BlowupReport& r);
Json to_json(const SampleStats& s);

/// The chow block the CLI reports for a given n: the sequence invariants
/// plus the degree identity and the two cubic intersection forms.
Json chow_block(int n, int equiv_bound);

} // namespace pblab
