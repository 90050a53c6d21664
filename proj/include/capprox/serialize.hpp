#pragma once

#include <string>

#include "capprox/nehari.hpp"
#include "capprox/pipeline.hpp"

#include <json.hpp>

namespace capprox {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const SampledFunction& f);
ordered_json to_json(const AnalyticPolynomial& p);
ordered_json to_json(const TrigCoefficients& c);
ordered_json to_json(const BoundedAnalyticWitness& w);
ordered_json to_json(const DistanceCertificate& cert);
ordered_json to_json(const SimplexWeights& w);
ordered_json to_json(const CombinationResult& r);
ordered_json to_json(const WeakStarReport& r);
ordered_json to_json(const StepRecord& r);
ordered_json to_json(const PipelineReport& r);

SampledFunction sampled_from_json(const ordered_json& j);
AnalyticPolynomial poly_from_json(const ordered_json& j);
BoundedAnalyticWitness witness_from_json(const ordered_json& j);
SequenceProvider sequence_from_json(const ordered_json& j);

// CSV twins of the two reports: weak-star rows are members, columns are the
// monomial indices; pipeline rows are steps.
std::string weakstar_csv(const WeakStarReport& r);
std::string pipeline_csv(const PipelineReport& r);

std::string format_double(double v);  // shortest round-trip form

ordered_json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace capprox
