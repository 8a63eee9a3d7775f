// report_json.hpp - JSON and CSV renderings of reports. Rationals appear as
// separate numerator and denominator integers plus a display-only decimal.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "planardist/bounds.hpp"
#include "planardist/classify.hpp"
#include "planardist/discrepancy.hpp"
#include "planardist/distance.hpp"
#include "planardist/families.hpp"
#include "planardist/lemmas.hpp"
#include "planardist/sweep.hpp"

namespace planardist {

using Json = nlohmann::ordered_json;

// {"num": p, "den": q, "decimal": p/q}
Json rational_json(const Rational& r);
// Accepts the object above (the decimal is ignored).
Rational rational_from_json(const Json& j);

Json flags_json(const ClassFlags& f);

Json params_json(const Graph& g, const ParamSummary& p, int kappa);
std::string params_csv(const Graph& g, const ParamSummary& p, int kappa);
std::string params_text(const Graph& g, const ParamSummary& p, int kappa);

Json bound_report_json(const BoundReport& r);
std::string bound_report_csv(const BoundReport& r);
std::string bound_report_text(const BoundReport& r);

Json closed_forms_json(const ClosedForms& f, const LabeledGraph& g, const ParamSummary& computed);

Json lemma_reports_json(const Graph& g, LemmaId id, const std::vector<LemmaReport>& reports);

Json discrepancy_json(const std::vector<DiscrepancyItem>& items, const std::string& breach);

// Timing is left out unless requested so that reports are byte-identical
// across runs.
Json sweep_json(const SweepReport& r, bool include_timing = false);
std::string sweep_csv(const SweepReport& r);
Json level_json(const LevelReport& l);
LevelReport level_from_json(const Json& j);

}  // namespace planardist
