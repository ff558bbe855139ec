#pragma once

#include "ramseylab/colouring.hpp"
#include "ramseylab/density.hpp"
#include "ramseylab/experiments.hpp"
#include "ramseylab/graph.hpp"
#include "ramseylab/hblocks.hpp"
#include "ramseylab/oracle.hpp"
#include "ramseylab/triangle.hpp"

#include <json.hpp>

namespace ramsey {

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const Graph& host, const EdgeColouring& c);
nlohmann::json to_json(const DensityReport& rep);
nlohmann::json to_json(const ClosedStatus& status);
nlohmann::json to_json(const BlockDecomposition& decomp);
nlohmann::json to_json(const Graph& host, const ColouringTrace& trace);
nlohmann::json to_json(const Graph& host, const Verdict& verdict);
nlohmann::json to_json(const ScanResult& scan);
nlohmann::json to_json(const JansonBound& bound);
nlohmann::json to_json(const TrialReport& report);

}  // namespace ramsey
