#pragma once

// JSON renderings of results. Every command prints
// {command, inputs, result, evidence, timing_ms}.

#include <string>

#include <json.hpp>

#include "wpl/functor_calculus.hpp"
#include "wpl/hom.hpp"
#include "wpl/tilting.hpp"

namespace wpl {

using json = nlohmann::ordered_json;

json to_json(const BundleSum& s);
json to_json(const StableHomResult& r);
json to_json(const GluingStep& s);
json to_json(const TiltingReport& r);
json to_json(const Assembly& a);
json to_json(const CuboidTrace& t);
json to_json(const Quiver& q);
json to_json(const Crosscheck& c);

/// Hom between two catalog objects; mode "coherent" or "stable".
struct HomReport {
    std::string source;
    std::string target;
    std::string mode;
    int dimension = 0;
    int window = 0;
    bool stable_window_check = true;
};

json to_json(const HomReport& r);

json envelope(const std::string& command, json inputs, json result, json evidence, double timing_ms);

}  // namespace wpl
