#pragma once

#include "plumbhf/analysis.hpp"
#include "plumbhf/contact.hpp"

#include <json.hpp>

#include <string>

namespace plumbhf {

using Json = nlohmann::ordered_json;

Json graph_json(const PlumbingGraph& g);
Json validation_json(const ValidationReport& v);
Json module_json(const HFPlusModule& m);
Json hf_json(const Analysis& a);
Json contact_json(const ContactReport& r, const Analysis& a);

// e.g. "T+(-15/8) + F(1/8)"; length r > 1 prints F^r(bottom).
std::string module_notation(const HFPlusModule& m);

std::string validation_text(const PlumbingGraph& g, const ValidationReport& v);
std::string hf_text(const Analysis& a);
std::string contact_text(const ContactReport& r, const Analysis& a);

}  // namespace plumbhf
