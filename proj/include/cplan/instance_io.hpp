#pragma once

#include "cplan/model.hpp"

#include <string>

namespace cplan {

// `strips v1` text format. Parse errors throw ParseError with a line number.
StripsInstance parse_instance(const std::string &text);
StripsInstance read_instance_file(const std::string &path);
std::string write_instance(const StripsInstance &p);

// One action name per line, `#` comments.
Plan parse_plan(const std::string &text);
Plan read_plan_file(const std::string &path);
std::string write_plan(const Plan &plan);

// Size in bits of the instance in the text format.
std::uint64_t instance_bits(const StripsInstance &p);

std::string read_text_file(const std::string &path);

}  // namespace cplan
