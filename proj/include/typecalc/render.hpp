#pragma once

#include <string>
#include <vector>

#include "typecalc/classification.hpp"
#include "typecalc/enumeration.hpp"
#include "typecalc/report.hpp"

namespace typecalc {

enum class RenderFormat { text, csv, json, latex };

RenderFormat render_format_from_string(const std::string& name);

std::string render_primitives(const PrimitiveCatalogue& catalogue, RenderFormat format);
std::string render_age_one(const AgeOneCatalogue& catalogue, RenderFormat format);
std::string render_reports(const std::vector<VerificationReport>& reports, RenderFormat format);

}  // namespace typecalc
