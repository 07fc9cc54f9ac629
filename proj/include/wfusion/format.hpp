#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "wfusion/extension.hpp"
#include "wfusion/grading.hpp"

namespace wfusion {

/// Weight grammar: "g*e + u + v*am" with any term omissible; "e" is the
/// formal generic symbol, "am" the lattice generator alpha_minus.
WeightValue parse_weight(int p, const std::string& text);
std::string weight_str(const WeightValue& w);
std::string qalpha_str(const QAlpha& x);

/// Singlet grammar: M[r,s], F[w], P[r,s].
SingletLabel parse_singlet_label(int p, const std::string& text);
std::string singlet_label_str(const SingletLabel& l);
std::string singlet_object_str(const SingletObject& obj);

/// Extension grammar: W[r,s,l], E[w,l], Q[r,s,l]; parsed labels are canonical.
ALabel parse_alabel(const ExtensionData& ext, const std::string& text);
std::string alabel_str(const ALabel& l);

/// "m1*L1 (+) m2*L2 (+) ..."; "0" for the empty object.
std::string formal_str(const FormalObject& obj);

nlohmann::json weight_json(const WeightValue& w);
nlohmann::json alabel_json(const ALabel& l);
nlohmann::json formal_json(const FormalObject& obj);
nlohmann::json report_json(const GradingReport& rep);
std::string report_text(const GradingReport& rep);

std::string render_csv(const std::vector<std::vector<std::string>>& rows);
std::string render_markdown(const std::vector<std::vector<std::string>>& rows);

} // namespace wfusion
