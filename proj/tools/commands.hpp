#pragma once

#include <optional>
#include <string>

#include "cli.hpp"

namespace trophyp::cli {

Outcome cmd_var(const Context& ctx, const std::string& vec, bool closure);
Outcome cmd_grassmannian(const Context& ctx, const Json& in);
Outcome cmd_linear_hyp(const Context& ctx, const Json& in);
Outcome cmd_matroid(const Context& ctx, const std::string& action, const Json& in);
Outcome cmd_positroid(const Context& ctx, const Json& in);
Outcome cmd_bergman(const Context& ctx, const std::string& action, const Json& in, std::optional<int> dim,
                    const std::string& weight);
Outcome cmd_poly(const Context& ctx, const std::string& action, const Json& in, const std::string& weight, int trials);
Outcome cmd_curve(const Context& ctx, const std::string& action, const Json& in, const std::string& roots, int trials,
                  std::optional<int> bound);
Outcome cmd_preservers(const Context& ctx, int n, int c);
Outcome cmd_linear_preserver(const Context& ctx, const Json& in, int c);
Outcome cmd_toric(const Context& ctx, const Json& in, int trials);
Outcome cmd_catalog(const Context& ctx, int n, std::optional<int> d);
Outcome cmd_plot(const Context& ctx, const Json& in, const std::string& out_path);

}  // namespace trophyp::cli
