#pragma once

#include <cstdint>
#include <string>

#include "trophyp/json_io.hpp"

namespace trophyp::cli {

inline constexpr const char* kVersion = "trophyp 0.1.0";

struct Context {
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// Command result: the JSON document and the exit code (0 pass, 1 fail).
struct Outcome {
  Json doc;
  int code = 0;
};

Outcome verdict(const Context& ctx, const std::string& check, const std::string& result, Json certificate = Json::object());
Outcome value(const Context& ctx, const std::string& check, Json result);

Json load_input(const std::string& path);  // "-" reads standard input
Complex complex_from_json(const Json& j);

/// Re-checks the certificate of a failing verdict using only its contents.
Outcome verify_certificate(const Context& ctx, const Json& cert);

int run(int argc, char** argv);

}  // namespace trophyp::cli
