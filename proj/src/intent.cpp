#include "revkit/intent.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace revkit {

std::string_view to_string(Intent intent) {
  switch (intent) {
    case Intent::kClarity: return "clarity";
    case Intent::kCoherence: return "coherence";
    case Intent::kFluency: return "fluency";
    case Intent::kStyle: return "style";
    case Intent::kNone: return "none";
  }
  return "none";
}

std::optional<Intent> parse_intent(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (Intent i : {Intent::kClarity, Intent::kCoherence, Intent::kFluency,
                   Intent::kStyle, Intent::kNone}) {
    if (lower == to_string(i)) return i;
  }
  return std::nullopt;
}

}  // namespace revkit
