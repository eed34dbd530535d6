#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace revkit {

// Edit-intent classes. The enumerator order is also the tie-break order used
// when resolving conflicting scores (CLARITY wins over COHERENCE, and so on).
enum class Intent : std::uint8_t {
  kClarity = 0,
  kCoherence = 1,
  kFluency = 2,
  kStyle = 3,
  kNone = 4,
};

inline constexpr std::array<Intent, 4> kEditIntents = {
    Intent::kClarity, Intent::kCoherence, Intent::kFluency, Intent::kStyle};

inline constexpr std::size_t kNumIntents = 5;

// Lowercase name, also the tag name: "clarity", ..., "none".
std::string_view to_string(Intent intent);

// Accepts the lowercase or uppercase name. Returns nullopt for anything else,
// including the taxonomy's out-of-scope classes (meaning-changed, other).
std::optional<Intent> parse_intent(std::string_view name);

constexpr std::size_t index_of(Intent intent) {
  return static_cast<std::size_t>(intent);
}

}  // namespace revkit
