#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace psychoprobe {

// Big Five factor, with Neuroticism measured as its inverse (Emotional
// Stability). Order matches the scored-cases CSV column order.
enum class Factor { Openness, Conscientiousness, Extraversion, Agreeableness, EmotionalStability };

inline constexpr std::size_t kFactorCount = 5;

inline constexpr std::array<Factor, kFactorCount> all_factors = {
    Factor::Openness, Factor::Conscientiousness, Factor::Extraversion,
    Factor::Agreeableness, Factor::EmotionalStability};

constexpr std::string_view factor_code(Factor f) {
  switch (f) {
  case Factor::Openness: return "O";
  case Factor::Conscientiousness: return "C";
  case Factor::Extraversion: return "E";
  case Factor::Agreeableness: return "A";
  case Factor::EmotionalStability: return "ES";
  }
  return "?";
}

constexpr std::string_view factor_name(Factor f) {
  switch (f) {
  case Factor::Openness: return "Openness";
  case Factor::Conscientiousness: return "Conscientiousness";
  case Factor::Extraversion: return "Extraversion";
  case Factor::Agreeableness: return "Agreeableness";
  case Factor::EmotionalStability: return "Emotional Stability";
  }
  return "?";
}

std::optional<Factor> factor_from_code(std::string_view code);

constexpr std::size_t factor_index(Factor f) { return static_cast<std::size_t>(f); }

} // namespace psychoprobe
