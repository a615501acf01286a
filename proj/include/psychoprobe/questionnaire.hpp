#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "psychoprobe/factor.hpp"

namespace psychoprobe {

struct Item {
  int index = 0; // 1..10
  std::string text;
  Factor factor = Factor::Openness;
  bool reversed = false;

  bool operator==(const Item&) const = default;
};

struct ScaleAnchor {
  int value = 0; // 1..7
  std::string label;

  bool operator==(const ScaleAnchor&) const = default;
};

// Instruction block roles, in file order: framing, rating demand,
// completeness demand, scale intro, numeric demand, count demand,
// explanation demand, list trigger.
inline constexpr std::size_t kInstructionBlockCount = 8;

struct QuestionnaireBank {
  std::string language; // BCP-47 tag
  std::vector<std::string> instruction_blocks; // exactly 8
  std::vector<Item> items;                     // exactly 10, sorted by index
  std::vector<ScaleAnchor> anchors;            // exactly 7, sorted by value

  const Item& item_by_index(int index) const;
  const Item& normal_item(Factor f) const;
  const Item& reversed_item(Factor f) const;

  bool operator==(const QuestionnaireBank&) const = default;
};

// Loads and validates a bank document (JSON, see banks/). The language tag,
// when non-empty, must match the document. Throws MalformedBank.
QuestionnaireBank load_bank(std::istream& source, std::string_view language = {});
QuestionnaireBank load_bank_file(const std::filesystem::path& path, std::string_view language = {});

std::string serialize_bank(const QuestionnaireBank& bank);

// Renders the assessment prompt: instruction chain, numbered items with
// blank markers, the rating scale, and the trailing list trigger. Pure
// function of the bank.
std::string render_prompt(const QuestionnaireBank& bank);

} // namespace psychoprobe
