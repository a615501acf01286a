#include "psychoprobe/questionnaire.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "psychoprobe/errors.hpp"

namespace psychoprobe {

using nlohmann::json;

std::optional<Factor> factor_from_code(std::string_view code) {
  for (Factor f : all_factors) {
    if (factor_code(f) == code) return f;
  }
  return std::nullopt;
}

const Item& QuestionnaireBank::item_by_index(int index) const {
  for (const auto& it : items) {
    if (it.index == index) return it;
  }
  throw MalformedBank("no item with index " + std::to_string(index));
}

const Item& QuestionnaireBank::normal_item(Factor f) const {
  for (const auto& it : items) {
    if (it.factor == f && !it.reversed) return it;
  }
  throw MalformedBank("no normal item for factor " + std::string(factor_code(f)));
}

const Item& QuestionnaireBank::reversed_item(Factor f) const {
  for (const auto& it : items) {
    if (it.factor == f && it.reversed) return it;
  }
  throw MalformedBank("no reversed item for factor " + std::string(factor_code(f)));
}

namespace {

void validate_bank(const QuestionnaireBank& bank) {
  if (bank.language.empty()) throw MalformedBank("missing language tag");
  if (bank.instruction_blocks.size() != kInstructionBlockCount) {
    throw MalformedBank("expected " + std::to_string(kInstructionBlockCount) +
                        " instruction blocks, got " +
                        std::to_string(bank.instruction_blocks.size()));
  }
  if (bank.items.size() != 10) {
    throw MalformedBank("expected 10 items, got " + std::to_string(bank.items.size()));
  }
  std::array<bool, 10> seen{};
  for (const auto& it : bank.items) {
    if (it.index < 1 || it.index > 10) throw MalformedBank("item index out of range");
    if (seen[it.index - 1]) throw MalformedBank("duplicate item index " + std::to_string(it.index));
    seen[it.index - 1] = true;
    if (it.text.empty()) throw MalformedBank("item " + std::to_string(it.index) + " has empty text");
  }
  for (Factor f : all_factors) {
    int total = 0;
    int reversed = 0;
    for (const auto& it : bank.items) {
      if (it.factor == f) {
        ++total;
        if (it.reversed) ++reversed;
      }
    }
    if (total != 2 || reversed != 1) {
      throw MalformedBank("factor " + std::string(factor_code(f)) +
                          " must have exactly 2 items with exactly 1 reversed");
    }
  }
  if (bank.anchors.size() != 7) {
    throw MalformedBank("expected 7 scale anchors, got " + std::to_string(bank.anchors.size()));
  }
  std::array<bool, 7> anchor_seen{};
  for (const auto& a : bank.anchors) {
    if (a.value < 1 || a.value > 7) throw MalformedBank("anchor value out of range");
    if (anchor_seen[a.value - 1]) throw MalformedBank("duplicate anchor value " + std::to_string(a.value));
    anchor_seen[a.value - 1] = true;
  }
}

} // namespace

QuestionnaireBank load_bank(std::istream& source, std::string_view language) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::exception& e) {
    throw MalformedBank(std::string("bank document is not valid JSON: ") + e.what());
  }
  QuestionnaireBank bank;
  try {
    bank.language = doc.at("language").get<std::string>();
    for (const auto& b : doc.at("instruction_blocks")) {
      bank.instruction_blocks.push_back(b.get<std::string>());
    }
    for (const auto& j : doc.at("items")) {
      Item it;
      it.index = j.at("index").get<int>();
      it.text = j.at("text").get<std::string>();
      const auto code = j.at("factor").get<std::string>();
      const auto f = factor_from_code(code);
      if (!f) throw MalformedBank("unknown factor code '" + code + "'");
      it.factor = *f;
      it.reversed = j.at("reversed").get<bool>();
      bank.items.push_back(it);
    }
    for (const auto& j : doc.at("anchors")) {
      bank.anchors.push_back({j.at("value").get<int>(), j.at("label").get<std::string>()});
    }
  } catch (const json::exception& e) {
    throw MalformedBank(std::string("bank document schema violation: ") + e.what());
  }
  std::sort(bank.items.begin(), bank.items.end(),
            [](const Item& a, const Item& b) { return a.index < b.index; });
  std::sort(bank.anchors.begin(), bank.anchors.end(),
            [](const ScaleAnchor& a, const ScaleAnchor& b) { return a.value < b.value; });
  validate_bank(bank);
  if (!language.empty() && bank.language != language) {
    throw MalformedBank("bank language '" + bank.language + "' does not match requested '" +
                        std::string(language) + "'");
  }
  return bank;
}

QuestionnaireBank load_bank_file(const std::filesystem::path& path, std::string_view language) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot open bank file " + path.string());
  return load_bank(in, language);
}

std::string serialize_bank(const QuestionnaireBank& bank) {
  json doc;
  doc["language"] = bank.language;
  doc["instruction_blocks"] = bank.instruction_blocks;
  auto items = json::array();
  for (const auto& it : bank.items) {
    items.push_back({{"index", it.index},
                     {"text", it.text},
                     {"factor", std::string(factor_code(it.factor))},
                     {"reversed", it.reversed}});
  }
  doc["items"] = items;
  auto anchors = json::array();
  for (const auto& a : bank.anchors) {
    anchors.push_back({{"value", a.value}, {"label", a.label}});
  }
  doc["anchors"] = anchors;
  return doc.dump(2);
}

std::string render_prompt(const QuestionnaireBank& bank) {
  const auto& b = bank.instruction_blocks;
  std::ostringstream out;
  // opening chain: framing, rating demand, completeness demand flow as one
  // paragraph (the completeness block carries the "I see myself as:" bridge)
  out << b[0] << ' ' << b[1] << ' ' << b[2] << "\n\n";
  for (const auto& it : bank.items) {
    out << it.index << ". _____ " << it.text << '\n';
  }
  out << '\n' << b[3] << "\n\n";
  for (const auto& a : bank.anchors) {
    out << a.value << " = " << a.label << '\n';
  }
  out << '\n' << b[4] << "\n\n" << b[5] << "\n\n" << b[6] << "\n\n" << b[7];
  return out.str();
}

} // namespace psychoprobe
