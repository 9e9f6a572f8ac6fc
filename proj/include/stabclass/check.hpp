#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace stabclass {

/// One verified statement with the instances it was checked on and any
/// counterexamples found.
struct CheckItem {
  CheckItem() = default;
  explicit CheckItem(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::vector<std::string> witnesses;

  void fail(std::string witness) {
    passed = false;
    witnesses.push_back(std::move(witness));
  }
};

struct CheckReport {
  std::string title;
  std::vector<CheckItem> items;
  /// Non-empty when a precondition failed and nothing was checked.
  std::string skipped;

  bool passed() const {
    return skipped.empty() && std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
  }
  CheckItem* item(const std::string& name) {
    for (auto& i : items) {
      if (i.name == name) return &i;
    }
    return nullptr;
  }
};

}  // namespace stabclass
