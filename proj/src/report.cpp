#include "stabclass/report.hpp"

namespace stabclass {

Json profile_json(const FixedPointProfile& profile) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < profile.subgroups.size(); ++i) {
    entries.push_back({{"subgroup", describe_subgroup(profile.subgroups[i])}, {"fixed", profile.counts[i]}});
  }
  return entries;
}

Json check_json(const CheckReport& report) {
  Json items = Json::array();
  for (const auto& item : report.items) {
    items.push_back({{"name", item.name},
                     {"passed", item.passed},
                     {"checked", item.checked},
                     {"witnesses", item.witnesses}});
  }
  Json out{{"title", report.title}, {"passed", report.passed()}};
  if (!report.skipped.empty()) out["skipped"] = report.skipped;
  out["items"] = std::move(items);
  return out;
}

namespace {

Json comparison_json(const ModuleComparison& c) {
  return {{"sizes", {c.size_a, c.size_b}},
          {"iso", c.verdict.isomorphic},
          {"profiles", {{"a", profile_json(c.verdict.x)}, {"b", profile_json(c.verdict.y)}}}};
}

}  // namespace

Json per_q_json(const Verdict& verdict) {
  Json rows = Json::array();
  for (const auto& row : verdict.per_q) {
    Json r{{"q", row.name}, {"order", row.q->order()}, {"inj_range", row.inj_range}};
    if (row.inj) {
      r["inj_sizes"] = {row.inj->size_a, row.inj->size_b};
      r["cen_sizes"] = {row.cen_a, row.cen_b};
      r["profiles"] = {{"a", profile_json(row.inj->verdict.x)}, {"b", profile_json(row.inj->verdict.y)}};
      r["iso"] = row.inj->verdict.isomorphic;
    } else {
      r["inj_sizes"] = nullptr;
      r["cen_sizes"] = nullptr;
      r["profiles"] = nullptr;
      r["iso"] = nullptr;
    }
    r["rep"] = comparison_json(row.rep);
    rows.push_back(std::move(r));
  }
  return rows;
}

Json verdict_json(const Verdict& verdict) {
  Json witnesses = Json::array();
  for (const auto& w : verdict.witnesses) witnesses.push_back({{"q", w.q}, {"diff", w.diff}});
  return {{"equivalent", verdict.equivalent},
          {"prime", verdict.prime},
          {"criterion", verdict.equivalent ? "holds" : "fails"},
          {"witnesses", std::move(witnesses)},
          {"rep_equivalent_tested_range", verdict.rep_equivalent},
          {"rep_inj_consistent", verdict.rep_inj_consistent}};
}

Json report_document(const std::vector<std::string>& command, Json inputs, Json verdict, Json per_q, Json props,
                     Json lemmas) {
  Json doc;
  doc["command"] = command;
  doc["inputs"] = std::move(inputs);
  doc["verdict"] = std::move(verdict);
  doc["per_q"] = std::move(per_q);
  doc["props"] = std::move(props);
  doc["lemmas"] = std::move(lemmas);
  return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace stabclass
