#include "brauerlie/report.hpp"

#include "brauerlie/envelope/karoubi.hpp"

namespace brauerlie {

void Report::add(std::string identity, bool passed, std::string detail, std::optional<Json> residual) {
  entries_.push_back({std::move(identity), passed, std::move(residual), std::move(detail)});
}

void Report::add_residual(std::string identity, const KarMorphism& residual) {
  bool ok = residual.is_zero();
  add(std::move(identity), ok, {}, ok ? std::nullopt : std::optional<Json>(brauerlie::to_json(residual)));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& e : other.entries_) {
    Entry c = e;
    if (!prefix.empty()) c.identity = prefix + ": " + c.identity;
    entries_.push_back(std::move(c));
  }
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& e : entries_) n += !e.passed;
  return n;
}

const Report::Entry* Report::find(const std::string& identity) const {
  for (const auto& e : entries_)
    if (e.identity == identity) return &e;
  return nullptr;
}

Json Report::to_json() const {
  Json a = Json::array();
  for (const auto& e : entries_) {
    Json j;
    j["identity"] = e.identity;
    j["status"] = e.passed ? "pass" : "fail";
    if (!e.detail.empty()) j["detail"] = e.detail;
    if (e.residual) j["residual"] = *e.residual;
    a.push_back(j);
  }
  return a;
}

}  // namespace brauerlie
