#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brauerlie/diagram/render.hpp"

namespace brauerlie {

class KarMorphism;

// Outcome of a batch of identity checks.
class Report {
 public:
  struct Entry {
    std::string identity;
    bool passed;
    std::optional<Json> residual;
    std::string detail;
  };

  void add(std::string identity, bool passed, std::string detail = {}, std::optional<Json> residual = std::nullopt);
  // Passes iff the residual is the zero morphism.
  void add_residual(std::string identity, const KarMorphism& residual);
  void merge(const Report& other, const std::string& prefix = {});

  bool passed() const;
  std::size_t size() const { return entries_.size(); }
  std::size_t failures() const;
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry* find(const std::string& identity) const;
  Json to_json() const;

 private:
  std::vector<Entry> entries_;
};

}  // namespace brauerlie
