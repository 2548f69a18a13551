#pragma once

#include <string>
#include <vector>

#include "brauerlie/exactmath/rational.hpp"
#include "brauerlie/report.hpp"

namespace brauerlie {

// One expected value; kind is "claim" for values stated in the source
// computation and "consistency" for values that follow from them.
struct Expectation {
  std::string key;
  Json value;
  std::string kind;
};

struct ManifestEntry {
  std::string id;
  std::string description;
  std::vector<Expectation> expected;
};

const std::vector<ManifestEntry>& reproduction_manifest();
const ManifestEntry& manifest_entry(const std::string& id);

struct ReproOptions {
  int degree_bound = 2;
  Rational a = Rational(0), b = Rational(1);  // c-minus-1 parameters
};

struct ReproResult {
  std::string id;
  Json computed;
  Report report;  // one entry per expectation
  Json to_json() const;
};

// id is a manifest id; "all" is handled by run_all_reproductions.
ReproResult run_reproduction(const std::string& id, const ReproOptions& opt = {});
std::vector<ReproResult> run_all_reproductions(const ReproOptions& opt = {});

// Scalar c with f - id = c·A3, if there is one.
std::optional<Rational> antisymmetrizer_coefficient(const KarMorphism& f);

}  // namespace brauerlie
