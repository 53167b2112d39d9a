#pragma once

// Synthetic university ontologies in the style of the LUBM benchmark, with
// the TypeOfProfessor meta-class extension and the matching query suites.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mser {

struct LubmOptions {
  int universities = 1;
  int departments = 7;  // per university
  std::uint64_t seed = 0;
};

struct NamedQuery {
  std::string name;  // file stem, e.g. "q1", "mq4", "sq1"
  std::string text;
};

struct LubmBundle {
  std::string ontology;   // functional-style syntax
  std::string extension;  // TypeOfProfessor assertions and disjointness
  std::vector<NamedQuery> standard;  // q1..q14
  std::vector<NamedQuery> meta;      // mq1, mq4, mq5, mq10
  std::vector<NamedQuery> special;   // sq1, sq2 (need the extension)

  // ground truth kept by the generator, for tests
  std::vector<std::pair<std::string, std::string>> professors;  // (IRI, rank class IRI)
};

inline constexpr const char* kUbNamespace = "http://swat.cse.lehigh.edu/onto/univ-bench.owl#";

LubmBundle generate_lubm(const LubmOptions& opts = {});

}  // namespace mser
