#pragma once

// Seeded generators for property tests: small acyclic OWL 2 QL ontologies,
// conjunctive queries over their vocabulary, and positive Datalog programs.

#include <cstdint>
#include <random>
#include <vector>

#include "mser/model.hpp"
#include "mser/ontology.hpp"

namespace mser::testkit {

struct OntologyShape {
  int max_classes = 8;
  int max_props = 4;
  int max_individuals = 6;
  int max_tbox = 16;
  int max_abox = 30;
  int max_existentials = 4;
};

/// Normalized, acyclic (chase terminates) ontology. Names are punned: some
/// assertions use class and property names as individuals.
Ontology random_ontology(std::mt19937_64& rng, const OntologyShape& shape = {});

/// 1 to 3 atoms. Half are drawn over the vocabulary, half are abstracted from
/// facts of the canonical model so that they have answers.
ConjunctiveQuery random_query(std::mt19937_64& rng, const Ontology& o);

struct RandomProgram {
  std::vector<Atom> facts;
  std::vector<Rule> rules;
};

/// Safe positive program over a handful of auxiliary predicates.
RandomProgram random_program(std::mt19937_64& rng);

}  // namespace mser::testkit
