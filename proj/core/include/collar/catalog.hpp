#pragma once

#include "collar/triple.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace collar {

class UnrealizableFamily : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class ExpectedKind {
  CertifiedBracketIntersection,
  CertifiedCurvatureBound,
  ViolationWitness,
  SequenceViolation,
  SphereAction,  ///< transitive sphere action; only the decomposition is checked
  Metadata,      ///< quotient or product built on another entry
  Unrealizable,
};
const char* to_string(ExpectedKind k);

struct ExpectedDims {
  int h = -1, m = -1, s = -1;
  int k0 = -1, h0 = -1, h1 = -1, m1 = -1;
};

struct CatalogEntry {
  std::string id;
  std::string description;
  std::string origin;  ///< which list the entry belongs to
  bool realizable = false;
  int p_min = 0, p_max = 0;  ///< p_max < 0: unbounded
  int p_default = 0;
  int rank = 0;              ///< fiber rank of the bundle, 0 when not applicable
  ExpectedKind expected = ExpectedKind::Unrealizable;
  bool sphere_flag = false;  ///< G/H is covered by a positively curved normal homogeneous sphere
  std::string witness_family;
  std::string reduces_to;    ///< for metadata entries
  std::function<Triple(int)> builder;
  std::function<ExpectedDims(int)> dims;

  bool p_in_range(int p) const { return p >= p_min && (p_max < 0 || p <= p_max); }
};

const std::vector<CatalogEntry>& catalog();
/// Resolves ids and aliases; throws PreconditionError on unknown ids.
const CatalogEntry& find_entry(const std::string& id);

struct EntryRef {
  std::string id;
  int p = 0;
  bool p_given = false;
};
/// Grammar: family-name[:p=<int>].
EntryRef parse_entry(const std::string& text);

/// Filters: rank=<int>, realizable=<true|false>, expected=<certified|violation|sequence|sphere|metadata|unrealizable>.
std::vector<const CatalogEntry*> list_entries(const std::map<std::string, std::string>& filter = {});

/// Throws UnrealizableFamily for entries without a builder.
Triple build(const std::string& id, int p);
Triple build(const EntryRef& ref);

}  // namespace collar
