#include "collar/catalog.hpp"
#include "collar/triple.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace collar;

namespace {

std::set<std::string> ids(const std::vector<const CatalogEntry*>& v) {
  std::set<std::string> out;
  for (const auto* e : v) out.insert(e->id);
  return out;
}

void expect_dims(const CatalogEntry& e, int p) {
  const Decomposition d = decompose(build(e.id, p));
  const ExpectedDims x = e.dims(p);
  const std::string tag = e.id + " p=" + std::to_string(p);
  if (x.h >= 0) EXPECT_EQ(d.triple.h.dim(), x.h) << tag;
  if (x.m >= 0) EXPECT_EQ(d.m.dim(), x.m) << tag;
  if (x.s >= 0) EXPECT_EQ(d.s.dim(), x.s) << tag;
  if (x.k0 >= 0) EXPECT_EQ(d.k0.dim(), x.k0) << tag;
  if (x.h0 >= 0) EXPECT_EQ(d.h0.dim(), x.h0) << tag;
  if (x.h1 >= 0) EXPECT_EQ(d.h1.dim(), x.h1) << tag;
  if (x.m1 >= 0) EXPECT_EQ(d.m1.dim(), x.m1) << tag;
}

}  // namespace

TEST(Catalog, IdsAreUniqueAndWellFormed) {
  std::set<std::string> seen;
  for (const CatalogEntry& e : catalog()) {
    EXPECT_TRUE(seen.insert(e.id).second) << e.id;
    EXPECT_FALSE(e.origin.empty()) << e.id;
    EXPECT_EQ(e.realizable, static_cast<bool>(e.builder)) << e.id;
    if (e.realizable) EXPECT_TRUE(e.p_in_range(e.p_default)) << e.id;
    if (e.expected == ExpectedKind::Metadata) EXPECT_NO_THROW(find_entry(e.reduces_to)) << e.id;
  }
}

TEST(Catalog, RoundTripDims) {
  for (const CatalogEntry& e : catalog()) {
    if (!e.realizable || !e.dims) continue;
    expect_dims(e, e.p_default);
    if (e.p_max < 0 || e.p_max > e.p_default) expect_dims(e, e.p_default + 1);
  }
}

TEST(Catalog, BuiltTriplesValidate) {
  for (const CatalogEntry& e : catalog())
    if (e.realizable) EXPECT_NO_THROW(validate(build(e.id, e.p_default))) << e.id;
}

TEST(Filter, RankEightRealizable) {
  const auto s = ids(list_entries({{"rank", "8"}, {"realizable", "true"}}));
  for (const char* id : {"g2-so0-7-so8p", "spin7-so8-so9p", "su3-su4-spin7"}) EXPECT_TRUE(s.count(id)) << id;
  for (const auto* e : list_entries({{"rank", "8"}, {"realizable", "true"}})) {
    EXPECT_EQ(e->rank, 8);
    EXPECT_TRUE(e->realizable);
  }
}

TEST(Filter, Violations) {
  const auto s = ids(list_entries({{"expected", "violation"}}));
  for (const char* id : {"spin-octonion-case1", "spin-octonion-case1-minus", "spin-octonion-case2",
                         "spin-octonion-case4", "su3-long-root", "su(p+4)-su3-pair"})
    EXPECT_TRUE(s.count(id)) << id;
}

TEST(Filter, Unrealizable) {
  const auto v = list_entries({{"realizable", "false"}});
  const auto s = ids(v);
  EXPECT_TRUE(s.count("f4-case"));
  EXPECT_GE(std::count_if(s.begin(), s.end(), [](const std::string& id) { return id.rfind("symmetric-", 0) == 0; }),
            8);
}

TEST(Filter, UnknownTagsThrow) {
  EXPECT_THROW(list_entries({{"colour", "red"}}), PreconditionError);
  EXPECT_THROW(list_entries({{"expected", "maybe"}}), PreconditionError);
}

TEST(Build, Examples) {
  EXPECT_EQ(decompose(build("sp-series", 1)).m1.dim(), 2);
  const Triple g2 = build("g2-so4-rank3", 0);
  EXPECT_EQ(g2.g.dim(), 14);
  EXPECT_EQ(g2.k.dim(), 6);
  EXPECT_EQ(g2.h.dim(), 4);
  EXPECT_EQ(build("spin-octonion-case1", 0).ambient_dim(), 9);
}

TEST(Build, Errors) {
  EXPECT_THROW(build("f4-case", 0), UnrealizableFamily);
  EXPECT_THROW(build("bundle-rank4-sp", 1), UnrealizableFamily);
  EXPECT_THROW(build("spin7-so8-so9p", 3), PreconditionError);
  EXPECT_THROW(build("no-such-entry", 0), PreconditionError);
}

TEST(Parse, Grammar) {
  EntryRef r = parse_entry("sp-series:p=3");
  EXPECT_EQ(r.id, "sp-series");
  EXPECT_EQ(r.p, 3);
  EXPECT_TRUE(r.p_given);
  r = parse_entry("su(p+4)-su3-pair:p=2");
  EXPECT_EQ(r.id, "su(p+4)-su3-pair");
  EXPECT_EQ(r.p, 2);
  r = parse_entry("g2-su2-diagonal");
  EXPECT_FALSE(r.p_given);
  EXPECT_THROW(parse_entry("sp-series:q=1"), PreconditionError);
  EXPECT_THROW(parse_entry("sp-series:p="), PreconditionError);
  EXPECT_THROW(parse_entry(""), PreconditionError);
}

TEST(Parse, Alias) {
  const EntryRef r = parse_entry("g2-so0-7-in-so8");
  EXPECT_EQ(r.id, "g2-so0-7-so8p");
  EXPECT_EQ(r.p, 0);
  EXPECT_EQ(decompose(build(r)).m.dim(), 7);
}
