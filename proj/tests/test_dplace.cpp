#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <boxnet/dplace.hpp>
#include <boxnet/error.hpp>
#include <boxnet/net_io.hpp>
#include <boxnet/translate.hpp>

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace boxnet;
using fixtures::pick;
using fixtures::tp;

namespace {

std::vector<TaggedPlace> places_in(const MarkedNet& net, const IndexSet& q) {
  std::vector<TaggedPlace> out;
  for (auto p : members(q)) out.push_back(net.place(p));
  return out;
}

// Every word over `alphabet` with length in [1, max_len].
void for_each_word(const std::vector<std::string>& alphabet, std::size_t max_len,
                   const std::function<void(const FiringSequence&)>& visit) {
  FiringSequence w;
  std::function<void()> rec = [&] {
    if (!w.empty()) visit(w);
    if (w.size() == max_len) return;
    for (const auto& t : alphabet) {
      w.push_back(t);
      rec();
      w.pop_back();
    }
  };
  rec();
}

std::vector<std::string> names_of(const MarkedNet& net, const IndexSet& ts) {
  std::vector<std::string> out;
  for (auto t : members(ts)) out.push_back(net.transition(t));
  return out;
}

}  // namespace

TEST(Sequences, KnownCompleteSequences) {
  auto net = fixtures::n0();
  auto q = net.places_of(pick(fixtures::n0_places(), {3, 4, 5, 6, 7, 8, 9, 10}));
  for (auto w : {"ab", "ba"}) {
    FiringSequence s{std::string(1, w[0]), std::string(1, w[1])};
    EXPECT_TRUE(classify_sequence(net, q, s, SeqClass::CompleteInSeq)) << w;
  }
  for (auto w : {"cd", "dc", "ef", "fe"}) {
    FiringSequence s{std::string(1, w[0]), std::string(1, w[1])};
    EXPECT_TRUE(classify_sequence(net, q, s, SeqClass::CompleteOutSeq)) << w;
  }
  EXPECT_TRUE(classify_sequence(net, q, FiringSequence{"a"}, SeqClass::InSeq));
  EXPECT_FALSE(classify_sequence(net, q, FiringSequence{"a"}, SeqClass::CompleteInSeq));
  EXPECT_FALSE(classify_sequence(net, q, FiringSequence{"c", "e"}, SeqClass::OutSeq));
  EXPECT_THROW(classify_sequence(net, q, FiringSequence{}, SeqClass::InSeq), Error);
}

TEST(Sequences, NoInsMeansNoInSequences) {
  auto net = fixtures::n0();
  auto q = net.places_of(pick(fixtures::n0_places(), {1, 2}));
  for_each_word(net.transitions(), 3, [&](const FiringSequence& w) {
    EXPECT_FALSE(classify_sequence(net, q, w, SeqClass::InSeq));
  });
}

TEST(Sequences, AgreeWithLiteralDefinitionOnRandomNets) {
  std::mt19937 rng(21);
  for (int round = 0; round < 25; ++round) {
    auto net = fixtures::random_net(rng, 5, 3);
    auto mask = std::uniform_int_distribution<unsigned>(1, (1u << net.place_count()) - 1)(rng);
    IndexSet q = net.no_places();
    for (std::size_t p = 0; p < net.place_count(); ++p)
      if (mask >> p & 1) q.set(p);
    auto qp = places_in(net, q);
    auto adj = names_of(net, adjacent(net, q));
    for_each_word(adj, std::min<std::size_t>(adj.size() + 2, 5), [&](const FiringSequence& w) {
      EXPECT_EQ(classify_sequence(net, q, w, SeqClass::InSeq), oracle::in_sequence(qp, w, false));
      EXPECT_EQ(classify_sequence(net, q, w, SeqClass::CompleteInSeq), oracle::in_sequence(qp, w, true));
      EXPECT_EQ(classify_sequence(net, q, w, SeqClass::OutSeq), oracle::out_sequence(qp, w, false));
      EXPECT_EQ(classify_sequence(net, q, w, SeqClass::CompleteOutSeq), oracle::out_sequence(qp, w, true));
    });
  }
}

TEST(StaticCheck, KnownVerdicts) {
  auto net = fixtures::n0();
  auto n0 = fixtures::n0_places();
  EXPECT_TRUE(is_distributed_place_static(net, net.places_of(pick(n0, {3, 4, 5, 6, 7, 8, 9, 10}))));
  EXPECT_TRUE(is_distributed_place_static(net, net.places_of(pick(n0, {3, 6, 8, 9}))));
  // a never enables e through these four.
  auto partial = is_distributed_place_static(net, net.places_of(pick(n0, {4, 5, 8, 9})));
  EXPECT_FALSE(partial);
  EXPECT_NE(partial.reason.find("(a,e)"), std::string::npos) << partial.reason;
  auto bad = is_distributed_place_static(net, net.places_of(pick(n0, {6, 7, 10})));
  EXPECT_FALSE(bad);
  EXPECT_NE(bad.reason.find("(a,c)"), std::string::npos) << bad.reason;
  EXPECT_FALSE(is_distributed_place_dynamic(net, net.places_of(pick(n0, {6, 7, 10}))));
}

TEST(StaticCheck, SingletonsAreDistributed) {
  std::mt19937 rng(22);
  for (int round = 0; round < 30; ++round) {
    auto net = fixtures::random_net(rng, 6, 4);
    for (std::size_t p = 0; p < net.place_count(); ++p) {
      IndexSet q = net.no_places();
      q.set(p);
      EXPECT_TRUE(is_distributed_place_static(net, q));
      EXPECT_TRUE(is_distributed_place_dynamic(net, q));
      auto r = role_sets(net, q);
      auto eff_in = net.inputs(p) - net.outputs(p), eff_out = net.outputs(p) - net.inputs(p);
      EXPECT_EQ(r.ins, eff_in);
      EXPECT_EQ(r.rem, eff_out);
      EXPECT_EQ(r.read, net.inputs(p) & net.outputs(p));
    }
  }
}

TEST(StaticCheck, AgreesWithDynamicOnAllSmallSubsetsOfN0) {
  auto net = fixtures::n0();
  const auto n = net.place_count();
  int checked = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) > 4) continue;
    IndexSet q = net.no_places();
    for (std::size_t p = 0; p < n; ++p)
      if (mask >> p & 1) q.set(p);
    EXPECT_EQ(bool(is_distributed_place_static(net, q)), bool(is_distributed_place_dynamic(net, q)))
        << net.format_places(q);
    ++checked;
  }
  EXPECT_EQ(checked, 385);
}

TEST(StaticCheck, AgreesWithDynamicOnRandomNets) {
  std::mt19937 rng(23);
  for (int round = 0; round < 50; ++round) {
    auto net = fixtures::random_net(rng, 6, 4);
    for (unsigned mask = 1; mask < (1u << net.place_count()); ++mask) {
      IndexSet q = net.no_places();
      for (std::size_t p = 0; p < net.place_count(); ++p)
        if (mask >> p & 1) q.set(p);
      EXPECT_EQ(bool(is_distributed_place_static(net, q)), bool(is_distributed_place_dynamic(net, q)))
          << write_net_text(net) << net.format_places(q);
    }
  }
}

TEST(Purity, ReadTransitionsMakeImpure) {
  MarkedNet net({{tp("|a"), true}, {tp("a|t,b")}, {tp("t|t")}});
  EXPECT_FALSE(is_pure(net, net.places_of(std::vector{tp("t|t")})));
  EXPECT_TRUE(is_pure(net, net.places_of(std::vector{tp("a|t,b")})));
}

TEST(DistPlace, ConstructionValidates) {
  auto net = fixtures::n0();
  auto n0 = fixtures::n0_places();
  EXPECT_NO_THROW(DistPlace(net, pick(n0, {3, 6, 8, 9})));
  try {
    DistPlace(net, pick(n0, {6, 7, 10}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDistributed);
  }
}

TEST(Union, ExitSingletonsCombine) {
  auto net = box_net(parse_box("(a||b);(c||d)"));
  DistPlace c(net, std::vector{tp("c|")}), d(net, std::vector{tp("d|")});
  auto u = dp_union(c, d);
  EXPECT_EQ(u.places(), (std::vector{tp("c|"), tp("d|")}));
}

TEST(Union, MixedInsPatternRejected) {
  auto net = box_net(parse_box("(a||b);(c||d)"));
  DistPlace inner(net, std::vector{tp("a|c")}), entry(net, std::vector{tp("|b")});
  try {
    dp_union(inner, entry);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnionNotDistributed);
  }
  DistPlace other(net, std::vector{tp("b|c")});
  try {
    dp_union(inner, other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotSeparated);
  }
}

TEST(Union, PurityMatchesComponents) {
  std::mt19937 rng(24);
  int unions = 0;
  for (int round = 0; round < 300; ++round) {
    auto net = fixtures::random_net(rng, 6, 5);
    for (std::size_t p = 0; p < net.place_count(); ++p)
      for (std::size_t r = p + 1; r < net.place_count(); ++r) {
        IndexSet qp = net.no_places(), qr = net.no_places();
        qp.set(p);
        qr.set(r);
        DistPlace a(net, qp), b(net, qr);
        if (adjacent(net, qp).intersects(adjacent(net, qr))) continue;
        auto ra = role_sets(net, qp), rb = role_sets(net, qr);
        bool pattern = (ra.ins.none() && rb.ins.none() && ra.rem.none() && rb.rem.none()) ||
                       (ra.ins.none() && rb.ins.none() && ra.rem.any() && rb.rem.any()) ||
                       (ra.ins.any() && rb.ins.any() && ra.rem.none() && rb.rem.none());
        if (!pattern) {
          EXPECT_THROW(dp_union(a, b), Error);
          continue;
        }
        auto u = dp_union(a, b);
        EXPECT_TRUE(is_distributed_place_static(net, u.members()));
        EXPECT_EQ(is_pure(net, u.members()), is_pure(net, qp) && is_pure(net, qr));
        ++unions;
      }
  }
  EXPECT_GT(unions, 0);
}

TEST(CrossProduct, InternalPlaces) {
  auto got = cross_product(std::vector{tp("a|"), tp("b|")}, std::vector{tp("|c"), tp("|d")});
  EXPECT_EQ(got, (std::vector{tp("a|c"), tp("a|d"), tp("b|c"), tp("b|d")}));
  EXPECT_THROW(cross_product(std::vector<TaggedPlace>{}, std::vector{tp("|c")}), Error);
}

TEST(CrossProduct, AssociativeOnSeparatedTriples) {
  std::mt19937 rng(25);
  auto random_set = [&](char base) {
    std::vector<TaggedPlace> out;
    int n = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < n; ++i) {
      std::string t(1, static_cast<char>(base + i));
      out.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? tp(t + "|") : tp("|" + t));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  for (int round = 0; round < 50; ++round) {
    auto q = random_set('a'), r = random_set('h'), s = random_set('p');
    EXPECT_EQ(cross_product(cross_product(q, r), s), cross_product(q, cross_product(r, s)));
    EXPECT_EQ(cross_product(q, r).size(), q.size() * r.size());
  }
}

TEST(CrossProduct, PreservesDistributedPlacesAndRoles) {
  auto net = box_net(parse_box("(a||b);((c||d)[](e||f))"));
  std::vector<TaggedPlace> left{tp("a|"), tp("b|")};
  std::vector<TaggedPlace> right = cross_product(std::vector{tp("|c"), tp("|d")}, std::vector{tp("|e"), tp("|f")});
  auto q = net.places_of(cross_product(left, right));
  EXPECT_TRUE(is_distributed_place_static(net, q));
  auto r = role_sets(net, q);
  EXPECT_EQ(r.ins, net.transitions_of(std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(r.rem, net.transitions_of(std::vector<std::string>{"c", "d", "e", "f"}));
}

TEST(Projection, Alternation) {
  auto net = fixtures::n0();
  DistPlace q(net, pick(fixtures::n0_places(), {3, 4, 5, 6, 7, 8, 9, 10}));
  EXPECT_EQ(projection_row(q), ProjectionRow::AlternateFromEmpty);
  EXPECT_TRUE(projection_in_class(q, FiringSequence{"a", "b", "c", "d"}));
  EXPECT_TRUE(projection_in_class(q, FiringSequence{}));
  EXPECT_FALSE(projection_in_class(q, FiringSequence{"a", "c"}));
  DistPlace entry(net, pick(fixtures::n0_places(), {1, 2}));
  EXPECT_EQ(projection_row(entry), ProjectionRow::DrainOnce);
}

TEST(Projection, EveryShortRunOfN0MatchesItsRow) {
  auto net = fixtures::n0();
  auto n0 = fixtures::n0_places();
  std::vector<std::vector<TaggedPlace>> cover{pick(n0, {1, 2}), pick(n0, {3, 4, 5, 6, 7, 8, 9, 10}),
                                              pick(n0, {3, 6, 8, 9}), pick(n0, {3}), pick(n0, {1})};
  auto runs = oracle::toy_sequences(oracle::toy(net), 8);
  for (const auto& member : cover) {
    DistPlace q(net, member);
    auto roles = oracle::roles(member);
    bool marked = member.front().inputs().empty();
    for (const auto& run : runs) {
      EXPECT_TRUE(projection_in_class(q, run)) << join(run, " ");
      EXPECT_TRUE(oracle::projection_ok(member, marked, oracle::project(run, roles.adj))) << join(run, " ");
    }
  }
}

TEST(Projection, AutomatonMatchesSegmentationSearchOnAllWords) {
  auto net = fixtures::n0();
  auto n0 = fixtures::n0_places();
  for (auto labels : {std::vector<int>{3, 4, 5, 6, 7, 8, 9, 10}, std::vector<int>{1, 2}, std::vector<int>{3, 6, 8, 9}}) {
    std::vector<TaggedPlace> member;
    for (int l : labels) member.push_back(n0[static_cast<std::size_t>(l - 1)]);
    DistPlace q(net, member);
    auto adj = oracle::roles(member).adj;
    std::vector<std::string> alphabet(adj.begin(), adj.end());
    bool marked = member.front().inputs().empty();
    for_each_word(alphabet, 4, [&](const FiringSequence& w) {
      EXPECT_EQ(projection_in_class(q, w), oracle::projection_ok(member, marked, w)) << join(w, " ");
    });
  }
}

TEST(Projection, StraddlingMarkingRejected) {
  auto net = fixtures::n1();
  std::vector<TaggedPlace> member{tp("|a")};
  DistPlace ok(net, member);
  EXPECT_EQ(projection_row(ok), ProjectionRow::DrainOnce);
  MarkedNet mixed({{tp("|a"), true}, {tp("|b"), false}});
  DistPlace both(mixed, std::vector{tp("|a"), tp("|b")});
  try {
    projection_row(both);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InitialMarkingStraddle);
  }
}

TEST(Reduction, DroppingAcrossRolesIsInvalid) {
  auto net = fixtures::n0();
  auto n0 = fixtures::n0_places();
  std::vector<std::vector<TaggedPlace>> cover{pick(n0, {1, 2}), pick(n0, {3, 4, 5, 6, 7, 8, 9, 10})};
  auto report = check_reduction(net, cover, pick(n0, {1, 2, 4, 5, 8, 9}));
  EXPECT_FALSE(report.valid());
  EXPECT_FALSE(report.enables_preserved);
  EXPECT_TRUE(report.disables_preserved);
  auto corrected = check_reduction(net, cover, pick(n0, {1, 2, 3, 6, 8, 9}));
  EXPECT_TRUE(corrected.valid());
  EXPECT_EQ(corrected.net_safe, Check::Holds);
  EXPECT_EQ(corrected.side_condition, Check::Holds);
}

TEST(Reduction, ValidReportsMeanEqualBehaviour) {
  auto net = fixtures::n0();
  auto n0 = fixtures::n0_places();
  std::vector<std::vector<TaggedPlace>> cover{pick(n0, {1, 2}), pick(n0, {3, 4, 5, 6, 7, 8, 9, 10})};
  auto base = oracle::toy_sequences(oracle::toy(net), 10);
  int valid = 0;
  for (unsigned mask = 1; mask < (1u << 8); ++mask) {
    std::vector<TaggedPlace> kept{n0[0], n0[1]};
    for (int i = 0; i < 8; ++i)
      if (mask >> i & 1) kept.push_back(n0[static_cast<std::size_t>(i + 2)]);
    auto report = check_reduction(net, cover, kept);
    std::vector<PlaceDecl> decls;
    for (const auto& p : kept) decls.push_back({p, p.inputs().empty()});
    MarkedNet reduced(decls);
    bool same = oracle::toy_sequences(oracle::toy(reduced), 10) == base;
    if (report.valid()) {
      ++valid;
      EXPECT_TRUE(same) << net.format_places(net.places_of(kept));
      EXPECT_TRUE(rg_isomorphic(net, reduced).isomorphic);
    }
  }
  EXPECT_GT(valid, 1);
}

TEST(Reduction, NegativeControls) {
  auto n1 = fixtures::n1_places();
  std::vector<std::vector<TaggedPlace>> c1{pick(n1, {3, 4, 5, 6})};
  auto r1 = check_reduction(fixtures::n1(), c1, pick(n1, {1, 2, 3, 6, 7, 8}));
  EXPECT_FALSE(r1.enables_preserved);
  ASSERT_FALSE(r1.offending.empty());
  EXPECT_NE(r1.offending.front().detail.find("(b,d)"), std::string::npos) << r1.offending.front().detail;

  auto n2 = fixtures::n2_places();
  std::vector<std::vector<TaggedPlace>> c2{pick(n2, {1, 2, 3, 4}), pick(n2, {5, 6, 7, 8})};
  auto r2 = check_reduction(fixtures::n2(), c2, pick(n2, {1, 4, 5, 6, 7, 8}));
  EXPECT_FALSE(r2.disables_preserved);
  EXPECT_TRUE(r2.enables_preserved);
  ASSERT_FALSE(r2.offending.empty());
  EXPECT_NE(r2.offending.front().detail.find("(a,d)"), std::string::npos) << r2.offending.front().detail;
}

TEST(Reduction, CoverErrors) {
  auto net = fixtures::n0();
  auto n0 = fixtures::n0_places();
  std::vector<std::vector<TaggedPlace>> bad{pick(n0, {6, 7, 10})};
  try {
    check_reduction(net, bad, n0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CoverInvalid);
  }
  std::vector<std::vector<TaggedPlace>> straddle{pick(n0, {1, 3})};
  EXPECT_THROW(check_reduction(net, straddle, n0), Error);
}
