#include <set>

#include "doctest.h"
#include "support/test_gen.hpp"
#include "voteflow/rules.hpp"

using namespace voteflow;

namespace {

// The five-flavor example election used throughout the intro material.
Profile flavors() {
  return parse_profile(
      "candidates: Chocolate,Butterscotch,Pesta,Vanilla,Kulfi\n"
      "Chocolate>Kulfi>Butterscotch>Vanilla>Pesta\n"
      "Butterscotch>Kulfi>Chocolate>Vanilla>Pesta\n"
      "Pesta>Butterscotch>Kulfi>Vanilla>Chocolate\n"
      "Chocolate>Vanilla>Kulfi>Pesta>Butterscotch\n"
      "Kulfi>Butterscotch>Chocolate>Vanilla>Pesta\n");
}

Profile cycle3() {
  return testsupport::from_rankings({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, 3);
}

}  // namespace

TEST_CASE("five-flavor example: plurality and borda") {
  Profile p = flavors();
  ElectionResult plu = evaluate_rule(p, Rule::plurality());
  CHECK(p.candidate_name(plu.winner) == "Chocolate");

  ElectionResult bor = evaluate_rule(p, Rule::borda());
  CHECK(p.candidate_name(bor.winner) == "Kulfi");
  CHECK(bor.scores[p.candidate_index("Kulfi")] == Rat(14));
}

TEST_CASE("five-flavor example: pairwise structure") {
  Profile p = flavors();
  MarginMatrix d = pairwise_margins(p);
  int b = p.candidate_index("Butterscotch");
  int k = p.candidate_index("Kulfi");
  int c = p.candidate_index("Chocolate");
  CHECK(d(b, c) == 1);   // 3-2
  CHECK(d(k, b) == 1);   // Kulfi beats Butterscotch 3-2
  // Kulfi defeats every other flavor pairwise, so it is the Condorcet winner
  // of this table (the surrounding text famously claims Butterscotch).
  auto cw = condorcet_winner(p);
  REQUIRE(cw.has_value());
  CHECK(p.candidate_name(*cw) == "Kulfi");
}

TEST_CASE("condorcet winner edge cases") {
  CHECK_FALSE(condorcet_winner(cycle3()).has_value());

  Profile unanimous = testsupport::from_rankings({{0, 1, 2}, {0, 1, 2}, {0, 2, 1}}, 3);
  auto cw = condorcet_winner(unanimous);
  REQUIRE(cw.has_value());
  CHECK(*cw == 0);
}

TEST_CASE("pairwise margins") {
  MarginMatrix d = pairwise_margins(cycle3());
  CHECK(d(0, 1) == 1);
  CHECK(d(1, 2) == 1);
  CHECK(d(2, 0) == 1);

  Profile single = parse_profile("candidates: a,b\na>b");
  CHECK(pairwise_margins(single)(0, 1) == 1);

  Profile empty(testsupport::names(2), {});
  MarginMatrix z = pairwise_margins(empty);
  CHECK(z(0, 1) == 0);
  CHECK(z(1, 0) == 0);
}

TEST_CASE("margin antisymmetry on random profiles") {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int m = 2 + static_cast<int>(rng.below(3));
    Profile p = testsupport::random_profile(m, 1 + static_cast<int>(rng.below(8)), rng);
    MarginMatrix d = pairwise_margins(p);
    for (int x = 0; x < m; ++x) {
      CHECK(d(x, x) == 0);
      for (int y = 0; y < m; ++y) {
        CHECK(d(x, y) + d(y, x) == 0);
        CHECK(std::abs(d(x, y)) <= p.total_weight());
      }
    }
  }
}

TEST_CASE("copeland on a condorcet cycle ties and breaks lexicographically") {
  ElectionResult r = evaluate_rule(cycle3(), Rule::copeland(Rat(0)));
  CHECK(r.scores == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
  CHECK(r.winner == 0);
}

TEST_CASE("bucklin depth table") {
  Profile unanimous = testsupport::from_rankings({{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}, 3);
  BucklinDepthTable t = bucklin_depths(unanimous);
  CHECK(t.count(0, 1) == 3);
  CHECK(t.count(1, 1) == 0);
  CHECK(t.winning_depth() == 1);

  Profile sym = testsupport::from_rankings({{0, 1}, {1, 0}}, 2);
  BucklinDepthTable t2 = bucklin_depths(sym);
  CHECK(t2.count(0, 1) == 1);
  CHECK(t2.count(1, 1) == 1);
  CHECK(t2.count(0, 2) == 2);
  CHECK(t2.count(1, 2) == 2);

  BucklinDepthTable t3 = bucklin_depths(flavors());
  CHECK(t3.count(4, 2) == 3);  // Kulfi within top 2 in three votes
}

TEST_CASE("bucklin depth counts are nondecreasing and rows end at n") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 1 + static_cast<int>(rng.below(4));
    Profile p = testsupport::random_profile(m, 1 + static_cast<int>(rng.below(7)), rng);
    BucklinDepthTable t = bucklin_depths(p);
    long long depth1_total = 0;
    for (int c = 0; c < m; ++c) {
      depth1_total += t.count(c, 1);
      for (int depth = 2; depth <= m; ++depth) CHECK(t.count(c, depth - 1) <= t.count(c, depth));
      CHECK(t.count(c, m) == p.total_weight());
    }
    CHECK(depth1_total == p.total_weight());
  }
}

TEST_CASE("stv trace") {
  SUBCASE("unanimous") {
    Profile p = testsupport::from_rankings({{2, 0, 1}, {2, 0, 1}}, 3);
    ElectionResult r = stv_trace(p);
    CHECK(r.winner == 2);
    CHECK(r.elimination_order.size() == 2);
  }
  SUBCASE("tie eliminates lexicographically last, weight transfers") {
    Profile p = testsupport::from_rankings({{0, 1, 2}, {0, 1, 2}, {1, 2, 0}, {2, 1, 0}}, 3);
    ElectionResult r = stv_trace(p);
    CHECK(r.elimination_order == std::vector<int>{2, 1});
    CHECK(r.winner == 0);
  }
  SUBCASE("single candidate") {
    Profile p(testsupport::names(1), {Vote{{0}, 1}});
    ElectionResult r = stv_trace(p);
    CHECK(r.winner == 0);
    CHECK(r.elimination_order.empty());
  }
}

TEST_CASE("runoff picks pairwise winner of the top two") {
  // b and c reach the runoff; c wins the head-to-head despite b's lead.
  Profile p = testsupport::from_rankings(
      {{1, 0, 2}, {1, 0, 2}, {2, 0, 1}, {2, 0, 1}, {0, 2, 1}}, 3);
  ElectionResult r = evaluate_rule(p, Rule::runoff());
  CHECK(r.runoff_finalists[0] == 1);
  CHECK(r.runoff_finalists[1] == 2);
  CHECK(r.winner == 2);
}

TEST_CASE("plurality scores sum to n") {
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 1 + static_cast<int>(rng.below(4));
    Profile p = testsupport::random_profile(m, 1 + static_cast<int>(rng.below(8)), rng);
    ElectionResult r = evaluate_rule(p, Rule::plurality());
    Rat total(0);
    for (const Rat& s : r.scores) total += s;
    CHECK(total == Rat(p.total_weight()));
  }
}

TEST_CASE("borda/k-approval/veto agree with their scoring-vector forms") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int m = 2 + static_cast<int>(rng.below(3));
    Profile p = testsupport::random_profile(m, 1 + static_cast<int>(rng.below(6)), rng);

    ScoreVector borda_sv;
    for (int i = 0; i < m; ++i) borda_sv.alphas.push_back(Rat(m - 1 - i));
    CHECK(evaluate_rule(p, Rule::borda()).winner ==
          evaluate_rule(p, Rule::scoring(borda_sv)).winner);

    int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    ScoreVector ka_sv;
    for (int i = 0; i < m; ++i) ka_sv.alphas.push_back(Rat(i < k ? 1 : 0));
    CHECK(evaluate_rule(p, Rule::k_approval(k)).winner ==
          evaluate_rule(p, Rule::scoring(ka_sv)).winner);

    // Veto and (m-1)-approval share winners under the same tie-break.
    CHECK(evaluate_rule(p, Rule::veto()).winner ==
          evaluate_rule(p, Rule::k_approval(m - 1)).winner);
  }
}

TEST_CASE("maximin and copeland are condorcet consistent") {
  Rng rng(19);
  int with_condorcet = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int m = 2 + static_cast<int>(rng.below(3));
    Profile p = testsupport::random_profile(m, 1 + static_cast<int>(rng.below(6)), rng);
    auto cw = condorcet_winner(p);
    if (!cw) continue;
    ++with_condorcet;
    CHECK(evaluate_rule(p, Rule::maximin()).winner == *cw);
    CHECK(evaluate_rule(p, Rule::copeland(Rat(0))).winner == *cw);
    CHECK(evaluate_rule(p, Rule::copeland(Rat(1, 2))).winner == *cw);
  }
  CHECK(with_condorcet > 50);
}

TEST_CASE("evaluate_rule agrees with the reference evaluator") {
  Rng rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    int m = 1 + static_cast<int>(rng.below(4));
    int n = 1 + static_cast<int>(rng.below(6));
    Profile p = testsupport::random_profile(m, n, rng);
    refrules::RefElection e = testsupport::to_reference(p);

    auto check_winner = [&](const Rule& rule, const refrules::RefOutcome& expected) {
      ElectionResult got = evaluate_rule(p, rule);
      CHECK(p.candidate_name(got.winner) == expected.winner);
    };
    check_winner(Rule::plurality(), refrules::plurality(e));
    check_winner(Rule::borda(), refrules::borda(e));
    check_winner(Rule::maximin(), refrules::maximin(e));
    check_winner(Rule::copeland(Rat(0)), refrules::copeland(e, {0, 1}));
    check_winner(Rule::bucklin(), refrules::simplified_bucklin(e));
    check_winner(Rule::runoff(), refrules::plurality_runoff(e));
    check_winner(Rule::stv(), refrules::stv(e));
    if (m >= 2) {
      check_winner(Rule::veto(), refrules::veto(e));
      int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
      check_winner(Rule::k_approval(k), refrules::k_approval(e, k));
      check_winner(Rule::k_veto(k), refrules::k_veto(e, k));
    }
  }
}

TEST_CASE("k out of range is rejected") {
  Profile p = testsupport::from_rankings({{0, 1}}, 2);
  CHECK_THROWS_AS(evaluate_rule(p, Rule::k_approval(0)), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_rule(p, Rule::k_approval(3)), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_rule(p, Rule::k_veto(5)), std::invalid_argument);
}

TEST_CASE("score vector validation") {
  ScoreVector bad;
  bad.alphas = {Rat(1), Rat(2)};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  ScoreVector flat;
  flat.alphas = {Rat(1), Rat(1)};
  CHECK_THROWS_AS(flat.validate(), std::invalid_argument);
  ScoreVector ok;
  ok.alphas = {Rat(3), Rat(1), Rat(0)};
  CHECK_NOTHROW(ok.validate());
  CHECK(ok.normalized().alphas.back() == Rat(0));
}
