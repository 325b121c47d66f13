#include "doctest.h"
#include "support/test_gen.hpp"
#include "voteflow/profile.hpp"

using namespace voteflow;

TEST_CASE("minimal vote file") {
  Profile p = parse_profile("candidates: a,b,c\na>b>c");
  CHECK(p.num_candidates() == 3);
  CHECK(p.total_weight() == 1);
  CHECK(p.votes().size() == 1);
  CHECK(p.votes()[0].ranking == std::vector<int>{0, 1, 2});
}

TEST_CASE("weight syntax") {
  Profile p = parse_profile("candidates: a,b\n3: a>b\n1: b>a");
  CHECK(p.total_weight() == 4);
  CHECK(p.votes().size() == 2);
  CHECK(p.votes()[0].weight == 3);
  CHECK_FALSE(p.unit_weights());
}

TEST_CASE("comments and blank lines") {
  Profile p = parse_profile("# header comment\ncandidates: x,y\n\nx>y # trailing\n");
  CHECK(p.total_weight() == 1);
}

TEST_CASE("rejects duplicate candidate in a ranking") {
  CHECK_THROWS_AS(parse_profile("candidates: a,b\na>a"), VoteFileError);
  try {
    parse_profile("candidates: a,b\na>b\na>a");
  } catch (const VoteFileError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(parse_profile("a>b"), VoteFileError);                       // no header
  CHECK_THROWS_AS(parse_profile("candidates: a,b\na>c"), VoteFileError);      // unknown candidate
  CHECK_THROWS_AS(parse_profile("candidates: a,b\na"), VoteFileError);        // incomplete ranking
  CHECK_THROWS_AS(parse_profile("candidates: a,b\n0: a>b"), VoteFileError);   // nonpositive weight
  CHECK_THROWS_AS(parse_profile("candidates: a,b\n-2: a>b"), VoteFileError);  // negative weight
  CHECK_THROWS_AS(parse_profile("candidates: a,a\na>a"), VoteFileError);      // duplicate candidate
}

TEST_CASE("line order preserved") {
  Profile p = parse_profile("candidates: a,b\nb>a\na>b");
  CHECK(p.votes()[0].ranking == std::vector<int>{1, 0});
  CHECK(p.votes()[1].ranking == std::vector<int>{0, 1});
}

TEST_CASE("emit/parse round trip on random profiles") {
  Rng rng(20240811);
  for (int trial = 0; trial < 50; ++trial) {
    int m = 1 + static_cast<int>(rng.below(5));
    int n = static_cast<int>(rng.below(8));
    Profile p = testsupport::random_profile(m, n, rng);
    Profile q = parse_profile(emit_profile(p));
    REQUIRE(q.num_candidates() == p.num_candidates());
    REQUIRE(q.votes().size() == p.votes().size());
    CHECK(q.candidates() == p.candidates());
    for (std::size_t i = 0; i < p.votes().size(); ++i) {
      CHECK(q.votes()[i].ranking == p.votes()[i].ranking);
      CHECK(q.votes()[i].weight == p.votes()[i].weight);
    }
  }
}

TEST_CASE("lexicographic order uses identifiers, not declaration order") {
  Profile p = parse_profile("candidates: zed,alpha\nzed>alpha");
  CHECK(p.lex_before(1, 0));  // "alpha" < "zed"
}
