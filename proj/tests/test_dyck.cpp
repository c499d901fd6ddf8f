#include <doctest.h>

#include "oracles.hpp"
#include "qtcat/dyck.hpp"

using namespace qtcat;

namespace {

ErrorCode parse_error(const char* text) {
  try {
    parse_path(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("parse_path tolerates blanks and classifies errors") {
  CHECK(parse_path("0100 1011 0101").word() == "010010110101");
  CHECK(parse_error("") == ErrorCode::EmptyInput);
  CHECK(parse_error("   ") == ErrorCode::EmptyInput);
  CHECK(parse_error("0120") == ErrorCode::NonBinaryCharacter);
  CHECK(parse_error("10") == ErrorCode::PrefixViolation);
  CHECK(parse_error("0110") == ErrorCode::PrefixViolation);
  CHECK(parse_error("001") == ErrorCode::UnbalancedCounts);
  CHECK(parse_error("000111011") == ErrorCode::PrefixViolation);
}

TEST_CASE("valleys and majors of 010010110101") {
  const DyckPath d("010010110101");
  const ValleySet v = valleys(d);
  CHECK(v.xs == IndexSet{1, 2, 4, 5});
  CHECK(v.ys == IndexSet{1, 3, 4, 5});
  const PathStats st = path_stats(d);
  CHECK(st.des == IndexSet{2, 5, 8, 10});
  CHECK(st.maj == 25);
  CHECK(st.maj1 == 12);
  CHECK(st.maj0 == 13);
  CHECK(area(d) == 2);
}

TEST_CASE("enumerate_dyck matches brute force") {
  for (int n = 1; n <= 8; ++n) {
    const auto got = enumerate_dyck(n);
    const auto expect = oracle::dyck_words(n);
    REQUIRE(got.size() == expect.size());
    REQUIRE(static_cast<long long>(got.size()) == oracle::catalan(n));
    for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(got[i].word() == expect[i]);
  }
  CHECK(enumerate_dyck(1).front().word() == "01");
}

TEST_CASE("path statistics agree with the oracle on D_n, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& d : enumerate_dyck(n)) {
      const auto [maj, maj0, maj1] = oracle::path_majors(d.word());
      const PathStats st = path_stats(d);
      REQUIRE(st.maj == maj);
      REQUIRE(st.maj0 == maj0);
      REQUIRE(st.maj1 == maj1);
      REQUIRE(area(d) == oracle::area(d.word()));
      REQUIRE(bounce(d) == oracle::bounce(d.word()));
      const auto [xs, ys] = oracle::valleys(d.word());
      REQUIRE(valleys(d).xs == xs);
      REQUIRE(valleys(d).ys == ys);
    }
  }
}

TEST_CASE("area and bounce extremes") {
  for (int n = 1; n <= 8; ++n) {
    const std::string top = std::string(static_cast<std::size_t>(n), '0') + std::string(static_cast<std::size_t>(n), '1');
    std::string zigzag;
    for (int i = 0; i < n; ++i) zigzag += "01";
    const int c2 = n * (n - 1) / 2;
    CHECK(area(DyckPath(top)) == c2);
    CHECK(bounce(DyckPath(top)) == 0);
    CHECK(area(DyckPath(zigzag)) == 0);
    CHECK(bounce(DyckPath(zigzag)) == c2);
  }
}

TEST_CASE("from_valleys round trip and validation") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& d : enumerate_dyck(n)) REQUIRE(from_valleys(valleys(d)) == d);
  }
  CHECK_FALSE(is_valid(ValleySet{3, {2}, {1}}));  // x must not exceed y
  CHECK_FALSE(is_valid(ValleySet{3, {1, 1}, {1, 2}}));
  CHECK_FALSE(is_valid(ValleySet{3, {3}, {3}}));
  CHECK_THROWS_AS(from_valleys(ValleySet{3, {2}, {1}}), Error);
  CHECK(from_valleys(ValleySet{4, {}, {}}).word() == "00001111");
}

TEST_CASE("psi_complement and reflect") {
  CHECK(reflect_complement(DyckPath("010010110101")).word() == "000011100111");
  CHECK(psi_complement(DyckPath("01010011")).word() == "00011101");
  for (int n = 1; n <= 8; ++n) {
    for (const auto& d : enumerate_dyck(n)) {
      const ValleySet v = valleys(d);
      const ValleySet w = valleys(psi_complement(d));
      REQUIRE(w.xs == complement_in_range(v.ys, n));
      REQUIRE(w.ys == complement_in_range(v.xs, n));
      REQUIRE(psi_complement(psi_complement(d)) == d);
      REQUIRE(reflect(reflect(d)) == d);
      // Reflection reverses the word and swaps the letters.
      std::string mirrored(d.word().rbegin(), d.word().rend());
      for (char& c : mirrored) c = c == '0' ? '1' : '0';
      REQUIRE(reflect(d).word() == mirrored);
    }
  }
}

TEST_CASE("maj0 + maj1 = maj and maj = sum of valley coordinates") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& d : enumerate_dyck(n)) {
      const PathStats st = path_stats(d);
      const ValleySet v = valleys(d);
      REQUIRE(st.maj0 + st.maj1 == st.maj);
      REQUIRE(oracle::sum(v.xs) == st.maj1);
      REQUIRE(oracle::sum(v.ys) == st.maj0);
    }
  }
}
