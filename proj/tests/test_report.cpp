#include <doctest.h>

#include <sstream>

#include "lexiknot/error.hpp"
#include "lexiknot/report.hpp"
#include "support/published_table.hpp"

using namespace lexiknot;

TEST_CASE("build_table examples") {
  auto rows = build_table({"3_1"});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].lex.b == 4);
  CHECK(rows[0].lex.c_lo == 5);
  CHECK(rows[0].lex.c_hi == 5);
  CHECK_FALSE(rows[0].starred);

  rows = build_table({"7_6"});
  CHECK(rows[0].lex.b == 8);
  CHECK(rows[0].lex.c_lo == 13);
  CHECK(rows[0].starred);

  CHECK(build_table({}).empty());
}

TEST_CASE("unknown names fail per row") {
  auto rows = build_table({"3_1", "9_1"});
  REQUIRE(rows.size() == 2);
  CHECK_FALSE(rows[0].failed);
  CHECK(rows[1].failed);
}

TEST_CASE("starring rule") {
  CHECK(is_starred({7, 11, 11}, {3, 8, 10}));
  CHECK_FALSE(is_starred({10, 11, 14}, {3, 10, 14}));
  CHECK(is_starred({10, 11, 13}, {3, 10, 14}));
  CHECK_FALSE(is_starred({4, 5, 5}, {3, 4, 5}));
}

TEST_CASE("full table against the shipped catalog") {
  auto rows = build_table(all_names());
  auto rep = diff_expected(rows, default_catalog());
  CHECK(rep.mismatches == 0);
  for (const auto& r : rows) CHECK_FALSE(r.failed);
}

TEST_CASE("a tampered cell is flagged once") {
  std::ostringstream csv;
  csv << "name,alpha,beta,N,degC_b,degC_c,lex_b,lex_c_lo,lex_c_hi\n";
  for (const auto& r : testing::published_rows())
    csv << r.name << ',' << r.alpha << ',' << r.beta << ',' << r.N << ',' << r.degC_b << ',' << r.degC_c << ','
        << (r.name == "6_1" ? 7 : r.lex_b) << ',' << r.lex_c_lo << ',' << r.lex_c_hi << '\n';
  std::istringstream in(csv.str());
  auto rep = diff_expected(build_table(all_names()), in);
  CHECK(rep.mismatches == 1);
  int flagged = 0;
  for (const auto& e : rep.entries)
    if (!e.match) {
      ++flagged;
      CHECK(e.name == "6_1");
      CHECK(e.column == "lex_b");
    }
  CHECK(flagged == 1);
}

TEST_CASE("c ranges are compared as ranges") {
  std::istringstream in(
      "name,alpha,beta,N,degC_b,degC_c,lex_b,lex_c_lo,lex_c_hi\n"
      "8_7,23,5,8,10,14,10,11,11\n");
  auto rep = diff_expected(build_table({"8_7"}), in);
  CHECK(rep.mismatches == 1);
}

TEST_CASE("expected file parse errors") {
  std::istringstream in("name,alpha,beta,N,degC_b,degC_c,lex_b,lex_c_lo,lex_c_hi\n3_1,3,1,3,4,5,4,5\n");
  CHECK_THROWS_AS(diff_expected(build_table({"3_1"}), in), ParseError);
}

TEST_CASE("emit formats") {
  auto rows = build_table({"6_2", "8_7"});
  auto csv = emit(rows, Format::Csv);
  CHECK(csv.rfind("name,alpha,beta,degC_b,degC_c,", 0) == 0);
  CHECK(csv.find("8_7,23,5,10,14,10,11,14,0") != std::string::npos);
  auto json = emit(rows, Format::Json);
  CHECK(json.find(R"("lex":{"b":7,"c":11})") != std::string::npos);
  CHECK(json.find(R"("lex":{"b":10,"c_hi":14,"c_lo":11})") != std::string::npos);
  auto md = emit(rows, Format::Markdown);
  CHECK(md.find("**(3,7,11)") != std::string::npos);
  CHECK(md.find("(3,10,11/14)") != std::string::npos);
  CHECK(md.find("**(3,10") == std::string::npos);
  CHECK(md.find("deg D(3)+3") != std::string::npos);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
}

TEST_CASE("deterministic output") {
  auto a = emit(build_table(all_names()), Format::Json);
  auto b = emit(build_table(all_names()), Format::Json);
  CHECK(a == b);
}
