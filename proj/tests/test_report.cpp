#include <catch2/catch_amalgamated.hpp>

#include "twalg/report.hpp"

using namespace twalg;

TEST_CASE("run report serialization is stable", "[report]") {
  RunReport rep;
  rep.command = "relations";
  rep.d = 2;
  rep.checks = {{"alpha", true, ""}, {"beta", false, "max |discrepancy| = 1/2"}};
  rep.elapsed_ms = 0;

  std::string once = report_to_json(rep);
  std::string twice = report_to_json(rep);
  CHECK(once == twice);
  CHECK(once.find("\"command\": \"relations\"") != std::string::npos);
  CHECK(once.find("\"pass\": false") != std::string::npos);
  CHECK(once.find("\"elapsed_ms\": 0") != std::string::npos);
  CHECK_FALSE(rep.all_pass());

  std::string csv = report_to_csv(rep);
  CHECK(csv == "name,pass,detail\nalpha,true,\nbeta,false,max |discrepancy| = 1/2\n");

  std::string table = report_to_table(rep);
  CHECK(table.find("[FAIL] beta") != std::string::npos);
}

TEST_CASE("csv escaping", "[report]") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("decomposition serialization is deterministic across thread counts", "[report]") {
  DecompositionReport a = decompose(3, 1);
  DecompositionReport b = decompose(3, 2);
  CHECK(decomposition_to_json(a) == decomposition_to_json(b));
  CHECK(decomposition_to_csv(a) == decomposition_to_csv(b));

  std::string json = decomposition_to_json(a);
  CHECK(json.find("\"total\": 27") != std::string::npos);
  std::string table = decomposition_to_table(a);
  CHECK(table.find("[3, 0, 0], (3, 0) : 10, 1") != std::string::npos);
  CHECK(table.find("[2, 1, 0], (1, 1) : 8, 2") != std::string::npos);
  CHECK(table.find("[1, 1, 1], (0, 0) : 1, 1") != std::string::npos);
}
