#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#ifndef GBC_CLI_PATH
#define GBC_CLI_PATH "gbc"
#endif

namespace {

int run_cli(const std::string& args, const std::string& out_path) {
  std::string cmd = std::string(GBC_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  out << body;
}

}  // namespace

TEST_CASE("cli: span laws pass at a small bound with exit code 0") {
  CHECK(run_cli("check span-laws --max-size 1", "/tmp/gbc_cli_span.txt") == 0);
  auto body = slurp("/tmp/gbc_cli_span.txt");
  CHECK(body.find("[PASS]") != std::string::npos);
  CHECK(body.find("[FAIL]") == std::string::npos);
}

TEST_CASE("cli: identical config and seed give byte-identical structured reports") {
  CHECK(run_cli("check coherent-class --instance species --max-size 2 --seed 7 --format structured",
                "/tmp/gbc_cli_a.json") == 0);
  CHECK(run_cli("check coherent-class --instance species --max-size 2 --seed 7 --format structured",
                "/tmp/gbc_cli_b.json") == 0);
  CHECK(slurp("/tmp/gbc_cli_a.json") == slurp("/tmp/gbc_cli_b.json"));
}

TEST_CASE("cli: malformed fixtures name the offending field and exit 2") {
  write_file("/tmp/gbc_bad_cell.json",
             "{\"left\": {\"dom\": 1, \"cod\": 1}, \"right\": {\"dom\": 1, \"cod\": 1, \"table\": [0]}}");
  write_file("/tmp/gbc_f.json", "{\"kind\": \"constant\", \"size\": 1, \"middle\": 1}");
  int code = run_cli(
      "convolve --instance span --fixture /tmp/gbc_f.json --fixture /tmp/gbc_f.json "
      "--cell /tmp/gbc_bad_cell.json --bound 1",
      "/tmp/gbc_cli_bad.txt");
  CHECK(code == 2);
  auto body = slurp("/tmp/gbc_cli_bad.txt");
  CHECK(body.find("table") != std::string::npos);
}

TEST_CASE("cli: conversion round trip through fixture files") {
  CHECK(run_cli("convert oplax-to-comonadic --functor reversal --max-size 1 --out /tmp/gbc_ct.json",
                "/tmp/gbc_cli_c1.txt") == 0);
  CHECK(run_cli("convert comonadic-to-oplax --fixture /tmp/gbc_ct.json --out /tmp/gbc_ct2.json "
                "--verify-roundtrip",
                "/tmp/gbc_cli_c2.txt") == 0);
  auto body = slurp("/tmp/gbc_cli_c2.txt");
  CHECK(body.find("convert.roundtrip") != std::string::npos);
}

TEST_CASE("cli: species convolution reports the witness bijection") {
  write_file("/tmp/gbc_one.json", "{\"kind\": \"constant\", \"size\": 1}");
  write_file("/tmp/gbc_n.json", "{\"n\": 2}");
  CHECK(run_cli("convolve --instance species --fixture /tmp/gbc_one.json --fixture /tmp/gbc_one.json "
                "--cell /tmp/gbc_n.json --bound 2",
                "/tmp/gbc_cli_sp.txt") == 0);
  auto body = slurp("/tmp/gbc_cli_sp.txt");
  CHECK(body.find("\"reduced\":4") != std::string::npos);
  CHECK(body.find("\"coend\":4") != std::string::npos);
}
