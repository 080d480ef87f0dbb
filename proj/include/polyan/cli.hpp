#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace polyan::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;        // parse / usage error
inline constexpr int kPrecondition = 3; // theory precondition violated
inline constexpr int kTableMismatch = 4;
inline constexpr int kBudget = 5;       // search budget exhausted

int default_workers();  // POLYAN_WORKERS, else 1

struct CheckOptions {
  std::string poly;
  std::vector<int> ws;
  bool machine = false;
};
int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err);

struct EnumerateOptions {
  int degree = 0;
  bool device1 = true;
  int device2_s = 0;
  int workers = 1;
  bool emit_list = false;
  bool machine = false;
};
int cmd_enumerate(const EnumerateOptions& o, std::ostream& out, std::ostream& err);

struct PeriodOptions {
  std::string poly;
  int w = 1;
  std::string init;  // comma-separated r values
  uint64_t max_steps = 1u << 20;
  bool machine = false;
};
int cmd_period(const PeriodOptions& o, std::ostream& out, std::ostream& err);

struct RngOptions {
  std::string poly;  // trinomial spec
  int w = 32;
  uint64_t seed = 0;
  uint64_t count = 0;
  bool unsafe = false;
};
int cmd_rng(const RngOptions& o, std::ostream& out, std::ostream& err);

struct TablesOptions {
  int max_degree = 14;
  int workers = 1;
  bool machine = false;
};
int cmd_tables(const TablesOptions& o, std::ostream& out, std::ostream& err);

// Seed expansion used by cmd_rng: splitmix64 stream, then the first window
// value is forced odd.
std::vector<uint64_t> expand_seed(uint64_t seed, int r, uint64_t mask);

}  // namespace polyan::cli
