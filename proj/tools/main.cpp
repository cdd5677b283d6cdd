#include "cli.hpp"

int main(int argc, char** argv) {
  const giant::cli::ParseResult parsed = giant::cli::parse_args(argc, argv);
  if (!parsed.ok) return parsed.exit_code;
  return giant::cli::run(parsed.config);
}
