#include <cstdio>

int main() {
  std::puts("mottlab: subcommands pending");
  return 0;
}
