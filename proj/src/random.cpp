#include "abc/random.hpp"

#include <cmath>

#include "abc/stats.hpp"

namespace abc {

uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

uint64_t derive_seed(uint64_t base, std::initializer_list<uint64_t> path) {
  uint64_t h = mix64(base ^ 0x6a09e667f3bcc909ULL);
  for (uint64_t p : path) {
    h = mix64(h + 0x9e3779b97f4a7c15ULL + mix64(p));
  }
  return h;
}

uint64_t hash_tag(std::string_view tag) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(h);
}

double RandomStream::next_normal() { return std_normal_quantile(next_open()); }

double RandomStream::next_exponential(double rate) {
  return -std::log(next_open()) / rate;
}

}  // namespace abc
