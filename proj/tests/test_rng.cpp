// Copyright (c) 2026 polsarclass developers.
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <polsar/rng.hpp>

using namespace polsar;

TEST_SUITE_BEGIN("rng");

TEST_CASE("identical seeds give identical streams") {
  Stream a(42), b(42);
  for (int i = 0; i < 64; ++i) CHECK(a.next_u64() == b.next_u64());
  Stream c(42), d(42);
  for (int i = 0; i < 64; ++i) CHECK(c.normal() == d.normal());
}

TEST_CASE("different seeds and domains give different streams") {
  Stream a(42), b(43);
  CHECK(a.next_u64() != b.next_u64());

  Stream tile = Stream::child(7, StreamDomain::MosaicTile, 0);
  Stream proto = Stream::child(7, StreamDomain::PrototypeClass, 0);
  Stream tile1 = Stream::child(7, StreamDomain::MosaicTile, 1);
  CHECK(tile.next_u64() != proto.next_u64());
  Stream tile_again = Stream::child(7, StreamDomain::MosaicTile, 0);
  CHECK(tile_again.next_u64() != tile1.next_u64());
}

TEST_CASE("child derivation is deterministic") {
  Stream a = Stream::child(123, StreamDomain::Trial, 55);
  Stream b = Stream::child(123, StreamDomain::Trial, 55);
  for (int i = 0; i < 16; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("uniform01 stays in range with a sane mean") {
  Stream s(1);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(std::abs(sum / n - 0.5) < 0.01);
}

TEST_CASE("normal variates have mean 0 and variance 1") {
  Stream s(2);
  double sum = 0.0, sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = s.normal();
    sum += x;
    sq += x * x;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.01);
  CHECK(std::abs(var - 1.0) < 0.02);
}

TEST_SUITE_END();
