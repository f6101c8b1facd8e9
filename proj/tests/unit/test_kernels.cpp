#include <random>
#include <set>

#include "doctest.h"
#include "test_util.hpp"
#include "twinperm/detect.hpp"
#include "twinperm/kernels.hpp"
#include "twinperm/matching.hpp"

using namespace twinperm;
namespace kn = twinperm::kernels;

namespace {

struct IsaGuard {
  kn::Isa saved = kn::active_isa();
  ~IsaGuard() { kn::set_isa(saved); }
};

struct KernelOutputs {
  std::size_t count = 0;
  std::vector<std::uint64_t> less;
  std::vector<std::uint64_t> greater;
  std::vector<std::uint16_t> ranks;
  bool operator==(const KernelOutputs&) const = default;
};

KernelOutputs run_all(std::span<const Value> v, Value pivot) {
  KernelOutputs o;
  o.count = kn::count_less(v, pivot);
  o.less.assign(kn::mask_words(v.size()), ~0ULL);
  o.greater.assign(kn::mask_words(v.size()), ~0ULL);
  kn::less_mask(v, pivot, o.less);
  kn::greater_mask(v, pivot, o.greater);
  o.ranks.assign(v.size(), 0);
  kn::window_ranks(v, o.ranks);
  return o;
}

}  // namespace

TEST_CASE("scalar kernels against direct loops") {
  IsaGuard guard;
  kn::set_isa(kn::Isa::scalar);
  const Permutation p = random_permutation(150, 4);
  const auto v = p.values();
  for (Value pivot : {0, 1, 75, 150, 151}) {
    const KernelOutputs o = run_all(v, pivot);
    std::size_t expect = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      expect += v[i] < pivot;
      CHECK(((o.less[i / 64] >> (i % 64)) & 1U) == static_cast<unsigned>(v[i] < pivot));
      CHECK(((o.greater[i / 64] >> (i % 64)) & 1U) == static_cast<unsigned>(v[i] > pivot));
    }
    CHECK(o.count == expect);
    // Tail bits past the end are cleared.
    CHECK((o.less.back() >> (v.size() % 64)) == 0);
  }
  const oracle::Seq t = oracle::order_type(testutil::seq(p));
  const KernelOutputs o = run_all(v, 0);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(o.ranks[i] == t[i]);
}

TEST_CASE("every supported ISA matches the scalar reference") {
  IsaGuard guard;
  CHECK(kn::isa_supported(kn::Isa::scalar));
  CHECK(kn::isa_supported(kn::best_isa()));
  if (!kn::isa_supported(kn::Isa::avx2)) {
    CHECK_THROWS_AS(kn::set_isa(kn::Isa::avx2), InvalidInput);
    MESSAGE("AVX2 variant not available; scalar only");
    return;
  }
  std::mt19937_64 gen(2024);
  for (std::size_t n : {0, 1, 3, 7, 8, 9, 15, 16, 17, 31, 32, 33, 63, 64, 65, 100, 257, 1000}) {
    for (int rep = 0; rep < 6; ++rep) {
      std::vector<Value> v(n);
      // Arbitrary distinct values, negatives included.
      std::uniform_int_distribution<Value> d(-1000000, 1000000);
      std::set<Value> used;
      for (auto& x : v) {
        do x = d(gen); while (!used.insert(x).second);
      }
      const Value pivot = n ? v[gen() % n] + static_cast<Value>(rep % 3) - 1 : 5;
      kn::set_isa(kn::Isa::scalar);
      const KernelOutputs a = run_all(v, pivot);
      kn::set_isa(kn::Isa::avx2);
      const KernelOutputs b = run_all(v, pivot);
      CHECK(a == b);
    }
  }
}

TEST_CASE("detectors give identical results under each ISA") {
  IsaGuard guard;
  if (!kn::isa_supported(kn::Isa::avx2)) return;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Permutation p = random_permutation(60 + seed, seed);
    kn::set_isa(kn::Isa::scalar);
    const auto bs = max_len(p, 2, TwinKind::block);
    const auto ms = match2(p.values().subspan(0, 60), Orientation::increasing);
    kn::set_isa(kn::Isa::avx2);
    const auto bv = max_len(p, 2, TwinKind::block);
    const auto mv = match2(p.values().subspan(0, 60), Orientation::increasing);
    CHECK(bs.k_max == bv.k_max);
    CHECK(bs.certificate->position_sets == bv.certificate->position_sets);
    CHECK(ms.has_value() == mv.has_value());
    if (ms && mv) CHECK(ms->pairs == mv->pairs);
  }
}

TEST_CASE("isa names") {
  CHECK(kn::isa_name(kn::Isa::scalar) == "scalar");
  CHECK(kn::isa_name(kn::Isa::avx2) == "avx2");
}
