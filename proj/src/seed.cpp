#include "zklab/seed.hpp"

#include <stdexcept>

namespace zklab {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SeedStream::next_u64() {
    std::uint64_t v = splitmix64(seed ^ splitmix64(counter));
    ++counter;
    return v;
}

std::uint64_t SeedStream::uniform(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("SeedStream::uniform: n == 0");
    if (n == 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        std::uint64_t v = next_u64();
        if (v < limit) return v % n;
    }
}

Int SeedStream::uniform_int(const Int& n) {
    if (n <= 0) throw std::invalid_argument("SeedStream::uniform_int: n <= 0");
    if (mpz_fits_ulong_p(n.get_mpz_t()) && n.get_ui() <= UINT64_MAX)
        return Int(static_cast<unsigned long>(uniform(n.get_ui())));
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const Int mask = (Int(1) << bits) - 1;
    for (;;) {
        Int v = 0;
        for (std::size_t w = 0; w < words; ++w) {
            v <<= 64;
            v += Int(static_cast<unsigned long>(next_u64()));
        }
        v &= mask;
        if (v < n) return v;
    }
}

bool SeedStream::bernoulli(const Rat& p) {
    if (p < 0 || p > 1) throw std::invalid_argument("SeedStream::bernoulli: p outside [0,1]");
    if (p == 0) return false;
    if (p == 1) return true;
    Int draw = uniform_int(Int(p.get_den()));
    return draw < p.get_num();
}

SeedStream SeedStream::split(std::uint64_t tag) {
    std::uint64_t base = next_u64();
    return SeedStream(splitmix64(base ^ splitmix64(tag)));
}

}  // namespace zklab
