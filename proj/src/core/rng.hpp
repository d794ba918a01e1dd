#pragma once

#include <array>
#include <cstdint>

namespace irsfso::numerics {

// Philox4x32-10 block function (counter-based PRF from the Random123 family).
std::array<std::uint32_t, 4> philox4x32_10(const std::array<std::uint32_t, 4>& counter,
                                           const std::array<std::uint32_t, 2>& key);

// Counter-based random stream. A stream is addressed by (seed, stream_id);
// identical addresses reproduce identical sequences and distinct stream_ids
// are independent blocks of the same keyed PRF, so trials can be assigned to
// streams without any coordination between workers.
class RngStream {
public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // uniform double in [0, 1), 53-bit resolution
  double next_double();
  // uniform double in (0, 1), safe for log()
  double next_open();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  int pos_ = 4;  // empty
};

}  // namespace irsfso::numerics
