#pragma once

#include <cstdint>
#include <memory>

#include "tsdt/types.hpp"

namespace tsdt {

// Single-consumer stateful sample supplier. Deterministic: identical kind,
// configuration and seed reproduce the same sequence.
class StreamSource {
  public:
    virtual ~StreamSource() = default;

    Instance next() {
        ++pulls_;
        return do_next();
    }
    virtual const AttributeSchema& schema() const = 0;
    std::int64_t pulls() const { return pulls_; }

  protected:
    virtual Instance do_next() = 0;

  private:
    std::int64_t pulls_ = 0;
};

// q >= 2 i.i.d. uniform binary attributes; label 1 iff the first two agree.
std::unique_ptr<StreamSource> xor_stream(int q, std::uint64_t seed);

// Cycles the dataset in seeded epoch permutations; reshuffle re-draws the
// permutation each epoch, otherwise the first one is replayed.
std::unique_ptr<StreamSource> replay_stream(Dataset dataset, std::uint64_t seed,
                                            bool reshuffle = true);

// Convenience for evaluation sets: n draws from an xor_stream.
Dataset make_xor_dataset(int q, std::int64_t n, std::uint64_t seed);

}  // namespace tsdt
