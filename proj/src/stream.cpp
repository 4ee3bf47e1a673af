#include "tsdt/stream.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tsdt {

namespace {

class XorStream final : public StreamSource {
  public:
    XorStream(int q, std::uint64_t seed) : rng_(splitmix64(seed)) {
        if (q < 2) throw std::invalid_argument("xor_stream: q must be >= 2");
        for (int i = 0; i < q; ++i)
            schema_.attributes.push_back({"x" + std::to_string(i), 2});
        schema_.num_classes = 2;
    }

    const AttributeSchema& schema() const override { return schema_; }

  protected:
    Instance do_next() override {
        Instance inst;
        inst.values.resize(schema_.attributes.size());
        for (auto& v : inst.values) v = static_cast<int>(rng_() & 1u);
        inst.label = inst.values[0] == inst.values[1] ? 1 : 0;
        return inst;
    }

  private:
    AttributeSchema schema_;
    Rng rng_;
};

class ReplayStream final : public StreamSource {
  public:
    ReplayStream(Dataset dataset, std::uint64_t seed, bool reshuffle)
        : dataset_(std::move(dataset)), rng_(splitmix64(seed)), reshuffle_(reshuffle) {
        if (dataset_.empty()) throw std::invalid_argument("replay_stream: empty dataset");
        order_.resize(dataset_.size());
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::shuffle(order_.begin(), order_.end(), rng_);
    }

    const AttributeSchema& schema() const override { return dataset_.schema; }

  protected:
    Instance do_next() override {
        if (pos_ == order_.size()) {
            if (reshuffle_) std::shuffle(order_.begin(), order_.end(), rng_);
            pos_ = 0;
        }
        return dataset_.rows[order_[pos_++]];
    }

  private:
    Dataset dataset_;
    Rng rng_;
    bool reshuffle_;
    std::vector<std::size_t> order_;
    std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<StreamSource> xor_stream(int q, std::uint64_t seed) {
    return std::make_unique<XorStream>(q, seed);
}

std::unique_ptr<StreamSource> replay_stream(Dataset dataset, std::uint64_t seed, bool reshuffle) {
    return std::make_unique<ReplayStream>(std::move(dataset), seed, reshuffle);
}

Dataset make_xor_dataset(int q, std::int64_t n, std::uint64_t seed) {
    auto src = xor_stream(q, seed);
    Dataset out;
    out.schema = src->schema();
    out.rows.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) out.rows.push_back(src->next());
    return out;
}

}  // namespace tsdt
