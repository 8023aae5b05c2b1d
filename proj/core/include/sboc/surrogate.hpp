#pragma once

#include <functional>
#include <memory>
#include <string>

#include "sboc/dataset.hpp"
#include "sboc/kriging.hpp"
#include "sboc/model.hpp"
#include "sboc/rbf.hpp"
#include "sboc/rng.hpp"

namespace sboc {

enum class SurrogateKind { Rbf, Kriging, Custom };

/// Pluggable trainer for user-provided model families.
using SurrogateTrainer =
    std::function<std::unique_ptr<SurrogateModel>(const Dataset&, const RngStream&)>;

struct SurrogateSpec {
    SurrogateKind kind = SurrogateKind::Rbf;
    RbfOptions rbf;
    KrigingOptions kriging;
    SurrogateTrainer custom_trainer;  // required when kind == Custom
    int custom_min_points = 1;        // dataset size a custom trainer needs
};

/// Smallest dataset the requested family can be trained on in `dimension` inputs.
int surrogate_min_points(const SurrogateSpec& spec, int dimension);

/// Trains the requested model family on the dataset.
std::unique_ptr<SurrogateModel> train_surrogate(const Dataset& data, const RngStream& rng,
                                                const SurrogateSpec& spec);

/// Serializes a built-in model to a versioned JSON string whose numeric
/// fields round-trip exactly.  Custom models are not serializable.
std::string serialize_model(const SurrogateModel& model);

/// Rebuilds a model from serialize_model output; throws std::runtime_error
/// on unknown formats or versions.
std::unique_ptr<SurrogateModel> deserialize_model(const std::string& text);

}  // namespace sboc
