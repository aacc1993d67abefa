#pragma once

#include "abscreen/prompt.hpp"

#include <string>
#include <variant>

namespace abscreen::engine {

struct ModelSource {
    std::string model_id;
    protocol::BiasLevel bias = protocol::BiasLevel::None;
    int trial_index = 1;

    bool operator==(const ModelSource&) const = default;
};

struct HumanSource {
    std::string screener_id;

    bool operator==(const HumanSource&) const = default;
};

/// One decision column: a (model, bias, trial) combination or a human
/// screener. The key string uniquely identifies the column in stores and
/// reports: "model:<model_id>:<bias>:<trial>" or "human:<screener_id>".
struct ScreeningSource {
    using Model = ModelSource;
    using Human = HumanSource;

    std::variant<Model, Human> kind;

    static ScreeningSource model(std::string model_id, protocol::BiasLevel bias,
                                 int trial_index = 1);
    static ScreeningSource human(std::string screener_id);

    bool is_model() const { return std::holds_alternative<Model>(kind); }
    const Model* as_model() const { return std::get_if<Model>(&kind); }
    const Human* as_human() const { return std::get_if<Human>(&kind); }

    std::string key() const;
    std::string display_name() const;

    static ScreeningSource parse(const std::string& key);

    bool operator==(const ScreeningSource&) const = default;
    bool operator<(const ScreeningSource& other) const { return key() < other.key(); }
};

} // namespace abscreen::engine
