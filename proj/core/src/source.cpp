#include "abscreen/source.hpp"

#include "abscreen/errors.hpp"

#include <charconv>

namespace abscreen::engine {

ScreeningSource ScreeningSource::model(std::string model_id, protocol::BiasLevel bias,
                                       int trial_index) {
    if (model_id.empty())
        throw Error(ErrorCode::ConfigError, "model_id is empty");
    if (trial_index < 1)
        throw Error(ErrorCode::ConfigError, "trial_index must be >= 1");
    return ScreeningSource{Model{std::move(model_id), bias, trial_index}};
}

ScreeningSource ScreeningSource::human(std::string screener_id) {
    if (screener_id.empty())
        throw Error(ErrorCode::ConfigError, "screener_id is empty");
    if (screener_id.find(':') != std::string::npos)
        throw Error(ErrorCode::ConfigError, "screener_id must not contain ':'");
    return ScreeningSource{Human{std::move(screener_id)}};
}

std::string ScreeningSource::key() const {
    if (const auto* m = as_model())
        return "model:" + m->model_id + ":" + protocol::to_string(m->bias) + ":" +
               std::to_string(m->trial_index);
    return "human:" + as_human()->screener_id;
}

std::string ScreeningSource::display_name() const {
    if (const auto* m = as_model()) {
        std::string name = m->model_id + " (" + protocol::to_string(m->bias);
        if (m->trial_index != 1)
            name += ", trial " + std::to_string(m->trial_index);
        name += ")";
        return name;
    }
    return as_human()->screener_id;
}

ScreeningSource ScreeningSource::parse(const std::string& key) {
    if (key.rfind("human:", 0) == 0) {
        return human(key.substr(6));
    }
    if (key.rfind("model:", 0) == 0) {
        const std::string rest = key.substr(6);
        // The model id may itself contain ':'; bias and trial never do, so
        // split from the right.
        const auto trial_sep = rest.rfind(':');
        if (trial_sep == std::string::npos)
            throw Error(ErrorCode::ConfigError, "malformed source key '" + key + "'");
        const auto bias_sep = rest.rfind(':', trial_sep - 1);
        if (bias_sep == std::string::npos)
            throw Error(ErrorCode::ConfigError, "malformed source key '" + key + "'");
        const std::string trial_str = rest.substr(trial_sep + 1);
        int trial = 0;
        const auto [ptr, ec] =
            std::from_chars(trial_str.data(), trial_str.data() + trial_str.size(), trial);
        if (ec != std::errc() || ptr != trial_str.data() + trial_str.size())
            throw Error(ErrorCode::ConfigError,
                        "malformed trial index in source key '" + key + "'");
        const auto bias =
            protocol::bias_level_from_string(rest.substr(bias_sep + 1, trial_sep - bias_sep - 1));
        return model(rest.substr(0, bias_sep), bias, trial);
    }
    throw Error(ErrorCode::ConfigError,
                "source key must start with 'model:' or 'human:': '" + key + "'");
}

} // namespace abscreen::engine
