#include "sboc/surrogate.hpp"

#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace sboc {

namespace {

constexpr const char* kFormat = "sboc-surrogate";
constexpr int kVersion = 1;

nlohmann::json to_json(const Eigen::VectorXd& v) {
    nlohmann::json array = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) array.push_back(v[i]);
    return array;
}

nlohmann::json to_json(const Eigen::MatrixXd& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const Eigen::VectorXd row = m.row(i).transpose();
        rows.push_back(to_json(row));
    }
    return rows;
}

Eigen::VectorXd vector_from_json(const nlohmann::json& array) {
    Eigen::VectorXd v(array.size());
    for (std::size_t i = 0; i < array.size(); ++i) v[static_cast<Eigen::Index>(i)] = array.at(i);
    return v;
}

Eigen::MatrixXd matrix_from_json(const nlohmann::json& rows) {
    if (rows.empty()) return {};
    Eigen::MatrixXd m(rows.size(), rows.at(0).size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        m.row(static_cast<Eigen::Index>(i)) = vector_from_json(rows.at(i)).transpose();
    }
    return m;
}

}  // namespace

int surrogate_min_points(const SurrogateSpec& spec, int dimension) {
    switch (spec.kind) {
        case SurrogateKind::Rbf:
            return dimension + 2;
        case SurrogateKind::Kriging:
            return KrigingModel::trend_size(dimension) + 1;
        case SurrogateKind::Custom:
            return spec.custom_min_points;
    }
    throw std::invalid_argument("unknown surrogate kind");
}

std::unique_ptr<SurrogateModel> train_surrogate(const Dataset& data, const RngStream& rng,
                                                const SurrogateSpec& spec) {
    switch (spec.kind) {
        case SurrogateKind::Rbf:
            return train_rbf(data, rng, spec.rbf);
        case SurrogateKind::Kriging:
            return train_kriging(data, rng, spec.kriging);
        case SurrogateKind::Custom:
            if (!spec.custom_trainer) {
                throw std::invalid_argument("custom surrogate requires a trainer");
            }
            return spec.custom_trainer(data, rng);
    }
    throw std::invalid_argument("unknown surrogate kind");
}

std::string serialize_model(const SurrogateModel& model) {
    nlohmann::json doc;
    doc["format"] = kFormat;
    doc["version"] = kVersion;
    if (const auto* rbf = dynamic_cast<const RbfModel*>(&model)) {
        doc["kind"] = "rbf";
        doc["dimension"] = rbf->dimension();
        doc["centers"] = to_json(rbf->centers());
        doc["weights"] = to_json(rbf->weights());
        doc["offset"] = rbf->offset();
        doc["linear"] = to_json(rbf->linear());
        doc["shape"] = rbf->shape();
    } else if (const auto* kriging = dynamic_cast<const KrigingModel*>(&model)) {
        doc["kind"] = "kriging";
        doc["dimension"] = kriging->dimension();
        doc["centers"] = to_json(kriging->centers());
        doc["theta"] = to_json(kriging->theta());
        doc["trend"] = to_json(kriging->trend());
        doc["weights"] = to_json(kriging->weights());
        doc["nugget"] = kriging->nugget();
        doc["variance"] = kriging->variance();
    } else {
        throw std::invalid_argument("only built-in model families serialize");
    }
    return doc.dump();
}

std::unique_ptr<SurrogateModel> deserialize_model(const std::string& text) {
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (doc.value("format", "") != kFormat) throw std::runtime_error("unrecognized model format");
    if (doc.value("version", 0) != kVersion) throw std::runtime_error("unsupported model version");

    const std::string kind = doc.at("kind");
    if (kind == "rbf") {
        return std::make_unique<RbfModel>(matrix_from_json(doc.at("centers")),
                                          vector_from_json(doc.at("weights")),
                                          doc.at("offset").get<double>(),
                                          vector_from_json(doc.at("linear")),
                                          doc.at("shape").get<double>());
    }
    if (kind == "kriging") {
        return std::make_unique<KrigingModel>(
            matrix_from_json(doc.at("centers")), vector_from_json(doc.at("theta")),
            vector_from_json(doc.at("trend")), vector_from_json(doc.at("weights")),
            doc.at("nugget").get<double>(), doc.at("variance").get<double>());
    }
    throw std::runtime_error("unknown model kind: " + kind);
}

}  // namespace sboc
