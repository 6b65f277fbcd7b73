#include "vgaml/pca.hpp"

#include "vgaml/errors.hpp"

#include <Eigen/Dense>
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace vgaml {

double PcaModel::retained_share() const {
    double s = 0;
    for (std::size_t i = 0; i < retained(); ++i) s += variance_share[i];
    return s;
}

PcaModel pca_fit(const Dataset& ds, const PcaStop& stop, bool standardize) {
    const std::size_t d = ds.num_attributes();
    for (const auto& a : ds.schema()) {
        if (a.kind != AttributeKind::Numeric) throw SchemaError("PCA needs numeric attributes; '" + a.name + "' is nominal");
    }
    if (ds.size() < 2) throw SchemaError("PCA needs at least 2 instances");
    if (d == 0) throw SchemaError("PCA needs at least one attribute");
    if (stop.component_count > d) {
        throw SchemaError("cannot keep " + std::to_string(stop.component_count) + " components of " +
                          std::to_string(d) + " attributes");
    }

    PcaModel m;
    m.standardized = standardize;
    for (const auto& a : ds.schema()) m.attributes.push_back(a.name);
    const auto n = static_cast<double>(ds.size());
    m.means.assign(d, 0.0);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t a = 0; a < d; ++a) m.means[a] += ds.value(i, a);
    }
    for (auto& v : m.means) v /= n;

    Eigen::MatrixXd centred(ds.size(), d);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t a = 0; a < d; ++a) centred(i, a) = ds.value(i, a) - m.means[a];
    }
    m.scales.assign(d, 1.0);
    if (standardize) {
        for (std::size_t a = 0; a < d; ++a) {
            const double sd = std::sqrt(centred.col(a).squaredNorm() / (n - 1));
            m.scales[a] = sd > 0 ? sd : 1.0;
            centred.col(a) /= m.scales[a];
        }
    }
    const Eigen::MatrixXd cov = (centred.transpose() * centred) / (n - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) throw NumericError("covariance eigen-decomposition failed");

    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    const auto& values = solver.eigenvalues();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    double total = 0;
    for (std::size_t i = 0; i < d; ++i) total += std::max(0.0, values[i]);
    if (!(total > 0)) throw NumericError("PCA input has zero variance");

    for (auto idx : order) {
        const double ev = std::max(0.0, values[idx]);
        m.eigenvalues.push_back(ev);
        m.variance_share.push_back(ev / total);
    }
    std::size_t keep = stop.component_count;
    if (keep == 0) {
        double acc = 0;
        while (keep < d) {
            acc += m.variance_share[keep++];
            if (acc >= stop.variance_target - 1e-12) break;
        }
    }
    for (std::size_t c = 0; c < keep; ++c) {
        const Eigen::VectorXd v = solver.eigenvectors().col(static_cast<Eigen::Index>(order[c]));
        std::size_t big = 0;
        for (std::size_t a = 1; a < d; ++a) {
            if (std::abs(v[a]) > std::abs(v[big])) big = a;
        }
        const double sign = v[big] < 0 ? -1.0 : 1.0;
        std::vector<double> comp(d);
        for (std::size_t a = 0; a < d; ++a) comp[a] = sign * v[a];
        m.components.push_back(std::move(comp));
    }
    return m;
}

std::vector<double> pca_transform(const PcaModel& model, std::span<const double> instance) {
    if (instance.size() != model.attributes.size()) {
        throw SchemaError("PCA input has " + std::to_string(instance.size()) + " values, model expects " +
                          std::to_string(model.attributes.size()));
    }
    std::vector<double> out(model.retained(), 0.0);
    for (std::size_t c = 0; c < model.retained(); ++c) {
        for (std::size_t a = 0; a < instance.size(); ++a) {
            out[c] += model.components[c][a] * (instance[a] - model.means[a]) / model.scales[a];
        }
    }
    return out;
}

Dataset pca_transform(const PcaModel& model, const Dataset& ds) {
    std::vector<std::size_t> cols;
    for (const auto& name : model.attributes) cols.push_back(ds.attribute_index(name));
    std::vector<Attribute> schema;
    for (std::size_t c = 0; c < model.retained(); ++c) schema.push_back({"PC" + std::to_string(c + 1), AttributeKind::Numeric, {}});
    Dataset out(std::move(schema));
    std::vector<double> in(cols.size());
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t a = 0; a < cols.size(); ++a) in[a] = ds.value(i, cols[a]);
        out.add_row(pca_transform(model, in), ds.label(i), ds.id(i));
    }
    return out;
}

std::string pca_to_json(const PcaModel& model) {
    nlohmann::json j;
    j["attributes"] = model.attributes;
    j["means"] = model.means;
    j["scales"] = model.scales;
    j["standardized"] = model.standardized;
    j["matrix"] = model.standardized ? "correlation" : "covariance";
    j["components"] = model.components;
    j["eigenvalues"] = model.eigenvalues;
    j["variance_share"] = model.variance_share;
    return j.dump(2) + "\n";
}

PcaModel pca_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("PCA model: ") + e.what());
    }
    try {
        PcaModel m;
        m.attributes = j.at("attributes").get<std::vector<std::string>>();
        m.means = j.at("means").get<std::vector<double>>();
        m.scales = j.at("scales").get<std::vector<double>>();
        m.standardized = j.at("standardized").get<bool>();
        m.components = j.at("components").get<std::vector<std::vector<double>>>();
        m.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
        m.variance_share = j.at("variance_share").get<std::vector<double>>();
        const auto d = m.attributes.size();
        bool ok = m.means.size() == d && m.scales.size() == d;
        for (const auto& c : m.components) ok = ok && c.size() == d;
        if (!ok) throw SchemaError("PCA model: inconsistent dimensions");
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("PCA model: ") + e.what());
    }
}

}  // namespace vgaml
