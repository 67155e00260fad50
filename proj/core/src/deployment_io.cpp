#include "hgbs/deployment_io.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <json.hpp>

namespace hgbs {

namespace {

using nlohmann::json;

const char* policy_name(DegreeKind k) {
    return k == DegreeKind::Flat ? "flat" : "doubling";
}

DegreeKind policy_from_name(const std::string& s) {
    if (s == "flat") return DegreeKind::Flat;
    if (s == "doubling") return DegreeKind::Doubling;
    throw FormatError("unknown degree policy '" + s + "'");
}

} // namespace

void save_deployment(const Deployment& dep, std::ostream& out,
                     bool include_authority) {
    json doc;
    doc["format_version"] = kDeploymentFormatVersion;
    doc["n"] = dep.grid.order;
    doc["k"] = dep.grid.unit;
    doc["alpha"] = dep.policy.alpha;
    doc["policy"] = policy_name(dep.policy.kind);
    doc["t0"] = dep.policy.base_degree;
    doc["modulus"] = dep.modulus.value();
    doc["master_seed"] = dep.master_seed;
    doc["truncation"] = dep.truncation;

    json rings = json::array();
    for (const auto& ring : dep.rings) {
        json shares = json::array();
        for (unsigned o = 1; o <= ring.truncation; ++o)
            shares.push_back({{"order", o},
                              {"coeffs", ring.shares[o - 1].share.coeff_values()}});
        rings.push_back({{"id", encode_id(ring.owner)}, {"shares", std::move(shares)}});
    }
    doc["rings"] = std::move(rings);

    if (include_authority && dep.has_authority()) {
        json polys = json::array();
        for (unsigned o = 1; o <= dep.grid.order; ++o)
            for (std::uint64_t g = 0; g < dep.authority[o - 1].size(); ++g)
                polys.push_back({{"order", o},
                                 {"index", g},
                                 {"coeffs", dep.authority[o - 1][g].full_matrix()}});
        doc["authority_polynomials"] = std::move(polys);
    }

    out << doc.dump() << '\n';
    if (!out) throw IoError("write of deployment document failed");
}

void save_deployment_file(const Deployment& dep, const std::string& path,
                          bool include_authority) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    save_deployment(dep, out, include_authority);
}

Deployment load_deployment(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw FormatError(std::string("deployment document is not valid JSON: ") +
                          e.what());
    }

    try {
        if (doc.at("format_version").get<int>() != kDeploymentFormatVersion)
            throw FormatError("unsupported format_version");

        const GridParams grid = make_grid(doc.at("n").get<unsigned>(),
                                          doc.at("k").get<unsigned>());
        const FieldModulus modulus(doc.at("modulus").get<std::uint64_t>());
        DegreePolicy policy =
            make_policy(policy_from_name(doc.at("policy").get<std::string>()),
                        doc.at("alpha").get<double>(), grid);
        if (policy.base_degree != doc.at("t0").get<std::size_t>())
            throw FormatError("stored t0 disagrees with alpha and the zone size");
        const unsigned truncation = doc.at("truncation").get<unsigned>();
        if (truncation < 1 || truncation > grid.order)
            throw FormatError("truncation outside [1, n]");

        Deployment dep{grid, policy, modulus, doc.at("master_seed").get<std::uint64_t>(),
                       truncation, {}, {}};

        if (doc.contains("authority_polynomials")) {
            dep.authority.resize(grid.order);
            for (unsigned o = 1; o <= grid.order; ++o)
                dep.authority[o - 1].reserve(1ull << (grid.order - o));
            std::uint64_t expected = 0;
            for (const auto& p : doc.at("authority_polynomials")) {
                const auto o = p.at("order").get<unsigned>();
                const auto g = p.at("index").get<std::uint64_t>();
                if (o < 1 || o > grid.order)
                    throw FormatError("authority polynomial with order outside [1, n]");
                if (g != dep.authority[o - 1].size())
                    throw FormatError("authority polynomials out of canonical order");
                const std::size_t t = policy.degree_at(o);
                dep.authority[o - 1].push_back(SymBivarPoly::from_full_matrix(
                    modulus, t, p.at("coeffs").get<std::vector<std::uint64_t>>()));
                ++expected;
            }
            if (expected != (1ull << grid.order) - 1)
                throw FormatError("authority polynomial count is not 2^n - 1");
            for (unsigned o = 1; o <= grid.order; ++o)
                if (dep.authority[o - 1].size() != 1ull << (grid.order - o))
                    throw FormatError("order " + std::to_string(o) +
                                      " does not hold 2^(n-o) polynomials");
        }

        const auto& rings = doc.at("rings");
        if (rings.size() != grid.node_count)
            throw FormatError("ring count differs from the network size");
        dep.rings.reserve(grid.node_count);
        std::uint64_t next_index = 0;
        for (const auto& r : rings) {
            NodeId owner = decode_id(r.at("id").get<std::uint64_t>(), grid);
            if (node_index(owner) != next_index++)
                throw FormatError("rings out of canonical node order");
            KeyRing ring{owner, {}, truncation};
            const auto& shares = r.at("shares");
            if (shares.size() != truncation)
                throw FormatError("ring does not hold exactly d shares");
            const FieldElement x(encode_id(owner), modulus);
            unsigned expected_order = 1;
            for (const auto& s : shares) {
                if (s.at("order").get<unsigned>() != expected_order)
                    throw FormatError("ring shares out of order");
                auto coeffs = s.at("coeffs").get<std::vector<std::uint64_t>>();
                if (coeffs.size() != policy.degree_at(expected_order) + 1)
                    throw FormatError("share length disagrees with the degree policy");
                ring.shares.push_back(PolyShare{x, UniPoly(modulus, std::move(coeffs))});
                ++expected_order;
            }
            dep.rings.push_back(std::move(ring));
        }
        return dep;
    } catch (const json::exception& e) {
        throw FormatError(std::string("deployment document is incomplete: ") +
                          e.what());
    }
}

Deployment load_deployment_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return load_deployment(in);
}

} // namespace hgbs
