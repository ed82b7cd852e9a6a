#include "gallai/certificate.hpp"

#include <json.hpp>

namespace gallai {

using nlohmann::ordered_json;

Certificate make_certificate(const EdgeColoring& coloring, const GallaiSequence& s)
{
    return {coloring.n(), coloring.k(), s.counts, coloring.edges()};
}

std::string write_certificate(const Certificate& cert)
{
    ordered_json j;
    j["n"] = cert.n;
    j["k"] = cert.k;
    j["sequence"] = cert.sequence;
    j["edges"] = cert.edges;
    return j.dump() + "\n";
}

Certificate read_certificate(std::string_view text)
{
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    }
    catch (const ordered_json::parse_error& e) {
        throw CertificateError(std::string("certificate is not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw CertificateError("certificate must be a JSON object");
    for (const char* field : {"n", "k", "sequence", "edges"})
        if (!j.contains(field))
            throw CertificateError(std::string("certificate lacks field '") + field + "'");
    if (!j["n"].is_number_integer() || !j["k"].is_number_integer())
        throw CertificateError("fields 'n' and 'k' must be integers");
    if (!j["sequence"].is_array() || !j["edges"].is_array())
        throw CertificateError("fields 'sequence' and 'edges' must be arrays");

    Certificate cert;
    cert.n = j["n"].get<int>();
    cert.k = j["k"].get<int>();
    for (const auto& v : j["sequence"]) {
        if (!v.is_number_integer())
            throw CertificateError("sequence entries must be integers");
        cert.sequence.push_back(v.get<Count>());
    }
    for (const auto& v : j["edges"]) {
        if (!v.is_number_integer())
            throw CertificateError("edge colors must be integers");
        cert.edges.push_back(v.get<Color>());
    }
    return cert;
}

EdgeColoring coloring_of(const Certificate& cert)
{
    if (cert.n < 1 || cert.k < 0)
        throw CertificateError("certificate needs n >= 1 and k >= 0");
    if (cert.edges.size() != static_cast<std::size_t>(edge_count(cert.n)))
        throw CertificateError("certificate lists " + std::to_string(cert.edges.size()) + " edges, K_" +
                               std::to_string(cert.n) + " has " + std::to_string(edge_count(cert.n)));
    return EdgeColoring(cert.n, cert.k, cert.edges);
}

} // namespace gallai
