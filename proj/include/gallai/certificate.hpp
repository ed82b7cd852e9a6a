#pragma once

#include "gallai/coloring.hpp"
#include "gallai/sequence.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace gallai {

class CertificateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The claimed census plus the coloring itself; not necessarily valid.
struct Certificate {
    int n = 0;
    int k = 0;
    std::vector<Count> sequence;
    std::vector<Color> edges; // pair-rank order
};

Certificate make_certificate(const EdgeColoring& coloring, const GallaiSequence& s);

/// One JSON object on a single line, keys in fixed order, trailing newline.
std::string write_certificate(const Certificate& cert);
/// Throws CertificateError on syntax errors, missing fields or wrong types.
Certificate read_certificate(std::string_view text);

/// Shape checks only (edge count, color range); content is left to verify_certificate.
EdgeColoring coloring_of(const Certificate& cert);

} // namespace gallai
